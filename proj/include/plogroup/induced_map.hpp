#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plogroup/orbital_analysis.hpp"
#include "plogroup/representation.hpp"

namespace plogroup {

/// A homomorphism specified on generators: f_i of the domain representation
/// maps to images[i], an element living in the codomain representation (whose
/// own generators define the codomain's level structure). Nothing is assumed:
/// audit_relators evaluates a sampled relator set through the images.
struct GeneratorHom {
  std::vector<PLMap> domain_gens;
  std::vector<PLMap> codomain_gens;
  std::vector<PLMap> images;
};

/// Relators (|alpha| <= bound) whose images fail to evaluate to the identity.
std::vector<Word> audit_relators(const GeneratorHom& hom, long long alpha_bound = 2);
/// Throws argument_error with a diagnostic when the audit finds a violation.
void require_homomorphism(const GeneratorHom& hom, long long alpha_bound = 2);

/// A tower in the domain whose signatures are words over the domain
/// generators. Construction checks each orbital belongs to its word's
/// evaluation and that the orbitals form a strict chain, smallest first.
class WordTower {
 public:
  WordTower(const std::vector<PLMap>& domain_gens, std::vector<std::pair<Word, OpenInterval>> elems);

  const std::vector<std::pair<Word, OpenInterval>>& elements() const { return elems_; }
  std::size_t height() const { return elems_.size(); }

  /// True iff every signature evaluates to a one-bump map.
  bool pure(const std::vector<PLMap>& domain_gens) const;

 private:
  std::vector<std::pair<Word, OpenInterval>> elems_;
};

/// All signed orbitals of the images of T's signatures, registered in reg.
std::vector<SignedOrbital> image_poset(MapRegistry& reg, const GeneratorHom& hom, const WordTower& T);

/// The induced map T -> S + {empty}: a domain element goes to the S-element
/// whose orbital is the (necessarily unique) orbital of its image lying in
/// O(S), or to the empty sentinel when the image has no orbital there.
struct InducedTowerMap {
  WordTower domain;
  Tower codomain;
  std::vector<std::optional<std::size_t>> assignment;  // index into codomain

  bool nondecreasing_off_empty() const;
  /// Injective except on elements mapped to the sentinel or to min(S).
  bool injective_off_min() const;
};

InducedTowerMap induced_map(MapRegistry& reg, const GeneratorHom& hom, const WordTower& T,
                            const Tower& S);

/// The four-way classification of a maximal induced map from a pure tower.
struct MapClass {
  enum class Kind { Free, Top, Split, Full };
  Kind kind = Kind::Full;
  int j = 0;  // first element hitting min(S), 1-based
  int k = 0;  // Split: first empty slot after the min block
  int l = 0;  // first element of the order-isomorphic tail
  bool free_full_coincidence = false;  // |T| = 1 reported as Full
};
const char* to_string(MapClass::Kind k);

/// Requires T pure and S maximal in the image poset; any assignment outside
/// the four patterns throws structural_error.
MapClass classify_maximal(MapRegistry& reg, const GeneratorHom& hom, const WordTower& T,
                          const Tower& S);

std::string classification_json(const MapClass& cls, const InducedTowerMap& map,
                                const MapRegistry& reg);

/// Per-generator geometric levels of the image's bumps in the codomain.
struct LevelMapReport {
  struct PerGenerator {
    std::vector<std::pair<OpenInterval, int>> bump_levels;
    bool agreed = true;
    int level = 0;  // common bump level, or the max when they disagree
  };
  std::vector<PerGenerator> generators;
  bool coherent = true;  // every generator's bumps agree
};

LevelMapReport level_map(const GeneratorHom& hom);

}  // namespace plogroup
