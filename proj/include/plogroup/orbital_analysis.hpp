#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plogroup/plmap.hpp"

namespace plogroup {

/// Append-only store of maps. Registration dedupes by canonical form, so two
/// ids are equal exactly when the maps are equal; signed orbitals compare
/// signatures through their id.
class MapRegistry {
 public:
  using Id = std::uint32_t;

  Id add(const PLMap& m);
  const PLMap& at(Id id) const;
  std::size_t size() const { return maps_.size(); }

 private:
  std::vector<PLMap> maps_;
  std::map<PLMap, Id> ids_;
};

/// A bump in symbolic form: an orbital paired with the registry id of its
/// signature.
struct SignedOrbital {
  OpenInterval orbital;
  MapRegistry::Id signature;

  friend bool operator==(const SignedOrbital& a, const SignedOrbital& b) {
    return a.orbital == b.orbital && a.signature == b.signature;
  }
  friend bool operator<(const SignedOrbital& a, const SignedOrbital& b) {
    if (a.orbital != b.orbital) return a.orbital < b.orbital;
    return a.signature < b.signature;
  }
};

/// All signed orbitals of a registered map.
std::vector<SignedOrbital> signed_orbitals(const MapRegistry& reg, MapRegistry::Id id);

/// A chain of signed orbitals under proper inclusion, listed smallest to
/// largest, no repeated signature. Construction validates.
class Tower {
 public:
  Tower() = default;
  explicit Tower(std::vector<SignedOrbital> elements);

  const std::vector<SignedOrbital>& elements() const { return elems_; }
  std::size_t height() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  friend bool operator==(const Tower& a, const Tower& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<SignedOrbital> elems_;
};

/// The five-way configuration of a pair of signed orbitals; the shared-orbital
/// case splits by exact commutation of the two bumps there.
enum class Configuration { ASubB, BSubA, EqualNC, EqualC, Disjoint, TransitionChain };
const char* to_string(Configuration c);

Configuration classify_pair(const MapRegistry& reg, const SignedOrbital& a, const SignedOrbital& b);

/// A witnessing pair of overlapping-but-incomparable signed orbitals among
/// the maps, if any.
std::optional<std::pair<SignedOrbital, SignedOrbital>> has_transition_chain(
    MapRegistry& reg, const std::vector<PLMap>& maps);

/// All maximal towers in a finite set of signed orbitals (maximal chains of
/// the lexicographic signed-orbital order).
std::vector<Tower> towers_in(const MapRegistry& reg, std::vector<SignedOrbital> sos);

bool is_pure(const MapRegistry& reg, const std::vector<SignedOrbital>& sos);
/// Every properly contained orbital lies inside a fundamental domain
/// [t, t g) of the bigger signed orbital; equal orbitals impose nothing.
bool is_fundamental(const MapRegistry& reg, const std::vector<SignedOrbital>& sos);
/// Each signature pair realizes at most one configuration across all orbital
/// pairs on which the two maps fail to commute.
bool is_untwisted(const MapRegistry& reg, const std::vector<SignedOrbital>& sos);
/// Longest chain length.
int depth(const std::vector<SignedOrbital>& sos);

/// True iff [f,g] is the identity at every point of A.
bool commutes_on(const PLMap& f, const PLMap& g, const OpenInterval& A);

/// Points where the two maps agree, disagree immediately to the right, and
/// sit at an interior breakpoint of f or g (bouncepoints) resp. interior to
/// affine components of both (corners). 0 and 1 never qualify.
std::vector<Rational> bouncepoints(const PLMap& f, const PLMap& g);
std::vector<Rational> corners(const PLMap& f, const PLMap& g);

struct PairConfig {
  OpenInterval a;
  OpenInterval b;
  Configuration config;
};

struct TableRowReport {
  int table = 0;
  int row = 0;
  bool hypothesis_holds = false;
  bool prediction_holds = false;
  std::optional<long long> witness_n;  // table 2 row 3 existential
  long long n_max = 0;                 // bound used for that search
  std::vector<PairConfig> configs;     // every orbital pair of (f,g)
  std::string detail;
};

/// Evaluates one row of the pure (table 1) or general (table 2) relation
/// tables exactly: commutators as maps, the table-2 row-3 existential searched
/// over 0 < |n| <= n_max. Table 1 on a map with more than one orbital throws
/// argument_error.
TableRowReport verify_table_row(int table, int row, const PLMap& f, const PLMap& g,
                                long long n_max = 8);

/// A finite set of orbitals ordered by containment.
struct OrbitalPoset {
  std::vector<OpenInterval> orbitals;  // sorted, deduplicated

  explicit OrbitalPoset(std::vector<OpenInterval> orbs);
  /// Pairs (i, j) with orbitals[j] covering orbitals[i].
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
};

/// DOT Hasse diagram: one node per orbital labeled "(l,r)", cover edges only.
std::string hasse_dot(const OrbitalPoset& poset);

}  // namespace plogroup
