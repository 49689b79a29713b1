#include "plogroup/induced_map.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace plogroup {

std::vector<Word> audit_relators(const GeneratorHom& hom, long long alpha_bound) {
  std::vector<Word> bad;
  int n = static_cast<int>(hom.images.size());
  if (n < 2) return bad;
  for (const auto& r : all_relators(n, alpha_bound)) {
    if (!evaluate_word(hom.images, r).is_identity()) bad.push_back(r);
  }
  return bad;
}

void require_homomorphism(const GeneratorHom& hom, long long alpha_bound) {
  auto bad = audit_relators(hom, alpha_bound);
  if (!bad.empty()) {
    throw argument_error("generator images violate the relation [" + bad.front().str() +
                         "] (" + std::to_string(bad.size()) + " sampled relators fail)");
  }
}

WordTower::WordTower(const std::vector<PLMap>& domain_gens,
                     std::vector<std::pair<Word, OpenInterval>> elems)
    : elems_(std::move(elems)) {
  for (const auto& [w, orb] : elems_) {
    auto orbs = orbitals(evaluate_word(domain_gens, w));
    if (std::find(orbs.begin(), orbs.end(), orb) == orbs.end()) {
      throw argument_error("interval " + orb.str() + " is not an orbital of its signature word");
    }
  }
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (!properly_contains(elems_[i].second, elems_[i - 1].second)) {
      throw argument_error("domain tower orbitals must form a strict chain, smallest first");
    }
  }
}

bool WordTower::pure(const std::vector<PLMap>& domain_gens) const {
  for (const auto& [w, orb] : elems_) {
    if (orbitals(evaluate_word(domain_gens, w)).size() != 1) return false;
  }
  return true;
}

std::vector<SignedOrbital> image_poset(MapRegistry& reg, const GeneratorHom& hom, const WordTower& T) {
  std::vector<SignedOrbital> out;
  for (const auto& [w, orb] : T.elements()) {
    PLMap img = evaluate_word(hom.images, w);
    if (img.is_identity()) continue;
    MapRegistry::Id id = reg.add(img);
    for (const auto& so : signed_orbitals(reg, id)) {
      if (std::find(out.begin(), out.end(), so) == out.end()) out.push_back(so);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedTowerMap induced_map(MapRegistry& reg, const GeneratorHom& hom, const WordTower& T,
                            const Tower& S) {
  auto poset = image_poset(reg, hom, T);
  for (const auto& so : S.elements()) {
    if (std::find(poset.begin(), poset.end(), so) == poset.end()) {
      throw argument_error("codomain tower is not contained in the image poset");
    }
  }
  InducedTowerMap out{T, S, {}};
  for (const auto& [w, orb] : T.elements()) {
    PLMap img = evaluate_word(hom.images, w);
    std::optional<std::size_t> hit;
    for (const auto& O : orbitals(img)) {
      for (std::size_t s = 0; s < S.elements().size(); ++s) {
        if (S.elements()[s].orbital == O) {
          // At most one orbital of img can lie in the chain O(S): orbitals of
          // one element are disjoint while the chain is nested.
          hit = s;
        }
      }
    }
    out.assignment.push_back(hit);
  }
  if (S.height() > T.height()) {
    throw structural_error("codomain tower larger than the domain tower");
  }
  return out;
}

bool InducedTowerMap::nondecreasing_off_empty() const {
  std::optional<std::size_t> prev;
  for (const auto& a : assignment) {
    if (!a) continue;
    if (prev && *a < *prev) return false;
    prev = a;
  }
  return true;
}

bool InducedTowerMap::injective_off_min() const {
  std::set<std::size_t> seen;
  for (const auto& a : assignment) {
    if (!a || *a == 0) continue;
    if (!seen.insert(*a).second) return false;
  }
  return true;
}

const char* to_string(MapClass::Kind k) {
  switch (k) {
    case MapClass::Kind::Free: return "Free";
    case MapClass::Kind::Top: return "Top";
    case MapClass::Kind::Split: return "Split";
    case MapClass::Kind::Full: return "Full";
  }
  return "?";
}

MapClass classify_maximal(MapRegistry& reg, const GeneratorHom& hom, const WordTower& T,
                          const Tower& S) {
  if (!T.pure(hom.domain_gens)) throw argument_error("classification requires a pure domain tower");
  auto poset = image_poset(reg, hom, T);
  auto maximal = towers_in(reg, poset);
  if (std::find(maximal.begin(), maximal.end(), S) == maximal.end()) {
    throw argument_error("codomain tower is not maximal in the image poset");
  }

  InducedTowerMap m = induced_map(reg, hom, T, S);
  if (!m.nondecreasing_off_empty() || !m.injective_off_min()) {
    throw structural_error("induced map violates monotonicity/injectivity expected of pure domains");
  }
  const std::size_t n = T.height();
  const std::size_t ms = S.height();
  const auto& a = m.assignment;

  // The elements hitting non-minimal codomain levels must be the tail of T,
  // in order, one each.
  std::vector<std::size_t> iso_positions;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] && *a[i] > 0) iso_positions.push_back(i);
  }
  if (iso_positions.size() != (ms == 0 ? 0 : ms - 1)) {
    throw structural_error("image tower not fully covered by the induced map");
  }
  for (std::size_t t = 0; t < iso_positions.size(); ++t) {
    if (*a[iso_positions[t]] != t + 1 ||
        iso_positions[t] != n - iso_positions.size() + t) {
      throw structural_error("non-minimal images do not form an order-isomorphic tail");
    }
  }

  std::vector<std::size_t> min_positions;
  std::vector<std::size_t> empty_positions;
  std::size_t head = n - iso_positions.size();
  for (std::size_t i = 0; i < head; ++i) {
    if (!a[i]) {
      empty_positions.push_back(i);
    } else if (*a[i] == 0) {
      min_positions.push_back(i);
    }
  }
  if (min_positions.empty()) throw structural_error("nothing maps to the minimum of the image tower");

  MapClass cls;
  cls.j = static_cast<int>(min_positions.front()) + 1;
  if (ms == 1) {
    cls.kind = MapClass::Kind::Free;
    if (n == 1) {
      cls.kind = MapClass::Kind::Full;
      cls.free_full_coincidence = true;
      cls.l = 0;
    }
    return cls;
  }
  cls.l = static_cast<int>(head) + 1;
  // Min block must be contiguous for the named non-free patterns.
  for (std::size_t t = 1; t < min_positions.size(); ++t) {
    if (min_positions[t] != min_positions[t - 1] + 1) {
      throw structural_error("elements hitting the minimum are not consecutive");
    }
  }
  std::size_t min_end = min_positions.back();
  bool empty_before = !empty_positions.empty() && empty_positions.front() < min_positions.front();
  bool empty_after = !empty_positions.empty() && empty_positions.back() > min_end;
  for (std::size_t e : empty_positions) {
    if (e > min_positions.front() && e < min_end) {
      throw structural_error("empty slot inside the min block");
    }
  }
  if (empty_positions.empty()) {
    if (n == ms && min_positions.size() == 1) {
      cls.kind = MapClass::Kind::Full;
      return cls;
    }
    throw structural_error("several elements hit the minimum without any empty slots");
  }
  if (empty_after) {
    cls.kind = MapClass::Kind::Split;
    cls.k = static_cast<int>(min_end) + 2;  // first empty slot after the min block, 1-based
    return cls;
  }
  if (empty_before) {
    cls.kind = MapClass::Kind::Top;
    return cls;
  }
  throw structural_error("assignment fits no category");
}

std::string classification_json(const MapClass& cls, const InducedTowerMap& map,
                                const MapRegistry& reg) {
  (void)reg;
  nlohmann::json assignment = nlohmann::json::array();
  for (std::size_t i = 0; i < map.assignment.size(); ++i) {
    const auto& [w, orb] = map.domain.elements()[i];
    nlohmann::json entry{{"from", {{"word", w.str()}, {"orbital", {orb.left.str(), orb.right.str()}}}}};
    if (map.assignment[i]) {
      const auto& so = map.codomain.elements()[*map.assignment[i]];
      entry["to"] = {{"orbital", {so.orbital.left.str(), so.orbital.right.str()}}};
    } else {
      entry["to"] = nullptr;
    }
    assignment.push_back(entry);
  }
  nlohmann::json j{{"class", to_string(cls.kind)},
                   {"pattern", {{"j", cls.j}, {"k", cls.k}, {"l", cls.l}}},
                   {"assignment", assignment}};
  if (cls.free_full_coincidence) j["free_full_coincidence"] = true;
  return j.dump(2);
}

LevelMapReport level_map(const GeneratorHom& hom) {
  LevelMapReport rep;
  for (const auto& img : hom.images) {
    LevelMapReport::PerGenerator pg;
    for (const auto& O : orbitals(img)) {
      pg.bump_levels.emplace_back(O, geometric_level(hom.codomain_gens, O));
    }
    for (const auto& [orb, lvl] : pg.bump_levels) {
      pg.level = std::max(pg.level, lvl);
    }
    for (const auto& [orb, lvl] : pg.bump_levels) {
      if (lvl != pg.level) pg.agreed = false;
    }
    rep.coherent = rep.coherent && pg.agreed;
    rep.generators.push_back(std::move(pg));
  }
  return rep;
}

}  // namespace plogroup
