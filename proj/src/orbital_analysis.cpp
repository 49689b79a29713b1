#include "plogroup/orbital_analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace plogroup {

MapRegistry::Id MapRegistry::add(const PLMap& m) {
  auto it = ids_.find(m);
  if (it != ids_.end()) return it->second;
  Id id = static_cast<Id>(maps_.size());
  maps_.push_back(m);
  ids_.emplace(m, id);
  return id;
}

const PLMap& MapRegistry::at(Id id) const {
  if (id >= maps_.size()) throw argument_error("unknown map id");
  return maps_[id];
}

std::vector<SignedOrbital> signed_orbitals(const MapRegistry& reg, MapRegistry::Id id) {
  std::vector<SignedOrbital> out;
  for (const auto& orb : orbitals(reg.at(id))) out.push_back(SignedOrbital{orb, id});
  return out;
}

Tower::Tower(std::vector<SignedOrbital> elements) : elems_(std::move(elements)) {
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (!properly_contains(elems_[i].orbital, elems_[i - 1].orbital)) {
      throw argument_error("tower orbitals must form a strict chain, smallest first");
    }
  }
  std::set<MapRegistry::Id> sigs;
  for (const auto& so : elems_) {
    if (!sigs.insert(so.signature).second) throw argument_error("signature appears twice in tower");
  }
}

const char* to_string(Configuration c) {
  switch (c) {
    case Configuration::ASubB: return "ASubB";
    case Configuration::BSubA: return "BSubA";
    case Configuration::EqualNC: return "EqualNC";
    case Configuration::EqualC: return "EqualC";
    case Configuration::Disjoint: return "Disjoint";
    case Configuration::TransitionChain: return "TransitionChain";
  }
  return "?";
}

namespace {

Configuration classify_intervals(const PLMap& f, const PLMap& g, const OpenInterval& A,
                                 const OpenInterval& B) {
  switch (interval_relation(A, B).order) {
    case IntervalOrder::ProperSubset: return Configuration::ASubB;
    case IntervalOrder::ProperSuperset: return Configuration::BSubA;
    case IntervalOrder::Disjoint: return Configuration::Disjoint;
    case IntervalOrder::Overlap: return Configuration::TransitionChain;
    case IntervalOrder::Equal: {
      PLMap bf = bump_restrict(f, A);
      PLMap bg = bump_restrict(g, B);
      return commutator(bf, bg).is_identity() ? Configuration::EqualC : Configuration::EqualNC;
    }
  }
  throw structural_error("unreachable interval relation");
}

}  // namespace

Configuration classify_pair(const MapRegistry& reg, const SignedOrbital& a, const SignedOrbital& b) {
  return classify_intervals(reg.at(a.signature), reg.at(b.signature), a.orbital, b.orbital);
}

std::optional<std::pair<SignedOrbital, SignedOrbital>> has_transition_chain(
    MapRegistry& reg, const std::vector<PLMap>& maps) {
  // Sweep for a crossing pair l1 < l2 < r1 < r2 in the multiset of orbitals:
  // sort by (left asc, right desc) and keep a stack of open enclosing
  // intervals.
  std::vector<SignedOrbital> sos;
  for (const auto& m : maps) {
    MapRegistry::Id id = reg.add(m);
    for (const auto& orb : orbitals(m)) sos.push_back(SignedOrbital{orb, id});
  }
  std::sort(sos.begin(), sos.end(), [](const SignedOrbital& a, const SignedOrbital& b) {
    if (a.orbital.left != b.orbital.left) return a.orbital.left < b.orbital.left;
    if (a.orbital.right != b.orbital.right) return b.orbital.right < a.orbital.right;
    return a.signature < b.signature;
  });
  std::vector<const SignedOrbital*> stack;
  for (const auto& so : sos) {
    while (!stack.empty() && stack.back()->orbital.right <= so.orbital.left) stack.pop_back();
    if (!stack.empty()) {
      const SignedOrbital& top = *stack.back();
      if (top.orbital.right < so.orbital.right && top.orbital.left < so.orbital.left) {
        return std::make_pair(top, so);
      }
    }
    if (stack.empty() || so.orbital != stack.back()->orbital) stack.push_back(&so);
  }
  return std::nullopt;
}

std::vector<Tower> towers_in(const MapRegistry& reg, std::vector<SignedOrbital> sos) {
  (void)reg;
  std::sort(sos.begin(), sos.end());
  sos.erase(std::unique(sos.begin(), sos.end()), sos.end());
  const std::size_t n = sos.size();
  // less[i][j]: i strictly below j in the signed-orbital order.
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) less[i][j] = properly_contains(sos[j].orbital, sos[i].orbital);
    }
  }
  auto covers = [&](std::size_t i, std::size_t j) {
    if (!less[i][j]) return false;
    for (std::size_t k = 0; k < n; ++k) {
      if (less[i][k] && less[k][j]) return false;
    }
    return true;
  };
  std::vector<Tower> out;
  std::vector<SignedOrbital> chain;
  auto extend = [&](auto&& self, std::size_t top) -> void {
    bool extended = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (covers(top, j)) {
        extended = true;
        chain.push_back(sos[j]);
        self(self, j);
        chain.pop_back();
      }
    }
    if (!extended) out.emplace_back(chain);
  };
  for (std::size_t i = 0; i < n; ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (less[k][i]) minimal = false;
    }
    if (minimal) {
      chain.push_back(sos[i]);
      extend(extend, i);
      chain.pop_back();
    }
  }
  return out;
}

bool is_pure(const MapRegistry& reg, const std::vector<SignedOrbital>& sos) {
  for (const auto& so : sos) {
    if (orbitals(reg.at(so.signature)).size() != 1) return false;
  }
  return true;
}

namespace {

// Rightward representative of g's action on its orbital A.
PLMap rightward_on(const PLMap& g, const OpenInterval& A) {
  Rational mid = midpoint(A.left, A.right);
  return g(mid) >= mid ? g : invert(g);
}

}  // namespace

bool is_fundamental(const MapRegistry& reg, const std::vector<SignedOrbital>& sos) {
  for (const auto& small : sos) {
    for (const auto& big : sos) {
      if (interval_relation(small.orbital, big.orbital).order != IntervalOrder::ProperSubset) continue;
      // A = (a1,a2) inside [t, t g) for some t in B  <=>  a2 <= g(a1) with g
      // taken rightward on B.
      PLMap g = rightward_on(reg.at(big.signature), big.orbital);
      if (!(small.orbital.right <= g(small.orbital.left))) return false;
    }
  }
  return true;
}

bool is_untwisted(const MapRegistry& reg, const std::vector<SignedOrbital>& sos) {
  std::set<MapRegistry::Id> sig_set;
  for (const auto& so : sos) sig_set.insert(so.signature);
  std::vector<MapRegistry::Id> sigs(sig_set.begin(), sig_set.end());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    for (std::size_t j = i + 1; j < sigs.size(); ++j) {
      const PLMap& f = reg.at(sigs[i]);
      const PLMap& g = reg.at(sigs[j]);
      PLMap comm = commutator(f, g);
      std::optional<Configuration> seen;
      for (const auto& A : orbitals(f)) {
        for (const auto& B : orbitals(g)) {
          auto rel = interval_relation(A, B);
          if (rel.order == IntervalOrder::Disjoint) continue;
          // Count the pair only when [f,g] fails somewhere in A cap B.
          OpenInterval cap(std::max(A.left, B.left), std::min(A.right, B.right));
          bool noncommuting = false;
          for (const auto& O : orbitals(comm)) {
            if (interval_relation(O, cap).order != IntervalOrder::Disjoint) noncommuting = true;
          }
          if (!noncommuting) continue;
          Configuration c = classify_intervals(f, g, A, B);
          if (c == Configuration::TransitionChain) return false;
          if (seen && *seen != c) return false;
          seen = c;
        }
      }
    }
  }
  return true;
}

int depth(const std::vector<SignedOrbital>& sos) {
  std::set<OpenInterval> orbs;
  for (const auto& so : sos) orbs.insert(so.orbital);
  std::vector<OpenInterval> v(orbs.begin(), orbs.end());
  // Longest chain under proper containment; nested orbitals always admit
  // distinct signatures since one map's orbitals are disjoint.
  std::vector<int> best(v.size(), 1);
  // Sort by length ascending so containment implies earlier index.
  std::sort(v.begin(), v.end(), [](const OpenInterval& a, const OpenInterval& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  int overall = v.empty() ? 0 : 1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (properly_contains(v[j], v[i])) best[j] = std::max(best[j], best[i] + 1);
    }
    overall = std::max(overall, best[j]);
  }
  return overall;
}

bool commutes_on(const PLMap& f, const PLMap& g, const OpenInterval& A) {
  for (const auto& O : orbitals(commutator(f, g))) {
    if (interval_relation(O, A).order != IntervalOrder::Disjoint) return false;
  }
  return true;
}

namespace {

std::vector<Rational> agreement_edges(const PLMap& f, const PLMap& g, bool want_breakpoint) {
  std::vector<Rational> out;
  PLMap diff = compose(f, invert(g));  // fixes x exactly where f(x) = g(x)
  auto is_bp = [](const PLMap& m, const Rational& x) {
    for (const auto& p : m.breakpoints()) {
      if (p.first == x) return x != Rational(0) && x != Rational(1);
    }
    return false;
  };
  for (const auto& comp : orbitals(diff)) {
    const Rational& b = comp.left;
    if (b == Rational(0) || b == Rational(1)) continue;
    bool bp = is_bp(f, b) || is_bp(g, b);
    if (bp == want_breakpoint) out.push_back(b);
  }
  return out;
}

}  // namespace

std::vector<Rational> bouncepoints(const PLMap& f, const PLMap& g) {
  return agreement_edges(f, g, true);
}

std::vector<Rational> corners(const PLMap& f, const PLMap& g) {
  return agreement_edges(f, g, false);
}

TableRowReport verify_table_row(int table, int row, const PLMap& f_in, const PLMap& g_in,
                                long long n_max) {
  if (table != 1 && table != 2) throw argument_error("table must be 1 or 2");
  if (row < 1 || row > 3) throw argument_error("row must be 1, 2 or 3");
  auto forbs = orbitals(f_in);
  auto gorbs = orbitals(g_in);
  if (table == 1 && (forbs.size() != 1 || gorbs.size() != 1)) {
    throw argument_error("table 1 requires one-bump maps");
  }
  // Direction normalization: on pure inputs take the rightward representative
  // of each map; the row relations are equivalent under inverses.
  PLMap f = forbs.size() == 1 ? rightward_on(f_in, forbs[0]) : f_in;
  PLMap g = gorbs.size() == 1 ? rightward_on(g_in, gorbs[0]) : g_in;

  TableRowReport rep;
  rep.table = table;
  rep.row = row;
  rep.n_max = n_max;
  for (const auto& A : forbs) {
    for (const auto& B : gorbs) {
      rep.configs.push_back(PairConfig{A, B, classify_intervals(f, g, A, B)});
    }
  }
  bool fg_commute = commutator(f, g).is_identity();
  switch (row) {
    case 1:
      rep.hypothesis_holds = fg_commute;
      break;
    case 2:
      rep.hypothesis_holds = !fg_commute;
      break;
    case 3: {
      bool conj_commutes = false;
      if (table == 1) {
        conj_commutes = commutator(conjugate(f, g), f).is_identity();
        if (conj_commutes) rep.witness_n = 1;
      } else {
        for (long long k = 1; k <= n_max && !conj_commutes; ++k) {
          for (long long n : {k, -k}) {
            if (commutator(conjugate(f, power(g, n)), f).is_identity()) {
              conj_commutes = true;
              rep.witness_n = n;
              break;
            }
          }
        }
      }
      rep.hypothesis_holds = conj_commutes && !fg_commute;
      break;
    }
    default:
      break;
  }

  auto none_of_config = [&](Configuration c) {
    return std::none_of(rep.configs.begin(), rep.configs.end(),
                        [&](const PairConfig& pc) { return pc.config == c; });
  };
  auto any_of_config = [&](std::initializer_list<Configuration> cs) {
    return std::any_of(rep.configs.begin(), rep.configs.end(), [&](const PairConfig& pc) {
      return std::find(cs.begin(), cs.end(), pc.config) != cs.end();
    });
  };

  if (!rep.hypothesis_holds) {
    rep.prediction_holds = true;  // row says nothing about this pair
    rep.detail = "hypothesis not satisfied";
    return rep;
  }
  bool ok = none_of_config(Configuration::TransitionChain);
  if (!ok) rep.detail = "transition chain present; outside the tables' scope";
  switch (row) {
    case 1:
      ok = ok && none_of_config(Configuration::ASubB) && none_of_config(Configuration::BSubA) &&
           none_of_config(Configuration::EqualNC);
      break;
    case 2:
      ok = ok && any_of_config({Configuration::ASubB, Configuration::BSubA, Configuration::EqualNC});
      break;
    case 3:
      ok = ok && any_of_config({Configuration::ASubB}) && none_of_config(Configuration::BSubA) &&
           none_of_config(Configuration::EqualNC);
      break;
    default:
      break;
  }
  rep.prediction_holds = ok;
  return rep;
}

OrbitalPoset::OrbitalPoset(std::vector<OpenInterval> orbs) : orbitals(std::move(orbs)) {
  std::sort(orbitals.begin(), orbitals.end());
  orbitals.erase(std::unique(orbitals.begin(), orbitals.end()), orbitals.end());
}

std::vector<std::pair<std::size_t, std::size_t>> OrbitalPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& v = orbitals;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i == j || !properly_contains(v[j], v[i])) continue;
      bool direct = true;
      for (std::size_t k = 0; k < v.size() && direct; ++k) {
        if (k != i && k != j && properly_contains(v[k], v[i]) && properly_contains(v[j], v[k])) {
          direct = false;
        }
      }
      if (direct) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string hasse_dot(const OrbitalPoset& poset) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.orbitals.size(); ++i) {
    os << "  o" << i << " [label=\"(" << poset.orbitals[i].left.str() << ","
       << poset.orbitals[i].right.str() << ")\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers()) {
    os << "  o" << lo << " -> o" << hi << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace plogroup
