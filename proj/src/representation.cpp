#include "plogroup/representation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace plogroup {

namespace {

const Rational kThreeQuarters = Rational(3) / Rational(4);

McPoint deleted_middle_half(const Rational& a, const Rational& b) {
  Rational quarter = (b - a) / Rational(4);
  OpenInterval gap(a + quarter, b - quarter);
  return McPoint{midpoint(a, b), gap};
}

}  // namespace

std::vector<McPoint> mc_points(int count) {
  if (count < 1) throw argument_error("count must be positive");
  std::vector<McPoint> out;
  std::vector<std::pair<Rational, Rational>> level{{kThreeQuarters, Rational(1)}};
  while (static_cast<int>(out.size()) < count) {
    std::vector<std::pair<Rational, Rational>> next;
    for (const auto& [a, b] : level) {
      McPoint p = deleted_middle_half(a, b);
      next.emplace_back(a, p.left());
      next.emplace_back(p.right(), b);
      if (static_cast<int>(out.size()) < count) out.push_back(std::move(p));
    }
    level = std::move(next);
  }
  return out;
}

McPoint locate_mc_point(const Rational& x) {
  if (!x.is_dyadic() || !(kThreeQuarters < x) || !(x < Rational(1))) {
    throw argument_error("not a construction midpoint: " + x.str());
  }
  Rational a = kThreeQuarters;
  Rational b = 1;
  for (int step = 0; step < 512; ++step) {
    McPoint p = deleted_middle_half(a, b);
    if (x == p.x) return p;
    if (x <= p.left()) {
      b = p.left();
    } else if (x >= p.right()) {
      a = p.right();
    } else {
      break;  // inside the deleted interval but not its midpoint
    }
    if (x <= a || x >= b) break;
  }
  throw argument_error("not a construction midpoint: " + x.str());
}

PLMap wc_generator(const McPoint& p) {
  Rational x = p.x;
  Rational xr = Rational(1) - x;        // left end of the support
  Rational l = p.left();                // left end of the deleted interval
  Rational lr = Rational(1) - l;        // its reflection, inside the support
  std::vector<std::pair<Rational, Rational>> cons{
      {Rational(0), Rational(0)}, {xr, xr}, {lr, l}, {x, x}, {Rational(1), Rational(1)}};
  OpenInterval support(xr, x);
  for (int attempt = 0; attempt < 24; ++attempt) {
    PLMap f = dyadic_interpolant(cons);
    if (moves_right_on(f, support)) return f;
    // Refine toward the straight interpolation through the constraints, which
    // is strictly rightward on the support.
    std::vector<std::pair<Rational, Rational>> finer;
    finer.push_back(cons.front());
    for (std::size_t i = 1; i < cons.size(); ++i) {
      if (support.left <= cons[i - 1].first && cons[i].first <= support.right) {
        finer.emplace_back(midpoint(cons[i - 1].first, cons[i].first),
                           midpoint(cons[i - 1].second, cons[i].second));
      }
      finer.push_back(cons[i]);
    }
    cons = std::move(finer);
  }
  throw structural_error("generator construction failed to move points rightward");
}

WCRep wc_generators(std::vector<Rational> points) {
  if (points.empty()) throw argument_error("need at least one point");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  WCRep rep;
  for (const auto& x : points) rep.points.push_back(locate_mc_point(x));
  for (const auto& p : rep.points) rep.generators.push_back(wc_generator(p));
  return rep;
}

StandardRep standard_rep(int n) {
  if (n < 1) throw argument_error("rank must be positive");
  // Descend along leftmost child intervals so the n points form a chain:
  // 7/8, 25/32, 97/128, ... read top-down; supports nest upward.
  std::vector<McPoint> pts;
  Rational a = kThreeQuarters;
  Rational b = 1;
  for (int i = n; i >= 1; --i) {
    McPoint p = deleted_middle_half(a, b);
    b = p.left();
    pts.push_back(std::move(p));
  }
  std::reverse(pts.begin(), pts.end());
  StandardRep rep;
  rep.rank = n;
  rep.points = std::move(pts);
  for (const auto& p : rep.points) rep.generators.push_back(wc_generator(p));
  return rep;
}

PLMap evaluate_word(const std::vector<PLMap>& gens, const Word& w) {
  if (static_cast<std::size_t>(w.rank()) > gens.size()) {
    throw argument_error("word rank " + std::to_string(w.rank()) + " exceeds generator count " +
                         std::to_string(gens.size()));
  }
  PLMap acc;
  for (const auto& l : w.letters()) {
    const PLMap& gen = gens[static_cast<std::size_t>(l.index - 1)];
    acc = compose(acc, l.exp > 0 ? gen : invert(gen));
  }
  return acc;
}

std::vector<OpenInterval> group_orbitals(const std::vector<PLMap>& gens) {
  std::vector<OpenInterval> all;
  for (const auto& g : gens) {
    auto orbs = orbitals(g);
    all.insert(all.end(), orbs.begin(), orbs.end());
  }
  if (all.empty()) return {};
  std::sort(all.begin(), all.end());
  // Merge strictly overlapping intervals; intervals that merely touch stay
  // separate (the shared endpoint is fixed by everything).
  std::vector<OpenInterval> out;
  OpenInterval cur = all.front();
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].left < cur.right) {
      cur = OpenInterval(cur.left, std::max(cur.right, all[i].right));
    } else {
      out.push_back(cur);
      cur = all[i];
    }
  }
  out.push_back(cur);
  return out;
}

namespace {

PLMap rightward(const PLMap& g, const OpenInterval& A) {
  Rational mid = midpoint(A.left, A.right);
  return g(mid) > mid ? g : invert(g);
}

// Projections of the generators to one group orbital that act there,
// deduplicated, as a strictly nested one-bump chain (smallest first).
std::vector<PLMap> projection_chain(const std::vector<PLMap>& gens, const OpenInterval& panel) {
  std::vector<PLMap> chain;
  for (const auto& g : gens) {
    std::vector<OpenInterval> inside;
    for (const auto& orb : orbitals(g)) {
      auto rel = interval_relation(orb, panel);
      if (rel.order == IntervalOrder::Disjoint) continue;
      if (rel.order == IntervalOrder::ProperSubset || rel.order == IntervalOrder::Equal) {
        inside.push_back(orb);
      } else {
        throw argument_error("generator orbital crosses a group orbital");
      }
    }
    if (inside.empty()) continue;
    PLMap proj = restrict_to(g, inside);
    if (std::find(chain.begin(), chain.end(), proj) == chain.end()) chain.push_back(proj);
  }
  std::vector<OpenInterval> orbs;
  for (const auto& m : chain) {
    auto o = orbitals(m);
    if (o.size() != 1) throw argument_error("projection to the group orbital is not one-bump");
    orbs.push_back(o.front());
  }
  std::vector<std::size_t> order(chain.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return orbs[a].length() < orbs[b].length(); });
  std::vector<PLMap> sorted;
  for (std::size_t i : order) sorted.push_back(chain[i]);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!properly_contains(orbitals(sorted[i]).front(), orbitals(sorted[i - 1]).front())) {
      throw argument_error("generator projections do not form a chain");
    }
  }
  return sorted;
}

}  // namespace

int geometric_level(const std::vector<PLMap>& gens, const OpenInterval& O) {
  auto panels = group_orbitals(gens);
  const OpenInterval* panel = nullptr;
  for (const auto& p : panels) {
    auto rel = interval_relation(O, p).order;
    if (rel == IntervalOrder::Equal || rel == IntervalOrder::ProperSubset) panel = &p;
  }
  if (panel == nullptr) throw argument_error("orbital lies outside every group orbital");
  auto chain = projection_chain(gens, *panel);
  std::vector<OpenInterval> orbs;
  for (const auto& m : chain) orbs.push_back(orbitals(m).front());

  // Walk down the nested structure: either O is the current top orbital (its
  // level is the chain position) or it sits inside a unique conjugate of the
  // next orbital down, which pulls back by a power of the top map.
  OpenInterval cur = O;
  int i = static_cast<int>(chain.size());
  while (true) {
    const OpenInterval& top = orbs[static_cast<std::size_t>(i - 1)];
    if (cur == top) return i;
    if (!properly_contains(top, cur)) {
      throw argument_error("orbital " + cur.str() + " is not nested in " + top.str());
    }
    if (i == 1) throw argument_error("orbital " + cur.str() + " sits below the bottom level");
    PLMap h = rightward(chain[static_cast<std::size_t>(i - 1)], top);
    PLMap hinv = invert(h);
    OpenInterval base = orbs[static_cast<std::size_t>(i - 2)];
    long long k = 0;
    OpenInterval J = base;
    int guard = 0;
    while (J.left > cur.left) {
      J = OpenInterval(hinv(J.left), hinv(J.right));
      --k;
      if (++guard > 4096) throw argument_error("conjugate search exhausted");
    }
    while (h(J.left) <= cur.left) {
      J = OpenInterval(h(J.left), h(J.right));
      ++k;
      if (++guard > 4096) throw argument_error("conjugate search exhausted");
    }
    if (!(J.left <= cur.left && cur.right <= J.right)) {
      throw argument_error("orbital " + O.str() + " is not part of the representation's poset");
    }
    // Pull back by h^k and descend one level.
    const PLMap& step = k >= 0 ? hinv : h;
    long long reps = k >= 0 ? k : -k;
    Rational lo = cur.left;
    Rational hi = cur.right;
    for (long long t = 0; t < reps; ++t) {
      lo = step(lo);
      hi = step(hi);
    }
    cur = OpenInterval(lo, hi);
    --i;
  }
}

int geometric_level(const StandardRep& rep, const OpenInterval& O) {
  return geometric_level(rep.generators, O);
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Standard: return "standard";
    case Family::Split: return "split";
    case Family::Full: return "full";
    case Family::Top: return "top";
    case Family::Free: return "free";
    case Family::FreeCollapse: return "free-collapse";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::Standard, Family::Split, Family::Full, Family::Top, Family::Free,
                   Family::FreeCollapse}) {
    if (name == to_string(f)) return f;
  }
  throw argument_error("unknown family: " + name);
}

ExampleRep example_rep(Family family) {
  const Rational half = Rational(1) / 2;
  auto s3 = standard_rep(3).generators;
  std::vector<PLMap> first;
  for (const auto& g : s3) first.push_back(embed_scaled(g, Rational(0), half));

  std::vector<PLMap> second(3, PLMap::identity());
  auto emb = [&](const PLMap& g) { return embed_scaled(g, half, Rational(1)); };
  switch (family) {
    case Family::Standard:
      break;
    case Family::Split: {
      auto s2 = standard_rep(2).generators;
      second[0] = emb(s2[0]);
      second[2] = emb(s2[1]);
      break;
    }
    case Family::Full:
      for (int i = 0; i < 3; ++i) second[static_cast<std::size_t>(i)] = emb(s3[static_cast<std::size_t>(i)]);
      break;
    case Family::Top: {
      auto s2 = standard_rep(2).generators;
      second[1] = emb(s2[0]);
      second[2] = emb(s2[1]);
      break;
    }
    case Family::Free:
      second[0] = emb(standard_rep(1).generators[0]);
      break;
    case Family::FreeCollapse: {
      PLMap u = emb(standard_rep(1).generators[0]);
      second[0] = u;
      second[1] = u;
      second[2] = u;
      break;
    }
  }
  ExampleRep rep;
  rep.family = family;
  for (int i = 0; i < 3; ++i) {
    rep.generators.push_back(compose(first[static_cast<std::size_t>(i)], second[static_cast<std::size_t>(i)]));
  }
  return rep;
}

std::string to_json(const WCRep& rep) {
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    pts.push_back(nlohmann::json{
        {"x", rep.points[i].x.str()},
        {"deleted", nlohmann::json::array({rep.points[i].left().str(), rep.points[i].right().str()})},
        {"generator", nlohmann::json::parse(to_json(rep.generators[i]))}});
  }
  return nlohmann::json{{"points", pts}}.dump(2);
}

}  // namespace plogroup
