#include <doctest.h>

#include <random>

#include "plogroup/enumeration.hpp"
#include "plogroup/orbital_analysis.hpp"
#include "plogroup/representation.hpp"

using namespace plogroup;

namespace {

Rational rat(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

PLMap tent() {
  return PLMap({{Rational(0), Rational(0)},
                {rat(1, 4), rat(1, 2)},
                {rat(1, 2), rat(3, 4)},
                {Rational(1), Rational(1)}});
}

SignedOrbital so(MapRegistry& reg, const PLMap& m, std::size_t which = 0) {
  auto id = reg.add(m);
  return SignedOrbital{orbitals(m).at(which), id};
}

}  // namespace

TEST_CASE("pair classification over the five shapes") {
  MapRegistry reg;
  StandardRep std3 = standard_rep(3);

  SUBCASE("a map against itself commutes on the shared orbital") {
    auto a = so(reg, std3.generators[0]);
    CHECK(classify_pair(reg, a, a) == Configuration::EqualC);
  }
  SUBCASE("nested generator supports") {
    WCRep wc = wc_generators({rat(25, 32), rat(7, 8)});
    auto small = so(reg, wc.generators[0]);
    auto big = so(reg, wc.generators[1]);
    CHECK(small.orbital == OpenInterval(rat(7, 32), rat(25, 32)));
    CHECK(big.orbital == OpenInterval(rat(1, 8), rat(7, 8)));
    CHECK(classify_pair(reg, small, big) == Configuration::ASubB);
    CHECK(classify_pair(reg, big, small) == Configuration::BSubA);
  }
  SUBCASE("overlap without containment is a transition chain") {
    PLMap f = dyadic_interpolant({{Rational(0), Rational(0)}, {rat(1, 4), rat(1, 2)}, {rat(5, 8), rat(5, 8)}, {Rational(1), Rational(1)}});
    PLMap g = dyadic_interpolant({{Rational(0), Rational(0)}, {rat(3, 8), rat(3, 8)}, {rat(1, 2), rat(3, 4)}, {Rational(1), Rational(1)}});
    auto a = so(reg, f);
    auto b = so(reg, g);
    CHECK(a.orbital == OpenInterval(Rational(0), rat(5, 8)));
    CHECK(b.orbital == OpenInterval(rat(3, 8), Rational(1)));
    CHECK(classify_pair(reg, a, b) == Configuration::TransitionChain);
  }
  SUBCASE("shared orbital with noncommuting bumps") {
    PLMap f = evaluate_word(std3.generators, Word::parse(3, "F1 F2"));
    PLMap g = std3.generators[1];
    auto a = so(reg, f);
    auto b = so(reg, g);
    CHECK(a.orbital == b.orbital);
    CHECK(classify_pair(reg, a, b) == Configuration::EqualNC);
  }
  SUBCASE("disjoint conjugate copies") {
    PLMap f = std3.generators[0];
    PLMap moved = conjugate(f, std3.generators[1]);
    CHECK(classify_pair(reg, so(reg, f), so(reg, moved)) == Configuration::Disjoint);
  }
}

TEST_CASE("transition chain detection") {
  MapRegistry reg;
  SUBCASE("identity alone has none") {
    CHECK_FALSE(has_transition_chain(reg, {PLMap::identity()}));
  }
  SUBCASE("the overlap pair is found") {
    PLMap f = dyadic_interpolant({{Rational(0), Rational(0)}, {rat(1, 4), rat(1, 2)}, {rat(5, 8), rat(5, 8)}, {Rational(1), Rational(1)}});
    PLMap g = dyadic_interpolant({{Rational(0), Rational(0)}, {rat(3, 8), rat(3, 8)}, {rat(1, 2), rat(3, 4)}, {Rational(1), Rational(1)}});
    auto witness = has_transition_chain(reg, {f, g});
    REQUIRE(witness);
    auto rel = interval_relation(witness->first.orbital, witness->second.orbital).order;
    CHECK(rel == IntervalOrder::Overlap);
  }
  SUBCASE("generators of a finite point family never produce one") {
    std::vector<Rational> xs;
    for (const auto& p : mc_points(4)) xs.push_back(p.x);
    WCRep wc = wc_generators(xs);
    CHECK_FALSE(has_transition_chain(reg, wc.generators));
    std::vector<PLMap> ball;
    for_each_ball_word(wc.generators, 3, [&](const Word&, const PLMap& m) { ball.push_back(m); });
    CHECK_FALSE(has_transition_chain(reg, ball));
  }
}

TEST_CASE("maximal towers, purity, fundamentality, depth") {
  MapRegistry reg;
  StandardRep std3 = standard_rep(3);
  std::vector<SignedOrbital> sos;
  for (const auto& g : std3.generators) sos.push_back(so(reg, g));

  auto maximal = towers_in(reg, sos);
  REQUIRE(maximal.size() == 1);
  CHECK(maximal[0].height() == 3);
  CHECK(is_pure(reg, sos));
  CHECK(is_fundamental(reg, sos));
  CHECK(is_untwisted(reg, sos));
  CHECK(depth(sos) == 3);

  SUBCASE("empty set") {
    CHECK(towers_in(reg, {}).empty());
    CHECK(depth({}) == 0);
  }
  SUBCASE("the split family splits into two maximal towers") {
    ExampleRep ex = example_rep(Family::Split);
    std::vector<SignedOrbital> family;
    for (const auto& g : ex.generators) {
      auto id = reg.add(g);
      for (const auto& s : signed_orbitals(reg, id)) family.push_back(s);
    }
    auto towers = towers_in(reg, family);
    REQUIRE(towers.size() == 2);
    std::vector<std::size_t> heights{towers[0].height(), towers[1].height()};
    std::sort(heights.begin(), heights.end());
    CHECK(heights == std::vector<std::size_t>{2, 3});
    CHECK(is_untwisted(reg, family));
  }
  SUBCASE("towers validate their invariants") {
    CHECK_THROWS_AS(Tower({sos[1], sos[0]}), argument_error);  // wrong order
    CHECK_THROWS_AS(Tower({sos[0], sos[0]}), argument_error);  // repeated signature
    CHECK_NOTHROW(Tower({sos[0], sos[1], sos[2]}));
  }
  SUBCASE("every subset of a tower is a tower") {
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<SignedOrbital> subset;
      for (std::size_t i = 0; i < 3; ++i) {
        if (mask & (1u << i)) subset.push_back(sos[i]);
      }
      CHECK_NOTHROW(Tower(subset));
    }
  }
}

TEST_CASE("products along a chain keep the largest orbital") {
  std::mt19937_64 rng(41);
  StandardRep std4 = standard_rep(4);
  for (int t = 0; t < 20; ++t) {
    // Random conjugated chain f_{i_1}^c, .., f_{i_k}^c with i ascending.
    std::vector<Letter> cl;
    for (int i = 0; i < 3; ++i) {
      cl.push_back({static_cast<int>(rng() % 4) + 1, rng() % 2 == 0 ? 1 : -1});
    }
    Word c(4, cl);
    PLMap prod;
    OpenInterval largest(Rational(0), Rational(1));
    bool any = false;
    for (int i = 1; i <= 4; ++i) {
      if (rng() % 2 == 0) continue;
      PLMap gi = evaluate_word(std4.generators, conjugate(word_power(4, i, 1), c));
      prod = compose(prod, gi);
      largest = orbitals(gi).front();
      any = true;
    }
    if (!any) continue;
    auto orbs = orbitals(prod);
    CHECK(std::find(orbs.begin(), orbs.end(), largest) != orbs.end());
  }
}

TEST_CASE("towers in transition-chain-free sets are fundamental") {
  MapRegistry reg;
  std::vector<Rational> xs;
  for (const auto& p : mc_points(5)) xs.push_back(p.x);
  WCRep wc = wc_generators(xs);
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::vector<SignedOrbital> sos;
    for (std::size_t i = 0; i < 5; ++i) {
      if (mask & (1u << i)) sos.push_back(so(reg, wc.generators[i]));
    }
    CHECK(is_fundamental(reg, sos));
  }
}

TEST_CASE("commutation on an interval") {
  StandardRep std2 = standard_rep(2);
  const PLMap& f = std2.generators[0];
  const PLMap& g = std2.generators[1];
  OpenInterval big = orbitals(g).front();

  SUBCASE("disjoint supports commute everywhere") {
    PLMap moved = conjugate(f, g);
    CHECK(commutes_on(f, moved, OpenInterval(Rational(0), Rational(1))));
  }
  SUBCASE("f and its conjugate commute on the big orbital") {
    CHECK(commutes_on(f, conjugate(f, g), big));
  }
  SUBCASE("the tower pair itself does not commute on the big orbital") {
    CHECK_FALSE(commutes_on(f, g, big));
  }
}

TEST_CASE("bouncepoints and corners") {
  SUBCASE("no disagreement, no points") {
    CHECK(bouncepoints(tent(), tent()).empty());
    CHECK(corners(tent(), tent()).empty());
  }
  SUBCASE("identity versus a full bump: 0 is not interior") {
    CHECK(bouncepoints(PLMap::identity(), tent()).empty());
  }
  SUBCASE("transversal crossing at an interior non-breakpoint is a corner") {
    PLMap f({{Rational(0), Rational(0)}, {rat(1, 2), rat(3, 4)}, {Rational(1), Rational(1)}});
    PLMap g({{Rational(0), Rational(0)}, {rat(1, 4), rat(1, 2)}, {Rational(1), Rational(1)}});
    // f(x) = 3x/2 and the second piece of g meet at x = 2/5.
    auto cs = corners(f, g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0] == rat(2, 5));
    CHECK(bouncepoints(f, g).empty());
  }
  SUBCASE("agreement ending at a shared breakpoint is a bouncepoint") {
    PLMap f = tent();
    PLMap g({{Rational(0), Rational(0)},
             {rat(1, 4), rat(1, 2)},
             {rat(3, 4), rat(7, 8)},
             {Rational(1), Rational(1)}});
    auto bs = bouncepoints(f, g);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0] == rat(1, 4));
    CHECK(corners(f, g).empty());
  }
}

TEST_CASE("table rows on constructed pure pairs") {
  StandardRep std2 = standard_rep(2);
  const PLMap& f = std2.generators[0];
  const PLMap& g = std2.generators[1];

  SUBCASE("commuting pure pairs: only the last two configurations") {
    PLMap c = evaluate_word(std2.generators, Word::parse(2, "F1 F2"));
    auto rep = verify_table_row(1, 1, power(c, 2), power(c, 3));
    CHECK(rep.hypothesis_holds);
    CHECK(rep.prediction_holds);
    REQUIRE(rep.configs.size() == 1);
    CHECK(rep.configs[0].config == Configuration::EqualC);

    auto rep2 = verify_table_row(1, 1, f, conjugate(f, g));
    CHECK(rep2.hypothesis_holds);
    CHECK(rep2.prediction_holds);
    CHECK(rep2.configs[0].config == Configuration::Disjoint);
  }
  SUBCASE("a two-tower satisfies row 3 with containment") {
    auto rep = verify_table_row(1, 3, f, g);
    CHECK(rep.hypothesis_holds);
    CHECK(rep.prediction_holds);
    CHECK(rep.configs[0].config == Configuration::ASubB);
    // And row 2, since they do not commute.
    auto rep2 = verify_table_row(1, 2, f, g);
    CHECK(rep2.hypothesis_holds);
    CHECK(rep2.prediction_holds);
  }
  SUBCASE("row hypotheses that fail are reported, not judged") {
    auto rep = verify_table_row(1, 1, f, g);
    CHECK_FALSE(rep.hypothesis_holds);
    CHECK(rep.prediction_holds);
    CHECK(rep.detail == "hypothesis not satisfied");
  }
  SUBCASE("table 1 rejects nonpure maps") {
    ExampleRep split = example_rep(Family::Split);
    CHECK_THROWS_AS(verify_table_row(1, 1, split.generators[0], split.generators[2]), argument_error);
  }
  SUBCASE("bad table or row indices") {
    CHECK_THROWS_AS(verify_table_row(3, 1, f, g), argument_error);
    CHECK_THROWS_AS(verify_table_row(1, 0, f, g), argument_error);
  }
}

TEST_CASE("table 2 row 3 on the split pair reports the bounded witness") {
  ExampleRep split = example_rep(Family::Split);
  auto rep = verify_table_row(2, 3, split.generators[0], split.generators[2], 8);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.prediction_holds);
  REQUIRE(rep.witness_n);
  CHECK(rep.n_max == 8);
  bool saw_disjoint = false;
  bool saw_sub = false;
  for (const auto& pc : rep.configs) {
    saw_disjoint = saw_disjoint || pc.config == Configuration::Disjoint;
    saw_sub = saw_sub || pc.config == Configuration::ASubB;
  }
  CHECK(saw_disjoint);
  CHECK(saw_sub);
}

TEST_CASE("hasse diagram export lists orbitals and covers only") {
  StandardRep std3 = standard_rep(3);
  std::vector<OpenInterval> orbs;
  for (const auto& g : std3.generators) orbs.push_back(orbitals(g).front());
  OrbitalPoset poset(orbs);
  auto covers = poset.covers();
  REQUIRE(covers.size() == 2);  // chain of three: two covering pairs
  // Covers run small -> big and compose into the full chain.
  for (const auto& [lo, hi] : covers) {
    CHECK(properly_contains(poset.orbitals[hi], poset.orbitals[lo]));
  }
  std::string dot = hasse_dot(poset);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 2);
  CHECK(dot.find("(7/32,25/32)") != std::string::npos);
}

TEST_CASE("transition-chain sweep agrees with the quadratic check on random families") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 120; ++t) {
    // Random small interval families realized as one-bump maps.
    std::vector<PLMap> maps;
    std::vector<OpenInterval> ivs;
    int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      long long a = static_cast<long long>(rng() % 14);
      long long b = a + 1 + static_cast<long long>(rng() % (16 - a - 1));
      OpenInterval iv(rat(a, 16), rat(b, 16));
      ivs.push_back(iv);
      // A bump supported exactly on iv.
      maps.push_back(embed_scaled(tent(), iv.left, iv.right));
    }
    bool brute = false;
    for (const auto& x : ivs) {
      for (const auto& y : ivs) {
        if (interval_relation(x, y).order == IntervalOrder::Overlap) brute = true;
      }
    }
    MapRegistry reg;
    auto witness = has_transition_chain(reg, maps);
    CHECK(witness.has_value() == brute);
    if (witness) {
      CHECK(interval_relation(witness->first.orbital, witness->second.orbital).order ==
            IntervalOrder::Overlap);
    }
  }
}

TEST_CASE("maximal tower enumeration agrees with brute force on random laminar sets") {
  std::mt19937_64 rng(62);
  StandardRep std3 = standard_rep(3);
  for (int t = 0; t < 40; ++t) {
    MapRegistry reg;
    std::vector<SignedOrbital> sos;
    for (int k = 0; k < 5; ++k) {
      std::vector<Letter> letters;
      int len = static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i) {
        letters.push_back({static_cast<int>(rng() % 3) + 1, rng() % 2 == 0 ? 1 : -1});
      }
      PLMap m = evaluate_word(std3.generators, Word(3, letters));
      if (m.is_identity()) continue;
      auto id = reg.add(m);
      for (const auto& s : signed_orbitals(reg, id)) sos.push_back(s);
    }
    std::sort(sos.begin(), sos.end());
    sos.erase(std::unique(sos.begin(), sos.end()), sos.end());
    if (sos.size() > 8) sos.resize(8);

    auto fast = towers_in(reg, sos);
    // Brute force: every subset that is a chain, kept if no strict superset
    // is a chain.
    auto is_chain = [&](unsigned mask) {
      for (std::size_t i = 0; i < sos.size(); ++i) {
        for (std::size_t j = i + 1; j < sos.size(); ++j) {
          if (!(mask & (1u << i)) || !(mask & (1u << j))) continue;
          if (!properly_contains(sos[j].orbital, sos[i].orbital) &&
              !properly_contains(sos[i].orbital, sos[j].orbital)) {
            return false;
          }
        }
      }
      return true;
    };
    std::vector<unsigned> chains;
    for (unsigned mask = 1; mask < (1u << sos.size()); ++mask) {
      if (is_chain(mask)) chains.push_back(mask);
    }
    std::vector<unsigned> maximal;
    for (unsigned m : chains) {
      bool strict_super = false;
      for (unsigned other : chains) {
        if (other != m && (other & m) == m) strict_super = true;
      }
      if (!strict_super) maximal.push_back(m);
    }
    CHECK(fast.size() == maximal.size());
    for (const auto& tower : fast) {
      unsigned mask = 0;
      for (const auto& so : tower.elements()) {
        auto it = std::find(sos.begin(), sos.end(), so);
        REQUIRE(it != sos.end());
        mask |= 1u << static_cast<unsigned>(it - sos.begin());
      }
      CHECK(std::find(maximal.begin(), maximal.end(), mask) != maximal.end());
    }
  }
}

TEST_CASE("the bounded orbital poset is graded like the mother tree") {
  StandardRep rep = standard_rep(3);
  auto orbs = ball_orbitals(rep.generators, 4);
  OrbitalPoset poset(std::vector<OpenInterval>(orbs.begin(), orbs.end()));
  for (const auto& [lo, hi] : poset.covers()) {
    int below = geometric_level(rep, poset.orbitals[lo]);
    int above = geometric_level(rep, poset.orbitals[hi]);
    CHECK(above == below + 1);
  }
}

TEST_CASE("depth over bounded balls matches the rank for small ranks") {
  for (int n = 1; n <= 2; ++n) {
    StandardRep rep = standard_rep(n);
    auto orbs = ball_orbitals(rep.generators, 4);
    std::vector<SignedOrbital> sos;
    for (const auto& o : orbs) sos.push_back(SignedOrbital{o, 0});
    CHECK(depth(sos) == n);
  }
}
