#include <doctest.h>

#include <random>

#include "plogroup/normal_form.hpp"
#include "plogroup/orbital_analysis.hpp"
#include "plogroup/representation.hpp"
#include "plogroup/tree_diagram.hpp"

using namespace plogroup;

namespace {

Rational rat(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST_CASE("construction midpoints, stage by stage") {
  auto pts = mc_points(7);
  CHECK(pts[0].x == rat(7, 8));
  CHECK(pts[0].deleted == OpenInterval(rat(13, 16), rat(15, 16)));
  CHECK(pts[1].x == rat(25, 32));
  CHECK(pts[1].deleted == OpenInterval(rat(49, 64), rat(51, 64)));
  CHECK(pts[2].x == rat(31, 32));
  CHECK(pts[2].deleted == OpenInterval(rat(61, 64), rat(63, 64)));
  CHECK(pts[3].x == rat(97, 128));
  CHECK(pts[4].x == rat(103, 128));
  CHECK(pts[5].x == rat(121, 128));
  CHECK(pts[6].x == rat(127, 128));

  SUBCASE("each deleted interval contains its midpoint and no other") {
    for (const auto& p : pts) {
      CHECK(p.deleted.contains(p.x));
      for (const auto& q : pts) {
        if (q.x != p.x) CHECK_FALSE(p.deleted.contains(q.x));
      }
    }
  }
  SUBCASE("locating accepts midpoints and rejects everything else") {
    for (const auto& p : pts) {
      McPoint found = locate_mc_point(p.x);
      CHECK(found.deleted == p.deleted);
    }
    CHECK_THROWS_AS(locate_mc_point(rat(3, 4)), argument_error);
    CHECK_THROWS_AS(locate_mc_point(rat(13, 16)), argument_error);  // interval endpoint
    CHECK_THROWS_AS(locate_mc_point(rat(5, 6)), argument_error);    // not dyadic
    CHECK_THROWS_AS(locate_mc_point(rat(1, 2)), argument_error);    // outside [3/4,1]
    CHECK_THROWS_AS(locate_mc_point(rat(27, 32)), argument_error);  // dyadic, not a midpoint
  }
}

TEST_CASE("generator for 7/8: support, mapped point, membership in F") {
  PLMap f = wc_generator(locate_mc_point(rat(7, 8)));
  CHECK(is_thompson_f(f));
  auto orbs = orbitals(f);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0] == OpenInterval(rat(1, 8), rat(7, 8)));
  CHECK(f(rat(3, 16)) == rat(13, 16));
  CHECK(moves_right_on(f, orbs[0]));
}

TEST_CASE("two-point family: nested supports inside a fundamental domain") {
  WCRep rep = wc_generators({rat(25, 32), rat(7, 8)});
  REQUIRE(rep.generators.size() == 2);
  auto small = orbitals(rep.generators[0]);
  REQUIRE(small.size() == 1);
  CHECK(small[0] == OpenInterval(rat(7, 32), rat(25, 32)));
  // [3/16, 13/16) is a fundamental domain of the big generator and contains
  // the small support.
  const PLMap& big = rep.generators[1];
  CHECK(big(rat(3, 16)) == rat(13, 16));
  CHECK(rat(3, 16) <= small[0].left);
  CHECK(small[0].right <= rat(13, 16));
}

TEST_CASE("wc_generators rejects non-midpoints") {
  CHECK_THROWS_AS(wc_generators({rat(1, 2)}), argument_error);
  CHECK_THROWS_AS(wc_generators({rat(7, 8), rat(3, 4)}), argument_error);
  CHECK_THROWS_AS(wc_generators({}), argument_error);
}

TEST_CASE("standard representations carry pure fundamental towers") {
  for (int n = 1; n <= 4; ++n) {
    StandardRep rep = standard_rep(n);
    REQUIRE(rep.generators.size() == static_cast<std::size_t>(n));
    MapRegistry reg;
    std::vector<SignedOrbital> sos;
    for (const auto& g : rep.generators) {
      CHECK(is_thompson_f(g));
      auto id = reg.add(g);
      auto s = signed_orbitals(reg, id);
      REQUIRE(s.size() == 1);
      sos.push_back(s[0]);
    }
    CHECK(is_pure(reg, sos));
    CHECK(is_fundamental(reg, sos));
    for (int i = 1; i < n; ++i) {
      CHECK(properly_contains(sos[static_cast<std::size_t>(i)].orbital,
                              sos[static_cast<std::size_t>(i - 1)].orbital));
    }
  }
}

TEST_CASE("sampled relator words act as the identity") {
  StandardRep rep2 = standard_rep(2);
  CHECK(evaluate_word(rep2.generators, relator(2, 1, 1, {1})).is_identity());
  StandardRep rep3 = standard_rep(3);
  for (const auto& r : all_relators(3, 2)) {
    CHECK(evaluate_word(rep3.generators, r).is_identity());
  }
}

TEST_CASE("word evaluation follows the right action and checks ranks") {
  StandardRep rep = standard_rep(2);
  CHECK(evaluate_word(rep.generators, Word(2)).is_identity());
  Word w = Word::parse(2, "F1 F2");
  PLMap direct = compose(rep.generators[0], rep.generators[1]);
  CHECK(evaluate_word(rep.generators, w) == direct);
  CHECK_THROWS_AS(evaluate_word(rep.generators, Word::parse(3, "F3")), argument_error);
  // Normal form and word evaluate identically.
  Word v = Word::parse(2, "F2' F1 F2 F1");
  CHECK(evaluate_word(rep.generators, v) == evaluate_word(rep.generators, to_word(normalize(v))));
}

TEST_CASE("group orbitals merge overlapping supports only") {
  ExampleRep split = example_rep(Family::Split);
  auto panels = group_orbitals(split.generators);
  REQUIRE(panels.size() == 2);
  CHECK(panels[0].right <= rat(1, 2));
  CHECK(rat(1, 2) <= panels[1].left);
}

TEST_CASE("geometric levels in a standard representation") {
  StandardRep rep = standard_rep(3);
  CHECK(geometric_level(rep, orbitals(rep.generators[1]).front()) == 2);
  CHECK(geometric_level(rep, orbitals(rep.generators[0]).front()) == 1);
  CHECK(geometric_level(rep, orbitals(rep.generators[2]).front()) == 3);

  SUBCASE("conjugates keep their level") {
    PLMap moved = evaluate_word(rep.generators, Word::parse(3, "F3' F1 F3"));
    CHECK(geometric_level(rep, orbitals(moved).front()) == 1);
    PLMap moved2 = evaluate_word(rep.generators, Word::parse(3, "F3^2 F2 F3^-2"));
    CHECK(geometric_level(rep, orbitals(moved2).front()) == 2);
  }
  SUBCASE("a product along the chain sits at the top level") {
    PLMap prod = evaluate_word(rep.generators, Word::parse(3, "F1 F2"));
    CHECK(geometric_level(rep, orbitals(prod).front()) == 2);
  }
  SUBCASE("intervals outside the structure are rejected") {
    CHECK_THROWS_AS(geometric_level(rep, OpenInterval(Rational(0), Rational(1))), argument_error);
    CHECK_THROWS_AS(geometric_level(rep, OpenInterval(rat(1, 64), rat(2, 64))), argument_error);
  }
}

TEST_CASE("conjugation invariance of geometric level on random words") {
  std::mt19937_64 rng(51);
  StandardRep rep = standard_rep(3);
  for (int t = 0; t < 25; ++t) {
    std::vector<Letter> letters;
    int len = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) {
      letters.push_back({static_cast<int>(rng() % 3) + 1, rng() % 2 == 0 ? 1 : -1});
    }
    Word w(3, letters);
    PLMap m = evaluate_word(rep.generators, w);
    if (m.is_identity()) continue;
    std::vector<Letter> cl;
    for (int i = 0; i < 3; ++i) {
      cl.push_back({static_cast<int>(rng() % 3) + 1, rng() % 2 == 0 ? 1 : -1});
    }
    PLMap c = evaluate_word(rep.generators, Word(3, cl));
    for (const auto& O : orbitals(m)) {
      OpenInterval image(c(O.left), c(O.right));
      CHECK(geometric_level(rep, O) == geometric_level(rep, image));
    }
  }
}

TEST_CASE("example families realize their orbital patterns") {
  MapRegistry reg;
  auto family_sos = [&](const ExampleRep& ex) {
    std::vector<SignedOrbital> sos;
    for (const auto& g : ex.generators) {
      auto id = reg.add(g);
      for (const auto& s : signed_orbitals(reg, id)) sos.push_back(s);
    }
    return sos;
  };

  SUBCASE("standard: one 3-chain") {
    auto sos = family_sos(example_rep(Family::Standard));
    CHECK(sos.size() == 3);
    CHECK(towers_in(reg, sos).size() == 1);
  }
  SUBCASE("split: a 3-chain plus a 2-chain, middle generator trivial there") {
    ExampleRep ex = example_rep(Family::Split);
    auto sos = family_sos(ex);
    CHECK(sos.size() == 5);
    auto towers = towers_in(reg, sos);
    REQUIRE(towers.size() == 2);
    CHECK(orbitals(ex.generators[1]).size() == 1);  // g_2 acts only on the first panel
  }
  SUBCASE("full: two 3-chains") {
    auto sos = family_sos(example_rep(Family::Full));
    CHECK(sos.size() == 6);
    auto towers = towers_in(reg, sos);
    REQUIRE(towers.size() == 2);
    CHECK(towers[0].height() == 3);
    CHECK(towers[1].height() == 3);
  }
  SUBCASE("top: the 2-chain uses the upper generators") {
    ExampleRep ex = example_rep(Family::Top);
    CHECK(orbitals(ex.generators[0]).size() == 1);
    CHECK(orbitals(ex.generators[1]).size() == 2);
    CHECK(orbitals(ex.generators[2]).size() == 2);
  }
  SUBCASE("free: a single extra bump on the second panel") {
    ExampleRep ex = example_rep(Family::Free);
    CHECK(orbitals(ex.generators[0]).size() == 2);
    CHECK(orbitals(ex.generators[1]).size() == 1);
    CHECK(orbitals(ex.generators[2]).size() == 1);
  }
  SUBCASE("free-collapse: one shared orbital on the second panel") {
    ExampleRep ex = example_rep(Family::FreeCollapse);
    auto sos = family_sos(ex);
    CHECK(sos.size() == 6);
    OpenInterval shared = orbitals(ex.generators[0])[1];
    for (const auto& g : ex.generators) {
      auto orbs = orbitals(g);
      REQUIRE(orbs.size() == 2);
      CHECK(orbs[1] == shared);
    }
    // The collapsed bumps are literally equal.
    CHECK(bump_restrict(ex.generators[0], shared) == bump_restrict(ex.generators[2], shared));
  }
}

TEST_CASE("family generator tuples satisfy the rank-3 relations") {
  for (Family fam : {Family::Standard, Family::Split, Family::Full, Family::Top, Family::Free,
                     Family::FreeCollapse}) {
    ExampleRep ex = example_rep(fam);
    for (const auto& r : all_relators(3, 1)) {
      CHECK(evaluate_word(ex.generators, r).is_identity());
    }
  }
}

TEST_CASE("levels inside example families use the panel projection") {
  ExampleRep split = example_rep(Family::Split);
  auto g1 = orbitals(split.generators[0]);
  REQUIRE(g1.size() == 2);
  CHECK(geometric_level(split.generators, g1[0]) == 1);  // bottom of the 3-chain
  CHECK(geometric_level(split.generators, g1[1]) == 1);  // bottom of the 2-chain
  auto g3 = orbitals(split.generators[2]);
  REQUIRE(g3.size() == 2);
  CHECK(geometric_level(split.generators, g3[0]) == 3);
  CHECK(geometric_level(split.generators, g3[1]) == 2);
}

TEST_CASE("WC JSON lists points with deleted intervals and generators") {
  WCRep rep = wc_generators({rat(7, 8)});
  std::string j = to_json(rep);
  CHECK(j.find("\"7/8\"") != std::string::npos);
  CHECK(j.find("\"13/16\"") != std::string::npos);
  CHECK(j.find("breakpoints") != std::string::npos);
}

TEST_CASE("mother tree window agrees with the geometric poset") {
  // Orbitals of short words, addressed by (level, conjugators), reproduce the
  // window's tree structure: each orbital at level i sits directly under its
  // parent at level i+1.
  StandardRep rep = standard_rep(3);
  PLMap f2 = rep.generators[1];
  PLMap f3 = rep.generators[2];
  OpenInterval a2 = orbitals(f2).front();
  OpenInterval a1 = orbitals(rep.generators[0]).front();
  // Children of the root: conjugates of a2 by powers of f3.
  for (long long k : {-1LL, 0LL, 1LL}) {
    PLMap c = power(f3, k);
    OpenInterval moved(c(a2.left), c(a2.right));
    CHECK(geometric_level(rep, moved) == 2);
  }
  // Grandchildren: conjugates of a1.
  PLMap c = compose(power(f2, 1), power(f3, -1));
  OpenInterval moved(c(a1.left), c(a1.right));
  CHECK(geometric_level(rep, moved) == 1);
}
