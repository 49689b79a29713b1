#pragma once

#include <string>
#include <vector>

#include "plogroup/orbital_analysis.hpp"
#include "plogroup/plmap.hpp"
#include "plogroup/word.hpp"

namespace plogroup {

/// A midpoint of a deleted interval of the middle-half Cantor construction
/// confined to [3/4, 1], together with that interval.
struct McPoint {
  Rational x;
  OpenInterval deleted;  // contains x and no other construction midpoint

  const Rational& left() const { return deleted.left; }
  const Rational& right() const { return deleted.right; }
};

/// The first `count` midpoints in construction order: stage by stage,
/// left to right within a stage ([7/8], then [25/32, 31/32], ...).
std::vector<McPoint> mc_points(int count);

/// Locates x among the construction midpoints; throws argument_error if x is
/// not one of them.
McPoint locate_mc_point(const Rational& x);

/// The one-bump F element attached to a midpoint x: support exactly
/// (1-x, x), every interior point moved strictly rightward, and 1-l mapped to
/// l where l is the left end of the deleted interval. [1-l, l) is then a
/// fundamental domain containing the support of every smaller point's
/// generator.
PLMap wc_generator(const McPoint& p);

/// Generators attached to a finite increasing set of midpoints; supports are
/// nested in point order.
struct WCRep {
  std::vector<McPoint> points;
  std::vector<PLMap> generators;
};

WCRep wc_generators(std::vector<Rational> points);

/// A pure fundamental tower of F elements: generators f_1 .. f_rank with
/// strictly nested supports, built from a nested chain of midpoints.
struct StandardRep {
  int rank = 0;
  std::vector<McPoint> points;
  std::vector<PLMap> generators;
};

StandardRep standard_rep(int n);

/// Image of w under f_i -> gens[i-1], composed with the right action.
/// Requires w.rank() <= gens.size().
PLMap evaluate_word(const std::vector<PLMap>& gens, const Word& w);

/// Maximal open intervals of the union of the generators' supports.
std::vector<OpenInterval> group_orbitals(const std::vector<PLMap>& gens);

/// Position of O in a maximal chain of the poset of element orbitals, taken
/// within the projection to the group orbital containing O. Works on any
/// family of generators whose per-orbital projections form a pure fundamental
/// chain; throws argument_error if O does not belong to the structure.
int geometric_level(const std::vector<PLMap>& gens, const OpenInterval& O);
int geometric_level(const StandardRep& rep, const OpenInterval& O);

enum class Family { Standard, Split, Full, Top, Free, FreeCollapse };
const char* to_string(Family f);
Family family_from_string(const std::string& name);

/// Three generators realizing the family's orbital pattern: a full tower on
/// the first group orbital plus the family's tuple on the second. The map
/// f_i -> g_i extends to an isomorphism from the rank-3 wreath group.
struct ExampleRep {
  Family family = Family::Standard;
  std::vector<PLMap> generators;
};

ExampleRep example_rep(Family family);

std::string to_json(const WCRep& rep);

}  // namespace plogroup
