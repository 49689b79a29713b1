#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "plogroup/interval.hpp"
#include "plogroup/rational.hpp"

namespace plogroup {

/// Leading and trailing slopes of a map on one of its orbitals.
struct SlopePair {
  Rational leading;
  Rational trailing;
};

/// An orientation-preserving piecewise-linear self-homeomorphism of [0,1],
/// stored as its canonical breakpoint list: first pair (0,0), last pair (1,1),
/// both coordinates strictly increasing, no interior pair collinear with its
/// neighbors. Canonical form makes map equality a plain sequence comparison.
/// Values are immutable; all operations are pure.
class PLMap {
 public:
  using Point = std::pair<Rational, Rational>;

  /// The identity map.
  PLMap();
  /// Canonicalizes (prunes collinear interior points); throws validation_error
  /// if the list is not a strictly increasing graph from (0,0) to (1,1).
  explicit PLMap(std::vector<Point> breakpoints);

  static PLMap identity() { return PLMap(); }

  const std::vector<Point>& breakpoints() const { return pts_; }
  bool is_identity() const { return pts_.size() == 2; }

  /// Exact image of x; the group acts on the right, so composition reads
  /// x(fg) = ((x)f)g. Throws domain_error outside [0,1].
  Rational operator()(const Rational& x) const;

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.pts_ == b.pts_; }
  friend bool operator!=(const PLMap& a, const PLMap& b) { return a.pts_ != b.pts_; }
  friend bool operator<(const PLMap& a, const PLMap& b);  // deterministic ordering for sets

 private:
  std::vector<Point> pts_;
};

/// Right-action composition: x(compose(f,g)) = ((x)f)g.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
/// g^c = c^{-1} g c.
PLMap conjugate(const PLMap& g, const PLMap& c);
/// [f,g] = f^{-1} g^{-1} f g.
PLMap commutator(const PLMap& f, const PLMap& g);
PLMap power(const PLMap& f, long long k);

/// Maximal open intervals where f(x) != x, left to right. Endpoints are the
/// exact roots of the affine pieces of f(x) - x.
std::vector<OpenInterval> orbitals(const PLMap& f);

/// The bump of f on its orbital A, extended by the identity.
/// Throws argument_error if A is not an orbital of f.
PLMap bump_restrict(const PLMap& f, const OpenInterval& A);

/// Leading/trailing slopes of f at the ends of its orbital A.
SlopePair slopes(const PLMap& f, const OpenInterval& A);

/// Agrees with f on the given intervals, identity elsewhere. Every interval
/// must be an orbital of f or disjoint from its support; an interval that
/// cuts an orbital throws argument_error.
PLMap restrict_to(const PLMap& f, const std::vector<OpenInterval>& intervals);

/// True iff f moves every point of A strictly rightward (A must be inside an
/// orbital region; decided exactly from the breakpoints).
bool moves_right_on(const PLMap& f, const OpenInterval& A);

/// Dyadic breakpoints and power-of-two slopes throughout.
bool is_thompson_f(const PLMap& f);

/// The canonical left-greedy partition of a dyadic interval [a,b] into
/// standard dyadic intervals [m/2^k, (m+1)/2^k]; returns the boundaries
/// a = b_0 < ... < b_m = b.
std::vector<Rational> standard_dyadic_partition(const Rational& a, const Rational& b);

/// An element of Thompson's F through the given strictly increasing dyadic
/// constraints ((0,0) first, (1,1) last): each constraint cell is split into
/// standard dyadic intervals on both sides, the side with fewer pieces is
/// halved (largest piece first, leftmost on ties) until the counts match, and
/// matching pieces are mapped affinely. Throws argument_error on non-dyadic or
/// non-monotone constraints.
PLMap dyadic_interpolant(const std::vector<std::pair<Rational, Rational>>& constraints);

/// A copy of f squeezed affinely into [a,b] (identity outside). Scaling by a
/// power of two between dyadic endpoints preserves membership in F.
PLMap embed_scaled(const PLMap& f, const Rational& a, const Rational& b);

std::string to_json(const PLMap& f);
PLMap plmap_from_json(const std::string& text);

/// Unit-square SVG: one polyline per map plus the diagonal reference.
std::string to_svg(const std::vector<PLMap>& maps);

}  // namespace plogroup
