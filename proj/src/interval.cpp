#include "plogroup/interval.hpp"

namespace plogroup {

OpenInterval::OpenInterval(Rational l, Rational r) : left(std::move(l)), right(std::move(r)) {
  if (!(left < right)) throw argument_error("degenerate interval (" + left.str() + "," + right.str() + ")");
}

IntervalRelation interval_relation(const OpenInterval& a, const OpenInterval& b) {
  if (a == b) return {IntervalOrder::Equal, false};
  if (a.right <= b.left || b.right <= a.left) return {IntervalOrder::Disjoint, false};
  // Nonempty intersection from here on.
  if (b.left <= a.left && a.right <= b.right) {
    return {IntervalOrder::ProperSubset, a.left == b.left || a.right == b.right};
  }
  if (a.left <= b.left && b.right <= a.right) {
    return {IntervalOrder::ProperSuperset, a.left == b.left || a.right == b.right};
  }
  return {IntervalOrder::Overlap, false};
}

const char* to_string(IntervalOrder o) {
  switch (o) {
    case IntervalOrder::Equal: return "Equal";
    case IntervalOrder::ProperSubset: return "ProperSubset";
    case IntervalOrder::ProperSuperset: return "ProperSuperset";
    case IntervalOrder::Disjoint: return "Disjoint";
    case IntervalOrder::Overlap: return "Overlap";
  }
  return "?";
}

}  // namespace plogroup
