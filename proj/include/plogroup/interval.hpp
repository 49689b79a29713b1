#pragma once

#include <string>
#include <vector>

#include "plogroup/rational.hpp"

namespace plogroup {

/// Open interval (left, right) with left < right. Orbitals are always open.
struct OpenInterval {
  Rational left;
  Rational right;

  OpenInterval(Rational l, Rational r);

  bool contains(const Rational& x) const { return left < x && x < right; }
  Rational length() const { return right - left; }
  std::string str() const { return "(" + left.str() + "," + right.str() + ")"; }

  friend bool operator==(const OpenInterval& a, const OpenInterval& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend bool operator!=(const OpenInterval& a, const OpenInterval& b) { return !(a == b); }
  /// Lexicographic; used only for deterministic ordering in sets, not containment.
  friend bool operator<(const OpenInterval& a, const OpenInterval& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  }
};

enum class IntervalOrder {
  Equal,
  ProperSubset,    // first strictly inside second
  ProperSuperset,  // second strictly inside first
  Disjoint,
  Overlap,  // nonempty intersection, no containment: the shape of a transition chain
};

struct IntervalRelation {
  IntervalOrder order;
  /// One endpoint coincides while one interval properly contains the other.
  bool shares_end = false;
};

IntervalRelation interval_relation(const OpenInterval& a, const OpenInterval& b);

inline bool properly_contains(const OpenInterval& big, const OpenInterval& small) {
  return interval_relation(small, big).order == IntervalOrder::ProperSubset;
}

const char* to_string(IntervalOrder o);

}  // namespace plogroup
