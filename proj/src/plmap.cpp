#include "plogroup/plmap.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace plogroup {

namespace {

const Rational kZero{0};
const Rational kOne{1};

bool collinear(const PLMap::Point& a, const PLMap::Point& b, const PLMap::Point& c) {
  return (b.first - a.first) * (c.second - a.second) == (c.first - a.first) * (b.second - a.second);
}

std::vector<PLMap::Point> canonicalize(std::vector<PLMap::Point> pts) {
  if (pts.size() < 2 || pts.front() != PLMap::Point{kZero, kZero} || pts.back() != PLMap::Point{kOne, kOne}) {
    throw validation_error("breakpoint list must run from (0,0) to (1,1)");
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].first < pts[i].first) || !(pts[i - 1].second < pts[i].second)) {
      throw validation_error("breakpoints must be strictly increasing in both coordinates");
    }
  }
  std::vector<PLMap::Point> out;
  out.reserve(pts.size());
  out.push_back(pts.front());
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (!collinear(out.back(), pts[i], pts[i + 1])) out.push_back(pts[i]);
  }
  out.push_back(pts.back());
  return out;
}

}  // namespace

PLMap::PLMap() : pts_{{kZero, kZero}, {kOne, kOne}} {}

PLMap::PLMap(std::vector<Point> breakpoints) : pts_(canonicalize(std::move(breakpoints))) {}

Rational PLMap::operator()(const Rational& x) const {
  if (x < kZero || x > kOne) throw domain_error("point outside [0,1]: " + x.str());
  // Last breakpoint with input <= x.
  auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.first; });
  if (it == pts_.end()) return kOne;  // x == 1
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  if (x == lo.first) return lo.second;
  return lo.second + (x - lo.first) * (hi.second - lo.second) / (hi.first - lo.first);
}

bool operator<(const PLMap& a, const PLMap& b) {
  return std::lexicographical_compare(
      a.pts_.begin(), a.pts_.end(), b.pts_.begin(), b.pts_.end(),
      [](const PLMap::Point& p, const PLMap::Point& q) {
        if (p.first != q.first) return p.first < q.first;
        return p.second < q.second;
      });
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // Breakpoint inputs of fg are f's inputs plus preimages under f of g's
  // inputs. Both families are met in order by sweeping the middle coordinate
  // (f's outputs against g's inputs).
  const auto& F = f.breakpoints();
  const auto& G = g.breakpoints();
  std::vector<PLMap::Point> pts;
  pts.reserve(F.size() + G.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < F.size() || j < G.size()) {
    bool take_f;
    bool take_g;
    if (i < F.size() && j < G.size()) {
      take_f = !(G[j].first < F[i].second);
      take_g = !(F[i].second < G[j].first);
    } else {
      take_f = i < F.size();
      take_g = !take_f;
    }
    const Rational& y = take_f ? F[i].second : G[j].first;
    Rational x = take_f ? F[i].first
                        : F[i - 1].first + (y - F[i - 1].second) * (F[i].first - F[i - 1].first) /
                                               (F[i].second - F[i - 1].second);
    Rational v = take_g ? G[j].second
                        : G[j - 1].second + (y - G[j - 1].first) * (G[j].second - G[j - 1].second) /
                                                (G[j].first - G[j - 1].first);
    pts.emplace_back(std::move(x), std::move(v));
    if (take_f) ++i;
    if (take_g) ++j;
  }
  return PLMap(std::move(pts));
}

PLMap invert(const PLMap& f) {
  std::vector<PLMap::Point> pts;
  pts.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) pts.emplace_back(p.second, p.first);
  return PLMap(std::move(pts));
}

PLMap conjugate(const PLMap& g, const PLMap& c) { return compose(compose(invert(c), g), c); }

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(compose(invert(f), invert(g)), f), g);
}

PLMap power(const PLMap& f, long long k) {
  PLMap base = k < 0 ? invert(f) : f;
  unsigned long long n = k < 0 ? -static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  PLMap acc;
  while (n != 0) {
    if (n & 1) acc = compose(acc, base);
    n >>= 1;
    if (n != 0) base = compose(base, base);
  }
  return acc;
}

std::vector<OpenInterval> orbitals(const PLMap& f) {
  const auto& pts = f.breakpoints();
  // Zeros of the piecewise-affine displacement d(x) = f(x) - x: nodes where
  // d vanishes plus interior roots of sign-changing pieces.
  std::vector<Rational> zeros;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational d = pts[i].second - pts[i].first;
    if (d.is_zero()) zeros.push_back(pts[i].first);
    if (i + 1 < pts.size()) {
      Rational dn = pts[i + 1].second - pts[i + 1].first;
      if ((d < kZero && dn > kZero) || (d > kZero && dn < kZero)) {
        zeros.push_back(pts[i].first + (pts[i + 1].first - pts[i].first) * (kZero - d) / (dn - d));
      }
    }
  }
  std::vector<OpenInterval> out;
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    Rational mid = midpoint(zeros[i], zeros[i + 1]);
    if (f(mid) != mid) out.emplace_back(zeros[i], zeros[i + 1]);
  }
  return out;
}

PLMap bump_restrict(const PLMap& f, const OpenInterval& A) {
  auto orbs = orbitals(f);
  if (std::find(orbs.begin(), orbs.end(), A) == orbs.end()) {
    throw argument_error("not an orbital of the map: " + A.str());
  }
  return restrict_to(f, {A});
}

SlopePair slopes(const PLMap& f, const OpenInterval& A) {
  auto orbs = orbitals(f);
  if (std::find(orbs.begin(), orbs.end(), A) == orbs.end()) {
    throw argument_error("not an orbital of the map: " + A.str());
  }
  auto slope_at = [&f](const Rational& x, bool rightward) {
    const auto& pts = f.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      bool covers = rightward ? (pts[i].first <= x && x < pts[i + 1].first)
                              : (pts[i].first < x && x <= pts[i + 1].first);
      if (covers) {
        return (pts[i + 1].second - pts[i].second) / (pts[i + 1].first - pts[i].first);
      }
    }
    throw structural_error("slope lookup fell off the breakpoint list");
  };
  return SlopePair{slope_at(A.left, true), slope_at(A.right, false)};
}

PLMap restrict_to(const PLMap& f, const std::vector<OpenInterval>& intervals) {
  auto orbs = orbitals(f);
  std::vector<OpenInterval> keep;
  for (const auto& iv : intervals) {
    bool is_orbital = std::find(orbs.begin(), orbs.end(), iv) != orbs.end();
    if (is_orbital) {
      keep.push_back(iv);
      continue;
    }
    for (const auto& o : orbs) {
      if (interval_relation(iv, o).order != IntervalOrder::Disjoint) {
        throw argument_error("interval " + iv.str() + " cuts orbital " + o.str());
      }
    }
    // Disjoint from the support: contributes identity, nothing to keep.
  }
  std::sort(keep.begin(), keep.end());
  std::vector<PLMap::Point> pts;
  pts.emplace_back(kZero, kZero);
  for (const auto& A : keep) {
    pts.emplace_back(A.left, A.left);
    for (const auto& p : f.breakpoints()) {
      if (A.left < p.first && p.first < A.right) pts.push_back(p);
    }
    pts.emplace_back(A.right, A.right);
  }
  pts.emplace_back(kOne, kOne);
  // Orbital endpoints are fixed points of f, so this graph is continuous;
  // duplicates appear when an orbital abuts 0 or 1.
  std::vector<PLMap::Point> dedup;
  for (auto& p : pts) {
    if (dedup.empty() || dedup.back() != p) dedup.push_back(std::move(p));
  }
  return PLMap(std::move(dedup));
}

bool moves_right_on(const PLMap& f, const OpenInterval& A) {
  // f(x) - x is affine between nodes, so its signs at A's ends and at the
  // nodes inside A decide strict rightward motion on the open interval.
  std::vector<Rational> xs{A.left};
  for (const auto& p : f.breakpoints()) {
    if (A.contains(p.first)) xs.push_back(p.first);
  }
  xs.push_back(A.right);
  std::vector<Rational> d;
  d.reserve(xs.size());
  for (const auto& x : xs) d.push_back(f(x) - x);
  for (std::size_t i = 0; i < d.size(); ++i) {
    bool end = i == 0 || i + 1 == d.size();
    if (end ? d[i] < kZero : !(d[i] > kZero)) return false;
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i].is_zero() && d[i + 1].is_zero()) return false;  // identically-fixed piece
  }
  return true;
}

bool is_thompson_f(const PLMap& f) {
  auto pow2 = [](const BigInt& v) { return v > 0 && (v & (v - 1)) == 0; };
  const auto& pts = f.breakpoints();
  for (const auto& p : pts) {
    if (!p.first.is_dyadic() || !p.second.is_dyadic()) return false;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational s = (pts[i + 1].second - pts[i].second) / (pts[i + 1].first - pts[i].first);
    bool ok = (s.den() == 1 && pow2(s.num())) || (s.num() == 1 && pow2(s.den()));
    if (!ok) return false;
  }
  return true;
}

std::vector<Rational> standard_dyadic_partition(const Rational& a, const Rational& b) {
  if (!a.is_dyadic() || !b.is_dyadic() || !(a < b)) {
    throw argument_error("standard partition needs dyadic a < b");
  }
  std::vector<Rational> bounds{a};
  Rational cur = a;
  while (cur < b) {
    // Largest standard interval [cur, cur + 2^-j]: j at least the exponent of
    // cur's denominator, and small enough to fit in [cur, b].
    Rational step = cur.is_integer() ? Rational(1) : Rational(BigInt(1), cur.den());
    while (cur + step > b) step = step / Rational(2);
    cur += step;
    bounds.push_back(cur);
  }
  return bounds;
}

namespace {

// Split the largest piece (leftmost on ties) in half until `bounds` describes
// exactly `target` pieces.
void halve_until(std::vector<Rational>& bounds, std::size_t target) {
  while (bounds.size() - 1 < target) {
    std::size_t best = 0;
    Rational best_len = bounds[1] - bounds[0];
    for (std::size_t i = 1; i + 1 < bounds.size(); ++i) {
      Rational len = bounds[i + 1] - bounds[i];
      if (len > best_len) {
        best_len = len;
        best = i;
      }
    }
    bounds.insert(bounds.begin() + static_cast<std::ptrdiff_t>(best) + 1,
                  midpoint(bounds[best], bounds[best + 1]));
  }
}

}  // namespace

PLMap dyadic_interpolant(const std::vector<std::pair<Rational, Rational>>& constraints) {
  if (constraints.size() < 2 || constraints.front() != std::pair<Rational, Rational>{kZero, kZero} ||
      constraints.back() != std::pair<Rational, Rational>{kOne, kOne}) {
    throw argument_error("constraints must run from (0,0) to (1,1)");
  }
  for (const auto& c : constraints) {
    if (!c.first.is_dyadic() || !c.second.is_dyadic()) {
      throw argument_error("non-dyadic constraint (" + c.first.str() + "," + c.second.str() + ")");
    }
  }
  for (std::size_t i = 1; i < constraints.size(); ++i) {
    if (!(constraints[i - 1].first < constraints[i].first) ||
        !(constraints[i - 1].second < constraints[i].second)) {
      throw argument_error("constraints must be strictly increasing in both coordinates");
    }
  }
  std::vector<PLMap::Point> pts{{kZero, kZero}};
  for (std::size_t i = 0; i + 1 < constraints.size(); ++i) {
    auto src = standard_dyadic_partition(constraints[i].first, constraints[i + 1].first);
    auto dst = standard_dyadic_partition(constraints[i].second, constraints[i + 1].second);
    std::size_t n = std::max(src.size(), dst.size()) - 1;
    halve_until(src, n);
    halve_until(dst, n);
    for (std::size_t t = 1; t <= n; ++t) pts.emplace_back(src[t], dst[t]);
  }
  return PLMap(std::move(pts));
}

PLMap embed_scaled(const PLMap& f, const Rational& a, const Rational& b) {
  if (!(kZero <= a && a < b && b <= kOne)) throw argument_error("bad embedding interval");
  Rational w = b - a;
  std::vector<PLMap::Point> pts;
  if (a > kZero) pts.emplace_back(kZero, kZero);
  for (const auto& p : f.breakpoints()) pts.emplace_back(a + w * p.first, a + w * p.second);
  if (b < kOne) pts.emplace_back(kOne, kOne);
  return PLMap(std::move(pts));
}

std::string to_json(const PLMap& f) {
  nlohmann::json bps = nlohmann::json::array();
  for (const auto& p : f.breakpoints()) {
    bps.push_back(nlohmann::json::array({p.first.str(), p.second.str()}));
  }
  return nlohmann::json{{"breakpoints", bps}}.dump();
}

PLMap plmap_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("breakpoints") || !j["breakpoints"].is_array()) {
    throw validation_error("expected object with a 'breakpoints' array");
  }
  std::vector<PLMap::Point> pts;
  for (const auto& bp : j["breakpoints"]) {
    if (!bp.is_array() || bp.size() != 2) throw validation_error("breakpoint must be a 2-element array");
    pts.emplace_back(Rational::parse(bp[0].get<std::string>()), Rational::parse(bp[1].get<std::string>()));
  }
  return PLMap(std::move(pts));
}

std::string to_svg(const std::vector<PLMap>& maps) {
  constexpr int kSize = 512;
  auto px = [](double v) { return v * kSize; };
  auto py = [](double v) { return (1.0 - v) * kSize; };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" fill=\"white\" stroke=\"black\"/>\n";
  os << "  <line x1=\"0\" y1=\"" << kSize << "\" x2=\"" << kSize
     << "\" y2=\"0\" stroke=\"#cccccc\" stroke-dasharray=\"4 4\"/>\n";
  for (std::size_t m = 0; m < maps.size(); ++m) {
    os << "  <polyline fill=\"none\" stroke=\"" << kColors[m % 6] << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : maps[m].breakpoints()) {
      os << px(p.first.to_double()) << ',' << py(p.second.to_double()) << ' ';
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace plogroup
