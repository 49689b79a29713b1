#include "plogroup/rational.hpp"

#include <ostream>
#include <sstream>

namespace plogroup {

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw arithmetic_error("rational with zero denominator");
  v_ = d < 0 ? BigRat(-n, -d) : BigRat(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw arithmetic_error("division by zero");
  return Rational(BigRat(a.v_ / b.v_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw arithmetic_error("inverse of zero");
  return Rational(BigRat(1 / v_));
}

bool Rational::is_dyadic() const {
  BigInt d = den();
  return (d & (d - 1)) == 0;  // d > 0 always; power of two iff single set bit
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt n{std::string(text.substr(0, slash))};
    BigInt d{std::string(text.substr(slash + 1))};
    if (d <= 0) throw validation_error("rational text needs a positive denominator: " + std::string(text));
    return Rational(n, d);
  } catch (const std::runtime_error& e) {
    throw validation_error("bad rational literal '" + std::string(text) + "': " + e.what());
  }
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num();
  if (!is_integer()) os << '/' << den();
  return os.str();
}

double Rational::to_double() const { return v_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

Dyadic::Dyadic(Rational value) : v_(std::move(value)) {
  if (!v_.is_dyadic()) throw argument_error("not a dyadic rational: " + v_.str());
}

}  // namespace plogroup
