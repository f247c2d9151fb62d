#include "tpw/quadnum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tpw {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::operator+(const Rational& o) const {
  return make(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
  return make(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
}
Rational Rational::operator*(const Rational& o) const {
  return make(Wide(num_) * o.num_, Wide(den_) * o.den_);
}
Rational Rational::operator/(const Rational& o) const {
  return make(Wide(num_) * o.den_, Wide(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return Wide(num_) * o.den_ <=> Wide(o.num_) * den_;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

int QuadNum::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: a + b r has the sign of whichever of a^2 and 2b^2 wins.
  auto cmp = a_ * a_ <=> Rational(2) * b_ * b_;
  if (cmp == 0) return 0;  // unreachable for rational a, b with b != 0
  return (cmp > 0) ? sa : sb;
}

std::strong_ordering QuadNum::operator<=>(const QuadNum& o) const {
  int s = (*this - o).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

double QuadNum::approx() const { return a_.to_double() + b_.to_double() * std::sqrt(2.0); }

std::int64_t QuadNum::floor() const {
  auto m = static_cast<std::int64_t>(std::floor(approx()));
  while (QuadNum(m) > *this) --m;
  while (QuadNum(m + 1) <= *this) ++m;
  return m;
}

std::int64_t QuadNum::ceil() const {
  auto m = static_cast<std::int64_t>(std::ceil(approx()));
  while (QuadNum(m) < *this) ++m;
  while (QuadNum(m - 1) >= *this) --m;
  return m;
}

std::string QuadNum::str() const {
  if (b_.sign() == 0) return a_.str();
  std::string out = a_.sign() == 0 ? "" : a_.str();
  if (b_.sign() > 0 && !out.empty()) out += "+";
  return out + b_.str() + "*sqrt2";
}

QuadNum gamma_const() { return {Rational(1), Rational(1)}; }
QuadNum alpha_const() { return {Rational(1), Rational(1, 2)}; }

}  // namespace tpw
