#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace tpw {

/// Exact rational with 64-bit numerator and denominator, always reduced and
/// with a positive denominator. Arithmetic throws std::overflow_error rather
/// than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  int sign() const { return (num_ > 0) - (num_ < 0); }
  std::int64_t floor() const;
  std::int64_t ceil() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "p" or "p/q".
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact number a + b*sqrt(2) with rational a and b. Every threshold of the
/// tree-partition construction lives in this field, so case dispatch never
/// touches floating point.
class QuadNum {
 public:
  constexpr QuadNum() = default;
  QuadNum(Rational a, Rational b = Rational(0)) : a_(a), b_(b) {}  // NOLINT(google-explicit-constructor)
  QuadNum(std::int64_t a) : a_(a) {}                                // NOLINT(google-explicit-constructor)

  static QuadNum sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  QuadNum operator+(const QuadNum& o) const { return {a_ + o.a_, b_ + o.b_}; }
  QuadNum operator-(const QuadNum& o) const { return {a_ - o.a_, b_ - o.b_}; }
  QuadNum operator-() const { return {-a_, -b_}; }
  // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
  QuadNum operator*(const QuadNum& o) const {
    return {a_ * o.a_ + Rational(2) * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
  }

  bool operator==(const QuadNum& o) const = default;
  std::strong_ordering operator<=>(const QuadNum& o) const;

  /// Exact sign of a + b*sqrt(2).
  int sign() const;
  std::int64_t floor() const;
  std::int64_t ceil() const;
  /// Display only; never used for decisions.
  double approx() const;
  /// e.g. "34+22*sqrt2".
  std::string str() const;

 private:
  Rational a_;
  Rational b_;
};

/// Constants of the construction.
QuadNum gamma_const();  // 1 + sqrt2
QuadNum alpha_const();  // 1 + sqrt2/2

}  // namespace tpw
