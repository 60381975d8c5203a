#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace csinv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest square s with s^2 | n, returned as (s, n / s^2). Requires n >= 1.
std::pair<Integer, Integer> split_square_part(const Integer& n);

/// floor(sqrt(q)) for a non-negative rational, computed exactly.
Integer floor_sqrt(const Rational& q);

std::string to_string(const Rational& q);

/// A real number of the form coeff * pi^pi_power * sqrt(radicand).
///
/// The representation is canonical: the radicand is square-free and zero is
/// always stored as (0, 0, 1). Structural equality is therefore value
/// equality. Values with different pi powers are only comparable when one of
/// them is zero; sums need matching (pi_power, radicand).
class ExactReal {
 public:
  static constexpr int kMaxPiPower = 2;

  ExactReal() = default;
  ExactReal(Rational coeff, int pi_power = 0, Integer radicand = 1);

  static ExactReal integer(std::int64_t n) { return ExactReal(Rational(n)); }
  static ExactReal pi(Rational coeff, int power = 1, Integer radicand = 1) {
    return ExactReal(std::move(coeff), power, std::move(radicand));
  }

  const Rational& coeff() const noexcept { return coeff_; }
  int pi_power() const noexcept { return pi_power_; }
  const Integer& radicand() const noexcept { return radicand_; }

  int sign() const;
  bool is_zero() const { return coeff_ == 0; }

  ExactReal operator-() const;
  ExactReal scaled(const Rational& factor) const;
  ExactReal squared() const { return *this * *this; }

  /// Square root of a value of the form q * pi^(2j) with q >= 0.
  ExactReal sqrt() const;

  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b) { return a + (-b); }
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);

  friend bool operator==(const ExactReal&, const ExactReal&) = default;
  friend std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b);

  /// Human form, e.g. "-8π√2", "128π²", "4/3".
  std::string to_string() const;
  /// ASCII form, e.g. "-8*pi*sqrt(2)".
  std::string to_ascii() const;
  /// Non-authoritative decimal approximation.
  double approx() const;

 private:
  Rational coeff_{0};
  int pi_power_ = 0;
  Integer radicand_{1};
};

/// Closed interval [lower, upper] with exactly ordered endpoints.
class ExactInterval {
 public:
  ExactInterval(ExactReal lower, ExactReal upper);
  static ExactInterval point(const ExactReal& v) { return {v, v}; }

  const ExactReal& lower() const noexcept { return lower_; }
  const ExactReal& upper() const noexcept { return upper_; }
  bool is_point() const { return lower_ == upper_; }
  bool contains(const ExactReal& v) const;

  friend bool operator==(const ExactInterval&, const ExactInterval&) = default;

  std::string to_string() const;

 private:
  ExactReal lower_;
  ExactReal upper_;
};

}  // namespace csinv
