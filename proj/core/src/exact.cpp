#include "csinv/exact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "csinv/error.hpp"

namespace csinv {

namespace mp = boost::multiprecision;

std::pair<Integer, Integer> split_square_part(const Integer& n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "square part of a non-positive integer");
  Integer rest = n;
  Integer square_root = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square_root *= p;
    }
  }
  return {square_root, rest};
}

Integer floor_sqrt(const Rational& q) {
  if (q < 0) throw Error(ErrorKind::InvalidInput, "floor_sqrt of a negative rational");
  // t^2 <= a/b  <=>  t^2 <= floor(a/b) for integer t
  const Integer whole = mp::numerator(q) / mp::denominator(q);
  return mp::sqrt(whole);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << mp::numerator(q);
  if (mp::denominator(q) != 1) os << '/' << mp::denominator(q);
  return os.str();
}

ExactReal::ExactReal(Rational coeff, int pi_power, Integer radicand)
    : coeff_(std::move(coeff)), pi_power_(pi_power) {
  if (pi_power < 0 || pi_power > kMaxPiPower) {
    throw Error(ErrorKind::IncomparableValues,
                "pi power " + std::to_string(pi_power) + " outside the supported range 0..2");
  }
  if (radicand < 0) throw Error(ErrorKind::InvalidInput, "negative radicand");
  if (coeff_ == 0 || radicand == 0) {
    coeff_ = 0;
    pi_power_ = 0;
    radicand_ = 1;
    return;
  }
  auto [outside, rest] = split_square_part(radicand);
  coeff_ *= Rational(outside);
  radicand_ = std::move(rest);
}

int ExactReal::sign() const { return coeff_ > 0 ? 1 : (coeff_ < 0 ? -1 : 0); }

ExactReal ExactReal::operator-() const {
  ExactReal out = *this;
  out.coeff_ = -out.coeff_;
  return out;
}

ExactReal ExactReal::scaled(const Rational& factor) const {
  return ExactReal(coeff_ * factor, pi_power_, radicand_);
}

ExactReal ExactReal::sqrt() const {
  if (is_zero()) return {};
  if (sign() < 0) throw Error(ErrorKind::InvalidInput, "square root of a negative value");
  if (radicand_ != 1 || pi_power_ % 2 != 0) {
    throw Error(ErrorKind::IncomparableValues, "square root of " + to_string() +
                                                   " leaves the single-radical form");
  }
  // sqrt(a/b) = sqrt(a*b)/b
  const Integer num = mp::numerator(coeff_);
  const Integer den = mp::denominator(coeff_);
  return ExactReal(Rational(1, den), pi_power_ / 2, num * den);
}

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi_power_ != b.pi_power_ || a.radicand_ != b.radicand_) {
    throw Error(ErrorKind::IncomparableValues,
                "cannot add " + a.to_string() + " and " + b.to_string() + " in closed form");
  }
  return ExactReal(a.coeff_ + b.coeff_, a.pi_power_, a.radicand_);
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ExactReal(a.coeff_ * b.coeff_, a.pi_power_ + b.pi_power_, a.radicand_ * b.radicand_);
}

std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa == 0 || sb == 0 || sa != sb) return sa <=> sb;
  if (a.pi_power_ != b.pi_power_) {
    throw Error(ErrorKind::IncomparableValues,
                "cannot compare " + a.to_string() + " with " + b.to_string());
  }
  // same sign: compare squared magnitudes q^2 r
  const Rational ma = a.coeff_ * a.coeff_ * Rational(a.radicand_);
  const Rational mb = b.coeff_ * b.coeff_ * Rational(b.radicand_);
  if (ma == mb) return std::strong_ordering::equal;
  const bool a_bigger = ma > mb;
  if (sa > 0) return a_bigger ? std::strong_ordering::greater : std::strong_ordering::less;
  return a_bigger ? std::strong_ordering::less : std::strong_ordering::greater;
}

namespace {

std::string render(const ExactReal& v, const char* pi1, const char* pi2, bool ascii) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  Rational c = v.coeff();
  if (c < 0) {
    os << '-';
    c = -c;
  }
  const bool has_symbol = v.pi_power() > 0 || v.radicand() != 1;
  const bool fraction = mp::denominator(c) != 1;
  if (!has_symbol) {
    os << to_string(c);
    return os.str();
  }
  if (c != 1) {
    if (fraction && !ascii) os << '(' << to_string(c) << ')';
    else os << to_string(c);
    if (ascii) os << '*';
  }
  if (v.pi_power() == 1) os << pi1;
  if (v.pi_power() == 2) os << pi2;
  if (v.radicand() != 1) {
    if (ascii) {
      if (v.pi_power() > 0) os << '*';
      os << "sqrt(" << v.radicand() << ')';
    } else {
      os << "√" << v.radicand();
    }
  }
  return os.str();
}

}  // namespace

std::string ExactReal::to_string() const { return render(*this, "π", "π²", false); }

std::string ExactReal::to_ascii() const { return render(*this, "pi", "pi^2", true); }

double ExactReal::approx() const {
  return coeff_.convert_to<double>() * std::pow(std::numbers::pi, pi_power_) *
         std::sqrt(radicand_.convert_to<double>());
}

ExactInterval::ExactInterval(ExactReal lower, ExactReal upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_ > upper_) {
    throw Error(ErrorKind::InvalidInput,
                "interval endpoints out of order: " + lower_.to_string() + " > " + upper_.to_string());
  }
}

bool ExactInterval::contains(const ExactReal& v) const { return lower_ <= v && v <= upper_; }

std::string ExactInterval::to_string() const {
  return "[" + lower_.to_string() + ", " + upper_.to_string() + "]";
}

}  // namespace csinv
