#pragma once

#include <string>

#include "multistat/rational.hpp"

namespace multistat {

/// Closed interval [lo, hi] with exact rational endpoints.
class RatInterval {
 public:
  RatInterval() = default;
  RatInterval(const Rational& point);  // NOLINT(google-explicit-constructor)
  RatInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return sign(lo_) <= 0 && sign(hi_) >= 0; }
  bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool positive() const { return sign(lo_) > 0; }
  bool negative() const { return sign(hi_) < 0; }
  /// -1 / +1 when the interval excludes zero, 0 otherwise.
  int certain_sign() const;

  RatInterval operator-() const { return {-hi_, -lo_}; }
  RatInterval& operator+=(const RatInterval& o);
  RatInterval& operator-=(const RatInterval& o);
  RatInterval& operator*=(const RatInterval& o);

  friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
  friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }
  friend RatInterval operator*(RatInterval a, const RatInterval& b) { return a *= b; }
  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  /// Requires 0 outside the divisor.
  RatInterval divided_by(const RatInterval& d) const;
  RatInterval pow(unsigned e) const;
  /// Smallest interval containing both.
  RatInterval hull(const RatInterval& o) const;
  /// Outward rounding of both endpoints to dyadic rationals with 2^bits denominators.
  RatInterval rounded_out(unsigned bits) const;

  std::string to_string() const;

 private:
  Rational lo_, hi_;
};

}  // namespace multistat
