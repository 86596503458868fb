#include "multistat/interval.hpp"

#include <algorithm>
#include <utility>

#include "multistat/error.hpp"

namespace multistat {

RatInterval::RatInterval(const Rational& point) : lo_(point), hi_(point) {}

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
}

int RatInterval::certain_sign() const {
  if (sign(lo_) > 0) return 1;
  if (sign(hi_) < 0) return -1;
  return 0;
}

RatInterval& RatInterval::operator+=(const RatInterval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

RatInterval& RatInterval::operator-=(const RatInterval& o) {
  lo_ -= o.hi_;
  hi_ -= o.lo_;
  return *this;
}

RatInterval& RatInterval::operator*=(const RatInterval& o) {
  if (is_point() && o.is_point()) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  if (sign(lo_) >= 0 && sign(o.lo_) >= 0) {
    lo_ *= o.lo_;
    hi_ *= o.hi_;
    return *this;
  }
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

RatInterval RatInterval::divided_by(const RatInterval& d) const {
  if (d.contains_zero()) throw Error(ErrorCode::DenominatorStraddlesZero, "division by " + d.to_string());
  RatInterval inv(1 / d.hi_, 1 / d.lo_);
  return *this * inv;
}

RatInterval RatInterval::pow(unsigned e) const {
  if (e == 0) return RatInterval(Rational(1));
  Rational a = multistat::pow(lo_, e), b = multistat::pow(hi_, e);
  if (e % 2 == 1) return {a, b};
  if (sign(lo_) >= 0) return {a, b};
  if (sign(hi_) <= 0) return {b, a};
  return {Rational(0), std::max(a, b)};
}

RatInterval RatInterval::hull(const RatInterval& o) const {
  return {std::min(lo_, o.lo_), std::max(hi_, o.hi_)};
}

RatInterval RatInterval::rounded_out(unsigned bits) const {
  return {round_down(lo_, bits), round_up(hi_, bits)};
}

std::string RatInterval::to_string() const {
  return "[" + multistat::to_string(lo_) + ", " + multistat::to_string(hi_) + "]";
}

}  // namespace multistat
