#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multistat/interval.hpp"
#include "multistat/multipoly.hpp"
#include "multistat/rational.hpp"

namespace multistat {

/// Dense integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;

/// Dense univariate polynomial over Q, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);
  static UniPoly from_integers(const ZPoly& coeffs);
  /// Requires p to mention no variable other than `var`.
  static UniPoly from_multipoly(const MultiPoly& p, std::string_view var);
  /// Linear polynomial den*x - num vanishing at q.
  static UniPoly linear_root(const Rational& q);

  MultiPoly to_multipoly(std::string_view var) const;

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lc() const;
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;
  RatInterval operator()(const RatInterval& x) const;
  int sign_at(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Quotient and remainder over Q.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  /// Integer, primitive, positive leading coefficient.
  ZPoly integer_primitive() const;
  UniPoly primitive() const { return from_integers(integer_primitive()); }
  UniPoly monic() const;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), primitive. Throws ZeroPoly.
UniPoly squarefree_part(const UniPoly& p);
/// Yun decomposition: pairs (f_i, i) with p = c * prod f_i^i, each f_i squarefree primitive.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p);

namespace zpoly {

void trim(ZPoly& p);
int degree(const ZPoly& p);
Integer content(const ZPoly& p);
/// Divide by content; makes leading coefficient positive.
ZPoly primitive(const ZPoly& p);
ZPoly derivative(const ZPoly& p);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);
/// Exact division; nullopt-like empty result with ok=false when not exact.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);
/// Primitive gcd with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// Resultant by the subresultant PRS.
Integer resultant(const ZPoly& a, const ZPoly& b);
/// Sign of p(num/den) for den > 0, exact.
int sign_at(const ZPoly& p, const Rational& x);
Integer eval(const ZPoly& p, const Integer& x);
/// p(x + 1).
ZPoly taylor_shift_one(const ZPoly& p);
/// x^d p(1/x).
ZPoly reverse(const ZPoly& p);
/// 2^d p(x/2) in integer form.
ZPoly halve(const ZPoly& p);
/// p(-x).
ZPoly negate_variable(const ZPoly& p);
/// Number of sign changes in the coefficient list.
unsigned sign_variations(const ZPoly& p);

}  // namespace zpoly

}  // namespace multistat
