#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multistat/interval.hpp"
#include "multistat/unipoly.hpp"

namespace multistat {

/// A real root of `defining` (squarefree, primitive, integer) pinned by an
/// isolating interval. A degenerate interval means the root is that rational,
/// and the defining polynomial is then linear. Otherwise the interval is open
/// and the defining polynomial changes sign strictly between its endpoints.
class AlgebraicNumber {
 public:
  AlgebraicNumber(ZPoly defining, RatInterval interval);
  static AlgebraicNumber rational(const Rational& q);

  const ZPoly& defining() const { return defining_; }
  UniPoly defining_poly() const { return UniPoly::from_integers(defining_); }
  const RatInterval& interval() const { return interval_; }
  bool is_rational() const { return interval_.is_point(); }
  /// Midpoint of the current interval; the value itself when rational.
  Rational approximation() const { return interval_.midpoint(); }

  /// Halve the interval once.
  AlgebraicNumber bisected() const;
  /// Shrink until width <= w.
  AlgebraicNumber refined(const Rational& w) const;
  /// Decimal with `digits` significant digits, refined until stable.
  std::string to_decimal(int digits) const;

 private:
  ZPoly defining_;
  RatInterval interval_;
};

using RootList = std::vector<AlgebraicNumber>;

enum class Openness { Open, Closed, LeftOpen, RightOpen };

/// Distinct real roots in increasing order. Throws ZeroPoly.
RootList isolate_real_roots(const UniPoly& p);
/// Distinct roots in (0, inf).
RootList isolate_positive_roots(const UniPoly& p);

/// Distinct real roots inside the interval (Sturm). Throws ZeroPoly.
unsigned count_roots_in(const UniPoly& p, const RatInterval& iv, Openness openness);
/// Distinct real roots with optional (infinite when absent) open bounds.
unsigned count_roots_between(const UniPoly& p, const std::optional<Rational>& lo,
                             const std::optional<Rational>& hi);

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

/// Exact sign of p at a.
int sign_at(const UniPoly& p, const AlgebraicNumber& a);

/// Exact comparison, refining as needed.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Sorted distinct roots of all polynomials.
RootList merge_roots(const std::vector<RootList>& lists);

/// Squarefree, pairwise coprime polynomials with the same real roots as the input.
std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& polys);

}  // namespace multistat
