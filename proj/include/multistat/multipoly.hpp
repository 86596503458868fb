#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multistat/interval.hpp"
#include "multistat/rational.hpp"

namespace multistat {

using VarTable = std::vector<std::string>;
using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(VarTable names);

/// Exponent vector over a variable table; always as long as the table.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps);

  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned operator[](size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
  unsigned total_degree() const { return total_; }
  size_t size() const { return exps_.size(); }
  bool is_one() const { return total_ == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Componentwise o <= *this.
  bool divisible_by(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;
  /// Componentwise minimum.
  Monomial gcd(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<unsigned> exps_;
  unsigned total_ = 0;
};

/// Graded lexicographic order, first table variable most significant.
/// Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q. Terms are stored in descending
/// graded-lex order with nonzero coefficients.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly();
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(VarTablePtr vars, std::vector<Term> terms);

  static MultiPoly variable(std::string_view name);
  static MultiPoly variable(VarTablePtr vars, size_t index);
  static MultiPoly constant(VarTablePtr vars, const Rational& c);

  const VarTablePtr& table() const { return vars_; }
  const VarTable& vars() const { return *vars_; }
  size_t nvars() const { return vars_->size(); }
  std::optional<size_t> index_of(std::string_view name) const;

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  const Rational& leading_coefficient() const;
  const Monomial& leading_monomial() const;

  unsigned total_degree() const;
  unsigned degree(std::string_view var) const;
  unsigned degree(size_t index) const;
  bool mentions(std::string_view var) const { return degree(var) > 0; }
  /// Names of variables that actually occur, in table order.
  std::vector<std::string> support() const;

  /// Same polynomial over another table that contains every variable in use.
  MultiPoly over(const VarTablePtr& vars) const;
  /// Drop variables that do not occur.
  MultiPoly trimmed() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator/=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
  /// Equality as polynomials, independent of table layout.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const;

  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly substitute(std::string_view var, const Rational& value) const;
  MultiPoly substitute(const std::map<std::string, Rational>& values) const;
  /// Requires every occurring variable to be assigned.
  Rational evaluate(const std::map<std::string, Rational>& values) const;
  MultiPoly derivative(std::string_view var) const;
  MultiPoly rename(std::string_view from, std::string_view to) const;

  /// Coefficients as a polynomial in `var`, lowest degree first.
  std::vector<MultiPoly> coefficients(std::string_view var) const;
  static MultiPoly from_coefficients(std::string_view var, const std::vector<MultiPoly>& coeffs);
  /// Leading coefficient with respect to `var`.
  MultiPoly leading_coefficient(std::string_view var) const;

  /// Positive rational c with p/c having coprime integer coefficients, times
  /// the sign of the leading coefficient.
  Rational content() const;
  /// p / content(): integer, primitive, positive leading coefficient.
  MultiPoly primitive_part() const;
  /// Greatest monomial dividing every term.
  Monomial monomial_content() const;
  MultiPoly divide_monomial(const Monomial& m) const;
  /// True when every coefficient is positive, or every one negative.
  int definite_sign() const;

  /// Exact quotient if q divides p, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& q) const;

  RatInterval interval_eval(const std::map<std::string, RatInterval>& box) const;

  std::string to_string() const;

 private:
  void normalize();  // sort and combine terms

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

/// Union of two tables: a's variables, then b's new ones in b's order.
VarTablePtr merge_tables(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace multistat
