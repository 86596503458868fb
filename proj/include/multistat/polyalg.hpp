#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multistat/multipoly.hpp"
#include "multistat/unipoly.hpp"

namespace multistat {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// res_var(p, q), exact. Throws ConstantPair when both are constant in var.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// (-1)^(d(d-1)/2) res(p, dp/dvar) / lc(p). Throws DegreeTooLow for d < 2.
MultiPoly discriminant(const MultiPoly& p, std::string_view var);

/// j-th subresultant polynomial S_j(p, q) in var (determinantal definition,
/// formal degrees deg_var p and deg_var q). S_0 is the resultant.
MultiPoly subresultant(const MultiPoly& p, const MultiPoly& q, std::string_view var, unsigned j);

/// Sylvester matrix of p and q in var: rows x^(n-1)p..p then x^(m-1)q..q.
PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// Fraction-free (Bareiss) determinant; exact multivariate divisions.
MultiPoly determinant_bareiss(PolyMatrix m);
Integer determinant_bareiss(std::vector<std::vector<Integer>> m);

/// Coefficientwise Newton interpolation: values[i] at points[i], result in var.
MultiPoly interpolate(const std::vector<Rational>& points, const std::vector<MultiPoly>& values,
                      std::string_view var);

/// Greatest common divisor over Z; primitive, positive leading coefficient.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

/// Content of p as a polynomial in var (gcd of its coefficients).
MultiPoly content_in(const MultiPoly& p, std::string_view var);

/// Pairwise coprime squarefree factors with multiplicities whose product is
/// p up to a rational constant. Monomial factors appear as single variables.
std::vector<std::pair<MultiPoly, unsigned>> squarefree_factors(const MultiPoly& p);

/// Divide out monomial content and rational content.
MultiPoly strip_monomial_and_content(const MultiPoly& p);

/// True when a and b differ by a nonzero rational factor.
bool proportional(const MultiPoly& a, const MultiPoly& b);

}  // namespace multistat
