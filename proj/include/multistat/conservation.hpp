#pragma once

#include <string>
#include <vector>

#include "multistat/multipoly.hpp"

namespace multistat {

using RatMatrix = std::vector<std::vector<Rational>>;

/// sum_i coefficients[i] * vars[i] = constant.
struct ConservationLaw {
  std::vector<Rational> coefficients;
  std::string constant;

  /// sum c_i x_i - constant, over the given variable names.
  MultiPoly as_polynomial(const std::vector<std::string>& vars) const;
  /// sum c_i x_i only.
  MultiPoly linear_form(const std::vector<std::string>& vars) const;
  bool nonnegative() const;
};

/// Basis of the right null space, fraction-free elimination then scaled to
/// primitive integer vectors.
RatMatrix null_space(const RatMatrix& m);
size_t rank(const RatMatrix& m);

/// Basis of { c : sum c_i f_i == 0 }, f_i the right-hand side of vars[i].
/// Constants are named c1, c2, ...
std::vector<ConservationLaw> linear_first_integrals(const std::vector<MultiPoly>& f,
                                                    const std::vector<std::string>& vars);

/// True when sum c_i f_i is the zero polynomial.
bool verify_law(const ConservationLaw& law, const std::vector<MultiPoly>& f);

/// Nonnegative basis of the same span from the extreme rays of the cone
/// span ∩ orthant. Keeps the input constant names in order.
/// Throws NoNonnegativeBasis.
std::vector<ConservationLaw> nonnegative_basis(const std::vector<ConservationLaw>& basis);

}  // namespace multistat
