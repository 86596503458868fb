#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "multistat/conservation.hpp"
#include "multistat/multipoly.hpp"

namespace multistat {

/// num / den, den never zero.
struct RationalFunction {
  MultiPoly num;
  MultiPoly den = MultiPoly(1);

  bool is_polynomial() const { return den.is_constant(); }
  MultiPoly polynomial() const;
  RatInterval interval_eval(const std::map<std::string, RatInterval>& box) const;
};

/// Expression over + - * / ^ and parentheses. Identifiers must be in
/// `declared` unless it is null. Division by a non-constant is allowed.
RationalFunction parse_expression(std::string_view text, const VarTable* declared = nullptr,
                                  int line = 1);
/// Like parse_expression but rejects non-constant denominators.
MultiPoly parse_polynomial(std::string_view text, const VarTable* declared = nullptr, int line = 1);

struct ModelFile {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> params;
  /// Right-hand side of d(vars[i])/dt, over table().
  std::vector<MultiPoly> odes;
  std::vector<ConservationLaw> laws;
  std::map<std::string, Rational> values;

  /// vars followed by params.
  VarTablePtr table() const;
  /// ODE right-hand sides with all bound values substituted.
  std::vector<MultiPoly> bound_odes() const;
  /// Parameters without a value binding.
  std::vector<std::string> free_params() const;
};

ModelFile parse_model(std::string_view text);

/// "model26" / "model28" or a path.
ModelFile load_model(const std::string& name_or_path);

std::string read_file(const std::string& path);

}  // namespace multistat
