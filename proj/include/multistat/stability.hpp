#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "multistat/conservation.hpp"
#include "multistat/pointsolve.hpp"
#include "multistat/unipoly.hpp"

namespace multistat {

struct ReducedJacobian {
  std::vector<std::string> variables;
  /// entries[i][j] = d f~_i / d variables[j].
  std::vector<std::vector<MultiPoly>> entries;
  /// Eliminated variable -> expression in the survivors and law constants.
  std::map<std::string, MultiPoly> substitutions;

  size_t dimension() const { return variables.size(); }
  RatMatrix at(const std::map<std::string, Rational>& point) const;
};

/// Restricts the vector field to the survivors by solving the laws for
/// `eliminate`. Throws LawsNotSolvable.
ReducedJacobian reduced_jacobian(const std::vector<MultiPoly>& f, const std::vector<std::string>& vars,
                                 const std::vector<ConservationLaw>& laws, const std::set<std::string>& eliminate);

/// One variable per law, pivots of the law matrix scanned from the last
/// variable backwards.
std::set<std::string> default_eliminated(const std::vector<ConservationLaw>& laws,
                                         const std::vector<std::string>& vars);

/// det(lambda I - m) by Berkowitz' division-free algorithm.
UniPoly char_poly(const RatMatrix& m);
/// Same by cofactor expansion; exponential, for cross-checks.
UniPoly char_poly_laplace(const RatMatrix& m);
UniPoly char_poly(const ReducedJacobian& j, const std::map<std::string, Rational>& point);

/// Routh table count of roots with positive real part. A zero in the first
/// column gives an undetermined verdict.
StabilityVerdict rhp_count(const UniPoly& p);

/// Verdict from the Jacobian at the centre of a box, confirmed at its two
/// extreme corners; undetermined when they disagree.
StabilityVerdict verdict_in_box(const ReducedJacobian& j, const std::map<std::string, RatInterval>& box);

/// Fills in each record's stability, refining its enclosures from `start`
/// by factors of 10^4 down to `floor` until the verdict is confirmed.
void classify_fixed_points(std::vector<FixedPointRecord>& records, const ReducedJacobian& j,
                           const Rational& start = Rational(1, 10000),
                           const Rational& floor = Rational(1, Integer("1000000000000000000000000000000000000000")),
                           unsigned threads = 0);

}  // namespace multistat
