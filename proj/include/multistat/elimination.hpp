#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "multistat/model.hpp"
#include "multistat/multipoly.hpp"

namespace multistat {

struct DependencyGraph {
  std::vector<std::string> vertices;
  /// Pairs ordered by vertex index.
  std::set<std::pair<std::string, std::string>> edges;
  std::set<std::string> self_loops;

  size_t index(const std::string& v) const;
};

/// Vertices are `variables`; u-v is an edge when u*v divides some monomial.
DependencyGraph build_graph(const std::vector<MultiPoly>& system, const std::vector<std::string>& variables);

bool is_vertex_cover(const DependencyGraph& g, const std::vector<std::string>& cover);

/// Exact minimum cover by branch and bound. Self-loop vertices are forced;
/// among minimum covers the one whose sorted vertex indices are
/// lexicographically smallest wins. Result is in vertex order.
std::vector<std::string> min_vertex_cover(const DependencyGraph& g);

/// Exhaustive oracle: size of the smallest cover over all subsets.
size_t brute_force_cover_size(const DependencyGraph& g);

struct EliminationStep {
  std::string variable;
  MultiPoly pivot_equation;
  /// variable = numerator / denominator.
  MultiPoly numerator;
  MultiPoly denominator;
  int pivot_sign = 1;
};

struct ReducedSystem {
  std::vector<MultiPoly> equations;
  std::vector<std::string> positive_variables;
  std::vector<std::string> positive_parameters;
  std::vector<EliminationStep> trace;
  /// Substitution-derived conditions that are not entailed by positivity.
  std::vector<MultiPoly> inequalities;
};

enum class TieBreak { Forward, Reverse };

/// One equation of the input system; conservation laws are consumed last.
struct SystemEquation {
  MultiPoly poly;
  bool conservation = false;
};

/// Steady-state equations of a model with its laws appended.
std::vector<SystemEquation> steady_state_system(const ModelFile& model);

/// Eliminates every variable outside `cover` with sign-definite pivots.
/// Throws CaseSplitRequired or StuckNoLinearPivot.
ReducedSystem gauss_eliminate(const std::vector<SystemEquation>& system, const std::vector<std::string>& variables,
                              const std::vector<std::string>& parameters, const std::vector<std::string>& cover,
                              TieBreak tie = TieBreak::Forward);

/// Graph, cover and elimination for a model with values bound.
ReducedSystem reduce_model(const ModelFile& model, TieBreak tie = TieBreak::Forward);

enum class Positivity { Positive, Nonpositive, Undetermined };

struct BackSubstitution {
  std::map<std::string, RatInterval> values;
  std::map<std::string, Positivity> positivity;
};

/// Enclosures of the surviving indeterminates at a requested width.
using EnclosureSource = std::function<std::map<std::string, RatInterval>(const Rational& width)>;

/// Interval values of all eliminated variables from fixed enclosures.
/// Throws DenominatorStraddlesZero.
BackSubstitution back_substitute(const std::vector<EliminationStep>& trace,
                                 const std::map<std::string, RatInterval>& assignment);

/// Refines the input enclosures until every eliminated variable has width
/// <= tol and a decided sign, or the input width reaches `min_width`.
/// Throws DenominatorStraddlesZero when the budget runs out first.
BackSubstitution back_substitute(const std::vector<EliminationStep>& trace, const EnclosureSource& source,
                                 const Rational& tol, const Rational& min_width);

Positivity positivity_of(const RatInterval& iv);

}  // namespace multistat
