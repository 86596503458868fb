#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multistat/elimination.hpp"
#include "multistat/pointsolve.hpp"
#include "multistat/realroots.hpp"

namespace multistat {

/// linear_var = -tail/lead on the curve core(core_var, params) = 0.
struct CorePolynomialSystem {
  std::string linear_var;
  std::string core_var;
  std::vector<std::string> params;
  std::map<std::string, Rational> fixed;
  /// The equation used for the formula: lead*linear_var + tail.
  MultiPoly linear_equation;
  MultiPoly lead;
  MultiPoly tail;
  MultiPoly core;
  /// Must not all vanish for the formula to pick the common root.
  std::vector<MultiPoly> guards;
};

/// Throws NotLinear when neither an equation nor the first subresultant
/// yields a formula of degree one in `var`.
CorePolynomialSystem eliminate_linear(const ReducedSystem& rs, const std::map<std::string, Rational>& fix,
                                      const std::string& var);

using ProjectionSet = std::vector<MultiPoly>;

/// Full: every coefficient of `core` in `var`. Open: the leading one only,
/// which suffices for delineability over full-dimensional cells.
enum class ProjectionOperator { Full, Open };

/// Squarefree primitive parts of the coefficients, discriminant and
/// resultants with `extra` of `core` in `var`, plus the parameters.
ProjectionSet project(const MultiPoly& core, const std::string& var, const std::vector<MultiPoly>& extra,
                      const std::vector<std::string>& params, ProjectionOperator op = ProjectionOperator::Open);

/// Adds the squarefree primitive factors of p that are new to ps.
void add_projection_factors(ProjectionSet& ps, const MultiPoly& p);

enum class CellClass { OneSolution, Multistationary, NoSolution, NotInQuadrant, Undetermined };
std::string to_string(CellClass c);

struct OpenCadCell {
  size_t base_index = 0;
  size_t stack_index = 0;
  Rational base_sample;
  Rational stack_sample;
  CellClass classification = CellClass::Undetermined;
  unsigned count = 0;
  /// Sign of each projection polynomial at the sample.
  std::vector<int> signs;
};

struct OpenCad {
  std::string base_axis;
  std::string stack_axis;
  ProjectionSet projection;
  std::vector<MultiPoly> base_polynomials;
  RootList base_roots;
  std::vector<Rational> base_samples;
  /// Per base interval: sorted roots of the specialised projection set.
  std::vector<RootList> stack_roots;
  std::vector<OpenCadCell> cells;
  /// Base intervals over which some projection polynomial vanished identically.
  std::vector<size_t> collapsed;
};

/// Open CAD of the plane (base_axis, other axis of the projection set).
OpenCad build_open_cad(const ProjectionSet& ps, const std::string& base_axis, const std::string& stack_axis,
                       unsigned threads = 0);

/// Index of the open base interval containing x, nullopt on a root.
std::optional<size_t> locate_base(const OpenCad& cad, const Rational& x);
/// Sorted roots of the projection set specialised at base = x.
RootList stack_at(const OpenCad& cad, const Rational& x);
/// Index of the open stack interval containing y, nullopt on a root.
std::optional<size_t> locate_in_stack(const RootList& roots, const Rational& y);

struct CellVerdict {
  CellClass classification = CellClass::Undetermined;
  unsigned count = 0;
};

/// Classifies one parameter point of the (base, stack) plane.
CellVerdict classify_point(const CorePolynomialSystem& cps, const std::vector<EliminationStep>& trace,
                           const std::string& base_axis, const Rational& base, const std::string& stack_axis,
                           const Rational& stack, const SolveOptions& opts = {});

struct RegionReport {
  std::map<CellClass, size_t> tally;
  size_t quadrant_cells = 0;
};

/// Fills in every cell's classification.
RegionReport classify_region(OpenCad& cad, const CorePolynomialSystem& cps, const std::vector<EliminationStep>& trace,
                             const SolveOptions& opts = {}, unsigned threads = 0);

struct SpotCheck {
  size_t cells_checked = 0;
  size_t failures = 0;
  std::vector<std::string> messages;
};

/// Three further random interior samples per cell must reproduce the stack
/// size and classification.
SpotCheck delineability_spot_check(const OpenCad& cad, const CorePolynomialSystem& cps,
                                   const std::vector<EliminationStep>& trace, std::uint64_t seed,
                                   unsigned samples = 3, const SolveOptions& opts = {}, unsigned threads = 0);

/// Cell of the CAD containing a point, nullptr on a cell boundary.
const OpenCadCell* containing_cell(const OpenCad& cad, const Rational& base, const Rational& stack);

/// The factor of disc(core) with the given degrees in (base, stack), if any.
std::optional<MultiPoly> boundary_factor(const MultiPoly& core, const std::string& var, const std::string& base_axis,
                                         unsigned base_degree, const std::string& stack_axis, unsigned stack_degree);

struct Probe {
  std::map<std::string, Rational> a, b;
  bool expect_edge = true;
};

struct ProbeResult {
  unsigned count_a = 0, count_b = 0;
  int boundary_sign_a = 0, boundary_sign_b = 0;
  bool passed = false;
};

/// Across an edge the counts must differ and the boundary must change sign;
/// inside the region the counts must agree.
std::vector<ProbeResult> boundary_conjecture_check(const ReducedSystem& rs, const MultiPoly& boundary,
                                                   const std::vector<Probe>& probes,
                                                   const std::map<std::string, Rational>& fixed);

}  // namespace multistat
