#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multistat/elimination.hpp"
#include "multistat/realroots.hpp"

namespace multistat {

enum class Stability { Stable, Unstable, Undetermined };

struct StabilityVerdict {
  std::optional<unsigned> rhp_count;
  Stability classification = Stability::Undetermined;
};

enum class RecordStatus { AllPositive, Rejected, Undetermined };

struct FixedPointRecord {
  /// Every variable of the model plus the parameter values as point intervals.
  std::map<std::string, RatInterval> enclosures;
  RecordStatus positivity = RecordStatus::Undetermined;
  std::optional<StabilityVerdict> stability;
  /// Recomputes the enclosures at a requested width of the surviving pair.
  EnclosureSource refine;
};

enum class PointStatus { Ok, Undetermined, Degenerate };

struct PointSolution {
  /// AllPositive and Undetermined records; rejected ones are dropped.
  std::vector<FixedPointRecord> records;
  PointStatus status = PointStatus::Ok;
  std::string note;

  unsigned count() const;
};

struct SolveOptions {
  /// Target width of every reported enclosure.
  Rational tol = Rational(1, 1000000000000);
  /// Refinement floor for pairing and positivity decisions.
  Rational min_width = Rational(1) / Rational(Integer(10) * pow(Integer(10), 29));
  /// Surviving variable eliminated by the resultant; default picks one.
  std::optional<std::string> eliminate;
};

/// Solutions of a bivariate system at fixed values. u = -a0(v)/a1(v) on the
/// curve core(v) = 0; `guards` must not vanish at a root for the pairing to
/// be certain (else the point is Degenerate).
PointSolution lift_solutions(const UniPoly& core, const UniPoly& a1, const UniPoly& a0,
                             const std::vector<UniPoly>& guards, const std::string& u, const std::string& v,
                             const std::vector<EliminationStep>& trace,
                             const std::map<std::string, Rational>& values, const SolveOptions& opts);

/// All positive solutions of the reduced system at `values` (which must fix
/// every parameter). Degenerate points come back with status Degenerate.
/// Throws NotBivariate.
PointSolution solve_point(const ReducedSystem& rs, const std::map<std::string, Rational>& values,
                          const SolveOptions& opts = {});

/// solve_point, but a vanishing resultant throws ResultantVanishes.
std::vector<FixedPointRecord> solve_at_point(const ReducedSystem& rs, const std::map<std::string, Rational>& values,
                                             const SolveOptions& opts = {});

struct SampleRange {
  std::string param;
  Rational start, stop, step;

  std::vector<Rational> values() const;
};

/// "k19=200:1000:50".
SampleRange parse_range(const std::string& text);

struct GridEntry {
  std::vector<Rational> point;
  unsigned count = 0;
  PointStatus status = PointStatus::Ok;
  double seconds = 0;
};

struct GridResult {
  std::vector<std::string> params;
  std::vector<GridEntry> entries;
};

/// One entry per lattice point, first range varying slowest.
GridResult grid_sample(const ReducedSystem& rs, const std::vector<SampleRange>& ranges,
                       const std::map<std::string, Rational>& fixed, const SolveOptions& opts = {},
                       unsigned threads = 0);

std::string to_string(PointStatus s);
std::string to_string(RecordStatus s);
std::string to_string(Stability s);

}  // namespace multistat
