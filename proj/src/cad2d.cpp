#include "multistat/cad2d.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "multistat/error.hpp"
#include "multistat/polyalg.hpp"

namespace multistat {

namespace {

template <typename F>
void parallel_for(size_t n, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(n, 1)));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < n;) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

std::string other_of(const std::vector<std::string>& pair, const std::string& v) {
  for (const auto& p : pair)
    if (p != v) return p;
  throw Error(ErrorCode::InvalidArgument, "no variable besides " + v);
}

}  // namespace

CorePolynomialSystem eliminate_linear(const ReducedSystem& rs, const std::map<std::string, Rational>& fix,
                                      const std::string& var) {
  std::vector<MultiPoly> eq;
  for (const auto& e : rs.equations) eq.push_back(e.substitute(fix));
  if (eq.size() != 2) throw Error(ErrorCode::NotBivariate, "need exactly two equations");

  CorePolynomialSystem cps;
  cps.linear_var = var;
  cps.core_var = other_of(rs.positive_variables, var);
  cps.fixed = fix;
  for (const auto& p : rs.positive_parameters)
    if (!fix.count(p)) cps.params.push_back(p);

  unsigned d0 = eq[0].degree(var), d1 = eq[1].degree(var);
  if (d0 == 0 && d1 == 0) throw Error(ErrorCode::NotLinear, "no equation involves " + var);
  if (d0 == 1 || d1 == 1) {
    size_t li = d0 == 1 ? 0 : 1;
    cps.linear_equation = eq[li];
    cps.core = strip_monomial_and_content(resultant(eq[1 - li], eq[li], var));
  } else if (d0 >= 2 && d1 >= 2) {
    cps.linear_equation = strip_monomial_and_content(subresultant(eq[0], eq[1], var, 1));
    cps.core = strip_monomial_and_content(resultant(eq[0], eq[1], var));
    cps.guards = {eq[0].leading_coefficient(var), eq[1].leading_coefficient(var)};
  } else {
    throw Error(ErrorCode::NotLinear, "only one equation involves " + var);
  }
  if (cps.linear_equation.degree(var) != 1)
    throw Error(ErrorCode::NotLinear, "first subresultant is not of degree one in " + var);
  auto cs = cps.linear_equation.coefficients(var);
  cps.lead = cs[1];
  cps.tail = cs[0];
  if (cps.core.is_zero()) throw Error(ErrorCode::ResultantVanishes, "core polynomial is zero");
  return cps;
}

void add_projection_factors(ProjectionSet& ps, const MultiPoly& p) {
  if (p.is_constant()) return;
  for (auto& [f, m] : squarefree_factors(p)) {
    (void)m;
    if (f.is_constant()) continue;
    MultiPoly g = f.primitive_part().trimmed();
    bool known = std::any_of(ps.begin(), ps.end(), [&](const MultiPoly& q) { return proportional(q, g); });
    if (!known) ps.push_back(g);
  }
}

ProjectionSet project(const MultiPoly& core, const std::string& var, const std::vector<MultiPoly>& extra,
                      const std::vector<std::string>& params, ProjectionOperator op) {
  ProjectionSet ps;
  for (const auto& p : params) add_projection_factors(ps, MultiPoly::variable(p));
  auto coeffs = core.coefficients(var);
  if (op == ProjectionOperator::Full)
    for (const auto& c : coeffs) add_projection_factors(ps, c);
  else
    add_projection_factors(ps, coeffs.back());
  if (core.degree(var) >= 2) add_projection_factors(ps, discriminant(core, var));
  for (const auto& e : extra) {
    if (e.degree(var) == 0)
      add_projection_factors(ps, e);
    else
      add_projection_factors(ps, resultant(core, e, var));
  }
  return ps;
}

std::string to_string(CellClass c) {
  switch (c) {
    case CellClass::OneSolution: return "one_solution";
    case CellClass::Multistationary: return "multistationary";
    case CellClass::NoSolution: return "no_solution";
    case CellClass::NotInQuadrant: return "not_in_quadrant";
    case CellClass::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

/// Rational strictly between two isolated roots a < b.
Rational sample_between(AlgebraicNumber a, AlgebraicNumber b) {
  while (a.interval().hi() >= b.interval().lo()) {
    if (!a.is_rational()) a = a.bisected();
    if (!b.is_rational()) b = b.bisected();
  }
  return simplest_between(a.interval().hi(), b.interval().lo());
}

/// One sample per open interval cut out by sorted roots.
std::vector<Rational> samples_for(const RootList& roots) {
  std::vector<Rational> out;
  if (roots.empty()) return {Rational(0)};
  out.push_back(Rational(floor(roots.front().interval().lo()) - 1));
  for (size_t i = 0; i + 1 < roots.size(); ++i) out.push_back(sample_between(roots[i], roots[i + 1]));
  out.push_back(Rational(ceil(roots.back().interval().hi()) + 1));
  return out;
}

RootList roots_of_all(const std::vector<UniPoly>& polys) {
  std::vector<RootList> lists;
  for (const auto& p : coprime_basis(polys)) lists.push_back(isolate_real_roots(p));
  return merge_roots(lists);
}

/// Specialise each projection polynomial at base = x; nullopt if one collapses.
std::optional<std::vector<UniPoly>> specialise(const ProjectionSet& ps, const std::string& base_axis,
                                               const std::string& stack_axis, const Rational& x) {
  std::vector<UniPoly> out;
  for (const auto& p : ps) {
    if (p.degree(stack_axis) == 0) continue;
    MultiPoly s = p.substitute(base_axis, x);
    if (s.is_zero()) return std::nullopt;
    if (!s.is_constant()) out.push_back(UniPoly::from_multipoly(s, stack_axis));
  }
  return out;
}

int sign_at_point(const MultiPoly& p, const std::string& a, const Rational& x, const std::string& b,
                  const Rational& y) {
  return sign(p.evaluate({{a, x}, {b, y}}));
}

}  // namespace

OpenCad build_open_cad(const ProjectionSet& ps, const std::string& base_axis, const std::string& stack_axis,
                       unsigned threads) {
  if (ps.empty()) throw Error(ErrorCode::InvalidArgument, "empty projection set");
  OpenCad cad;
  cad.base_axis = base_axis;
  cad.stack_axis = stack_axis;
  cad.projection = ps;

  std::vector<MultiPoly> stacked;
  for (const auto& p : ps) {
    for (const auto& s : p.support())
      if (s != base_axis && s != stack_axis)
        throw Error(ErrorCode::InvalidArgument, "projection polynomial mentions " + s);
    if (p.degree(stack_axis) == 0) {
      add_projection_factors(cad.base_polynomials, p);
      continue;
    }
    add_projection_factors(cad.base_polynomials, p.leading_coefficient(stack_axis));
    if (p.degree(stack_axis) >= 2) add_projection_factors(cad.base_polynomials, discriminant(p, stack_axis));
    stacked.push_back(p);
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < stacked.size(); ++i)
    for (size_t j = i + 1; j < stacked.size(); ++j) pairs.emplace_back(i, j);
  std::vector<MultiPoly> res(pairs.size());
  parallel_for(pairs.size(), threads, [&](size_t k) {
    res[k] = resultant(stacked[pairs[k].first], stacked[pairs[k].second], stack_axis);
  });
  for (const auto& r : res) add_projection_factors(cad.base_polynomials, r);

  std::vector<UniPoly> base;
  for (const auto& p : cad.base_polynomials) base.push_back(UniPoly::from_multipoly(p, base_axis));
  cad.base_roots = roots_of_all(base);
  cad.base_samples = samples_for(cad.base_roots);

  size_t nb = cad.base_samples.size();
  cad.stack_roots.resize(nb);
  std::vector<std::vector<OpenCadCell>> per_base(nb);
  std::vector<char> collapsed(nb, 0);
  parallel_for(nb, threads, [&](size_t i) {
    const Rational& x = cad.base_samples[i];
    auto polys = specialise(ps, base_axis, stack_axis, x);
    if (!polys) {
      collapsed[i] = 1;
      polys = std::vector<UniPoly>{};
    }
    cad.stack_roots[i] = roots_of_all(*polys);
    auto ys = samples_for(cad.stack_roots[i]);
    for (size_t j = 0; j < ys.size(); ++j) {
      OpenCadCell c;
      c.base_index = i;
      c.stack_index = j;
      c.base_sample = x;
      c.stack_sample = ys[j];
      for (const auto& p : ps) c.signs.push_back(sign_at_point(p, base_axis, x, stack_axis, ys[j]));
      if (std::find(c.signs.begin(), c.signs.end(), 0) != c.signs.end())
        throw Error(ErrorCode::InvalidArgument, "sample lies on a projection polynomial");
      per_base[i].push_back(std::move(c));
    }
  });
  for (size_t i = 0; i < nb; ++i) {
    if (collapsed[i]) cad.collapsed.push_back(i);
    for (auto& c : per_base[i]) cad.cells.push_back(std::move(c));
  }
  return cad;
}

std::optional<size_t> locate_base(const OpenCad& cad, const Rational& x) {
  return locate_in_stack(cad.base_roots, x);
}

RootList stack_at(const OpenCad& cad, const Rational& x) {
  auto polys = specialise(cad.projection, cad.base_axis, cad.stack_axis, x);
  if (!polys) throw Error(ErrorCode::SpecializationCollapse, "projection polynomial vanishes at " + to_string(x));
  return roots_of_all(*polys);
}

std::optional<size_t> locate_in_stack(const RootList& roots, const Rational& y) {
  AlgebraicNumber q = AlgebraicNumber::rational(y);
  size_t idx = 0;
  for (const auto& r : roots) {
    int c = compare(q, r);
    if (c == 0) return std::nullopt;
    if (c < 0) break;
    ++idx;
  }
  return idx;
}

CellVerdict classify_point(const CorePolynomialSystem& cps, const std::vector<EliminationStep>& trace,
                           const std::string& base_axis, const Rational& base, const std::string& stack_axis,
                           const Rational& stack, const SolveOptions& opts) {
  if (sign(base) <= 0 || sign(stack) <= 0) return {CellClass::NotInQuadrant, 0};
  std::map<std::string, Rational> values = cps.fixed;
  values[base_axis] = base;
  values[stack_axis] = stack;
  auto uni = [&](const MultiPoly& p) { return UniPoly::from_multipoly(p.substitute(values).trimmed(), cps.core_var); };
  std::vector<UniPoly> guards;
  if (!cps.guards.empty()) {
    MultiPoly g;
    for (const auto& q : cps.guards) g += q * q;
    guards.push_back(uni(g));
  }
  PointSolution s = lift_solutions(uni(cps.core), uni(cps.lead), uni(cps.tail), guards, cps.linear_var,
                                   cps.core_var, trace, values, opts);
  CellVerdict v;
  v.count = s.count();
  if (s.status != PointStatus::Ok)
    v.classification = CellClass::Undetermined;
  else if (v.count == 0)
    v.classification = CellClass::NoSolution;
  else if (v.count == 1)
    v.classification = CellClass::OneSolution;
  else
    v.classification = CellClass::Multistationary;
  return v;
}

RegionReport classify_region(OpenCad& cad, const CorePolynomialSystem& cps, const std::vector<EliminationStep>& trace,
                             const SolveOptions& opts, unsigned threads) {
  std::vector<char> collapsed(cad.base_samples.size(), 0);
  for (size_t i : cad.collapsed) collapsed[i] = 1;
  parallel_for(cad.cells.size(), threads, [&](size_t i) {
    OpenCadCell& c = cad.cells[i];
    if (collapsed[c.base_index] && sign(c.base_sample) > 0 && sign(c.stack_sample) > 0) {
      c.classification = CellClass::Undetermined;
      return;
    }
    CellVerdict v = classify_point(cps, trace, cad.base_axis, c.base_sample, cad.stack_axis, c.stack_sample, opts);
    c.classification = v.classification;
    c.count = v.count;
  });
  RegionReport r;
  for (const auto& c : cad.cells) {
    ++r.tally[c.classification];
    if (c.classification != CellClass::NotInQuadrant) ++r.quadrant_cells;
  }
  return r;
}

namespace {

/// Random rational strictly inside the open interval between roots[i-1] and roots[i].
Rational random_inside(const RootList& roots, size_t i, std::mt19937_64& rng) {
  Rational lo, hi;
  if (roots.empty()) {
    lo = -100;
    hi = 100;
  } else if (i == 0) {
    hi = roots.front().interval().lo();
    lo = hi - 100;
  } else if (i == roots.size()) {
    lo = roots.back().interval().hi();
    hi = lo + 100;
  } else {
    AlgebraicNumber a = roots[i - 1], b = roots[i];
    while (a.interval().hi() >= b.interval().lo()) {
      if (!a.is_rational()) a = a.bisected();
      if (!b.is_rational()) b = b.bisected();
    }
    lo = a.interval().hi();
    hi = b.interval().lo();
  }
  std::uniform_int_distribution<long> dist(1, 9999);
  return lo + (hi - lo) * Rational(dist(rng), 10000);
}

}  // namespace

SpotCheck delineability_spot_check(const OpenCad& cad, const CorePolynomialSystem& cps,
                                   const std::vector<EliminationStep>& trace, std::uint64_t seed, unsigned samples,
                                   const SolveOptions& opts, unsigned threads) {
  SpotCheck out;
  out.cells_checked = cad.cells.size();
  std::vector<std::string> failures(cad.cells.size());
  parallel_for(cad.cells.size(), threads, [&](size_t k) {
    const OpenCadCell& c = cad.cells[k];
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
    for (unsigned s = 0; s < samples; ++s) {
      Rational x = random_inside(cad.base_roots, c.base_index, rng);
      RootList roots;
      try {
        roots = stack_at(cad, x);
      } catch (const Error& e) {
        failures[k] = std::string("cell ") + std::to_string(k) + ": " + e.what();
        return;
      }
      if (roots.size() != cad.stack_roots[c.base_index].size()) {
        failures[k] = "cell " + std::to_string(k) + ": stack size changes at " + to_string(x);
        return;
      }
      Rational y = random_inside(roots, c.stack_index, rng);
      for (size_t p = 0; p < cad.projection.size(); ++p)
        if (sign_at_point(cad.projection[p], cad.base_axis, x, cad.stack_axis, y) != c.signs[p]) {
          failures[k] = "cell " + std::to_string(k) + ": projection sign changes";
          return;
        }
      CellVerdict v = classify_point(cps, trace, cad.base_axis, x, cad.stack_axis, y, opts);
      if (v.classification != c.classification || v.count != c.count) {
        failures[k] = "cell " + std::to_string(k) + ": classification " + to_string(v.classification) + " at (" +
                      to_string(x) + ", " + to_string(y) + ") differs from " + to_string(c.classification);
        return;
      }
    }
  });
  for (auto& f : failures)
    if (!f.empty()) {
      ++out.failures;
      out.messages.push_back(std::move(f));
    }
  return out;
}

const OpenCadCell* containing_cell(const OpenCad& cad, const Rational& base, const Rational& stack) {
  auto bi = locate_base(cad, base);
  if (!bi) return nullptr;
  RootList roots = stack_at(cad, base);
  if (roots.size() != cad.stack_roots[*bi].size()) return nullptr;
  auto si = locate_in_stack(roots, stack);
  if (!si) return nullptr;
  for (const auto& c : cad.cells)
    if (c.base_index == *bi && c.stack_index == *si) return &c;
  return nullptr;
}

std::optional<MultiPoly> boundary_factor(const MultiPoly& core, const std::string& var, const std::string& base_axis,
                                         unsigned base_degree, const std::string& stack_axis, unsigned stack_degree) {
  for (auto& [f, m] : squarefree_factors(discriminant(core, var))) {
    (void)m;
    if (f.degree(base_axis) == base_degree && f.degree(stack_axis) == stack_degree) return f.primitive_part();
  }
  return std::nullopt;
}

std::vector<ProbeResult> boundary_conjecture_check(const ReducedSystem& rs, const MultiPoly& boundary,
                                                   const std::vector<Probe>& probes,
                                                   const std::map<std::string, Rational>& fixed) {
  std::vector<ProbeResult> out;
  for (const auto& pr : probes) {
    auto at = [&](const std::map<std::string, Rational>& p) {
      std::map<std::string, Rational> v = fixed;
      for (const auto& [k, q] : p) v[k] = q;
      return v;
    };
    auto va = at(pr.a), vb = at(pr.b);
    ProbeResult r;
    PointSolution sa = solve_point(rs, va), sb = solve_point(rs, vb);
    r.count_a = sa.count();
    r.count_b = sb.count();
    r.boundary_sign_a = sign(boundary.substitute(va).constant_term());
    r.boundary_sign_b = sign(boundary.substitute(vb).constant_term());
    bool decided = sa.status == PointStatus::Ok && sb.status == PointStatus::Ok;
    bool flip = r.boundary_sign_a * r.boundary_sign_b < 0;
    if (pr.expect_edge)
      r.passed = decided && r.count_a != r.count_b && flip;
    else
      r.passed = decided && r.count_a == r.count_b;
    out.push_back(r);
  }
  return out;
}

}  // namespace multistat
