#include "multistat/elimination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <tuple>

#include "multistat/error.hpp"
#include "multistat/polyalg.hpp"

namespace multistat {

size_t DependencyGraph::index(const std::string& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw Error(ErrorCode::InvalidArgument, "unknown vertex '" + v + "'");
  return static_cast<size_t>(it - vertices.begin());
}

DependencyGraph build_graph(const std::vector<MultiPoly>& system, const std::vector<std::string>& variables) {
  DependencyGraph g;
  g.vertices = variables;
  for (const auto& p : system) {
    std::vector<std::pair<size_t, size_t>> present;  // (vertex, table index)
    for (size_t v = 0; v < variables.size(); ++v)
      if (auto i = p.index_of(variables[v])) present.emplace_back(v, *i);
    for (const auto& [mono, c] : p.terms()) {
      for (size_t a = 0; a < present.size(); ++a) {
        unsigned ea = mono[present[a].second];
        if (ea == 0) continue;
        if (ea >= 2) g.self_loops.insert(variables[present[a].first]);
        for (size_t b = a + 1; b < present.size(); ++b)
          if (mono[present[b].second] > 0)
            g.edges.emplace(variables[present[a].first], variables[present[b].first]);
      }
    }
  }
  return g;
}

bool is_vertex_cover(const DependencyGraph& g, const std::vector<std::string>& cover) {
  auto in = [&](const std::string& v) { return std::find(cover.begin(), cover.end(), v) != cover.end(); };
  for (const auto& [u, v] : g.edges)
    if (!in(u) && !in(v)) return false;
  for (const auto& v : g.self_loops)
    if (!in(v)) return false;
  return true;
}

namespace {

using Mask = std::uint64_t;

struct BitGraph {
  size_t n = 0;
  std::vector<std::pair<size_t, size_t>> edges;
  Mask loops = 0;
};

BitGraph to_bits(const DependencyGraph& g) {
  if (g.vertices.size() > 64) throw Error(ErrorCode::InvalidArgument, "vertex cover limited to 64 vertices");
  BitGraph b;
  b.n = g.vertices.size();
  for (const auto& [u, v] : g.edges) b.edges.emplace_back(g.index(u), g.index(v));
  for (const auto& v : g.self_loops) b.loops |= Mask(1) << g.index(v);
  return b;
}

/// Can `cover` be extended by at most `budget` allowed vertices to a cover?
bool extendable(const BitGraph& g, Mask cover, Mask allowed, unsigned budget) {
  for (const auto& [u, v] : g.edges) {
    Mask mu = Mask(1) << u, mv = Mask(1) << v;
    if ((cover & (mu | mv)) != 0) continue;
    if (budget == 0) return false;
    if ((allowed & mu) && extendable(g, cover | mu, allowed, budget - 1)) return true;
    return (allowed & mv) && extendable(g, cover | mv, allowed, budget - 1);
  }
  return true;
}

/// Cover containing `forced` of total size <= k, avoiding `excluded`.
bool feasible(const BitGraph& g, Mask forced, Mask excluded, unsigned k) {
  Mask cover = forced | g.loops;
  if (cover & excluded) return false;
  for (const auto& [u, v] : g.edges) {
    bool xu = excluded >> u & 1, xv = excluded >> v & 1;
    if (xu && xv) return false;
    if (xu) cover |= Mask(1) << v;
    if (xv) cover |= Mask(1) << u;
  }
  unsigned used = static_cast<unsigned>(std::popcount(cover));
  if (used > k) return false;
  Mask all = g.n == 64 ? ~Mask(0) : (Mask(1) << g.n) - 1;
  return extendable(g, cover, all & ~excluded & ~cover, k - used);
}

}  // namespace

std::vector<std::string> min_vertex_cover(const DependencyGraph& g) {
  BitGraph b = to_bits(g);
  unsigned k = static_cast<unsigned>(std::popcount(b.loops));
  while (!feasible(b, 0, 0, k)) ++k;
  Mask chosen = 0, excluded = 0;
  for (size_t v = 0; v < b.n; ++v) {
    Mask mv = Mask(1) << v;
    if (feasible(b, chosen | mv, excluded, k))
      chosen |= mv;
    else
      excluded |= mv;
  }
  std::vector<std::string> out;
  for (size_t v = 0; v < b.n; ++v)
    if (chosen >> v & 1) out.push_back(g.vertices[v]);
  return out;
}

size_t brute_force_cover_size(const DependencyGraph& g) {
  BitGraph b = to_bits(g);
  if (b.n > 24) throw Error(ErrorCode::InvalidArgument, "brute force limited to 24 vertices");
  size_t best = b.n;
  for (Mask s = 0; s < (Mask(1) << b.n); ++s) {
    size_t size = static_cast<size_t>(std::popcount(s));
    if (size >= best || (b.loops & ~s)) continue;
    bool ok = std::all_of(b.edges.begin(), b.edges.end(),
                          [&](const auto& e) { return (s >> e.first & 1) || (s >> e.second & 1); });
    if (ok) best = size;
  }
  return best;
}

std::vector<SystemEquation> steady_state_system(const ModelFile& model) {
  std::vector<SystemEquation> out;
  for (const auto& f : model.bound_odes())
    if (!f.is_zero()) out.push_back({f.primitive_part(), false});
  for (const auto& law : model.laws) out.push_back({law.as_polynomial(model.vars).primitive_part(), true});
  return out;
}

namespace {

/// c^d * f(v = -r/c) with d = deg_v f.
MultiPoly substitute_quotient(const MultiPoly& f, const std::string& v, const MultiPoly& num, const MultiPoly& den) {
  std::vector<MultiPoly> cs = f.coefficients(v);
  if (cs.size() <= 1) return f;
  size_t d = cs.size() - 1;
  std::vector<MultiPoly> num_pow{MultiPoly(1)}, den_pow{MultiPoly(1)};
  for (size_t j = 1; j <= d; ++j) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  MultiPoly out;
  for (size_t j = 0; j <= d; ++j)
    if (!cs[j].is_zero()) out += cs[j] * num_pow[j] * den_pow[d - j];
  return out;
}

MultiPoly cleaned(MultiPoly f, const std::vector<MultiPoly>& pivots) {
  f = strip_monomial_and_content(f);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : pivots) {
      if (c.is_constant()) continue;
      MultiPoly g = gcd(f, c);
      if (g.is_constant()) continue;
      auto q = f.divide_exact(g);
      if (!q) throw Error(ErrorCode::InvalidArgument, "gcd does not divide");
      f = *q;
      changed = true;
    }
  }
  return strip_monomial_and_content(f);
}

}  // namespace

ReducedSystem gauss_eliminate(const std::vector<SystemEquation>& system, const std::vector<std::string>& variables,
                              const std::vector<std::string>& parameters, const std::vector<std::string>& cover,
                              TieBreak tie) {
  struct Eq {
    size_t tag;
    MultiPoly poly;
    bool conservation;
  };
  std::vector<Eq> eqs;
  for (size_t i = 0; i < system.size(); ++i)
    if (!system[i].poly.is_zero()) eqs.push_back({i, system[i].poly, system[i].conservation});

  std::vector<std::string> pending;
  for (const auto& v : variables)
    if (std::find(cover.begin(), cover.end(), v) == cover.end()) pending.push_back(v);

  ReducedSystem rs;
  std::vector<MultiPoly> pivots;
  while (!pending.empty()) {
    using Key = std::tuple<bool, long, long, size_t>;
    std::optional<Key> best;
    size_t best_eq = 0;
    std::string best_var;
    MultiPoly best_coeff;
    bool indefinite_seen = false;
    for (const auto& v : pending) {
      long vi = static_cast<long>(std::find(variables.begin(), variables.end(), v) - variables.begin());
      if (tie == TieBreak::Reverse) vi = -vi;
      for (size_t j = 0; j < eqs.size(); ++j) {
        if (eqs[j].poly.degree(v) != 1) continue;
        MultiPoly c = eqs[j].poly.coefficients(v)[1];
        if (c.definite_sign() == 0) {
          indefinite_seen = true;
          continue;
        }
        long nt = static_cast<long>(eqs[j].poly.size());
        Key key{eqs[j].conservation, eqs[j].conservation ? -nt : nt, vi, eqs[j].tag};
        if (!best || key < *best) {
          best = key;
          best_eq = j;
          best_var = v;
          best_coeff = c;
        }
      }
    }
    if (!best) {
      if (indefinite_seen)
        throw Error(ErrorCode::CaseSplitRequired, "only pivots of indefinite sign remain");
      throw Error(ErrorCode::StuckNoLinearPivot, "no remaining variable occurs linearly");
    }

    Eq pivot = eqs[best_eq];
    eqs.erase(eqs.begin() + static_cast<long>(best_eq));
    MultiPoly rest = pivot.poly - best_coeff * MultiPoly::variable(best_var);
    EliminationStep step;
    step.variable = best_var;
    step.pivot_equation = pivot.poly;
    step.numerator = -rest;
    step.denominator = best_coeff;
    step.pivot_sign = best_coeff.definite_sign();
    // exact identity check: den*v - num is the pivot equation
    if (step.denominator * MultiPoly::variable(best_var) - step.numerator != pivot.poly)
      throw Error(ErrorCode::InvalidArgument, "pivot identity failed");
    pivots.push_back(best_coeff);

    std::vector<Eq> next;
    for (auto& e : eqs) {
      MultiPoly f = substitute_quotient(e.poly, best_var, step.numerator, step.denominator);
      if (f.is_zero()) continue;
      next.push_back({e.tag, cleaned(f, pivots), e.conservation});
    }
    eqs = std::move(next);
    rs.trace.push_back(std::move(step));
    pending.erase(std::find(pending.begin(), pending.end(), best_var));
  }

  for (auto& e : eqs)
    if (!e.poly.is_constant()) rs.equations.push_back(e.poly);
  rs.positive_variables = cover;
  rs.positive_parameters = parameters;
  for (const auto& e : eqs)
    if (e.poly.is_constant())
      rs.inequalities.push_back(e.poly);  // a nonzero constant equation: the system is inconsistent

  // Positivity of each eliminated variable: sign(num) must equal sign(den).
  for (const auto& step : rs.trace) {
    MultiPoly cond = step.numerator * MultiPoly(step.pivot_sign);
    if (cond.definite_sign() <= 0) rs.inequalities.push_back(cond);
  }
  return rs;
}

ReducedSystem reduce_model(const ModelFile& model, TieBreak tie) {
  auto system = steady_state_system(model);
  std::vector<MultiPoly> polys;
  for (const auto& e : system) polys.push_back(e.poly);
  auto cover = min_vertex_cover(build_graph(polys, model.vars));
  return gauss_eliminate(system, model.vars, model.free_params(), cover, tie);
}

Positivity positivity_of(const RatInterval& iv) {
  if (iv.positive()) return Positivity::Positive;
  if (sign(iv.hi()) <= 0) return Positivity::Nonpositive;
  return Positivity::Undetermined;
}

namespace {

unsigned bits_for(const Rational& width) {
  if (sign(width) <= 0) return 256;
  Integer inv = ceil(Rational(1) / width);
  return static_cast<unsigned>(mpz_sizeinbase(inv.get_mpz_t(), 2)) + 32;
}

BackSubstitution substitute_back(const std::vector<EliminationStep>& trace,
                                 const std::map<std::string, RatInterval>& assignment, unsigned bits) {
  BackSubstitution out;
  std::map<std::string, RatInterval> box = assignment;
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    RatInterval den = it->denominator.interval_eval(box);
    if (den.contains_zero())
      throw Error(ErrorCode::DenominatorStraddlesZero, "denominator of " + it->variable + " straddles zero");
    RatInterval value = it->numerator.interval_eval(box).divided_by(den);
    if (bits) value = value.rounded_out(bits);
    box[it->variable] = value;
    out.values[it->variable] = value;
    out.positivity[it->variable] = positivity_of(value);
  }
  return out;
}

}  // namespace

BackSubstitution back_substitute(const std::vector<EliminationStep>& trace,
                                 const std::map<std::string, RatInterval>& assignment) {
  return substitute_back(trace, assignment, 0);
}

BackSubstitution back_substitute(const std::vector<EliminationStep>& trace, const EnclosureSource& source,
                                 const Rational& tol, const Rational& min_width) {
  Rational w = tol;
  std::optional<BackSubstitution> last;
  for (;;) {
    try {
      BackSubstitution bs = substitute_back(trace, source(w), bits_for(tol) + bits_for(w));
      bool done = true;
      for (const auto& [v, iv] : bs.values)
        if (iv.width() > tol || bs.positivity[v] == Positivity::Undetermined) done = false;
      last = std::move(bs);
      if (done) return *last;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DenominatorStraddlesZero) throw;
    }
    if (w < min_width) break;
    w /= Rational(Integer(1) << 40);
  }
  if (!last) throw Error(ErrorCode::DenominatorStraddlesZero, "refinement budget exhausted");
  return *last;
}

}  // namespace multistat
