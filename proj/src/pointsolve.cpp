#include "multistat/pointsolve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <thread>

#include "multistat/error.hpp"
#include "multistat/polyalg.hpp"

namespace multistat {

unsigned PointSolution::count() const {
  return static_cast<unsigned>(std::count_if(records.begin(), records.end(), [](const FixedPointRecord& r) {
    return r.positivity == RecordStatus::AllPositive;
  }));
}

namespace {

/// Root of `core` with u = -a0/a1, refined lazily and shared by copies.
class LiftedRoot {
 public:
  LiftedRoot(AlgebraicNumber alpha, UniPoly a1, UniPoly a0) : alpha_(std::move(alpha)), a1_(std::move(a1)), a0_(std::move(a0)) {}

  /// (v, u) enclosures, each of width <= w.
  std::pair<RatInterval, RatInterval> at(const Rational& w) {
    std::lock_guard<std::mutex> lock(mu_);
    Rational step = w;
    for (;;) {
      if (alpha_.interval().width() > step) alpha_ = alpha_.refined(step);
      RatInterval iv = alpha_.interval();
      RatInterval den = a1_(iv);
      if (!den.contains_zero()) {
        RatInterval u = (-a0_(iv)).divided_by(den);
        if (u.width() <= w && iv.width() <= w) return {iv, u};
      }
      step = std::min(step, iv.width()) / Rational(1 << 20);
      if (iv.is_point()) {
        Rational v = iv.lo();
        return {iv, RatInterval(-a0_(v) / a1_(v))};
      }
    }
  }

 private:
  std::mutex mu_;
  AlgebraicNumber alpha_;
  UniPoly a1_, a0_;
};

RecordStatus classify(const BackSubstitution& bs) {
  RecordStatus s = RecordStatus::AllPositive;
  for (const auto& [v, p] : bs.positivity) {
    if (p == Positivity::Nonpositive) return RecordStatus::Rejected;
    if (p == Positivity::Undetermined) s = RecordStatus::Undetermined;
  }
  return s;
}

Rational max_width(const std::map<std::string, RatInterval>& m) {
  Rational w = 0;
  for (const auto& [k, iv] : m) w = std::max(w, iv.width());
  return w;
}

}  // namespace

PointSolution lift_solutions(const UniPoly& core, const UniPoly& a1, const UniPoly& a0,
                             const std::vector<UniPoly>& guards, const std::string& u, const std::string& v,
                             const std::vector<EliminationStep>& trace,
                             const std::map<std::string, Rational>& values, const SolveOptions& opts) {
  PointSolution out;
  if (core.is_zero()) {
    out.status = PointStatus::Degenerate;
    out.note = "eliminating polynomial vanishes identically";
    return out;
  }
  std::map<std::string, RatInterval> fixed;
  for (const auto& [k, q] : values) fixed.emplace(k, RatInterval(q));

  for (const auto& alpha : isolate_positive_roots(core)) {
    bool ambiguous = std::any_of(guards.begin(), guards.end(), [&](const UniPoly& g) { return sign_at(g, alpha) == 0; });
    int s1 = sign_at(a1, alpha);
    if (ambiguous || s1 == 0) {
      out.status = PointStatus::Degenerate;
      out.note = "pairing ambiguous at a root of the eliminating polynomial";
      continue;
    }
    if (-sign_at(a0, alpha) * s1 <= 0) continue;

    auto root = std::make_shared<LiftedRoot>(alpha, a1, a0);
    auto surviving = [root, fixed, u, v](const Rational& w) {
      auto [iv, uv] = root->at(w);
      std::map<std::string, RatInterval> box = fixed;
      box[v] = iv;
      box[u] = uv;
      return box;
    };

    FixedPointRecord rec;
    try {
      rec.positivity = classify(back_substitute(trace, surviving, opts.tol, opts.min_width));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DenominatorStraddlesZero) throw;
      rec.positivity = RecordStatus::Undetermined;
    }
    if (rec.positivity == RecordStatus::Rejected) continue;

    Rational floor = opts.min_width;
    rec.refine = [surviving, trace, floor](const Rational& width) {
      Rational w = width;
      for (;;) {
        auto box = surviving(w);
        bool ok = true;
        try {
          for (auto& [k, iv] : back_substitute(trace, box).values) box[k] = iv;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DenominatorStraddlesZero) throw;
          ok = false;
        }
        if (ok && max_width(box) <= width) return box;
        if (w < floor * floor) throw Error(ErrorCode::DenominatorStraddlesZero, "enclosure refinement stalled");
        w /= Rational(Integer(1) << 30);
      }
    };
    try {
      rec.enclosures = rec.refine(opts.tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DenominatorStraddlesZero) throw;
      rec.enclosures = surviving(opts.tol);
      rec.positivity = RecordStatus::Undetermined;
    }
    if (rec.positivity == RecordStatus::Undetermined && out.status == PointStatus::Ok)
      out.status = PointStatus::Undetermined;
    out.records.push_back(std::move(rec));
  }
  return out;
}

PointSolution solve_point(const ReducedSystem& rs, const std::map<std::string, Rational>& values,
                          const SolveOptions& opts) {
  if (rs.equations.size() != 2 || rs.positive_variables.size() != 2)
    throw Error(ErrorCode::NotBivariate, "point solving needs two equations in two variables");
  const auto& pv = rs.positive_variables;
  std::vector<MultiPoly> eq;
  for (const auto& e : rs.equations) {
    MultiPoly f = e.substitute(values).trimmed();
    for (const auto& s : f.support())
      if (s != pv[0] && s != pv[1])
        throw Error(ErrorCode::NotBivariate, "no value given for '" + s + "'");
    eq.push_back(f);
  }

  std::string u;
  if (opts.eliminate) {
    u = *opts.eliminate;
    if (u != pv[0] && u != pv[1]) throw Error(ErrorCode::InvalidArgument, "cannot eliminate '" + u + "'");
  } else {
    u = pv[0];
    for (const auto& cand : pv)
      if (eq[0].degree(cand) == 1 || eq[1].degree(cand) == 1) {
        u = cand;
        break;
      }
  }
  std::string v = u == pv[0] ? pv[1] : pv[0];

  PointSolution degenerate;
  degenerate.status = PointStatus::Degenerate;
  unsigned d0 = eq[0].degree(u), d1 = eq[1].degree(u);
  if (d0 == 0 || d1 == 0) {
    degenerate.note = "an equation does not involve " + u;
    return degenerate;
  }

  MultiPoly r = resultant(eq[0], eq[1], u);
  if (r.is_zero()) {
    degenerate.note = "resultant vanishes identically";
    return degenerate;
  }
  UniPoly core = UniPoly::from_multipoly(r, v);

  MultiPoly lin;
  std::vector<UniPoly> guards;
  if (d0 == 1 || d1 == 1) {
    lin = d0 == 1 ? eq[0] : eq[1];
  } else {
    lin = subresultant(eq[0], eq[1], u, 1);
    MultiPoly l0 = eq[0].leading_coefficient(u), l1 = eq[1].leading_coefficient(u);
    guards.push_back(UniPoly::from_multipoly(l0 * l0 + l1 * l1, v));
  }
  auto cs = lin.coefficients(u);
  cs.resize(2);
  return lift_solutions(core, UniPoly::from_multipoly(cs[1], v), UniPoly::from_multipoly(cs[0], v), guards, u, v,
                        rs.trace, values, opts);
}

std::vector<FixedPointRecord> solve_at_point(const ReducedSystem& rs, const std::map<std::string, Rational>& values,
                                             const SolveOptions& opts) {
  PointSolution s = solve_point(rs, values, opts);
  if (s.status == PointStatus::Degenerate) throw Error(ErrorCode::ResultantVanishes, s.note);
  return std::move(s.records);
}

std::vector<Rational> SampleRange::values() const {
  if (sign(step) <= 0 || start > stop) throw Error(ErrorCode::InvalidArgument, "bad range for " + param);
  std::vector<Rational> out;
  for (Rational x = start; x <= stop; x += step) out.push_back(x);
  return out;
}

SampleRange parse_range(const std::string& text) {
  auto eq = text.find('=');
  auto c1 = text.find(':', eq == std::string::npos ? 0 : eq);
  auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "range must look like name=start:stop:step, got '" + text + "'");
  SampleRange r{text.substr(0, eq), parse_rational(text.substr(eq + 1, c1 - eq - 1)),
                parse_rational(text.substr(c1 + 1, c2 - c1 - 1)), parse_rational(text.substr(c2 + 1))};
  r.values();
  return r;
}

GridResult grid_sample(const ReducedSystem& rs, const std::vector<SampleRange>& ranges,
                       const std::map<std::string, Rational>& fixed, const SolveOptions& opts, unsigned threads) {
  GridResult out;
  std::vector<std::vector<Rational>> axes;
  for (const auto& r : ranges) {
    out.params.push_back(r.param);
    axes.push_back(r.values());
  }
  size_t total = axes.empty() ? 0 : 1;
  for (const auto& a : axes) total *= a.size();
  out.entries.resize(total);
  for (size_t i = 0; i < total; ++i) {
    size_t rem = i;
    std::vector<Rational> point(axes.size());
    for (size_t k = axes.size(); k-- > 0;) {
      point[k] = axes[k][rem % axes[k].size()];
      rem /= axes[k].size();
    }
    out.entries[i].point = std::move(point);
  }

  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < total;) {
      GridEntry& e = out.entries[i];
      std::map<std::string, Rational> values = fixed;
      for (size_t k = 0; k < ranges.size(); ++k) values[ranges[k].param] = e.point[k];
      auto t0 = std::chrono::steady_clock::now();
      PointSolution s;
      try {
        s = solve_point(rs, values, opts);
      } catch (const Error&) {
        s.status = PointStatus::Degenerate;
      }
      e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      e.count = s.count();
      e.status = s.status;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::string to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Ok: return "ok";
    case PointStatus::Undetermined: return "undetermined";
    case PointStatus::Degenerate: return "degenerate";
  }
  return "?";
}

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::AllPositive: return "all_positive";
    case RecordStatus::Rejected: return "rejected";
    case RecordStatus::Undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Undetermined: return "undetermined";
  }
  return "?";
}

}  // namespace multistat
