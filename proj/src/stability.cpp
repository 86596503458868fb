#include "multistat/stability.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "multistat/error.hpp"

namespace multistat {

RatMatrix ReducedJacobian::at(const std::map<std::string, Rational>& point) const {
  RatMatrix m(dimension(), std::vector<Rational>(dimension()));
  for (size_t i = 0; i < dimension(); ++i)
    for (size_t k = 0; k < dimension(); ++k) m[i][k] = entries[i][k].evaluate(point);
  return m;
}

ReducedJacobian reduced_jacobian(const std::vector<MultiPoly>& f, const std::vector<std::string>& vars,
                                 const std::vector<ConservationLaw>& laws, const std::set<std::string>& eliminate) {
  if (f.size() != vars.size()) throw Error(ErrorCode::InvalidArgument, "one right-hand side per variable");
  std::vector<std::string> elim;
  for (const auto& v : vars)
    if (eliminate.count(v)) elim.push_back(v);
  if (elim.size() != eliminate.size())
    throw Error(ErrorCode::LawsNotSolvable, "eliminated set names unknown variables");
  if (laws.size() != elim.size()) throw Error(ErrorCode::LawsNotSolvable, "need one law per eliminated variable");

  auto column = [&](const std::string& v) {
    return static_cast<size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
  };
  // Solve A e = rhs where A is laws x eliminated and rhs_i = k_i - survivors.
  size_t n = elim.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<MultiPoly> rhs(n);
  for (size_t i = 0; i < n; ++i) {
    rhs[i] = MultiPoly::variable(laws[i].constant);
    for (size_t k = 0; k < vars.size(); ++k) {
      const Rational& c = laws[i].coefficients[k];
      if (c == 0) continue;
      if (eliminate.count(vars[k]))
        continue;
      rhs[i] -= MultiPoly::variable(vars[k]) * MultiPoly(c);
    }
    for (size_t k = 0; k < n; ++k) a[i][k] = laws[i].coefficients[column(elim[k])];
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::LawsNotSolvable, "laws do not determine " + elim[c]);
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational q = a[r][c] / a[c][c];
      for (size_t k = 0; k < n; ++k) a[r][k] -= q * a[c][k];
      rhs[r] -= rhs[c] * MultiPoly(q);
    }
  }
  ReducedJacobian j;
  for (size_t c = 0; c < n; ++c) j.substitutions[elim[c]] = rhs[c] / a[c][c];
  for (const auto& v : vars)
    if (!eliminate.count(v)) j.variables.push_back(v);

  for (const auto& v : j.variables) {
    MultiPoly fi = f[column(v)];
    for (const auto& [e, expr] : j.substitutions) fi = fi.substitute(e, expr);
    std::vector<MultiPoly> row;
    for (const auto& w : j.variables) row.push_back(fi.derivative(w));
    j.entries.push_back(std::move(row));
  }
  return j;
}

std::set<std::string> default_eliminated(const std::vector<ConservationLaw>& laws,
                                         const std::vector<std::string>& vars) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& l : laws) rows.push_back(l.coefficients);
  std::set<std::string> out;
  size_t r = 0;
  for (size_t c = vars.size(); c-- > 0 && r < rows.size();) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational q = rows[i][c] / rows[r][c];
      for (size_t k = 0; k < vars.size(); ++k) rows[i][k] -= q * rows[r][k];
    }
    out.insert(vars[c]);
    ++r;
  }
  return out;
}

UniPoly char_poly(const RatMatrix& m) {
  size_t n = m.size();
  // Berkowitz: c holds coefficients of det(lambda I - A_r), highest first.
  std::vector<Rational> c{Rational(1)};
  for (size_t r = 0; r < n; ++r) {
    // A_{r+1} = [[A_r, S],[R, a]] with S column above, R row left of a = m[r][r].
    std::vector<Rational> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m[r][r];
    std::vector<Rational> s(r);
    for (size_t i = 0; i < r; ++i) s[i] = m[i][r];
    for (size_t k = 2; k <= r + 1; ++k) {
      Rational acc = 0;
      for (size_t i = 0; i < r; ++i) acc += m[r][i] * s[i];
      toeplitz[k] = -acc;
      std::vector<Rational> next(r, Rational(0));
      for (size_t i = 0; i < r; ++i)
        for (size_t l = 0; l < r; ++l) next[i] += m[i][l] * s[l];
      s = std::move(next);
    }
    std::vector<Rational> out(r + 2, Rational(0));
    for (size_t i = 0; i < r + 2; ++i)
      for (size_t k = 0; k <= i && k < c.size(); ++k) out[i] += toeplitz[i - k] * c[k];
    c = std::move(out);
  }
  std::reverse(c.begin(), c.end());
  return UniPoly(c);
}

namespace {

UniPoly laplace(const std::vector<std::vector<UniPoly>>& m) {
  size_t n = m.size();
  if (n == 0) return UniPoly({1});
  if (n == 1) return m[0][0];
  UniPoly acc;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<UniPoly>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<UniPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    UniPoly term = m[0][c] * laplace(minor);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

UniPoly char_poly_laplace(const RatMatrix& m) {
  size_t n = m.size();
  std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      std::vector<Rational> c{-m[i][k]};
      if (i == k) c.push_back(1);
      a[i][k] = UniPoly(c);
    }
  return laplace(a);
}

UniPoly char_poly(const ReducedJacobian& j, const std::map<std::string, Rational>& point) {
  return char_poly(j.at(point));
}

StabilityVerdict rhp_count(const UniPoly& p) {
  if (p.is_zero()) return {};
  int n = p.degree();
  std::vector<Rational> a(p.coeffs().rbegin(), p.coeffs().rend());  // highest first
  if (sign(a[0]) < 0)
    for (auto& q : a) q = -q;
  if (n == 0) return {0u, Stability::Stable};
  std::vector<Rational> prev, cur;
  for (int i = 0; i <= n; i += 2) prev.push_back(a[i]);
  for (int i = 1; i <= n; i += 2) cur.push_back(a[i]);
  std::vector<Rational> first{prev[0]};
  for (int row = 1; row <= n; ++row) {
    if (cur.empty() || cur[0] == 0) return {};
    first.push_back(cur[0]);
    std::vector<Rational> next;
    for (size_t k = 0; k + 1 < prev.size(); ++k) {
      Rational b = k + 1 < cur.size() ? cur[k + 1] : Rational(0);
      next.push_back((cur[0] * prev[k + 1] - prev[0] * b) / cur[0]);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  unsigned changes = 0;
  for (size_t i = 1; i < first.size(); ++i)
    if (sign(first[i]) != sign(first[i - 1])) ++changes;
  return {changes, changes == 0 ? Stability::Stable : Stability::Unstable};
}

StabilityVerdict verdict_in_box(const ReducedJacobian& j, const std::map<std::string, RatInterval>& box) {
  std::map<std::string, Rational> mid, lo, hi;
  for (const auto& [k, iv] : box) {
    mid[k] = iv.midpoint();
    lo[k] = iv.lo();
    hi[k] = iv.hi();
  }
  StabilityVerdict v = rhp_count(char_poly(j, mid));
  if (!v.rhp_count) return v;
  for (const auto* corner : {&lo, &hi}) {
    StabilityVerdict w = rhp_count(char_poly(j, *corner));
    if (w.rhp_count != v.rhp_count) return {};
  }
  return v;
}

void classify_fixed_points(std::vector<FixedPointRecord>& records, const ReducedJacobian& j, const Rational& start,
                           const Rational& floor, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < records.size();) {
      FixedPointRecord& r = records[i];
      StabilityVerdict v;
      for (Rational w = start; w >= floor; w /= 10000) {
        auto box = r.refine ? r.refine(w) : r.enclosures;
        v = verdict_in_box(j, box);
        if (v.rhp_count || !r.refine) break;
      }
      r.stability = v;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<size_t>(threads, records.size()); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace multistat
