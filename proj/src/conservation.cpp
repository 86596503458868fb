#include "multistat/conservation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "multistat/error.hpp"

namespace multistat {

namespace {

using IntRow = std::vector<Integer>;

IntRow integer_row(const std::vector<Rational>& r) {
  Integer l = 1;
  for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow out;
  out.reserve(r.size());
  for (const auto& q : r) out.push_back(Integer(q * l));
  return out;
}

void make_primitive(IntRow& r) {
  Integer g = 0;
  for (const auto& z : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g > 1)
    for (auto& z : r) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

/// Row echelon form by fraction-free elimination with content removal.
/// Returns pivot columns.
std::vector<size_t> echelon(std::vector<IntRow>& rows, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Integer a = rows[r][c], b = rows[i][c];
      for (size_t k = 0; k < cols; ++k) rows[i][k] = a * rows[i][k] - b * rows[r][k];
      make_primitive(rows[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Rational> to_rationals(const IntRow& r) {
  return std::vector<Rational>(r.begin(), r.end());
}

}  // namespace

MultiPoly ConservationLaw::linear_form(const std::vector<std::string>& vars) const {
  MultiPoly p;
  for (size_t i = 0; i < vars.size() && i < coefficients.size(); ++i)
    if (coefficients[i] != 0) p += MultiPoly::variable(vars[i]) * MultiPoly(coefficients[i]);
  return p;
}

MultiPoly ConservationLaw::as_polynomial(const std::vector<std::string>& vars) const {
  return linear_form(vars) - MultiPoly::variable(constant);
}

bool ConservationLaw::nonnegative() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& q) { return sign(q) >= 0; });
}

RatMatrix null_space(const RatMatrix& m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  std::vector<IntRow> rows;
  for (const auto& r : m) {
    if (r.size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    rows.push_back(integer_row(r));
  }
  std::vector<size_t> pivots = echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;

  RatMatrix basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = Rational(-rows[i][f]) / Rational(rows[i][pivots[i]]);
    IntRow z = integer_row(v);
    make_primitive(z);
    basis.push_back(to_rationals(z));
  }
  return basis;
}

size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  std::vector<IntRow> rows;
  for (const auto& r : m) rows.push_back(integer_row(r));
  return echelon(rows, m[0].size()).size();
}

std::vector<ConservationLaw> linear_first_integrals(const std::vector<MultiPoly>& f,
                                                    const std::vector<std::string>& vars) {
  if (f.size() != vars.size()) throw Error(ErrorCode::InvalidArgument, "one right-hand side per variable");
  VarTablePtr table = make_table({});
  for (const auto& p : f) table = merge_tables(table, p.table());
  std::map<std::vector<unsigned>, size_t> row_of;
  RatMatrix m;
  for (size_t i = 0; i < f.size(); ++i) {
    MultiPoly fi = f[i].over(table);
    for (const auto& [mono, c] : fi.terms()) {
      auto [it, fresh] = row_of.emplace(mono.exponents(), m.size());
      if (fresh) m.emplace_back(f.size(), Rational(0));
      m[it->second][i] = c;
    }
  }
  RatMatrix basis = m.empty() ? RatMatrix{} : null_space(m);
  if (m.empty()) {
    for (size_t i = 0; i < f.size(); ++i) {
      std::vector<Rational> e(f.size(), Rational(0));
      e[i] = 1;
      basis.push_back(e);
    }
  }
  std::vector<ConservationLaw> out;
  for (size_t i = 0; i < basis.size(); ++i) {
    ConservationLaw law{basis[i], "c" + std::to_string(i + 1)};
    if (!verify_law(law, f)) throw Error(ErrorCode::InvalidArgument, "null space verification failed");
    out.push_back(std::move(law));
  }
  return out;
}

bool verify_law(const ConservationLaw& law, const std::vector<MultiPoly>& f) {
  MultiPoly s;
  for (size_t i = 0; i < f.size() && i < law.coefficients.size(); ++i)
    if (law.coefficients[i] != 0) s += f[i] * MultiPoly(law.coefficients[i]);
  return s.is_zero();
}

std::vector<ConservationLaw> nonnegative_basis(const std::vector<ConservationLaw>& basis) {
  size_t d = basis.size();
  if (d == 0) return {};
  size_t n = basis[0].coefficients.size();

  std::vector<IntRow> rays;
  auto add_ray = [&](std::vector<Rational> r) {
    int s = 0;
    for (const auto& q : r) {
      int t = sign(q);
      if (t == 0) continue;
      if (s == 0) s = t;
      if (t != s) return;
    }
    if (s == 0) return;
    if (s < 0)
      for (auto& q : r) q = -q;
    IntRow z = integer_row(r);
    make_primitive(z);
    if (std::find(rays.begin(), rays.end(), z) == rays.end()) rays.push_back(std::move(z));
  };

  // Each extreme ray has d-1 independent zero coordinates.
  std::vector<size_t> pick(d - 1);
  std::function<void(size_t, size_t)> choose = [&](size_t start, size_t depth) {
    if (depth == d - 1) {
      RatMatrix sys;
      for (size_t z : pick) {
        std::vector<Rational> row(d);
        for (size_t j = 0; j < d; ++j) row[j] = basis[j].coefficients[z];
        sys.push_back(row);
      }
      RatMatrix a = sys.empty() ? RatMatrix{std::vector<Rational>(1, Rational(1))} : null_space(sys);
      if (a.size() != 1) return;
      std::vector<Rational> r(n, Rational(0));
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < n; ++k) r[k] += a[0][j] * basis[j].coefficients[k];
      add_ray(std::move(r));
      return;
    }
    for (size_t z = start; z + (d - 1 - depth) <= n; ++z) {
      pick[depth] = z;
      choose(z + 1, depth + 1);
    }
  };
  choose(0, 0);

  auto support = [](const IntRow& r) {
    return std::count_if(r.begin(), r.end(), [](const Integer& z) { return z != 0; });
  };
  std::stable_sort(rays.begin(), rays.end(), [&](const IntRow& a, const IntRow& b) {
    auto sa = support(a), sb = support(b);
    if (sa != sb) return sa < sb;
    return a > b;
  });

  std::vector<ConservationLaw> out;
  RatMatrix chosen;
  for (const auto& r : rays) {
    if (out.size() == d) break;
    chosen.push_back(to_rationals(r));
    if (rank(chosen) < chosen.size()) {
      chosen.pop_back();
      continue;
    }
    out.push_back({to_rationals(r), basis[out.size()].constant});
  }
  if (out.size() < d) throw Error(ErrorCode::NoNonnegativeBasis, "cone does not span the null space");
  return out;
}

}  // namespace multistat
