#include "multistat/polyalg.hpp"

#include <algorithm>
#include <functional>

#include "multistat/error.hpp"

namespace multistat {

namespace {

Rational nth_point(size_t i) {
  if (i == 0) return Rational(0);
  long k = static_cast<long>((i + 1) / 2);
  return Rational(i % 2 ? k : -k);
}

Integer denominator_lcm(const MultiPoly& p) {
  Integer l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  return l;
}

ZPoly to_zpoly(const MultiPoly& p, size_t var) {
  ZPoly z(p.degree(var) + 1);
  for (const auto& [m, c] : p.terms()) z[m[var]] = c.get_num();
  zpoly::trim(z);
  return z;
}

void unify(MultiPoly& a, MultiPoly& b) {
  VarTablePtr t = merge_tables(a.table(), b.table());
  a = a.over(t);
  b = b.over(t);
}

// Coefficients of S_j(a, b) from the determinantal definition, lowest first.
std::vector<Integer> subresultant_coefficients(const ZPoly& a, const ZPoly& b, unsigned j) {
  int m = zpoly::degree(a), n = zpoly::degree(b);
  if (j == 0) return {zpoly::resultant(a, b)};
  int rows = m + n - 2 * static_cast<int>(j);
  int cols = m + n - static_cast<int>(j);
  // column c holds the coefficient of x^(cols - 1 - c)
  std::vector<std::vector<Integer>> full(rows, std::vector<Integer>(cols, Integer(0)));
  int r = 0;
  for (int k = 0; k < n - static_cast<int>(j); ++k, ++r) {
    int shift = n - static_cast<int>(j) - 1 - k;
    for (int e = 0; e <= m; ++e) full[r][cols - 1 - (e + shift)] = a[e];
  }
  for (int k = 0; k < m - static_cast<int>(j); ++k, ++r) {
    int shift = m - static_cast<int>(j) - 1 - k;
    for (int e = 0; e <= n; ++e) full[r][cols - 1 - (e + shift)] = b[e];
  }
  std::vector<Integer> out(j + 1);
  for (unsigned i = 0; i <= j; ++i) {
    std::vector<std::vector<Integer>> sq(rows, std::vector<Integer>(rows));
    for (int rr = 0; rr < rows; ++rr) {
      for (int c = 0; c < rows - 1; ++c) sq[rr][c] = full[rr][c];
      sq[rr][rows - 1] = full[rr][cols - 1 - static_cast<int>(i)];
    }
    out[i] = determinant_bareiss(std::move(sq));
  }
  return out;
}

// Evaluation/interpolation driver over the variables in `others`.
std::vector<MultiPoly> eval_interp(const MultiPoly& p, const MultiPoly& q, size_t x,
                                   std::vector<size_t> others, unsigned m, unsigned n, unsigned j) {
  if (others.empty()) {
    auto coeffs = subresultant_coefficients(to_zpoly(p, x), to_zpoly(q, x), j);
    std::vector<MultiPoly> out;
    for (auto& c : coeffs) out.emplace_back(Rational(c));
    return out;
  }
  size_t y = others.back();
  others.pop_back();
  const std::string& yname = p.vars()[y];
  unsigned bound = (n - j) * p.degree(y) + (m - j) * q.degree(y);
  std::vector<Rational> points;
  std::vector<std::vector<MultiPoly>> values;
  for (size_t i = 0; points.size() < bound + 1; ++i) {
    if (i > 64 * (bound + 8)) throw Error(ErrorCode::InvalidArgument, "no usable evaluation points");
    Rational t = nth_point(i);
    MultiPoly pt = p.substitute(yname, t), qt = q.substitute(yname, t);
    if (pt.degree(x) != m || qt.degree(x) != n) continue;
    // Drop variables that vanished from the remaining list.
    std::vector<size_t> rest;
    for (size_t v : others)
      if (pt.degree(v) > 0 || qt.degree(v) > 0) rest.push_back(v);
    points.push_back(t);
    values.push_back(eval_interp(pt, qt, x, rest, m, n, j));
  }
  std::vector<MultiPoly> out;
  for (size_t c = 0; c < values.front().size(); ++c) {
    std::vector<MultiPoly> column;
    for (auto& v : values) column.push_back(v[c]);
    out.push_back(interpolate(points, column, yname));
  }
  return out;
}

MultiPoly subresultant_impl(const MultiPoly& p0, const MultiPoly& q0, std::string_view var, unsigned j) {
  MultiPoly p = p0, q = q0;
  unify(p, q);
  auto idx = p.index_of(var);
  unsigned m = idx ? p.degree(*idx) : 0, n = idx ? q.degree(*idx) : 0;
  if (m == 0 && n == 0) throw Error(ErrorCode::ConstantPair, "both polynomials constant in " + std::string(var));
  if (p.is_zero() || q.is_zero()) return MultiPoly::constant(p.table(), Rational(0));
  if (j == 0 && m == 0) return p.pow(n);
  if (j == 0 && n == 0) return q.pow(m);
  if (j >= std::min(m, n))
    throw Error(ErrorCode::InvalidArgument, "subresultant index must be below both degrees");
  Integer lp = denominator_lcm(p), lq = denominator_lcm(q);
  MultiPoly a = p * Rational(lp), b = q * Rational(lq);
  std::vector<size_t> others;
  for (size_t v = 0; v < a.nvars(); ++v)
    if (v != *idx && (a.degree(v) > 0 || b.degree(v) > 0)) others.push_back(v);
  auto coeffs = eval_interp(a, b, *idx, others, m, n, j);
  Rational scale(pow(lp, n - j) * pow(lq, m - j));
  MultiPoly result = MultiPoly::from_coefficients(var, coeffs);
  return result / scale;
}

}  // namespace

MultiPoly interpolate(const std::vector<Rational>& points, const std::vector<MultiPoly>& values,
                      std::string_view var) {
  size_t n = points.size();
  if (n == 0) return MultiPoly();
  std::vector<MultiPoly> c = values;
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) {
      c[i] = (c[i] - c[i - 1]) / (points[i] - points[i - k]);
    }
  MultiPoly y = MultiPoly::variable(var);
  MultiPoly result = c[n - 1];
  for (size_t k = n - 1; k-- > 0;) {
    if (!result.is_zero()) result = result * (y - MultiPoly(points[k]));
    result += c[k];
  }
  return result;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  return subresultant_impl(p, q, var, 0);
}

MultiPoly subresultant(const MultiPoly& p, const MultiPoly& q, std::string_view var, unsigned j) {
  return subresultant_impl(p, q, var, j);
}

MultiPoly discriminant(const MultiPoly& p, std::string_view var) {
  unsigned d = p.degree(var);
  if (d < 2) throw Error(ErrorCode::DegreeTooLow, "discriminant needs degree >= 2 in " + std::string(var));
  MultiPoly r = resultant(p, p.derivative(var), var);
  auto q = r.divide_exact(p.leading_coefficient(var));
  if (!q) throw Error(ErrorCode::InvalidArgument, "resultant not divisible by leading coefficient");
  return (d * (d - 1) / 2) % 2 ? -*q : *q;
}

PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  auto a = p.coefficients(var), b = q.coefficients(var);
  size_t m = a.size() - 1, n = b.size() - 1;
  size_t size = m + n;
  PolyMatrix s(size, std::vector<MultiPoly>(size));
  for (size_t k = 0; k < n; ++k)
    for (size_t e = 0; e <= m; ++e) s[k][k + (m - e)] = a[e];
  for (size_t k = 0; k < m; ++k)
    for (size_t e = 0; e <= n; ++e) s[n + k][k + (n - e)] = b[e];
  return s;
}

MultiPoly determinant_bareiss(PolyMatrix mat) {
  size_t n = mat.size();
  if (n == 0) return MultiPoly(Rational(1));
  int s = 1;
  MultiPoly prev(Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (mat[k][k].is_zero()) {
      size_t i = k + 1;
      while (i < n && mat[i][k].is_zero()) ++i;
      if (i == n) return MultiPoly(Rational(0));
      std::swap(mat[i], mat[k]);
      s = -s;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly v = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        auto q = v.divide_exact(prev);
        if (!q) throw Error(ErrorCode::InvalidArgument, "Bareiss division not exact");
        mat[i][j] = std::move(*q);
      }
    }
    prev = mat[k][k];
  }
  return s < 0 ? -mat[n - 1][n - 1] : mat[n - 1][n - 1];
}

Integer determinant_bareiss(std::vector<std::vector<Integer>> mat) {
  size_t n = mat.size();
  if (n == 0) return 1;
  int s = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (mat[k][k] == 0) {
      size_t i = k + 1;
      while (i < n && mat[i][k] == 0) ++i;
      if (i == n) return 0;
      std::swap(mat[i], mat[k]);
      s = -s;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer v = mat[i][j] * mat[k][k];
        mpz_submul(v.get_mpz_t(), mat[i][k].get_mpz_t(), mat[k][j].get_mpz_t());
        mpz_divexact(mat[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = mat[k][k];
  }
  return s < 0 ? Integer(-mat[n - 1][n - 1]) : mat[n - 1][n - 1];
}

// ---------------------------------------------------------------- gcd

namespace {

MultiPoly normalized(const MultiPoly& p) { return p.is_zero() ? p : p.primitive_part(); }

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorCode::InvalidArgument, "expected exact division");
  return *q;
}

MultiPoly monomial_poly(const VarTablePtr& t, const Monomial& m) {
  return MultiPoly(t, {{m, Rational(1)}});
}

std::vector<size_t> occurring(const MultiPoly& p) {
  std::vector<size_t> v;
  for (size_t i = 0; i < p.nvars(); ++i)
    if (p.degree(i) > 0) v.push_back(i);
  return v;
}

MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q, const std::string& x) {
  UniPoly g = gcd(UniPoly::from_multipoly(p, x), UniPoly::from_multipoly(q, x));
  return g.to_multipoly(x);
}

// Both primitive in x, over exactly the variables x and y.
MultiPoly gcd_bivariate(const MultiPoly& p, const MultiPoly& q, const std::string& x, const std::string& y) {
  UniPoly lp = UniPoly::from_multipoly(p.leading_coefficient(x), y);
  UniPoly lq = UniPoly::from_multipoly(q.leading_coefficient(x), y);
  UniPoly gamma = gcd(lp, lq);
  unsigned dx_p = p.degree(x), dx_q = q.degree(x);
  unsigned bound = static_cast<unsigned>(std::max(gamma.degree(), 0)) + std::min(p.degree(y), q.degree(y));
  int best = -1;
  std::vector<Rational> points;
  std::vector<MultiPoly> values;
  for (size_t i = 0;; ++i) {
    if (i > 64 * (bound + 16)) throw Error(ErrorCode::InvalidArgument, "bivariate gcd failed to converge");
    Rational t = nth_point(i);
    if (lp(t) == 0 || lq(t) == 0) continue;
    UniPoly pt = UniPoly::from_multipoly(p.substitute(y, t), x);
    UniPoly qt = UniPoly::from_multipoly(q.substitute(y, t), x);
    if (pt.degree() != static_cast<int>(dx_p) || qt.degree() != static_cast<int>(dx_q)) continue;
    UniPoly g = gcd(pt, qt);
    if (g.degree() == 0) return MultiPoly(Rational(1));
    if (best >= 0 && g.degree() > best) continue;
    if (g.degree() < best || best < 0) {
      best = g.degree();
      points.clear();
      values.clear();
    }
    Rational scale = gamma(t) / g.lc();
    values.push_back((g.to_multipoly(x) * scale));
    points.push_back(t);
    if (points.size() >= bound + 1) {
      MultiPoly cand = interpolate(points, values, y);
      cand = cand.divide_exact(content_in(cand, x)).value_or(cand);
      cand = normalized(cand);
      if (p.divide_exact(cand) && q.divide_exact(cand)) return cand;
      ++bound;
    }
  }
}

std::vector<MultiPoly> coeff_list(const MultiPoly& p, const std::string& v) { return p.coefficients(v); }

// Subresultant PRS gcd over the coefficient ring; inputs primitive in v.
MultiPoly gcd_prs(const MultiPoly& p, const MultiPoly& q, const std::string& v) {
  std::vector<MultiPoly> a = coeff_list(p, v), b = coeff_list(q, v);
  if (a.size() < b.size()) std::swap(a, b);
  MultiPoly g(Rational(1)), h(Rational(1));
  auto prem = [](std::vector<MultiPoly> r, const std::vector<MultiPoly>& d) {
    size_t steps = r.size() - d.size() + 1;
    size_t done = 0;
    const MultiPoly& ld = d.back();
    while (r.size() >= d.size() && !r.empty()) {
      MultiPoly lr = r.back();
      size_t shift = r.size() - d.size();
      for (auto& c : r) c *= ld;
      for (size_t j = 0; j < d.size(); ++j) r[shift + j] -= lr * d[j];
      while (!r.empty() && r.back().is_zero()) r.pop_back();
      ++done;
    }
    if (done < steps) {
      MultiPoly f = ld.pow(static_cast<unsigned>(steps - done));
      for (auto& c : r) c *= f;
    }
    return r;
  };
  for (;;) {
    if (b.size() == 1) return MultiPoly(Rational(1));
    int delta = static_cast<int>(a.size()) - static_cast<int>(b.size());
    auto r = prem(a, b);
    if (r.empty()) break;
    if (r.size() == 1) return MultiPoly(Rational(1));
    a = std::move(b);
    MultiPoly d = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = exact_div(c, d);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  MultiPoly result = MultiPoly::from_coefficients(v, b);
  return exact_div(result, content_in(result, v));
}

}  // namespace

MultiPoly content_in(const MultiPoly& p, std::string_view var) {
  if (p.degree(var) == 0) return normalized(p);
  auto coeffs = p.coefficients(var);
  std::sort(coeffs.begin(), coeffs.end(), [](const MultiPoly& a, const MultiPoly& b) { return a.size() < b.size(); });
  MultiPoly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized(c) : gcd(g, c);
    if (g.is_constant()) return MultiPoly(Rational(1));
  }
  return g;
}

MultiPoly gcd(const MultiPoly& p0, const MultiPoly& q0) {
  MultiPoly p = p0, q = q0;
  unify(p, q);
  if (p.is_zero()) return normalized(q);
  if (q.is_zero()) return normalized(p);
  const VarTablePtr table = p.table();
  if (p.is_constant() || q.is_constant()) return MultiPoly::constant(table, Rational(1));
  Monomial mp = p.monomial_content(), mq = q.monomial_content();
  MultiPoly mono = monomial_poly(table, mp.gcd(mq));
  if (p.size() == 1 || q.size() == 1) return mono;
  p = normalized(p.divide_monomial(mp));
  q = normalized(q.divide_monomial(mq));
  if (p == q) return mono * p;
  if (p.size() >= q.size() && p.divide_exact(q)) return mono * q;
  if (q.size() > p.size() && q.divide_exact(p)) return mono * p;

  // Variables present in only one argument cannot occur in the gcd.
  auto vp = occurring(p), vq = occurring(q);
  for (size_t v : vp)
    if (std::find(vq.begin(), vq.end(), v) == vq.end()) return mono * gcd(content_in(p, table->at(v)), q);
  for (size_t v : vq)
    if (std::find(vp.begin(), vp.end(), v) == vp.end()) return mono * gcd(p, content_in(q, table->at(v)));

  if (vp.size() == 1) return mono * gcd_univariate(p, q, table->at(vp[0]));

  const std::string& x = table->at(vp[0]);
  MultiPoly cp = content_in(p, x), cq = content_in(q, x);
  MultiPoly c = gcd(cp, cq);
  MultiPoly pp = exact_div(p, cp), qq = exact_div(q, cq);
  MultiPoly g;
  if (vp.size() == 2) {
    if (pp.degree(x) == 0 || qq.degree(x) == 0) {
      g = MultiPoly(Rational(1));
    } else {
      g = gcd_bivariate(pp, qq, x, table->at(vp[1]));
    }
  } else {
    g = (pp.degree(x) == 0 || qq.degree(x) == 0) ? MultiPoly(Rational(1)) : gcd_prs(pp, qq, x);
  }
  return normalized(mono * c * g).over(table);
}

// ---------------------------------------------------------------- squarefree

namespace {

void yun(const MultiPoly& f, const std::string& v, std::vector<std::pair<MultiPoly, unsigned>>& out) {
  MultiPoly fp = f.derivative(v);
  MultiPoly a0 = gcd(f, fp);
  MultiPoly b = exact_div(f, a0);
  MultiPoly c = exact_div(fp, a0);
  MultiPoly d = c - b.derivative(v);
  unsigned i = 1;
  while (b.degree(v) > 0) {
    MultiPoly a = gcd(b, d);
    if (!a.is_constant()) out.emplace_back(normalized(a), i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative(v);
    ++i;
  }
}

void sqf_rec(const MultiPoly& p, std::vector<std::pair<MultiPoly, unsigned>>& out) {
  if (p.is_constant()) return;
  auto vs = occurring(p);
  const std::string& v = p.vars()[vs.front()];
  MultiPoly c = content_in(p, v);
  sqf_rec(c, out);
  yun(exact_div(p, c), v, out);
}

}  // namespace

std::vector<std::pair<MultiPoly, unsigned>> squarefree_factors(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "squarefree factors of zero polynomial");
  std::vector<std::pair<MultiPoly, unsigned>> out;
  Monomial m = p.monomial_content();
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.emplace_back(MultiPoly::variable(p.table(), i), m[i]);
  sqf_rec(normalized(p.divide_monomial(m)), out);
  return out;
}

MultiPoly strip_monomial_and_content(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return normalized(p.divide_monomial(p.monomial_content()));
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  VarTablePtr t = merge_tables(a.table(), b.table());
  return a.over(t).primitive_part() == b.over(t).primitive_part();
}

}  // namespace multistat
