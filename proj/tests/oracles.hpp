#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "multistat/multipoly.hpp"
#include "multistat/unipoly.hpp"

namespace multistat::oracle {

/// Determinant by Gaussian elimination over Q.
inline Rational det(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational q = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= q * m[c][k];
    }
  }
  return d;
}

/// Determinant of the Sylvester matrix of two univariate coefficient lists
/// (lowest degree first).
inline Rational sylvester_resultant(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  size_t m = p.size() - 1, n = q.size() - 1, s = m + n;
  if (s == 0) return 1;
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s, Rational(0)));
  for (size_t r = 0; r < n; ++r)
    for (size_t i = 0; i <= m; ++i) a[r][r + i] = p[m - i];
  for (size_t r = 0; r < m; ++r)
    for (size_t i = 0; i <= n; ++i) a[n + r][r + i] = q[n - i];
  return det(a);
}

/// Cofactor expansion of det(lambda I - m), coefficients lowest first.
inline std::vector<Rational> laplace_char_poly(const std::vector<std::vector<Rational>>& m) {
  using P = std::vector<Rational>;
  auto mul = [](const P& a, const P& b) {
    P c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t k = 0; k < b.size(); ++k) c[i + k] += a[i] * b[k];
    return c;
  };
  auto add = [](P a, const P& b, int s) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    return a;
  };
  std::function<P(const std::vector<std::vector<P>>&)> rec = [&](const std::vector<std::vector<P>>& a) -> P {
    if (a.size() == 1) return a[0][0];
    P acc{Rational(0)};
    for (size_t c = 0; c < a.size(); ++c) {
      std::vector<std::vector<P>> minor;
      for (size_t r = 1; r < a.size(); ++r) {
        std::vector<P> row;
        for (size_t k = 0; k < a.size(); ++k)
          if (k != c) row.push_back(a[r][k]);
        minor.push_back(row);
      }
      acc = add(acc, mul(a[0][c], rec(minor)), c % 2 ? -1 : 1);
    }
    return acc;
  };
  std::vector<std::vector<P>> a(m.size(), std::vector<P>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t k = 0; k < m.size(); ++k) a[i][k] = i == k ? P{-m[i][k], Rational(1)} : P{-m[i][k]};
  P out = rec(a);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

inline std::vector<Rational> random_coeffs(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = d(rng);
  while (c.back() == 0) c.back() = d(rng);
  return c;
}

/// Product of distinct rational linear factors and positive-definite
/// quadratics: the number of real roots is known by construction.
struct KnownRoots {
  UniPoly poly;
  unsigned real_roots = 0;
  unsigned positive_roots = 0;
};

inline KnownRoots random_known_roots(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nlin(0, 5), nquad(0, 2), num(-40, 40), den(1, 9), mult(1, 2);
  std::vector<Rational> roots;
  int k = nlin(rng);
  while (static_cast<int>(roots.size()) < k) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  KnownRoots out;
  out.poly = UniPoly({1});
  for (const auto& r : roots) {
    int e = mult(rng);
    for (int i = 0; i < e; ++i) out.poly = out.poly * UniPoly(std::vector<Rational>{-r, Rational(1)});
    ++out.real_roots;
    if (r > 0) ++out.positive_roots;
  }
  for (int i = nquad(rng); i > 0; --i) {
    Rational b(num(rng), den(rng)), c = b * b / 4 + Rational(1 + std::abs(num(rng)), den(rng));
    out.poly = out.poly * UniPoly(std::vector<Rational>{c, b, Rational(1)});
  }
  std::uniform_int_distribution<int> scale(1, 7);
  out.poly = out.poly * UniPoly(std::vector<Rational>{Rational(scale(rng) * (num(rng) < 0 ? -1 : 1))});
  return out;
}

}  // namespace multistat::oracle
