#include "multistat/realroots.hpp"

#include <algorithm>

#include "multistat/error.hpp"

namespace multistat {

namespace {

ZPoly linear_factor(const Rational& q) { return {Integer(-q.get_num()), q.get_den()}; }

int sign_of(const ZPoly& p, const Rational& x) { return zpoly::sign_at(p, x); }

ZPoly squarefree_integer(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "root isolation of zero polynomial");
  return squarefree_part(p).integer_primitive();
}

struct Isolated {
  std::vector<std::pair<Integer, unsigned>> intervals;  // (c, depth): (c/2^d, (c+1)/2^d)
  std::vector<std::pair<Integer, unsigned>> exact;      // (c, depth): c/2^d
  std::vector<int> order;                               // 0 interval, 1 exact, in increasing order
};

void descartes(ZPoly q, const Integer& c, unsigned depth, Isolated& out) {
  unsigned v = zpoly::sign_variations(zpoly::taylor_shift_one(zpoly::reverse(q)));
  if (v == 0) return;
  if (v == 1) {
    out.intervals.emplace_back(c, depth);
    out.order.push_back(0);
    return;
  }
  ZPoly left = zpoly::primitive(zpoly::halve(q));
  bool mid_root = zpoly::eval(left, Integer(1)) == 0;
  if (mid_root) {
    ZPoly deflated;
    zpoly::divide_exact(left, ZPoly{Integer(-1), Integer(1)}, deflated);
    left = std::move(deflated);
  }
  ZPoly right = zpoly::taylor_shift_one(left);
  descartes(left, 2 * c, depth + 1, out);
  if (mid_root) {
    out.exact.emplace_back(2 * c + 1, depth + 1);
    out.order.push_back(1);
  }
  descartes(std::move(right), 2 * c + 1, depth + 1, out);
}

// Roots of f in (0, inf); f squarefree with f(0) != 0.
RootList positive_roots_of(const ZPoly& f) {
  RootList out;
  if (zpoly::degree(f) < 1) return out;
  size_t lead_bits = mpz_sizeinbase(f.back().get_mpz_t(), 2);
  size_t max_bits = 0;
  for (const auto& a : f) max_bits = std::max(max_bits, mpz_sizeinbase(a.get_mpz_t(), 2));
  unsigned k = static_cast<unsigned>(std::max<long>(1, static_cast<long>(max_bits) - static_cast<long>(lead_bits) + 2));
  ZPoly q = f;
  for (size_t i = 0; i < q.size(); ++i) mpz_mul_2exp(q[i].get_mpz_t(), q[i].get_mpz_t(), k * i);
  q = zpoly::primitive(q);
  Isolated iso;
  descartes(q, Integer(0), 0, iso);

  auto scaled = [k](const Integer& c, unsigned depth) {
    Rational r(c);
    if (k >= depth) {
      mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), k - depth);
    } else {
      mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), depth - k);
      r.canonicalize();
    }
    return r;
  };
  ZPoly defining = f;
  std::vector<Rational> exact_values;
  for (const auto& [c, d] : iso.exact) {
    Rational r = scaled(c, d);
    exact_values.push_back(r);
    ZPoly qd;
    zpoly::divide_exact(defining, linear_factor(r), qd);
    defining = std::move(qd);
  }
  defining = zpoly::primitive(defining);
  size_t ii = 0, ie = 0;
  for (int kind : iso.order) {
    if (kind == 0) {
      const auto& [c, d] = iso.intervals[ii++];
      out.emplace_back(defining, RatInterval(scaled(c, d), scaled(c + 1, d)));
    } else {
      out.push_back(AlgebraicNumber::rational(exact_values[ie++]));
    }
  }
  return out;
}

ZPoly strip_zero_root(const ZPoly& f, bool& had_zero) {
  had_zero = !f.empty() && f[0] == 0;
  if (!had_zero) return f;
  return ZPoly(f.begin() + 1, f.end());
}

std::vector<ZPoly> sturm_sequence(const ZPoly& f) {
  std::vector<ZPoly> s{f};
  ZPoly d = zpoly::derivative(f);
  if (d.empty()) return s;
  s.push_back(zpoly::primitive(d));
  for (;;) {
    const ZPoly& a = s[s.size() - 2];
    const ZPoly& b = s.back();
    ZPoly r = zpoly::pseudo_remainder(a, b);
    if (r.empty()) break;
    int delta = zpoly::degree(a) - zpoly::degree(b);
    bool positive_factor = sgn(b.back()) > 0 || (delta + 1) % 2 == 0;
    if (positive_factor)
      for (auto& c : r) c = -c;
    Integer g = zpoly::content(r);
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    s.push_back(std::move(r));
  }
  return s;
}

// Sign variations at x, or at -inf/+inf when x is absent (dir -1 / +1).
unsigned variations_at(const std::vector<ZPoly>& s, const std::optional<Rational>& x, int dir) {
  unsigned v = 0;
  int last = 0;
  for (const auto& p : s) {
    int sg;
    if (x) {
      sg = sign_of(p, *x);
    } else {
      sg = sgn(p.back());
      if (dir < 0 && zpoly::degree(p) % 2) sg = -sg;
    }
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------- AlgebraicNumber

AlgebraicNumber::AlgebraicNumber(ZPoly defining, RatInterval interval)
    : defining_(std::move(defining)), interval_(std::move(interval)) {
  if (defining_.empty()) throw Error(ErrorCode::ZeroPoly, "algebraic number with zero defining polynomial");
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
  return AlgebraicNumber(linear_factor(q), RatInterval(q));
}

AlgebraicNumber AlgebraicNumber::bisected() const {
  if (is_rational()) return *this;
  Rational mid = interval_.midpoint();
  int sm = sign_of(defining_, mid);
  if (sm == 0) return rational(mid);
  int slo = sign_of(defining_, interval_.lo());
  if (sm == slo) return AlgebraicNumber(defining_, RatInterval(mid, interval_.hi()));
  return AlgebraicNumber(defining_, RatInterval(interval_.lo(), mid));
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& w) const {
  AlgebraicNumber a = *this;
  if (a.is_rational() || a.interval_.width() <= w) return a;
  int slo = sign_of(defining_, a.interval_.lo());
  Rational lo = a.interval_.lo(), hi = a.interval_.hi();
  while (hi - lo > w) {
    Rational mid = (lo + hi) / 2;
    int sm = sign_of(defining_, mid);
    if (sm == 0) return rational(mid);
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return AlgebraicNumber(defining_, RatInterval(lo, hi));
}

std::string AlgebraicNumber::to_decimal(int digits) const {
  if (is_rational()) return multistat::to_decimal(interval_.lo(), digits);
  AlgebraicNumber a = *this;
  for (int i = 0; i < 4000; ++i) {
    std::string lo = multistat::to_decimal(a.interval_.lo(), digits);
    if (lo == multistat::to_decimal(a.interval_.hi(), digits)) return lo;
    a = a.bisected();
    if (a.is_rational()) return multistat::to_decimal(a.interval_.lo(), digits);
  }
  return multistat::to_decimal(a.approximation(), digits);
}

// ---------------------------------------------------------------- isolation

RootList isolate_positive_roots(const UniPoly& p) {
  bool zero = false;
  ZPoly f = strip_zero_root(squarefree_integer(p), zero);
  return positive_roots_of(f);
}

RootList isolate_real_roots(const UniPoly& p) {
  bool zero = false;
  ZPoly f = strip_zero_root(squarefree_integer(p), zero);
  RootList out;
  RootList neg = positive_roots_of(zpoly::negate_variable(f));
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) {
    const RatInterval& iv = it->interval();
    out.emplace_back(zpoly::primitive(zpoly::negate_variable(it->defining())), RatInterval(-iv.hi(), -iv.lo()));
  }
  if (zero) out.push_back(AlgebraicNumber::rational(Rational(0)));
  RootList pos = positive_roots_of(f);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

unsigned count_roots_between(const UniPoly& p, const std::optional<Rational>& lo,
                             const std::optional<Rational>& hi) {
  ZPoly f = squarefree_integer(p);
  if (lo && hi && *hi <= *lo) return 0;
  auto s = sturm_sequence(f);
  long n = static_cast<long>(variations_at(s, lo, -1)) - static_cast<long>(variations_at(s, hi, +1));
  if (hi && sign_of(f, *hi) == 0) --n;
  return static_cast<unsigned>(n);
}

unsigned count_roots_in(const UniPoly& p, const RatInterval& iv, Openness openness) {
  ZPoly f = squarefree_integer(p);
  if (iv.is_point()) {
    bool closed = openness == Openness::Closed;
    return closed && sign_of(f, iv.lo()) == 0 ? 1 : 0;
  }
  auto s = sturm_sequence(f);
  // Sturm counts (lo, hi].
  long n = static_cast<long>(variations_at(s, iv.lo(), 0)) - static_cast<long>(variations_at(s, iv.hi(), 0));
  bool lo_closed = openness == Openness::Closed || openness == Openness::RightOpen;
  bool hi_closed = openness == Openness::Closed || openness == Openness::LeftOpen;
  if (lo_closed && sign_of(f, iv.lo()) == 0) ++n;
  if (!hi_closed && sign_of(f, iv.hi()) == 0) --n;
  return static_cast<unsigned>(n);
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) { return a.refined(width); }

int sign_at(const UniPoly& p, const AlgebraicNumber& a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return p.sign_at(a.interval().lo());
  ZPoly q = p.integer_primitive();
  int scale = sgn(p.lc());  // integer_primitive made the leading coefficient positive
  ZPoly g = zpoly::gcd(q, a.defining());
  if (zpoly::degree(g) > 0 &&
      sign_of(g, a.interval().lo()) * sign_of(g, a.interval().hi()) < 0)
    return 0;
  UniPoly qp = UniPoly::from_integers(q);
  AlgebraicNumber b = a;
  for (;;) {
    if (b.is_rational()) return scale * sign_of(q, b.interval().lo());
    int s = qp(b.interval()).certain_sign();
    if (s != 0) return scale * s;
    b = b.bisected();
  }
}

int compare(const AlgebraicNumber& a0, const AlgebraicNumber& b0) {
  AlgebraicNumber a = a0, b = b0;
  if (a.is_rational() && b.is_rational()) {
    const Rational& x = a.interval().lo();
    const Rational& y = b.interval().lo();
    return x < y ? -1 : (y < x ? 1 : 0);
  }
  if (a.is_rational() || b.is_rational()) {
    bool swapped = !a.is_rational();
    const AlgebraicNumber& r = swapped ? b : a;   // rational one
    AlgebraicNumber s = swapped ? a : b;          // interval one
    const Rational& x = r.interval().lo();
    int result;
    for (;;) {
      if (s.is_rational()) {
        const Rational& y = s.interval().lo();
        result = x < y ? -1 : (y < x ? 1 : 0);
        break;
      }
      if (x <= s.interval().lo()) { result = -1; break; }
      if (x >= s.interval().hi()) { result = 1; break; }
      if (sign_of(s.defining(), x) == 0) { result = 0; break; }
      s = s.bisected();
    }
    return swapped ? -result : result;
  }
  std::optional<bool> common;  // both roots of gcd(defining polynomials)
  ZPoly g;
  for (int iter = 0;; ++iter) {
    if (a.is_rational() || b.is_rational()) return compare(a, b);
    if (a.interval().hi() <= b.interval().lo()) return -1;
    if (b.interval().hi() <= a.interval().lo()) return 1;
    if (iter >= 6 && !common) {
      g = zpoly::gcd(a.defining(), b.defining());
      UniPoly gp = UniPoly::from_integers(g);
      common = zpoly::degree(g) > 0 && sign_at(gp, a) == 0 && sign_at(gp, b) == 0;
    }
    if (common && *common) {
      RatInterval hull = a.interval().hull(b.interval());
      if (count_roots_in(UniPoly::from_integers(g), hull, Openness::Closed) == 1) return 0;
    }
    a = a.bisected();
    b = b.bisected();
  }
}

RootList merge_roots(const std::vector<RootList>& lists) {
  RootList all;
  for (const auto& l : lists) all.insert(all.end(), l.begin(), l.end());
  std::stable_sort(all.begin(), all.end(),
                   [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) < 0; });
  RootList out;
  for (auto& r : all)
    if (out.empty() || compare(out.back(), r) != 0) out.push_back(std::move(r));
  return out;
}

std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& polys) {
  std::vector<ZPoly> basis;
  auto add_nonconstant = [](std::vector<ZPoly>& v, ZPoly p) {
    if (zpoly::degree(p) > 0) v.push_back(zpoly::primitive(p));
  };
  for (const auto& p : polys)
    if (!p.is_zero() && p.degree() > 0) add_nonconstant(basis, squarefree_integer(p));
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size() && !changed; ++i)
      for (size_t j = i + 1; j < basis.size() && !changed; ++j) {
        ZPoly g = zpoly::gcd(basis[i], basis[j]);
        if (zpoly::degree(g) == 0) continue;
        ZPoly qi, qj;
        zpoly::divide_exact(basis[i], g, qi);
        zpoly::divide_exact(basis[j], g, qj);
        basis.erase(basis.begin() + static_cast<long>(j));
        basis.erase(basis.begin() + static_cast<long>(i));
        add_nonconstant(basis, g);
        add_nonconstant(basis, qi);
        add_nonconstant(basis, qj);
        changed = true;
      }
  }
  std::vector<UniPoly> out;
  for (auto& b : basis) out.push_back(UniPoly::from_integers(b));
  return out;
}

}  // namespace multistat
