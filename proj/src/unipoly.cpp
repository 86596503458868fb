#include "multistat/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "multistat/error.hpp"

namespace multistat {

namespace zpoly {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& p) {
  if (p.empty()) return p;
  Integer g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  ZPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
  return r;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw Error(ErrorCode::ZeroPoly, "pseudo-remainder by zero");
  ZPoly r = a;
  int db = degree(b);
  const Integer& lb = b.back();
  int steps = degree(a) - db + 1;
  if (steps <= 0) return r;
  int done = 0;
  while (degree(r) >= db) {
    Integer lr = r.back();
    size_t shift = r.size() - b.size();
    for (auto& c : r) c *= lb;
    for (size_t j = 0; j < b.size(); ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    trim(r);
    ++done;
  }
  if (done < steps) {
    Integer f = pow(lb, static_cast<unsigned>(steps - done));
    for (auto& c : r) c *= f;
  }
  return r;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw Error(ErrorCode::ZeroPoly, "division by zero polynomial");
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  quotient.assign(a.size() - b.size() + 1, Integer(0));
  const Integer& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return false;
    Integer q;
    mpz_divexact(q.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    size_t shift = r.size() - b.size();
    quotient[shift] = q;
    for (size_t j = 0; j < b.size(); ++j) mpz_submul(r[shift + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
    trim(r);
  }
  if (!r.empty()) return false;
  trim(quotient);
  return true;
}

namespace {

// r / (g * h^delta), exact.
ZPoly prs_reduce(ZPoly r, const Integer& g, const Integer& h, int delta) {
  Integer d = g * pow(h, static_cast<unsigned>(delta));
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return r;
}

// g^delta / h^(delta-1).
Integer prs_next_h(const Integer& g, const Integer& h, int delta) {
  if (delta == 0) return h;  // h^1 * g^0
  Integer num = pow(g, static_cast<unsigned>(delta));
  Integer den = pow(h, static_cast<unsigned>(delta - 1));
  Integer r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;
constexpr u64 kPrime = 2305843009213693951ULL;  // 2^61 - 1

u64 mulmod(u64 a, u64 b) { return static_cast<u64>((static_cast<u128>(a) * b) % kPrime); }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce_mod(const ZPoly& p) {
  std::vector<u64> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = mpz_fdiv_ui(p[i].get_mpz_t(), kPrime);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Degree of gcd(a, b) modulo the prime; -1 if a leading coefficient vanishes there.
int modular_gcd_degree(const ZPoly& a, const ZPoly& b) {
  auto x = reduce_mod(a), y = reduce_mod(b);
  if (x.size() != a.size() || y.size() != b.size()) return -1;
  while (!y.empty()) {
    // x <- x mod y
    u64 inv = powmod(y.back(), kPrime - 2);
    while (x.size() >= y.size()) {
      u64 f = mulmod(x.back(), inv);
      size_t shift = x.size() - y.size();
      for (size_t j = 0; j < y.size(); ++j) {
        u64 t = mulmod(f, y[j]);
        x[shift + j] = x[shift + j] >= t ? x[shift + j] - t : x[shift + j] + kPrime - t;
      }
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

}  // namespace

ZPoly gcd(const ZPoly& x, const ZPoly& y) {
  if (x.empty()) return primitive(y);
  if (y.empty()) return primitive(x);
  if (x.size() > 1 && y.size() > 1 && modular_gcd_degree(x, y) == 0) return {Integer(1)};
  ZPoly a = primitive(x), b = primitive(y);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() == 1) return {Integer(1)};
  Integer g = 1, h = 1;
  for (;;) {
    int delta = degree(a) - degree(b);
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) return primitive(b);
    if (r.size() == 1) return {Integer(1)};
    a = std::move(b);
    b = prs_reduce(std::move(r), g, h, delta);
    g = a.back();
    h = prs_next_h(g, h, delta);
  }
}

Integer resultant(const ZPoly& x, const ZPoly& y) {
  if (x.empty() || y.empty()) return 0;
  ZPoly a = x, b = y;
  int s = 1;
  if (degree(a) < degree(b)) {
    std::swap(a, b);
    if ((degree(a) % 2) && (degree(b) % 2)) s = -s;
  }
  if (degree(b) == 0) return pow(b.back(), static_cast<unsigned>(degree(a)));
  Integer ca = content(a), cb = content(b);
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
  for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  Integer t = pow(ca, static_cast<unsigned>(degree(b))) * pow(cb, static_cast<unsigned>(degree(a)));
  Integer g = 1, h = 1;
  for (;;) {
    int delta = degree(a) - degree(b);
    if ((degree(a) % 2) && (degree(b) % 2)) s = -s;
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    b = prs_reduce(std::move(r), g, h, delta);
    g = a.back();
    h = prs_next_h(g, h, delta);
    if (degree(b) == 0) break;
  }
  // h <- h^(1 - deg a) * lc(b)^deg a
  int da = degree(a);
  Integer num = pow(b.back(), static_cast<unsigned>(da));
  Integer den = pow(h, static_cast<unsigned>(da - 1));
  Integer r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * r;
}

int sign_at(const ZPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer v = p.back(), dp = 1;
  for (size_t i = p.size() - 1; i-- > 0;) {
    dp *= den;
    v *= num;
    mpz_addmul(v.get_mpz_t(), p[i].get_mpz_t(), dp.get_mpz_t());
  }
  return sgn(v);
}

Integer eval(const ZPoly& p, const Integer& x) {
  Integer v = 0;
  for (size_t i = p.size(); i-- > 0;) {
    v *= x;
    v += p[i];
  }
  return v;
}

ZPoly taylor_shift_one(const ZPoly& p) {
  ZPoly r = p;
  size_t n = r.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j-- > i;) r[j] += r[j + 1];
  return r;
}

ZPoly reverse(const ZPoly& p) {
  ZPoly r(p.rbegin(), p.rend());
  trim(r);
  return r;
}

ZPoly halve(const ZPoly& p) {
  ZPoly r = p;
  size_t d = r.size();
  for (size_t i = 0; i < d; ++i) mpz_mul_2exp(r[i].get_mpz_t(), r[i].get_mpz_t(), d - 1 - i);
  return r;
}

ZPoly negate_variable(const ZPoly& p) {
  ZPoly r = p;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

unsigned sign_variations(const ZPoly& p) {
  unsigned v = 0;
  int last = 0;
  for (const auto& c : p) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace zpoly

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_integers(const ZPoly& coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return UniPoly(std::move(c));
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, std::string_view var) {
  auto idx = p.index_of(var);
  std::vector<Rational> c;
  for (const auto& [m, coeff] : p.terms()) {
    unsigned d = idx ? m[*idx] : 0;
    if (m.total_degree() != d)
      throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate in " + std::string(var));
    if (c.size() <= d) c.resize(d + 1);
    c[d] += coeff;
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::linear_root(const Rational& q) {
  return UniPoly(std::vector<Rational>{Rational(-q.get_num()), Rational(q.get_den())});
}

MultiPoly UniPoly::to_multipoly(std::string_view var) const {
  VarTablePtr t = make_table({std::string(var)});
  std::vector<MultiPoly::Term> terms;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.emplace_back(Monomial({static_cast<unsigned>(i)}), c_[i]);
  return MultiPoly(t, std::move(terms));
}

const Rational& UniPoly::lc() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPoly, "leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational v = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    v *= x;
    v += c_[i];
  }
  return v;
}

RatInterval UniPoly::operator()(const RatInterval& x) const {
  if (x.is_point()) return RatInterval((*this)(x.lo()));
  RatInterval v(Rational(0));
  for (size_t i = c_.size(); i-- > 0;) {
    v *= x;
    v += RatInterval(c_[i]);
  }
  return v;
}

int UniPoly::sign_at(const Rational& x) const { return sign((*this)(x)); }

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPoly, "division by zero polynomial");
  std::vector<Rational> r = c_;
  if (r.size() < d.c_.size()) return {UniPoly(), *this};
  std::vector<Rational> q(r.size() - d.c_.size() + 1);
  for (size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + d.c_.size() - 1] / d.c_.back();
    q[k] = f;
    if (f == 0) continue;
    for (size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
  }
  r.resize(d.c_.size() - 1);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

ZPoly UniPoly::integer_primitive() const {
  if (c_.empty()) return {};
  Integer l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    Rational v = c_[i] * Rational(l);
    z[i] = v.get_num();
  }
  return zpoly::primitive(z);
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  UniPoly r = *this;
  Rational l = c_.back();
  for (auto& c : r.c_) c /= l;
  return r;
}

std::string UniPoly::to_string(std::string_view var) const {
  return to_multipoly(var).to_string();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  return UniPoly::from_integers(zpoly::gcd(a.integer_primitive(), b.integer_primitive()));
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "squarefree part of zero polynomial");
  ZPoly f = p.integer_primitive();
  if (f.size() <= 2) return UniPoly::from_integers(f);
  ZPoly g = zpoly::gcd(f, zpoly::derivative(f));
  ZPoly q;
  if (!zpoly::divide_exact(f, g, q)) throw Error(ErrorCode::InvalidArgument, "inexact squarefree division");
  return UniPoly::from_integers(zpoly::primitive(q));
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPoly, "squarefree decomposition of zero polynomial");
  std::vector<std::pair<UniPoly, unsigned>> out;
  ZPoly f = p.integer_primitive();
  if (f.size() <= 1) return out;
  auto exact = [](const ZPoly& a, const ZPoly& b) {
    ZPoly q;
    if (!zpoly::divide_exact(a, b, q)) throw Error(ErrorCode::InvalidArgument, "inexact division in Yun");
    return q;
  };
  ZPoly fp = zpoly::derivative(f);
  ZPoly a0 = zpoly::gcd(f, fp);
  ZPoly b = exact(f, a0);
  ZPoly c = exact(fp, a0);
  ZPoly d = zpoly::sub(c, zpoly::derivative(b));
  unsigned i = 1;
  while (zpoly::degree(b) > 0) {
    ZPoly a = zpoly::gcd(b, d);
    if (zpoly::degree(a) > 0) out.emplace_back(UniPoly::from_integers(a), i);
    b = exact(b, a);
    c = exact(d, a);
    d = zpoly::sub(c, zpoly::derivative(b));
    ++i;
  }
  return out;
}

}  // namespace multistat
