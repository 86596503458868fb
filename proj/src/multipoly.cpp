#include "multistat/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "multistat/error.hpp"

namespace multistat {

VarTablePtr make_table(VarTable names) { return std::make_shared<const VarTable>(std::move(names)); }

namespace {

const VarTablePtr& empty_table() {
  static const VarTablePtr t = make_table({});
  return t;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) { return a == b || *a == *b; }

// Index map from table `from` into table `to` (every name must exist in `to`).
std::vector<size_t> index_map(const VarTable& from, const VarTable& to) {
  std::vector<size_t> map(from.size());
  for (size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    map[i] = it == to.end() ? to.size() : static_cast<size_t>(it - to.begin());
  }
  return map;
}

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return grlex_compare(a.first, b.first) > 0;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
  for (unsigned e : exps_) total_ += e;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<unsigned> r(std::max(exps_.size(), o.exps_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
  return Monomial(std::move(r));
}

bool Monomial::divisible_by(const Monomial& o) const {
  if (o.total_ > total_) return false;
  for (size_t i = 0; i < o.exps_.size(); ++i)
    if (o.exps_[i] > (*this)[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  std::vector<unsigned> r = exps_;
  for (size_t i = 0; i < o.exps_.size(); ++i) r[i] -= o.exps_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& o) const {
  std::vector<unsigned> r(std::max(exps_.size(), o.exps_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::min((*this)[i], o[i]);
  return Monomial(std::move(r));
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

VarTablePtr merge_tables(const VarTablePtr& a, const VarTablePtr& b) {
  if (same_table(a, b)) return a;
  VarTable names = *a;
  bool grew = false;
  for (const auto& n : *b)
    if (std::find(names.begin(), names.end(), n) == names.end()) {
      names.push_back(n);
      grew = true;
    }
  if (!grew) return a;
  if (names.size() == b->size()) {
    // b already holds every variable; keep a's order only if it matters.
    bool prefix = true;
    for (size_t i = 0; i < a->size(); ++i) prefix = prefix && (*b)[i] == (*a)[i];
    if (prefix) return b;
  }
  return make_table(std::move(names));
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly() : vars_(empty_table()) {}

MultiPoly::MultiPoly(const Rational& c) : vars_(empty_table()) {
  if (c != 0) {
    terms_.emplace_back(Monomial(), c);
    terms_.back().second.canonicalize();
  }
}

MultiPoly::MultiPoly(VarTablePtr vars, std::vector<Term> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto& t : terms_)
    if (t.first.size() != vars_->size()) {
      std::vector<unsigned> e(vars_->size(), 0);
      for (size_t i = 0; i < std::min(e.size(), t.first.size()); ++i) e[i] = t.first[i];
      t.first = Monomial(std::move(e));
    }
  normalize();
}

MultiPoly MultiPoly::variable(std::string_view name) {
  return variable(make_table({std::string(name)}), 0);
}

MultiPoly MultiPoly::variable(VarTablePtr vars, size_t index) {
  std::vector<unsigned> e(vars->size(), 0);
  e.at(index) = 1;
  MultiPoly p;
  p.vars_ = std::move(vars);
  p.terms_.emplace_back(Monomial(std::move(e)), Rational(1));
  return p;
}

MultiPoly MultiPoly::constant(VarTablePtr vars, const Rational& c) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  if (c != 0) p.terms_.emplace_back(Monomial(std::vector<unsigned>(p.vars_->size(), 0)), c);
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

std::optional<size_t> MultiPoly::index_of(std::string_view name) const {
  for (size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return i;
  return std::nullopt;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rational(0);
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPoly, "leading coefficient of zero polynomial");
  return terms_.front().second;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPoly, "leading monomial of zero polynomial");
  return terms_.front().first;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.total_degree();
}

unsigned MultiPoly::degree(size_t index) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[index]);
  return d;
}

unsigned MultiPoly::degree(std::string_view var) const {
  auto i = index_of(var);
  return i ? degree(*i) : 0;
}

std::vector<std::string> MultiPoly::support() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < vars_->size(); ++i)
    if (degree(i) > 0) out.push_back((*vars_)[i]);
  return out;
}

MultiPoly MultiPoly::over(const VarTablePtr& vars) const {
  if (same_table(vars_, vars)) {
    MultiPoly p = *this;
    p.vars_ = vars;
    return p;
  }
  auto map = index_map(*vars_, *vars);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e(vars->size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] == vars->size())
        throw Error(ErrorCode::InvalidArgument, "variable " + (*vars_)[i] + " missing from target table");
      e[map[i]] = m[i];
    }
    terms.emplace_back(Monomial(std::move(e)), c);
  }
  return MultiPoly(vars, std::move(terms));
}

MultiPoly MultiPoly::trimmed() const {
  VarTable names;
  for (size_t i = 0; i < vars_->size(); ++i)
    if (degree(i) > 0) names.push_back((*vars_)[i]);
  if (names.size() == vars_->size()) return *this;
  return over(make_table(std::move(names)));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// Bring two polynomials onto one table; returns the table.
VarTablePtr unify(MultiPoly& a, MultiPoly& b) {
  if (same_table(a.table(), b.table())) return a.table();
  VarTablePtr t = merge_tables(a.table(), b.table());
  if (!same_table(a.table(), t)) a = a.over(t);
  if (!same_table(b.table(), t)) b = b.over(t);
  return t;
}

template <bool Subtract>
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : grlex_compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if constexpr (Subtract) out.back().second = -out.back().second;
    } else {
      Rational s = Subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  MultiPoly b = o;
  unify(*this, b);
  terms_ = merge_terms<false>(terms_, b.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  MultiPoly b = o;
  unify(*this, b);
  terms_ = merge_terms<true>(terms_, b.terms_);
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  if (x.is_zero() || y.is_zero()) {
    MultiPoly z;
    z.vars_ = merge_tables(x.vars_, y.vars_);
    return z;
  }
  MultiPoly a = x, b = y;
  VarTablePtr t = unify(a, b);
  if (a.size() == 1 || b.size() == 1) {
    const MultiPoly& single = a.size() == 1 ? a : b;
    const MultiPoly& other = a.size() == 1 ? b : a;
    const auto& [m, c] = single.terms_[0];
    std::vector<MultiPoly::Term> terms;
    terms.reserve(other.size());
    for (const auto& [m2, c2] : other.terms_) terms.emplace_back(m * m2, c * c2);
    MultiPoly r;
    r.vars_ = t;
    r.terms_ = std::move(terms);  // multiplying by one term preserves the order
    return r;
  }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) terms.emplace_back(m1 * m2, c1 * c2);
  return MultiPoly(t, std::move(terms));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  for (auto& t : terms_) t.second /= c;
  return *this;
}

bool operator==(const MultiPoly& x, const MultiPoly& y) {
  if (x.size() != y.size()) return false;
  if (same_table(x.vars_, y.vars_)) return x.terms_ == y.terms_;
  MultiPoly a = x, b = y;
  unify(a, b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients(std::string_view var) const {
  auto idx = index_of(var);
  if (!idx) return {*this};
  std::vector<std::vector<Term>> buckets(degree(*idx) + 1);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e = m.exponents();
    unsigned d = e[*idx];
    e[*idx] = 0;
    buckets[d].emplace_back(Monomial(std::move(e)), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    MultiPoly p;
    p.vars_ = vars_;
    p.terms_ = std::move(b);
    std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(std::string_view var, const std::vector<MultiPoly>& coeffs) {
  MultiPoly result;
  MultiPoly x = variable(var);
  MultiPoly power = MultiPoly(Rational(1));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) result += coeffs[i] * power;
    if (i + 1 < coeffs.size()) power *= x;
  }
  return result;
}

MultiPoly MultiPoly::leading_coefficient(std::string_view var) const {
  auto c = coefficients(var);
  return c.back();
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  auto idx = index_of(var);
  if (!idx || degree(*idx) == 0) return *this;
  if (value.is_constant()) return substitute(var, value.constant_term());
  auto coeffs = coefficients(var);
  MultiPoly result = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) {
    result *= value;
    result += coeffs[i];
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::string_view var, const Rational& value) const {
  return substitute(std::map<std::string, Rational>{{std::string(var), value}});
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Rational>& values) const {
  std::vector<std::pair<size_t, const Rational*>> assigned;
  for (size_t i = 0; i < vars_->size(); ++i) {
    auto it = values.find((*vars_)[i]);
    if (it != values.end()) assigned.emplace_back(i, &it->second);
  }
  if (assigned.empty()) return *this;
  // Cache powers per assigned variable.
  std::vector<std::vector<Rational>> powers(assigned.size());
  for (size_t k = 0; k < assigned.size(); ++k) {
    unsigned d = degree(assigned[k].first);
    powers[k].reserve(d + 1);
    powers[k].emplace_back(1);
    for (unsigned e = 1; e <= d; ++e) powers[k].push_back(powers[k].back() * *assigned[k].second);
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e = m.exponents();
    Rational coeff = c;
    for (size_t k = 0; k < assigned.size(); ++k) {
      unsigned& ek = e[assigned[k].first];
      if (ek) {
        coeff *= powers[k][ek];
        ek = 0;
      }
    }
    if (coeff != 0) terms.emplace_back(Monomial(std::move(e)), std::move(coeff));
  }
  return MultiPoly(vars_, std::move(terms));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  MultiPoly r = substitute(values);
  if (!r.is_constant()) {
    auto s = r.support();
    throw Error(ErrorCode::InvalidArgument, "no value for variable " + s.front());
  }
  return r.constant_term();
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  auto idx = index_of(var);
  MultiPoly r;
  r.vars_ = vars_;
  if (!idx) return r;
  for (const auto& [m, c] : terms_) {
    unsigned d = m[*idx];
    if (d == 0) continue;
    std::vector<unsigned> e = m.exponents();
    e[*idx] = d - 1;
    r.terms_.emplace_back(Monomial(std::move(e)), c * d);
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

MultiPoly MultiPoly::rename(std::string_view from, std::string_view to) const {
  auto idx = index_of(from);
  if (!idx) return *this;
  if (index_of(to)) {
    // Target already present: substitute instead of renaming the slot.
    return substitute(from, variable(to));
  }
  VarTable names = *vars_;
  names[*idx] = std::string(to);
  return MultiPoly(make_table(std::move(names)), terms_);
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  Integer g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return sign(terms_.front().second) < 0 ? Rational(-r) : r;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  return *this / content();
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial(std::vector<unsigned>(vars_->size(), 0));
  Monomial g = terms_.front().first;
  for (const auto& t : terms_) g = g.gcd(t.first);
  return g;
}

MultiPoly MultiPoly::divide_monomial(const Monomial& m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    if (!t.first.divisible_by(m)) throw Error(ErrorCode::InvalidArgument, "monomial does not divide");
    t.first = t.first.divided_by(m);
  }
  return r;  // dividing all terms by one monomial preserves grlex order
}

int MultiPoly::definite_sign() const {
  if (terms_.empty()) return 0;
  int s = sign(terms_.front().second);
  for (const auto& t : terms_)
    if (sign(t.second) != s) return 0;
  return s;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroPoly, "division by zero polynomial");
  MultiPoly p = *this, q = divisor;
  VarTablePtr t = unify(p, q);
  MultiPoly quotient;
  quotient.vars_ = t;
  if (q.size() == 1) {
    const auto& [m, c] = q.terms_[0];
    for (auto& term : p.terms_) {
      if (!term.first.divisible_by(m)) return std::nullopt;
      term.first = term.first.divided_by(m);
      term.second /= c;
    }
    return p;
  }
  for (size_t i = 0; i < t->size(); ++i)
    if (q.degree(i) > p.degree(i)) {
      if (p.is_zero()) return p;
      return std::nullopt;
    }
  const Monomial& lm = q.terms_.front().first;
  const Rational& lc = q.terms_.front().second;
  std::vector<Term> qterms;
  while (!p.is_zero()) {
    const auto& [m, c] = p.terms_.front();
    if (!m.divisible_by(lm)) return std::nullopt;
    Term step{m.divided_by(lm), c / lc};
    std::vector<Term> sub;
    sub.reserve(q.size());
    for (const auto& [m2, c2] : q.terms_) sub.emplace_back(step.first * m2, step.second * c2);
    p.terms_ = merge_terms<true>(p.terms_, sub);
    qterms.push_back(std::move(step));
  }
  quotient.terms_ = std::move(qterms);  // produced in descending order
  return quotient;
}

RatInterval MultiPoly::interval_eval(const std::map<std::string, RatInterval>& box) const {
  std::vector<const RatInterval*> iv(vars_->size(), nullptr);
  for (size_t i = 0; i < vars_->size(); ++i) {
    if (degree(i) == 0) continue;
    auto it = box.find((*vars_)[i]);
    if (it == box.end()) throw Error(ErrorCode::InvalidArgument, "no interval for variable " + (*vars_)[i]);
    iv[i] = &it->second;
  }
  std::vector<std::vector<RatInterval>> powers(vars_->size());
  auto power = [&](size_t i, unsigned e) -> const RatInterval& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(Rational(1));
    while (cache.size() <= e) cache.push_back(iv[i]->pow(static_cast<unsigned>(cache.size())));
    return cache[e];
  };
  RatInterval sum(Rational(0));
  for (const auto& [m, c] : terms_) {
    RatInterval term(c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) term *= power(i, m[i]);
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sign(c) < 0) out << "-";
    } else {
      out << (sign(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.is_one()) {
      out << multistat::to_string(a);
      wrote = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (wrote) out << "*";
      out << (*vars_)[i];
      if (m[i] > 1) out << "^" << m[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace multistat
