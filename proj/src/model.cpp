#include "multistat/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "embedded.hpp"
#include "multistat/error.hpp"

namespace multistat {

MultiPoly RationalFunction::polynomial() const {
  if (!is_polynomial()) throw Error(ErrorCode::InvalidArgument, "not a polynomial");
  return num / den.constant_term();
}

RatInterval RationalFunction::interval_eval(const std::map<std::string, RatInterval>& box) const {
  return num.interval_eval(box).divided_by(den.interval_eval(box));
}

namespace {

RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
  MultiPoly bn = subtract ? -b.num : b.num;
  if (a.den == b.den) return {a.num + bn, a.den};
  if (b.den.is_constant()) return {a.num + bn * a.den / b.den.constant_term(), a.den};
  if (a.den.is_constant()) return {a.num * b.den / a.den.constant_term() + bn, b.den};
  return {a.num * b.den + bn * a.den, a.den * b.den};
}

RationalFunction normalized(RationalFunction f) {
  if (f.den.is_constant()) {
    f.num /= f.den.constant_term();
    f.den = MultiPoly(1);
  }
  return f;
}

class Parser {
 public:
  Parser(std::string_view text, const VarTable* declared, int line)
      : s_(text), declared_(declared), line_(line) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_space();
    if (pos_ < s_.size()) fail(ErrorCode::SyntaxError, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return normalized(r);
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    int line = line_;
    size_t line_start = 0;
    for (size_t i = 0; i < pos_ && i < s_.size(); ++i)
      if (s_[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    throw ParseError(code, what, line, static_cast<int>(pos_ - line_start) + 1);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        RationalFunction r = unary();
        acc = {acc.num * r.num, acc.den * r.den};
      } else if (accept('/')) {
        size_t at = pos_;
        RationalFunction r = unary();
        if (r.num.is_zero()) {
          pos_ = at;
          fail(ErrorCode::SyntaxError, "division by zero");
        }
        acc = {acc.num * r.den, acc.den * r.num};
      } else {
        skip_space();
        if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                 s_[pos_] == '_' || s_[pos_] == '.'))
          fail(ErrorCode::SyntaxError, "expected operator (implicit multiplication is not allowed)");
        return normalized(acc);
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) {
      RationalFunction r = unary();
      return {-r.num, r.den};
    }
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    skip_space();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(ErrorCode::SyntaxError, "expected nonnegative integer exponent");
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6) fail(ErrorCode::SyntaxError, "exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(digits));
    return {base.num.pow(e), base.den.pow(e)};
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= s_.size()) fail(ErrorCode::SyntaxError, "unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (declared_ && std::find(declared_->begin(), declared_->end(), name) == declared_->end()) {
        pos_ = start;
        fail(ErrorCode::UndeclaredSymbol, "undeclared symbol '" + name + "'");
      }
      return {MultiPoly::variable(name), MultiPoly(1)};
    }
    fail(ErrorCode::SyntaxError, "unexpected '" + std::string(1, c) + "'");
  }

  RationalFunction number() {
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      size_t k = pos_ + 1;
      if (k < s_.size() && (s_[k] == '+' || s_[k] == '-')) ++k;
      if (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) {
        pos_ = k;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    try {
      return {MultiPoly(parse_rational(s_.substr(start, pos_ - start))), MultiPoly(1)};
    } catch (const Error&) {
      pos_ = start;
      fail(ErrorCode::SyntaxError, "malformed number");
    }
  }

  std::string_view s_;
  const VarTable* declared_;
  int line_;
  size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

RationalFunction parse_expression(std::string_view text, const VarTable* declared, int line) {
  return Parser(text, declared, line).parse();
}

MultiPoly parse_polynomial(std::string_view text, const VarTable* declared, int line) {
  RationalFunction f = parse_expression(text, declared, line);
  if (!f.is_polynomial()) throw ParseError(ErrorCode::SyntaxError, "division by a non-constant", line, 1);
  return f.polynomial();
}

VarTablePtr ModelFile::table() const {
  VarTable t = vars;
  t.insert(t.end(), params.begin(), params.end());
  return make_table(std::move(t));
}

std::vector<MultiPoly> ModelFile::bound_odes() const {
  std::vector<MultiPoly> out;
  out.reserve(odes.size());
  for (const auto& f : odes) out.push_back(f.substitute(values));
  return out;
}

std::vector<std::string> ModelFile::free_params() const {
  std::vector<std::string> out;
  for (const auto& p : params)
    if (!values.count(p)) out.push_back(p);
  return out;
}

ModelFile parse_model(std::string_view text) {
  ModelFile m;
  std::set<std::string> declared;
  std::map<std::string, MultiPoly> odes;
  bool have_vars = false, have_params = false;
  VarTable symbols;

  auto declare = [&](std::string_view name, int line, int col) {
    if (!is_identifier(name))
      throw ParseError(ErrorCode::SyntaxError, "bad identifier '" + std::string(name) + "'", line, col);
    if (!declared.insert(std::string(name)).second)
      throw ParseError(ErrorCode::DuplicateDeclaration, "'" + std::string(name) + "' declared twice", line, col);
    symbols.emplace_back(name);
  };

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    size_t line_offset = pos;
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    int indent = static_cast<int>(line.data() - (text.data() + line_offset));

    size_t sp = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    int rest_col = static_cast<int>(rest.data() - (text.data() + line_offset)) + 1;
    if (rest.empty()) rest_col = indent + static_cast<int>(keyword.size()) + 1;

    auto words = [&]() {
      std::vector<std::pair<std::string_view, int>> out;
      size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        size_t j = i;
        while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j]))) ++j;
        if (j > i) out.emplace_back(rest.substr(i, j - i), rest_col + static_cast<int>(i));
        i = j;
      }
      return out;
    };
    auto split_eq = [&](std::string_view& lhs, std::string_view& rhs, int& rhs_col) {
      size_t eq = rest.find('=');
      if (eq == std::string_view::npos)
        throw ParseError(ErrorCode::SyntaxError, "expected '='", line_no, rest_col + static_cast<int>(rest.size()));
      lhs = trim(rest.substr(0, eq));
      rhs = rest.substr(eq + 1);
      rhs_col = rest_col + static_cast<int>(eq) + 1;
    };

    if (keyword == "model") {
      if (!m.name.empty()) throw ParseError(ErrorCode::DuplicateDeclaration, "model named twice", line_no, indent + 1);
      if (!is_identifier(rest)) throw ParseError(ErrorCode::SyntaxError, "expected model name", line_no, rest_col);
      m.name = std::string(rest);
    } else if (keyword == "vars" || keyword == "params") {
      bool is_vars = keyword == "vars";
      if (is_vars ? have_params : false)
        throw ParseError(ErrorCode::SyntaxError, "vars must precede params", line_no, indent + 1);
      (is_vars ? have_vars : have_params) = true;
      for (auto [w, col] : words()) {
        declare(w, line_no, col);
        (is_vars ? m.vars : m.params).emplace_back(w);
      }
    } else if (keyword == "ode") {
      std::string_view lhs, rhs;
      int rhs_col;
      split_eq(lhs, rhs, rhs_col);
      if (std::find(m.vars.begin(), m.vars.end(), lhs) == m.vars.end())
        throw ParseError(ErrorCode::UndeclaredSymbol, "'" + std::string(lhs) + "' is not a declared variable",
                         line_no, rest_col);
      if (odes.count(std::string(lhs)))
        throw ParseError(ErrorCode::DuplicateDeclaration, "second ode for '" + std::string(lhs) + "'", line_no,
                         rest_col);
      try {
        odes.emplace(std::string(lhs), parse_polynomial(rhs, &symbols, line_no));
      } catch (const ParseError& e) {
        throw ParseError(e.code(), e.message(),
                         line_no, rhs_col + e.column() - 1);
      }
    } else if (keyword == "law") {
      std::string_view lhs, rhs;
      int rhs_col;
      split_eq(lhs, rhs, rhs_col);
      std::string_view param = trim(rhs);
      if (std::find(m.params.begin(), m.params.end(), param) == m.params.end())
        throw ParseError(ErrorCode::UndeclaredSymbol, "'" + std::string(param) + "' is not a declared parameter",
                         line_no, rhs_col + 1);
      MultiPoly form;
      try {
        form = parse_polynomial(lhs, &m.vars, line_no);
      } catch (const ParseError& e) {
        throw ParseError(e.code(), e.message(),
                         line_no, rest_col + e.column() - 1);
      }
      ConservationLaw law;
      law.constant = std::string(param);
      for (const auto& v : m.vars) {
        auto cs = form.coefficients(v);
        law.coefficients.push_back(cs.size() > 1 ? cs[1].constant_term() : Rational(0));
      }
      if (form.total_degree() != 1 || form.constant_term() != 0 || law.linear_form(m.vars) != form)
        throw ParseError(ErrorCode::SyntaxError, "law must be linear and homogeneous in the variables", line_no,
                         rest_col);
      m.laws.push_back(std::move(law));
    } else if (keyword == "value") {
      std::string_view lhs, rhs;
      int rhs_col;
      split_eq(lhs, rhs, rhs_col);
      if (std::find(m.params.begin(), m.params.end(), lhs) == m.params.end())
        throw ParseError(ErrorCode::UndeclaredSymbol, "'" + std::string(lhs) + "' is not a declared parameter",
                         line_no, rest_col);
      if (m.values.count(std::string(lhs)))
        throw ParseError(ErrorCode::DuplicateDeclaration, "second value for '" + std::string(lhs) + "'", line_no,
                         rest_col);
      try {
        m.values.emplace(std::string(lhs), parse_rational(rhs));
      } catch (const Error&) {
        throw ParseError(ErrorCode::SyntaxError, "malformed number", line_no, rhs_col + 1);
      }
    } else {
      throw ParseError(ErrorCode::SyntaxError, "unknown statement '" + std::string(keyword) + "'", line_no,
                       indent + 1);
    }
  }

  if (m.name.empty()) throw ParseError(ErrorCode::SyntaxError, "missing model statement", 1, 1);
  if (!have_vars) throw ParseError(ErrorCode::SyntaxError, "missing vars statement", 1, 1);
  VarTablePtr t = m.table();
  for (const auto& v : m.vars) {
    auto it = odes.find(v);
    if (it == odes.end()) throw ParseError(ErrorCode::SyntaxError, "no ode for '" + v + "'", line_no, 1);
    m.odes.push_back(it->second.over(t));
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelFile load_model(const std::string& name_or_path) {
  const auto& files = detail::embedded_files();
  if (auto it = files.find("models/" + name_or_path + ".model"); it != files.end())
    return parse_model(it->second);
  return parse_model(read_file(name_or_path));
}

}  // namespace multistat
