#include "multistat/fixtures.hpp"

#include <sstream>

#include "embedded.hpp"
#include "multistat/error.hpp"

namespace multistat {

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::embedded_files())
    if (k.rfind("fixtures/", 0) == 0) out.push_back(k.substr(9));
  return out;
}

std::string_view fixture_text(const std::string& name) {
  const auto& files = detail::embedded_files();
  auto it = files.find("fixtures/" + name);
  if (it == files.end()) throw Error(ErrorCode::InvalidArgument, "no fixture " + name);
  return it->second;
}

std::vector<FixtureEntry> parse_fixture(std::string_view text) {
  std::vector<FixtureEntry> out;
  std::string pending;
  int line = 0, start = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line;
    std::string s = raw.substr(0, raw.find('#'));
    if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (pending.empty()) start = line;
    pending += s + " ";
    size_t semi;
    while ((semi = pending.find(';')) != std::string::npos) {
      std::string entry = pending.substr(0, semi);
      pending = pending.substr(semi + 1);
      if (pending.find_first_not_of(" \t\r") == std::string::npos) pending.clear();
      size_t eq = entry.find('=');
      if (eq == std::string::npos) throw ParseError(ErrorCode::SyntaxError, "expected '='", start, 1);
      auto trim = [](std::string t) {
        size_t a = t.find_first_not_of(" \t\r"), b = t.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
      };
      out.push_back({trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)), start});
      start = line;
    }
  }
  if (!pending.empty()) throw ParseError(ErrorCode::SyntaxError, "missing ';'", start, 1);
  return out;
}

RationalFunction fixture_expression(const std::string& file, const std::string& name) {
  for (const auto& e : parse_fixture(fixture_text(file)))
    if (e.name == name) return parse_expression(e.expression, nullptr, e.line);
  throw Error(ErrorCode::InvalidArgument, "no entry " + name + " in " + file);
}

MultiPoly fixture_polynomial(const std::string& file, const std::string& name) {
  RationalFunction f = fixture_expression(file, name);
  if (!f.is_polynomial()) throw Error(ErrorCode::InvalidArgument, name + " is not a polynomial");
  return f.polynomial();
}

UniPoly break_point_polynomial() {
  std::vector<Rational> c(11);
  for (int i = 0; i <= 10; ++i) c[i] = fixture_polynomial("break_point.txt", "c" + std::to_string(i)).constant_term();
  return UniPoly(c);
}

MultiPoly x1_polynomial() {
  MultiPoly f;
  MultiPoly x1 = MultiPoly::variable("x1");
  for (unsigned i = 0; i <= 6; ++i) f += fixture_polynomial("x1_polynomial.txt", "d" + std::to_string(i)) * x1.pow(i);
  return f;
}

FixedPointTable fixed_point_table() {
  FixedPointTable t;
  std::istringstream in{std::string(fixture_text("fixed_points.csv"))};
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string f; std::getline(ss, f, ',');) {
      if (!f.empty() && f.back() == '\r') f.pop_back();
      out.push_back(f);
    }
    return out;
  };
  std::string line;
  std::getline(in, line);
  auto header = split(line);
  t.columns.assign(header.begin() + 1, header.end());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line);
    if (f.size() != header.size()) throw Error(ErrorCode::SyntaxError, "fixed_points.csv: ragged row " + f[0]);
    t.vars.push_back(f[0]);
    for (size_t i = 1; i < f.size(); ++i) t.values[f[0]].push_back(parse_rational(f[i]));
  }
  return t;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::map<std::string, std::uint64_t> fixture_checksums() {
  std::map<std::string, std::uint64_t> out;
  for (const auto& n : fixture_names()) out[n] = fnv1a64(fixture_text(n));
  return out;
}

}  // namespace multistat
