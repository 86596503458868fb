#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "multistat/model.hpp"
#include "multistat/unipoly.hpp"

namespace multistat {

struct FixtureEntry {
  std::string name;
  std::string expression;
  int line = 0;
};

/// Bundled fixture files, e.g. "break_point.txt", "fixed_points.csv".
std::vector<std::string> fixture_names();
/// Throws InvalidArgument for an unknown name.
std::string_view fixture_text(const std::string& name);

/// `name = expr;` entries, expressions may span lines, `#` comments.
std::vector<FixtureEntry> parse_fixture(std::string_view text);
RationalFunction fixture_expression(const std::string& file, const std::string& name);
/// Polynomial entry; throws InvalidArgument if it has a denominator.
MultiPoly fixture_polynomial(const std::string& file, const std::string& name);

/// Sum of c_i k19^i from break_point.txt.
UniPoly break_point_polynomial();
/// Sum of d_i(k19) x1^i from x1_polynomial.txt.
MultiPoly x1_polynomial();

struct FixedPointTable {
  std::vector<std::string> columns;
  std::vector<std::string> vars;
  /// vars -> one value per column.
  std::map<std::string, std::vector<Rational>> values;
};
FixedPointTable fixed_point_table();

std::uint64_t fnv1a64(std::string_view bytes);
std::map<std::string, std::uint64_t> fixture_checksums();

}  // namespace multistat
