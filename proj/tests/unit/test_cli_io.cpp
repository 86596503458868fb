#include <gtest/gtest.h>

#include <random>

#include "multistat/error.hpp"
#include "multistat/fixtures.hpp"
#include "multistat/model.hpp"
#include "multistat/serialize.hpp"

using namespace multistat;

namespace {

size_t occurrences(const std::string& s, const std::string& what) {
  size_t n = 0;
  for (size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

ErrorCode code_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(ModelParser, BundledModels) {
  auto m26 = load_model("model26");
  EXPECT_EQ(m26.odes.size(), 11u);
  EXPECT_EQ(m26.params.size(), 19u);
  EXPECT_EQ(m26.free_params(), (std::vector<std::string>{"k17", "k18", "k19"}));
  auto m28 = load_model("model28");
  EXPECT_EQ(m28.odes.size(), 16u);
  EXPECT_EQ(m28.params.size(), 30u);
}

TEST(ModelParser, ExactDecimalsAndLaws) {
  auto m = parse_model(
      "model tiny\nvars x y\nparams a b\node x = -a*x + 0.02*y\node y = a*x - 0.02*y\nlaw x + y = b\n"
      "value a = 1.5\n");
  EXPECT_EQ(m.values.at("a"), Rational(3, 2));
  EXPECT_EQ(m.odes[0], parse_polynomial("-a*x + y/50"));
  ASSERT_EQ(m.laws.size(), 1u);
  EXPECT_EQ(m.laws[0].constant, "b");
}

TEST(ModelParser, Errors) {
  EXPECT_EQ(code_of("model t\nvars x\nparams a\node x = 2 x\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("model t\nvars x\nparams a\node x = z\n"), ErrorCode::UndeclaredSymbol);
  EXPECT_EQ(code_of("model t\nvars x x\nparams a\node x = a\n"), ErrorCode::DuplicateDeclaration);
  try {
    parse_model("model t\nvars x\nparams a\node x = a +* x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_GT(e.column(), 9);
  }
}

TEST(Expression, RationalFunctions) {
  auto f = parse_expression("(x^2 - 1)/(x - 1)");
  EXPECT_FALSE(f.is_polynomial());
  EXPECT_EQ(f.interval_eval({{"x", RatInterval(Rational(3))}}), RatInterval(Rational(4)));
  EXPECT_THROW(parse_polynomial("1/x"), Error);
}

TEST(CanonicalText, Examples) {
  EXPECT_EQ(canonical_text(parse_polynomial("x^2 - 1")), "x^2 - 1");
  EXPECT_EQ(canonical_text(parse_polynomial("-2*x + 2")), "x - 1");
  EXPECT_EQ(canonical_text(parse_polynomial("x10 + x9 + 2*x2")), "2*x2 + x9 + x10");
  EXPECT_EQ(canonical_text(MultiPoly()), "0");
}

TEST(CanonicalText, RoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-50, 50), e(0, 3), den(1, 6), terms(1, 6);
  const char* names[] = {"x", "y", "k17"};
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoly p;
    for (int t = terms(rng); t > 0; --t) {
      Rational q(c(rng), den(rng));
      q.canonicalize();
      MultiPoly m(q);
      for (const char* v : names) m *= MultiPoly::variable(v).pow(e(rng));
      p += m;
    }
    if (p.is_zero()) continue;
    MultiPoly q = parse_polynomial(canonical_text(p));
    EXPECT_EQ(q, p.over(q.table()).primitive_part()) << canonical_text(p);
    EXPECT_EQ(canonical_text(q), canonical_text(p));
  }
}

TEST(Serialize, CsvAndJson) {
  GridResult empty{{"k19", "k17"}, {}};
  EXPECT_EQ(grid_csv(empty), "k19,k17,count,status,seconds\n");
  GridResult g{{"a"}, {GridEntry{{Rational(1, 3)}, 1, PointStatus::Ok, 0.5}}};
  EXPECT_EQ(grid_csv(g), "a,count,status,seconds\n1/3,1,ok,0.500000\n");
  EXPECT_NE(grid_json(g).find("\"1/3\""), std::string::npos);
  EXPECT_EQ(rational_json(Rational(4)), "4/1");
  EXPECT_EQ(rational_json(Rational(-1, 50)), "-1/50");
}

TEST(Serialize, ReducedSystemJson) {
  auto rs = reduce_model(load_model("model26"));
  auto j = reduced_system_json("model26", rs);
  EXPECT_NE(j.find("\"variables\""), std::string::npos);
  EXPECT_NE(j.find("1062444*k18*x4^2*x5"), std::string::npos);
}

TEST(Svg, Scatter) {
  auto empty = scatter_svg({}, PlotFrame{});
  EXPECT_NE(empty.find("<svg"), std::string::npos);
  EXPECT_NE(empty.find("</svg>"), std::string::npos);
  EXPECT_EQ(occurrences(empty, "class=\"disc\""), 0u);
  auto two = scatter_svg({{0, 0, 1}, {1, 1, 3}}, PlotFrame{"a", "b", 0, 1, 0, 1});
  EXPECT_EQ(occurrences(two, "class=\"disc\""), 1u);
  EXPECT_EQ(occurrences(two, "class=\"box\""), 1u);
  EXPECT_EQ(occurrences(two, "class=\"diamond\""), 0u);
}

TEST(Svg, RegionCells) {
  auto cad = build_open_cad({parse_polynomial("k17 - 1"), parse_polynomial("k19 - 1")}, "k17", "k19", 1);
  ASSERT_EQ(cad.cells.size(), 4u);
  auto svg = region_svg(cad, PlotFrame{"k17", "k19", 0, 2, 0, 2}, 20);
  EXPECT_EQ(occurrences(svg, "<g class=\"cell"), 4u);
}

TEST(Fixtures, EntriesAndTable) {
  auto names = fixture_names();
  EXPECT_EQ(names.size(), 7u);
  auto entries = parse_fixture("a = 1 +\n 2; # note\nb = x;\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].name, "a");
  EXPECT_EQ(entries[1].line, 3);
  EXPECT_THROW(parse_fixture("a = 1"), Error);
  auto t = fixed_point_table();
  EXPECT_EQ(t.columns.size(), 4u);
  EXPECT_EQ(t.vars.size(), 11u);
  EXPECT_EQ(t.values.at("x1")[0], parse_rational("90.6512"));
  EXPECT_EQ(x1_polynomial().degree("x1"), 6u);
  EXPECT_EQ(fixture_expression("solution_formulae.txt", "x4").is_polynomial(), false);
}

TEST(Fixtures, Checksums) {
  EXPECT_EQ(fnv1a64(""), 14695981039346656037ull);
  EXPECT_EQ(fnv1a64("a"), 12638187200555641996ull);
  auto sums = fixture_checksums();
  const std::map<std::string, std::uint64_t> frozen = {
#include "fixture_checksums.inc"
  };
  EXPECT_EQ(sums, frozen);
}
