#include <gtest/gtest.h>

#include "multistat/elimination.hpp"
#include "multistat/error.hpp"
#include "multistat/fixtures.hpp"
#include "multistat/model.hpp"
#include "multistat/polyalg.hpp"

using namespace multistat;

namespace {

std::vector<MultiPoly> polys(const std::vector<SystemEquation>& s) {
  std::vector<MultiPoly> out;
  for (const auto& e : s) out.push_back(e.poly);
  return out;
}

bool matches_up_to_permutation(const std::vector<MultiPoly>& got, const std::vector<MultiPoly>& want) {
  if (got.size() != 2 || want.size() != 2) return false;
  return (proportional(got[0], want[0]) && proportional(got[1], want[1])) ||
         (proportional(got[0], want[1]) && proportional(got[1], want[0]));
}

}  // namespace

TEST(Graph, SmallGraphs) {
  std::vector<MultiPoly> tri{parse_polynomial("a*b + b*c + a*c")};
  auto g = build_graph(tri, {"a", "b", "c"});
  EXPECT_EQ(g.edges.size(), 3u);
  auto cover = min_vertex_cover(g);
  EXPECT_EQ(cover, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(brute_force_cover_size(g), 2u);
  EXPECT_FALSE(is_vertex_cover(g, {"a"}));

  auto loop = build_graph({parse_polynomial("a^2 + b")}, {"a", "b"});
  EXPECT_TRUE(loop.self_loops.count("a"));
  EXPECT_EQ(min_vertex_cover(loop), (std::vector<std::string>{"a"}));
}

TEST(Graph, BundledModelCovers) {
  struct Case {
    const char* model;
    std::vector<std::string> cover;
  };
  for (const auto& c : {Case{"model26", {"x4", "x5"}}, Case{"model28", {"x5", "x6"}}}) {
    auto m = load_model(c.model);
    auto g = build_graph(polys(steady_state_system(m)), m.vars);
    auto cover = min_vertex_cover(g);
    EXPECT_EQ(cover, c.cover) << c.model;
    EXPECT_TRUE(is_vertex_cover(g, cover));
    EXPECT_EQ(brute_force_cover_size(g), cover.size());
  }
}

TEST(Elimination, ReducedSystemsMatchFixtures) {
  struct Case {
    const char* model;
    const char* fixture;
    std::vector<std::string> vars;
  };
  for (const auto& c : {Case{"model26", "reduced26.txt", {"x4", "x5"}}, Case{"model28", "reduced28.txt", {"x5", "x6"}}}) {
    auto m = load_model(c.model);
    auto want = std::vector<MultiPoly>{fixture_polynomial(c.fixture, "E1"), fixture_polynomial(c.fixture, "E2")};
    for (auto tie : {TieBreak::Forward, TieBreak::Reverse}) {
      auto rs = reduce_model(m, tie);
      EXPECT_EQ(rs.positive_variables, c.vars);
      if (tie == TieBreak::Forward) {
        EXPECT_TRUE(matches_up_to_permutation(rs.equations, want)) << c.model;
      }
      EXPECT_EQ(rs.trace.size(), m.vars.size() - 2);
    }
  }
}

TEST(Elimination, LinearChain) {
  std::vector<SystemEquation> sys{{parse_polynomial("a*x - y"), false}, {parse_polynomial("y^2 - b*x*y + 1"), false}};
  auto rs = gauss_eliminate(sys, {"x", "y"}, {"a", "b"}, {"y"});
  ASSERT_EQ(rs.trace.size(), 1u);
  EXPECT_EQ(rs.trace[0].variable, "x");
  ASSERT_EQ(rs.equations.size(), 1u);
  EXPECT_TRUE(proportional(rs.equations[0], parse_polynomial("a*y^2 - b*y^2 + a")));
}

TEST(Elimination, Errors) {
  std::vector<SystemEquation> stuck{{parse_polynomial("x^2 - y"), false}, {parse_polynomial("x^2*y - 1"), false}};
  try {
    gauss_eliminate(stuck, {"x", "y"}, {}, {"y"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StuckNoLinearPivot);
  }
  std::vector<SystemEquation> split{{parse_polynomial("(a - b)*x - 1"), false}};
  try {
    gauss_eliminate(split, {"x"}, {"a", "b"}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CaseSplitRequired);
  }
}

TEST(BackSubstitution, PointAndPositivity) {
  std::vector<SystemEquation> sys{{parse_polynomial("2*x - y"), false}, {parse_polynomial("y^2 - 4"), false}};
  auto rs = gauss_eliminate(sys, {"x", "y"}, {}, {"y"});
  auto bs = back_substitute(rs.trace, {{"y", RatInterval(Rational(2))}});
  EXPECT_EQ(bs.values.at("x"), RatInterval(Rational(1)));
  EXPECT_EQ(bs.positivity.at("x"), Positivity::Positive);
  EXPECT_EQ(positivity_of(RatInterval(Rational(-1), Rational(1))), Positivity::Undetermined);
  EXPECT_EQ(positivity_of(RatInterval(Rational(-2), Rational(0))), Positivity::Nonpositive);
}

TEST(BackSubstitution, StraddlingDenominator) {
  std::vector<SystemEquation> sys{{parse_polynomial("y*x - 1"), false}};
  auto rs = gauss_eliminate(sys, {"x", "y"}, {}, {"y"});
  EXPECT_THROW(back_substitute(rs.trace, {{"y", RatInterval(Rational(-1), Rational(1))}}), Error);
}
