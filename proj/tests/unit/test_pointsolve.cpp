#include <gtest/gtest.h>

#include "multistat/error.hpp"
#include "multistat/fixtures.hpp"
#include "multistat/model.hpp"
#include "multistat/pointsolve.hpp"

using namespace multistat;

namespace {

ReducedSystem plain(const std::vector<const char*>& eqs, const std::vector<std::string>& vars,
                    const std::vector<std::string>& params) {
  std::vector<SystemEquation> sys;
  for (const char* e : eqs) sys.push_back({parse_polynomial(e), false});
  return gauss_eliminate(sys, vars, params, vars);
}

bool agrees(const Rational& got, const Rational& want, int digits) {
  return to_decimal(got, digits) == to_decimal(want, digits);
}

}  // namespace

TEST(PointSolve, SmallSystem) {
  auto rs = plain({"x - y", "x*y - a"}, {"x", "y"}, {"a"});
  auto recs = solve_at_point(rs, {{"a", Rational(4)}});
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].enclosures.at("x").contains(Rational(2)));
  EXPECT_TRUE(recs[0].enclosures.at("y").contains(Rational(2)));
  EXPECT_EQ(recs[0].positivity, RecordStatus::AllPositive);
}

TEST(PointSolve, NegativeSolutionsRejected) {
  auto rs = plain({"x + y - 1", "x*y + 2"}, {"x", "y"}, {});
  EXPECT_TRUE(solve_at_point(rs, {}).empty());
}

TEST(PointSolve, VanishingResultant) {
  auto rs = plain({"x - y", "2*x - 2*y"}, {"x", "y"}, {});
  try {
    solve_at_point(rs, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResultantVanishes);
  }
  EXPECT_EQ(solve_point(rs, {}).status, PointStatus::Degenerate);
}

TEST(PointSolve, TableOneReproduced) {
  auto m = load_model("model26");
  auto rs = reduce_model(m);
  auto t = fixed_point_table();
  auto one = solve_at_point(rs, {{"k17", 100}, {"k18", 50}, {"k19", 200}});
  auto three = solve_at_point(rs, {{"k17", 100}, {"k18", 50}, {"k19", 500}});
  ASSERT_EQ(one.size(), 1u);
  ASSERT_EQ(three.size(), 3u);
  std::vector<const FixedPointRecord*> all{&one[0], &three[0], &three[1], &three[2]};
  for (size_t col = 0; col < 4; ++col)
    for (const auto& v : t.vars)
      EXPECT_TRUE(agrees(all[col]->enclosures.at(v).midpoint(), t.values.at(v)[col], 4))
          << v << " column " << t.columns[col];
}

TEST(PointSolve, EnclosureWidthAndRefinement) {
  auto m = load_model("model26");
  auto rs = reduce_model(m);
  SolveOptions opts;
  opts.tol = Rational(1, 1000000);
  auto recs = solve_at_point(rs, {{"k17", 100}, {"k18", 50}, {"k19", 200}}, opts);
  ASSERT_EQ(recs.size(), 1u);
  for (const auto& [v, iv] : recs[0].enclosures) EXPECT_LE(iv.width(), opts.tol) << v;
  auto fine = recs[0].refine(Rational(1, 100000000));
  EXPECT_TRUE(recs[0].enclosures.at("x1").contains(fine.at("x1")));
}

TEST(PointSolve, EliminationChoiceDoesNotMatter) {
  auto m = load_model("model26");
  auto rs = reduce_model(m);
  for (const char* v : {"x4", "x5"}) {
    SolveOptions opts;
    opts.eliminate = v;
    EXPECT_EQ(solve_point(rs, {{"k17", 100}, {"k18", 50}, {"k19", 500}}, opts).count(), 3u) << v;
  }
}

TEST(Sampling, RangesAndGrid) {
  auto r = parse_range("k19=200:300:50");
  EXPECT_EQ(r.param, "k19");
  EXPECT_EQ(r.values(), (std::vector<Rational>{200, 250, 300}));
  EXPECT_THROW(parse_range("k19=1:2"), Error);
  auto rs = plain({"x - y", "x*y - a"}, {"x", "y"}, {"a", "b"});
  auto grid = grid_sample(rs, {parse_range("a=1:3:1"), parse_range("b=0:1:1")}, {}, {}, 2);
  ASSERT_EQ(grid.entries.size(), 6u);
  EXPECT_EQ(grid.params, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(grid.entries[0].point, (std::vector<Rational>{1, 0}));
  EXPECT_EQ(grid.entries[1].point, (std::vector<Rational>{1, 1}));
  for (const auto& e : grid.entries) EXPECT_EQ(e.count, 1u);
}
