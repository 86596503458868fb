#include <gtest/gtest.h>

#include "multistat/cad2d.hpp"
#include "multistat/error.hpp"
#include "multistat/fixtures.hpp"
#include "multistat/model.hpp"
#include "multistat/polyalg.hpp"

using namespace multistat;

TEST(Projection, QuadraticFamily) {
  auto ps = project(parse_polynomial("x^2 + b*x + c"), "x", {}, {}, ProjectionOperator::Full);
  ASSERT_EQ(ps.size(), 3u);
  for (const char* want : {"b^2 - 4*c", "b", "c"}) {
    bool found = false;
    for (const auto& p : ps) found = found || proportional(p, parse_polynomial(want));
    EXPECT_TRUE(found) << want;
  }
}

TEST(OpenCad, LineAndParabola) {
  auto line = build_open_cad({parse_polynomial("k17 - 1")}, "k17", "k19", 1);
  EXPECT_EQ(line.cells.size(), 2u);
  auto parabola = build_open_cad({parse_polynomial("k19^2 - k17")}, "k17", "k19", 1);
  ASSERT_EQ(parabola.base_samples.size(), 2u);
  EXPECT_EQ(parabola.cells.size(), 4u);
  EXPECT_EQ(stack_at(parabola, Rational(-1)).size(), 0u);
  EXPECT_EQ(stack_at(parabola, Rational(4)).size(), 2u);
  auto* c = containing_cell(parabola, Rational(4), Rational(0));
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->stack_index, 1u);
  EXPECT_EQ(containing_cell(parabola, Rational(4), Rational(2)), nullptr);
}

TEST(LinearElimination, TrivialSystem) {
  std::vector<SystemEquation> sys{{parse_polynomial("2*x - y"), false}, {parse_polynomial("y^2 - 4"), false}};
  auto rs = gauss_eliminate(sys, {"x", "y"}, {}, {"x", "y"});
  auto cps = eliminate_linear(rs, {}, "x");
  EXPECT_TRUE(proportional(cps.core, parse_polynomial("y^2 - 4")));
  EXPECT_EQ(cps.core_var, "y");
}

class Model26Core : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    rs_ = new ReducedSystem(reduce_model(load_model("model26")));
    cps_ = new CorePolynomialSystem(eliminate_linear(*rs_, {{"k18", 50}}, "x4"));
  }
  static void TearDownTestSuite() {
    delete cps_;
    delete rs_;
  }
  static ReducedSystem* rs_;
  static CorePolynomialSystem* cps_;
};
ReducedSystem* Model26Core::rs_ = nullptr;
CorePolynomialSystem* Model26Core::cps_ = nullptr;

TEST_F(Model26Core, MatchesFixtures) {
  EXPECT_TRUE(proportional(cps_->core, fixture_polynomial("reduced_pair.txt", "C2")));
  EXPECT_TRUE(proportional(cps_->linear_equation, fixture_polynomial("reduced_pair.txt", "C1")));
  EXPECT_EQ(cps_->core.degree("x5"), 6u);
  MultiPoly lead = cps_->core.coefficients("x5").back();
  ASSERT_TRUE(lead.is_constant());
  EXPECT_EQ(abs(lead.constant_term()), Rational(Integer("487656080889027413")));
}

TEST_F(Model26Core, ProjectionDegrees) {
  auto full = project(cps_->core, "x5", {MultiPoly::variable("x5")}, {"k17", "k19"}, ProjectionOperator::Full);
  unsigned top = 0;
  for (const auto& p : full) top = std::max(top, p.total_degree());
  EXPECT_EQ(top, 14u);
  EXPECT_EQ(full.size(), 10u);
  EXPECT_EQ(discriminant(cps_->core, "x5").total_degree(), 24u);
  auto open = project(cps_->core, "x5", {MultiPoly::variable("x5")}, {"k17", "k19"});
  EXPECT_LT(open.size(), full.size());
  auto b = boundary_factor(cps_->core, "x5", "k17", 14, "k19", 10);
  ASSERT_TRUE(b.has_value());
  auto d1 = fixture_polynomial("reduced_pair.txt", "D1");
  bool found = false;
  for (const auto& p : open) found = found || proportional(p, d1);
  EXPECT_TRUE(found);
}

TEST_F(Model26Core, PointClassification) {
  auto multi = classify_point(*cps_, rs_->trace, "k17", Rational(100), "k19", Rational(500));
  EXPECT_EQ(multi.classification, CellClass::Multistationary);
  EXPECT_EQ(multi.count, 3u);
  auto one = classify_point(*cps_, rs_->trace, "k17", Rational(100), "k19", Rational(200));
  EXPECT_EQ(one.classification, CellClass::OneSolution);
  auto out = classify_point(*cps_, rs_->trace, "k17", Rational(-1), "k19", Rational(200));
  EXPECT_EQ(out.classification, CellClass::NotInQuadrant);
}

TEST_F(Model26Core, BoundaryProbe) {
  auto b = boundary_factor(cps_->core, "x5", "k17", 14, "k19", 10);
  ASSERT_TRUE(b.has_value());
  Probe p{{{"k17", 100}, {"k19", 409}}, {{"k17", 100}, {"k19", 410}}, true};
  auto r = boundary_conjecture_check(*rs_, *b, {p}, {{"k18", 50}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].count_a, 1u);
  EXPECT_EQ(r[0].count_b, 3u);
  EXPECT_TRUE(r[0].passed);
}
