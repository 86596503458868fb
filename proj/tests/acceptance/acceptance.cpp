#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "multistat/cad2d.hpp"
#include "multistat/fixtures.hpp"
#include "multistat/model.hpp"
#include "multistat/polyalg.hpp"
#include "multistat/stability.hpp"
#include "oracles.hpp"

using namespace multistat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::map<std::string, Rational> kFixedPointTableLow{{"k17", 100}, {"k18", 50}, {"k19", 200}};
const std::map<std::string, Rational> kFixedPointTableHigh{{"k17", 100}, {"k18", 50}, {"k19", 500}};

const ModelFile& model26() {
  static ModelFile m = load_model("model26");
  return m;
}
const ReducedSystem& reduced26() {
  static ReducedSystem rs = reduce_model(model26());
  return rs;
}

unsigned count_at(const std::map<std::string, Rational>& v) { return solve_point(reduced26(), v).count(); }

std::map<std::string, Rational> with(std::map<std::string, Rational> v, const std::string& k, const Rational& q) {
  v[k] = q;
  return v;
}

bool same_digits(const Rational& a, const Rational& b, int digits) { return to_decimal(a, digits) == to_decimal(b, digits); }

GridResult& reference_grid() {
  static GridResult g = grid_sample(reduced26(), {parse_range("k19=200:1000:50"), parse_range("k17=80:200:10")},
                                    {{"k18", 50}}, {}, 0);
  return g;
}

Outcome reduction() {
  std::ostringstream d;
  bool ok = true;
  for (auto [name, fixture] : {std::pair{"model26", "reduced26.txt"}, std::pair{"model28", "reduced28.txt"}}) {
    auto t0 = Clock::now();
    auto rs = reduce_model(load_model(name));
    double s = since(t0);
    MultiPoly e1 = fixture_polynomial(fixture, "E1"), e2 = fixture_polynomial(fixture, "E2");
    bool match = rs.equations.size() == 2 &&
                 ((proportional(rs.equations[0], e1) && proportional(rs.equations[1], e2)) ||
                  (proportional(rs.equations[0], e2) && proportional(rs.equations[1], e1)));
    ok = ok && match && s < 5;
    d << name << (match ? " matches" : " MISMATCH") << " in " << s << "s; ";
  }
  return {ok, d.str()};
}

Outcome covers() {
  std::ostringstream d;
  bool ok = true;
  for (auto [name, want] : {std::pair<const char*, std::vector<std::string>>{"model26", {"x4", "x5"}},
                            std::pair<const char*, std::vector<std::string>>{"model28", {"x5", "x6"}}}) {
    auto m = load_model(name);
    std::vector<MultiPoly> sys;
    for (const auto& e : steady_state_system(m)) sys.push_back(e.poly);
    auto t0 = Clock::now();
    auto g = build_graph(sys, m.vars);
    auto cover = min_vertex_cover(g);
    size_t brute = brute_force_cover_size(g);
    double s = since(t0);
    bool good = cover == want && is_vertex_cover(g, cover) && brute == cover.size() && s < 1;
    ok = ok && good;
    d << name << " {";
    for (size_t i = 0; i < cover.size(); ++i) d << (i ? "," : "") << cover[i];
    d << "} brute-force min " << brute << "; ";
  }
  return {ok, d.str()};
}

Outcome table_one() {
  auto t0 = Clock::now();
  auto low = solve_at_point(reduced26(), kFixedPointTableLow);
  auto high = solve_at_point(reduced26(), kFixedPointTableHigh);
  double s = since(t0);
  if (low.size() != 1 || high.size() != 3) return {false, "counts " + std::to_string(low.size()) + "/" + std::to_string(high.size())};
  auto t = fixed_point_table();
  std::vector<const FixedPointRecord*> all{&low[0], &high[0], &high[1], &high[2]};
  size_t matched = 0, total = 0;
  for (size_t c = 0; c < 4; ++c)
    for (const auto& v : t.vars) {
      ++total;
      if (same_digits(all[c]->enclosures.at(v).midpoint(), t.values.at(v)[c], 4)) ++matched;
    }
  std::ostringstream d;
  d << "counts 1/3, " << matched << "/" << total << " coordinates to 4 digits, " << s << "s";
  return {matched == total && s < 30, d.str()};
}

Outcome break_point() {
  auto t0 = Clock::now();
  UniPoly p = break_point_polynomial();
  auto roots = isolate_real_roots(p);
  std::vector<AlgebraicNumber> inside;
  for (const auto& r : roots)
    if (compare(r, AlgebraicNumber::rational(409)) > 0 && compare(r, AlgebraicNumber::rational(410)) < 0)
      inside.push_back(r);
  bool sturm_one = count_roots_in(p, RatInterval(Rational(409), Rational(410)), Openness::Open) == 1;
  if (inside.size() != 1 || !sturm_one) return {false, "roots in (409,410): " + std::to_string(inside.size())};
  auto beta = refine(inside[0], Rational(1, 10000));
  bool close = abs(beta.approximation() - Rational(409253, 1000)) <= Rational(5, 10000);
  unsigned c409 = count_at(with(kFixedPointTableLow, "k19", 409)), c410 = count_at(with(kFixedPointTableLow, "k19", 410));
  double s = since(t0);
  std::ostringstream d;
  d << "unique zero in (409,410) at " << beta.to_decimal(7) << ", counts " << c409 << "/" << c410 << ", " << s << "s";
  return {close && c409 == 1 && c410 == 3 && s < 10, d.str()};
}

Outcome transitions() {
  auto t0 = Clock::now();
  std::vector<unsigned> a, b;
  for (Rational k17 : {Rational(80), Rational(173, 2), Rational(110), Rational(223, 2)})
    a.push_back(count_at(with(kFixedPointTableHigh, "k17", k17)));
  for (int k18 : {44, 45, 58, 59}) b.push_back(count_at(with(kFixedPointTableHigh, "k18", k18)));
  double s = since(t0);
  std::vector<unsigned> want{1, 3, 3, 1};
  std::ostringstream d;
  d << "k17 (" << a[0] << a[1] << a[2] << a[3] << "), k18 (" << b[0] << b[1] << b[2] << b[3] << "), " << s << "s";
  return {a == want && b == want && s < 20, d.str()};
}

Outcome x1_cross_check() {
  auto t0 = Clock::now();
  MultiPoly f = x1_polynomial();
  auto t = fixed_point_table();
  bool ok = true;
  std::ostringstream d;
  std::vector<std::vector<size_t>> cols{{0}, {1, 2, 3}};
  int i = 0;
  for (int k19 : {200, 500}) {
    auto roots = isolate_positive_roots(UniPoly::from_multipoly(f.substitute("k19", Rational(k19)), "x1"));
    unsigned reduced = count_at(with(kFixedPointTableLow, "k19", k19));
    ok = ok && roots.size() == reduced && roots.size() == cols[i].size();
    for (size_t r = 0; r < roots.size() && r < cols[i].size(); ++r)
      ok = ok && roots[r].to_decimal(6) == to_decimal(t.values.at("x1")[cols[i][r]], 6);
    d << "k19=" << k19 << ": " << roots.size() << " roots vs " << reduced << "; ";
    ++i;
  }
  double s = since(t0);
  d << s << "s";
  return {ok && s < 10, d.str()};
}

Outcome grid() {
  auto t0 = Clock::now();
  auto& g = reference_grid();
  double s = since(t0);
  size_t bad = 0, odd = 0, isolated = 0;
  const size_t rows = 17, cols = 13;
  std::vector<double> secs;
  for (const auto& e : g.entries) {
    if (e.status != PointStatus::Ok) ++bad;
    if (e.count != 1 && e.count != 3) ++odd;
    secs.push_back(e.seconds);
  }
  auto count = [&](size_t r, size_t c) { return g.entries[r * cols + c].count; };
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) {
      if (count(r, c) != 3) continue;
      bool edge = r == 0 || c == 0 || r + 1 == rows || c + 1 == cols;
      bool neighbour = (r > 0 && count(r - 1, c) == 3) || (r + 1 < rows && count(r + 1, c) == 3) ||
                       (c > 0 && count(r, c - 1) == 3) || (c + 1 < cols && count(r, c + 1) == 3);
      if (!edge && !neighbour) ++isolated;
    }
  std::nth_element(secs.begin(), secs.begin() + secs.size() / 2, secs.end());
  double median = secs.empty() ? 0 : secs[secs.size() / 2];
  size_t threes = std::count_if(g.entries.begin(), g.entries.end(), [](auto& e) { return e.count == 3; });
  std::ostringstream d;
  d << g.entries.size() << " points, " << threes << " with 3 solutions, " << bad << " undetermined/degenerate, "
    << isolated << " isolated, median " << median << "s, total " << s << "s";
  return {g.entries.size() == rows * cols && bad == 0 && odd == 0 && isolated == 0 && median < 1, d.str()};
}

struct Region {
  CorePolynomialSystem cps;
  OpenCad cad;
  RegionReport report;
  double seconds = 0;
};

Region& region() {
  static Region r = [] {
    Region out;
    auto t0 = Clock::now();
    out.cps = eliminate_linear(reduced26(), {{"k18", 50}}, "x4");
    auto ps = project(out.cps.core, out.cps.core_var, {MultiPoly::variable(out.cps.core_var)}, {"k17", "k19"});
    out.cad = build_open_cad(ps, "k17", "k19", 0);
    out.report = classify_region(out.cad, out.cps, reduced26().trace, {}, 0);
    out.seconds = since(t0);
    return out;
  }();
  return r;
}

Outcome region_solver() {
  auto t0 = Clock::now();
  auto& r = region();
  size_t q = r.report.quadrant_cells;
  bool a = 3 * q >= 139 && q <= 3 * 139;
  size_t multi = r.report.tally.count(CellClass::Multistationary) ? r.report.tally.at(CellClass::Multistationary) : 0;
  const OpenCadCell* hi = containing_cell(r.cad, 100, 500);
  const OpenCadCell* lo = containing_cell(r.cad, 100, 200);
  bool b = multi > 0 && hi && hi->classification == CellClass::Multistationary && lo &&
           lo->classification != CellClass::Multistationary;
  auto spot = delineability_spot_check(r.cad, r.cps, reduced26().trace, 20240601, 3, {}, 0);
  bool c = spot.failures == 0;
  size_t agree = 0, compared = 0, on_boundary = 0;
  for (const auto& e : reference_grid().entries) {
    const OpenCadCell* cell = containing_cell(r.cad, e.point[1], e.point[0]);
    if (!cell) {
      ++on_boundary;
      continue;
    }
    ++compared;
    if (cell->count == e.count) ++agree;
  }
  bool dd = compared > 0 && agree == compared;
  double s = since(t0);
  std::ostringstream d;
  d << "(a) " << q << " quadrant cells of " << r.cad.cells.size() << "; (b) " << multi
    << " multistationary cells, (100,500) " << (hi ? to_string(hi->classification) : "boundary") << ", (100,200) "
    << (lo ? to_string(lo->classification) : "boundary") << "; (c) spot-checks " << spot.cells_checked - spot.failures
    << "/" << spot.cells_checked << "; (d) grid agreement " << agree << "/" << compared << " (" << on_boundary
    << " on cell boundaries); " << s << "s";
  for (const auto& m : spot.messages) d << "\n      " << m;
  return {a && b && c && dd && s < 1800, d.str()};
}

/// Narrow a count change between two k17 values at fixed k19 by bisection.
std::pair<Rational, Rational> bracket_edge(Rational lo, Rational hi, const Rational& k19) {
  auto v = [&](const Rational& k17) { return count_at({{"k17", k17}, {"k18", 50}, {"k19", k19}}); };
  unsigned clo = v(lo);
  while (hi - lo > Rational(1, 64)) {
    Rational mid = (lo + hi) / 2;
    if (v(mid) == clo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

Outcome boundary() {
  auto t0 = Clock::now();
  auto& r = region();
  auto b = boundary_factor(r.cps.core, r.cps.core_var, "k17", 14, "k19", 10);
  if (!b) return {false, "no factor of degree (14,10) in disc"};
  auto left = bracket_edge(80, Rational(173, 2), 500);
  auto right = bracket_edge(110, Rational(223, 2), 500);
  std::vector<Probe> probes{
      {{{"k17", 100}, {"k19", 409}}, {{"k17", 100}, {"k19", 410}}, true},
      {{{"k17", left.first}, {"k19", 500}}, {{"k17", left.second}, {"k19", 500}}, true},
      {{{"k17", right.first}, {"k19", 500}}, {{"k17", right.second}, {"k19", 500}}, true},
  };
  auto res = boundary_conjecture_check(reduced26(), *b, probes, {{"k18", 50}});
  size_t passed = std::count_if(res.begin(), res.end(), [](auto& p) { return p.passed; });
  double s = since(t0);
  std::ostringstream d;
  d << "factor (14,10) with " << b->size() << " terms; probes ";
  for (const auto& p : res) d << "(" << p.count_a << "->" << p.count_b << ", sign " << p.boundary_sign_a << "/" << p.boundary_sign_b << ") ";
  d << passed << "/3 pass, " << s << "s";
  return {passed == 3 && s < 600, d.str()};
}

Outcome stability() {
  auto t0 = Clock::now();
  auto& m = model26();
  auto j = reduced_jacobian(m.bound_odes(), m.vars, m.laws, {"x1", "x7", "x11"});
  auto low = solve_at_point(reduced26(), kFixedPointTableLow);
  auto high = solve_at_point(reduced26(), kFixedPointTableHigh);
  if (low.size() != 1 || high.size() != 3) return {false, "wrong fixed point counts"};
  // x(200), x2(500), x1(500), x3(500)
  std::vector<const FixedPointRecord*> recs{&low[0], &high[1], &high[0], &high[2]};
  std::vector<std::optional<unsigned>> want{0u, 1u, 0u, 0u};
  bool ok = true;
  std::ostringstream d;
  for (size_t i = 0; i < recs.size(); ++i) {
    std::optional<unsigned> seen;
    bool invariant = true;
    for (const Rational& w : {Rational(1, 10000), Rational(1, 1000000), Rational(1, 100000000)}) {
      auto v = verdict_in_box(j, recs[i]->refine(w));
      if (w == Rational(1, 10000)) seen = v.rhp_count;
      invariant = invariant && v.rhp_count == seen;
    }
    ok = ok && invariant && seen == want[i];
    d << (seen ? (*seen == 0 ? "stable" : "unstable rhp=" + std::to_string(*seen)) : "undetermined")
      << (invariant ? "" : " (varies)") << "; ";
  }
  double s = since(t0);
  d << s << "s";
  return {ok && s < 60, d.str()};
}

Outcome kernels() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> deg(1, 6);
  size_t res_ok = 0, sturm_ok = 0, incl_ok = 0;
  for (int i = 0; i < 500; ++i) {
    auto p = oracle::random_coeffs(rng, deg(rng), 20), q = oracle::random_coeffs(rng, deg(rng), 20);
    MultiPoly r = resultant(UniPoly(p).to_multipoly("x"), UniPoly(q).to_multipoly("x"), "x");
    if ((r.is_zero() ? Rational(0) : r.constant_term()) == oracle::sylvester_resultant(p, q)) ++res_ok;
  }
  for (int i = 0; i < 500; ++i) {
    auto k = oracle::random_known_roots(rng);
    if (k.poly.degree() < 1) {
      ++sturm_ok;
      continue;
    }
    if (isolate_real_roots(k.poly).size() == k.real_roots &&
        count_roots_between(k.poly, std::nullopt, std::nullopt) == k.real_roots &&
        isolate_positive_roots(k.poly).size() == count_roots_between(k.poly, Rational(0), std::nullopt))
      ++sturm_ok;
  }
  std::uniform_int_distribution<int> c(-9, 9), e(0, 3), den(1, 12);
  for (int i = 0; i < 10000; ++i) {
    MultiPoly p;
    for (int t = 0; t < 4; ++t)
      p += MultiPoly(Rational(c(rng))) * MultiPoly::variable("x").pow(e(rng)) * MultiPoly::variable("y").pow(e(rng));
    Rational xl(c(rng), den(rng)), yl(c(rng), den(rng));
    xl.canonicalize();
    yl.canonicalize();
    RatInterval X(xl, xl + Rational(1, den(rng))), Y(yl, yl + Rational(1, den(rng)));
    Rational x = X.lo() + X.width() * Rational(den(rng) - 1, 11), y = Y.lo() + Y.width() * Rational(den(rng) - 1, 11);
    if (p.interval_eval({{"x", X}, {"y", Y}}).contains(p.evaluate({{"x", x}, {"y", y}}))) ++incl_ok;
  }
  double s = since(t0);
  std::ostringstream d;
  d << "resultant " << res_ok << "/500, Sturm/Descartes " << sturm_ok << "/500, inclusion " << incl_ok << "/10000, " << s << "s";
  return {res_ok == 500 && sturm_ok == 500 && incl_ok == 10000 && s < 300, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"reduction fixtures", reduction}, {"vertex covers", covers},       {"fixed-point table", table_one},
      {"break point", break_point},      {"count transitions", transitions}, {"x1 polynomial cross-check", x1_cross_check},
      {"parameter grid", grid},          {"region solver", region_solver}, {"boundary conjecture", boundary},
      {"stability verdicts", stability}, {"kernel properties", kernels},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(n)) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %-26s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", n, criteria[i].first, since(t0),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
