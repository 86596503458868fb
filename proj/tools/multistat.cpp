#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "multistat/cad2d.hpp"
#include "multistat/error.hpp"
#include "multistat/fixtures.hpp"
#include "multistat/model.hpp"
#include "multistat/serialize.hpp"
#include "multistat/stability.hpp"

using namespace multistat;

namespace {

struct Globals {
  int digits = 6;
  unsigned threads = 0;
  std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string f; std::getline(ss, f, sep);)
    if (!f.empty()) out.push_back(f);
  return out;
}

/// "k17=100,k18=50" or repeated "k17=100".
std::map<std::string, Rational> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, Rational> out;
  for (const auto& item : items)
    for (const auto& a : split(item, ',')) {
      auto eq = a.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected name=value, got " + a);
      out[a.substr(0, eq)] = parse_rational(a.substr(eq + 1));
    }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string records_text(const std::vector<FixedPointRecord>& recs, const std::vector<std::string>& vars,
                         int digits) {
  std::ostringstream out;
  out << recs.size() << " positive fixed point(s)\n";
  for (size_t i = 0; i < recs.size(); ++i) {
    out << "#" << i + 1 << " [" << to_string(recs[i].positivity) << "]";
    if (recs[i].stability) {
      out << " " << to_string(recs[i].stability->classification);
      if (recs[i].stability->rhp_count) out << " (rhp " << *recs[i].stability->rhp_count << ")";
    }
    out << "\n";
    for (const auto& v : vars) out << "  " << v << " = " << to_decimal(recs[i].enclosures.at(v).midpoint(), digits) << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multistationarity analysis of polynomial ODE models"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--digits", g.digits, "significant digits in decimal output")->check(CLI::Range(1, 200));
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
  app.add_option("--seed", g.seed, "seed for randomised checks");

  std::string model_name, out_path, svg_path, format = "text", tie = "forward";
  std::vector<std::string> at, fix, ranges;

  auto* reduce = app.add_subcommand("reduce", "reduce a model to its positive core system");
  reduce->add_option("model", model_name, "bundled model name or file path")->required();
  reduce->add_option("--tie", tie, "pivot tie-break")->check(CLI::IsMember({"forward", "reverse"}));
  reduce->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  reduce->add_option("--out", out_path);

  auto* solve = app.add_subcommand("solve", "positive fixed points at one parameter point");
  solve->add_option("model", model_name)->required();
  solve->add_option("--at", at, "parameter values, e.g. k17=100,k18=50,k19=500")->required();
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  solve->add_option("--out", out_path);

  std::string eliminate;
  auto* stab = app.add_subcommand("stability", "fixed points with Routh-Hurwitz verdicts");
  stab->add_option("model", model_name)->required();
  stab->add_option("--at", at)->required();
  stab->add_option("--eliminate", eliminate, "variables solved from the laws, e.g. x1,x7,x11");
  stab->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  stab->add_option("--out", out_path);

  auto* sample = app.add_subcommand("sample", "solution counts over a parameter grid");
  sample->add_option("model", model_name)->required();
  sample->add_option("--range", ranges, "name=start:stop:step, first varies slowest")->required();
  sample->add_option("--fix", fix, "remaining parameter values");
  sample->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
  sample->add_option("--out", out_path);
  sample->add_option("--svg", svg_path, "scatter plot of the counts");

  std::string params = "k17,k19", linear = "x4", window;
  bool full_projection = false, spot = false;
  auto* region = app.add_subcommand("region2d", "open CAD of a parameter plane");
  region->add_option("model", model_name)->required();
  region->add_option("--fix", fix, "all other parameters")->required();
  region->add_option("--params", params, "base,stack axes");
  region->add_option("--linear", linear, "variable solved from the linear equation");
  region->add_flag("--full-projection", full_projection, "keep every coefficient in the projection");
  region->add_flag("--spot-check", spot, "three random extra samples per cell");
  region->add_option("--out", out_path, "JSON report");
  region->add_option("--svg", svg_path, "shaded cells");
  region->add_option("--window", window, "xmin:xmax,ymin:ymax for the SVG")->default_val("0:200,0:1000");

  std::string expr, var = "x";
  bool positive = false;
  auto* roots = app.add_subcommand("roots", "isolate real roots of a univariate polynomial");
  roots->add_option("polynomial", expr, "expression, or @break_point / @x1_polynomial")->required();
  roots->add_option("--var", var);
  roots->add_option("--fix", fix, "values for the other symbols");
  roots->add_flag("--positive", positive, "positive roots only");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) {
      auto m = load_model(model_name);
      auto rs = reduce_model(m, tie == "reverse" ? TieBreak::Reverse : TieBreak::Forward);
      if (format == "json") {
        emit(reduced_system_json(m.name, rs), out_path);
      } else {
        std::ostringstream out;
        out << "model " << m.name << "\nvariables";
        for (const auto& v : rs.positive_variables) out << " " << v;
        out << "\nparameters";
        for (const auto& p : rs.positive_parameters) out << " " << p;
        out << "\n";
        for (size_t i = 0; i < rs.equations.size(); ++i)
          out << "E" << i + 1 << ": " << canonical_text(rs.equations[i]) << " = 0\n";
        emit(out.str(), out_path);
      }
    } else if (*solve || *stab) {
      auto m = load_model(model_name);
      auto rs = reduce_model(m);
      auto values = parse_assignments(at);
      auto recs = solve_at_point(rs, values);
      if (*stab) {
        std::set<std::string> elim;
        for (const auto& v : split(eliminate, ',')) elim.insert(v);
        if (elim.empty()) elim = default_eliminated(m.laws, m.vars);
        auto j = reduced_jacobian(m.bound_odes(), m.vars, m.laws, elim);
        classify_fixed_points(recs, j, Rational(1, 10000),
                              Rational(1, Integer("1000000000000000000000000000000000000000")), g.threads);
      }
      if (format == "csv")
        emit(fixed_points_csv(recs, m.vars, g.digits), out_path);
      else if (format == "json")
        emit(fixed_points_json(recs, m.vars, g.digits), out_path);
      else
        emit(records_text(recs, m.vars, g.digits), out_path);
    } else if (*sample) {
      auto m = load_model(model_name);
      auto rs = reduce_model(m);
      std::vector<SampleRange> rr;
      for (const auto& r : ranges) rr.push_back(parse_range(r));
      auto grid = grid_sample(rs, rr, parse_assignments(fix), {}, g.threads);
      if (format == "json") {
        emit(grid_json(grid), out_path);
      } else if (format == "text") {
        std::map<std::string, size_t> tally;
        for (const auto& e : grid.entries)
          ++tally[e.status == PointStatus::Ok ? std::to_string(e.count) + " solution(s)" : to_string(e.status)];
        std::ostringstream out;
        out << grid.entries.size() << " points\n";
        for (const auto& [k, n] : tally) out << "  " << k << ": " << n << "\n";
        emit(out.str(), out_path);
      } else {
        emit(grid_csv(grid), out_path);
      }
      if (!svg_path.empty())
        emit(grid_svg(grid, rr.size() > 1 ? 1 : 0, 0), svg_path);
    } else if (*region) {
      auto axes = split(params, ',');
      if (axes.size() != 2) throw Error(ErrorCode::InvalidArgument, "--params needs two names");
      auto m = load_model(model_name);
      auto rs = reduce_model(m);
      auto cps = eliminate_linear(rs, parse_assignments(fix), linear);
      auto ps = project(cps.core, cps.core_var, {MultiPoly::variable(cps.core_var)}, axes,
                        full_projection ? ProjectionOperator::Full : ProjectionOperator::Open);
      auto t0 = std::chrono::steady_clock::now();
      auto cad = build_open_cad(ps, axes[0], axes[1], g.threads);
      auto report = classify_region(cad, cps, rs.trace, {}, g.threads);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << cad.cells.size() << " cells, " << report.quadrant_cells << " in the positive quadrant";
      for (const auto& [c, n] : report.tally) std::cerr << ", " << n << " " << to_string(c);
      std::cerr << " (" << secs << " s)\n";
      if (spot) {
        auto sc = delineability_spot_check(cad, cps, rs.trace, g.seed, 3, {}, g.threads);
        std::cerr << "spot check: " << sc.cells_checked - sc.failures << "/" << sc.cells_checked << " cells agree\n";
        for (const auto& msg : sc.messages) std::cerr << "  " << msg << "\n";
      }
      emit(region_json(cad, report), out_path.empty() ? "-" : out_path);
      if (!svg_path.empty()) {
        auto w = split(window, ',');
        if (w.size() != 2) throw Error(ErrorCode::InvalidArgument, "bad --window");
        auto xs = split(w[0], ':'), ys = split(w[1], ':');
        if (xs.size() != 2 || ys.size() != 2) throw Error(ErrorCode::InvalidArgument, "bad --window");
        PlotFrame f{axes[0], axes[1], std::stod(xs[0]), std::stod(xs[1]), std::stod(ys[0]), std::stod(ys[1])};
        emit(region_svg(cad, f), svg_path);
      }
    } else if (*roots) {
      MultiPoly p;
      if (expr == "@break_point") {
        p = break_point_polynomial().to_multipoly("k19");
        var = "k19";
      } else if (expr == "@x1_polynomial") {
        p = x1_polynomial();
        var = "x1";
      } else {
        p = parse_polynomial(expr);
      }
      p = p.substitute(parse_assignments(fix));
      auto support = p.support();
      if (support.size() > 1 || (support.size() == 1 && support[0] != var))
        throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate in " + var);
      auto u = UniPoly::from_multipoly(p, var);
      auto rl = positive ? isolate_positive_roots(u) : isolate_real_roots(u);
      std::cout << rl.size() << " root(s)\n";
      for (const auto& r : rl)
        std::cout << "  " << var << " = " << r.to_decimal(g.digits) << "  in " << r.interval().to_string() << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
