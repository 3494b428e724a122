#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gaussiso/gauss_core.hpp"
#include "gaussiso/io.hpp"
#include "gaussiso/search.hpp"
#include "gaussiso/shapes.hpp"
#include "gaussiso/special.hpp"
#include "gaussiso/verify.hpp"

namespace {

void print_value(double v) { std::printf("%.15g\n", v); }

int scan_threads() {
  if (const char* env = std::getenv("GAUSSISO_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Row-major CSV scan of a 2-D function over [0,max]^2; rows are
// parallelized, output order stays deterministic.
void scan_2d(const std::function<double(double, double)>& f, double max_coord,
             int resolution, const std::string& header, std::ostream& out) {
  const int n = resolution;
  std::vector<std::string> rows(n);
  const int nthreads = std::min(scan_threads(), n);
  std::vector<std::thread> workers;
  for (int t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t] {
      char buf[120];
      for (int i = t; i < n; i += nthreads) {
        std::string& row = rows[i];
        const double x = max_coord * i / (n - 1);
        for (int j = 0; j < n; ++j) {
          const double y = max_coord * j / (n - 1);
          std::snprintf(buf, sizeof(buf), "%.15e,%.15e,%.15e\n", x, y, f(x, y));
          row += buf;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  out << header << '\n';
  for (const auto& row : rows) out << row;
}

int run_scan(const std::string& func, double max_coord, int resolution,
             const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) throw gaussiso::IOError("cannot open " + out_path);
  if (func == "I") {
    scan_2d([](double a, double b) { return gaussiso::I_func({a, b}); },
            max_coord, resolution, "alpha,beta,I", out);
  } else if (func == "Phi") {
    scan_2d(
        [](double a, double b) {
          return (a == 0.0 && b == 0.0) ? 0.0 : gaussiso::Phi_func({a, b});
        },
        max_coord, resolution, "alpha,beta,Phi", out);
  } else if (func == "u") {
    out << "x,u\n";
    char buf[80];
    for (int i = 1; i <= resolution; ++i) {
      const double x = static_cast<double>(i) / resolution;
      std::snprintf(buf, sizeof(buf), "%.15e,%.15e\n", x, gaussiso::u_func(x));
      out << buf;
    }
  } else {
    throw CLI::ValidationError("--func must be one of I, Phi, u");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gaussiso;

  CLI::App app{"Gaussian measure and perimeter of convex planar sets"};
  app.require_subcommand(1);

  // perimeter
  auto* perimeter_cmd = app.add_subcommand(
      "perimeter", "Gaussian perimeter of a shape read from a file");
  std::string polygon_path, cclass_path;
  auto* per_poly = perimeter_cmd->add_option("--polygon", polygon_path,
                                             "polygon file, one 'x y' per line");
  auto* per_cclass =
      perimeter_cmd->add_option("--cclass", cclass_path, "C-class shape file");
  per_poly->excludes(per_cclass);

  // measure
  auto* measure_cmd =
      app.add_subcommand("measure", "Gaussian measure of a polygon");
  std::string measure_path;
  measure_cmd->add_option("--polygon", measure_path, "polygon file")->required();

  // special
  auto* special_cmd =
      app.add_subcommand("special", "evaluate one of the scalar functions");
  std::string func_name;
  special_cmd
      ->add_option("function", func_name, "one of I, Phi, u, v, g, f, fprime, ngon")
      ->required();
  double opt_alpha = 0.0, opt_beta = 0.0, opt_x = 0.5, opt_t = 1.0, opt_r = 1.0;
  int opt_n = 3;
  special_cmd->add_option("--alpha", opt_alpha);
  special_cmd->add_option("--beta", opt_beta);
  special_cmd->add_option("--x", opt_x);
  special_cmd->add_option("--t", opt_t);
  special_cmd->add_option("--r", opt_r);
  special_cmd->add_option("--n", opt_n);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  unsigned long long seed = 42;
  bool verify_all_flag = false, table = false;
  verify_cmd->add_flag("--all", verify_all_flag, "run every suite (default)");
  verify_cmd->add_option("--seed", seed, "RNG seed for the sampled suites");
  verify_cmd->add_flag("--table", table, "human-readable table instead of JSON");

  // optimize
  auto* optimize_cmd = app.add_subcommand("optimize", "run a maximizer");
  std::string target;
  optimize_cmd->add_option("target", target, "one of ngon, phi, ascend")
      ->required();
  int opt_iters = 10000, opt_grid = 64;
  double opt_lo = 1e-6, opt_hi = 8.0, opt_tol = 1e-8;
  std::string trace_csv;
  optimize_cmd->add_option("--n", opt_n, "polygon order");
  optimize_cmd->add_option("--r", opt_r, "starting circumradius for ascend");
  optimize_cmd->add_option("--lo", opt_lo, "bracket lower end");
  optimize_cmd->add_option("--hi", opt_hi, "bracket upper end");
  optimize_cmd->add_option("--tol", opt_tol);
  optimize_cmd->add_option("--grid", opt_grid);
  optimize_cmd->add_option("--iters", opt_iters);
  double opt_step0 = 0.05;
  optimize_cmd->add_option("--seed", seed);
  optimize_cmd->add_option("--step0", opt_step0, "initial ascent step");
  optimize_cmd->add_option("--csv", trace_csv, "write the ascent trace as CSV");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "emit a CSV grid of a function");
  std::string scan_func = "I", scan_out;
  double scan_max = 4.0;
  int resolution = 100;
  scan_cmd->add_option("--func", scan_func, "I, Phi or u")->required();
  scan_cmd->add_option("--max", scan_max, "upper corner of the grid");
  scan_cmd->add_option("--resolution", resolution)->check(CLI::Range(2, 100000));
  scan_cmd->add_option("--out", scan_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);

    if (perimeter_cmd->parsed()) {
      if (!polygon_path.empty()) {
        print_value(polygon_gaussian_perimeter(read_polygon_file(polygon_path)));
      } else if (!cclass_path.empty()) {
        print_value(cclass_perimeter(read_cclass_file(cclass_path)));
      } else {
        std::cerr << "perimeter: need --polygon or --cclass\n";
        return 2;
      }
    } else if (measure_cmd->parsed()) {
      print_value(polygon_gaussian_measure(read_polygon_file(measure_path)));
    } else if (special_cmd->parsed()) {
      if (func_name == "I") {
        print_value(I_func({opt_alpha, opt_beta}));
      } else if (func_name == "Phi") {
        print_value(Phi_func({opt_alpha, opt_beta}));
      } else if (func_name == "u") {
        print_value(u_func(opt_x));
      } else if (func_name == "v") {
        print_value(v_func(opt_t));
      } else if (func_name == "g") {
        print_value(g_triangle(opt_r));
      } else if (func_name == "f") {
        print_value(f_implicit(opt_x));
      } else if (func_name == "fprime") {
        print_value(f_prime(opt_x));
      } else if (func_name == "ngon") {
        print_value(ngon_perimeter_closed(opt_n, opt_r));
      } else {
        std::cerr << "special: unknown function '" << func_name << "'\n";
        return 2;
      }
    } else if (verify_cmd->parsed()) {
      const VerificationReport report = verify_all(seed);
      std::cout << (table ? report_to_table(report) : report_to_json(report))
                << std::endl;
      return report.all_passed ? 0 : 1;
    } else if (optimize_cmd->parsed()) {
      if (target == "ngon") {
        const auto [r_hat, value] = maximize_ngon_radius(opt_n, {opt_lo, opt_hi, opt_tol});
        std::printf("r_hat %.15g\nvalue %.15g\n", r_hat, value);
      } else if (target == "phi") {
        const auto [point, value] = maximize_phi(opt_grid, opt_tol);
        std::printf("alpha %.15g\nbeta %.15g\nvalue %.15g\n", point.alpha,
                    point.beta, value);
      } else if (target == "ascend") {
        AscentConfig cfg;
        cfg.max_iters = opt_iters;
        cfg.seed = seed;
        cfg.step0 = opt_step0;
        const AscentTrace trace = ascend_polygon(regular_ngon(opt_n, opt_r), cfg);
        if (!trace_csv.empty()) export_trace_csv(trace, trace_csv);
        std::printf("final_perimeter %.15g\naspect %.15g\nstalled %d\n",
                    trace.iterates.back().second, trace.aspect,
                    trace.stalled ? 1 : 0);
      } else {
        std::cerr << "optimize: unknown target '" << target << "'\n";
        return 2;
      }
    } else if (scan_cmd->parsed()) {
      return run_scan(scan_func, scan_max, resolution, scan_out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
