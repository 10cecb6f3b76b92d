// Command-line front end: factor tables, kernel evaluation, series
// summation, convolution, Gibbs measurement, and the verification suite.
// CSV/JSON output is byte-deterministic for a fixed configuration.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trigsum/analysis.hpp"
#include "trigsum/engine.hpp"
#include "trigsum/factors.hpp"
#include "trigsum/kernels.hpp"
#include "trigsum/periodic.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct OutputOptions {
  std::string path;    // empty means standard output
  std::string format;  // "csv" or "json"
};

void write_output(const OutputOptions& opt, const std::string& text) {
  if (opt.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + opt.path);
  }
  out << text;
}

struct MethodOptions {
  std::string method = "identity";  // identity|poisson|sigma|lanczos
  double poisson_r = 0.5;
  int sigma_r = 2;
  double alpha = trigsum::pi / 4.0;
  int lanczos_n = 16;
};

trigsum::FactorFamily make_family(const MethodOptions& m) {
  if (m.method == "identity") return trigsum::Identity{};
  if (m.method == "poisson") return trigsum::PoissonAbel{m.poisson_r};
  if (m.method == "sigma") return trigsum::SigmaRAlpha{m.sigma_r, m.alpha};
  if (m.method == "lanczos") return trigsum::Lanczos{m.lanczos_n};
  throw CLI::ValidationError("--method must be identity, poisson, sigma, or lanczos");
}

void add_method_flags(CLI::App* cmd, MethodOptions& m) {
  cmd->add_option("--method", m.method,
                  "factor family: identity|poisson|sigma|lanczos");
  cmd->add_option("--poisson-r", m.poisson_r, "Poisson-Abel decay in (0,1)");
  cmd->add_option("--r", m.sigma_r, "sinc power r (positive integer)");
  cmd->add_option("--alpha", m.alpha, "step alpha in radians, in (0,pi)");
  cmd->add_option("--n", m.lanczos_n, "Lanczos cutoff order");
}

trigsum::FunctionSpec load_function(const std::string& builtin,
                                    const std::string& input_path) {
  if (!builtin.empty()) {
    if (builtin == "square") return trigsum::FunctionSpec::square_wave();
    if (builtin == "sawtooth") return trigsum::FunctionSpec::sawtooth();
    throw CLI::ValidationError("--builtin must be square or sawtooth");
  }
  if (input_path.empty()) {
    throw CLI::ValidationError("either --builtin or --input is required");
  }
  std::ifstream in(input_path);
  if (!in) throw std::runtime_error("cannot open input file: " + input_path);
  ordered_json j;
  in >> j;
  if (j.contains("builtin")) {
    return load_function(j["builtin"].get<std::string>(), "");
  }
  trigsum::TrigSeries s;
  s.a0 = j.value("a0", 0.0);
  if (j.contains("a")) s.a = j["a"].get<std::vector<double>>();
  if (j.contains("b")) s.b = j["b"].get<std::vector<double>>();
  s.a.resize(std::max(s.a.size(), s.b.size()), 0.0);
  s.b.resize(s.a.size(), 0.0);
  return trigsum::FunctionSpec::from_series(std::move(s));
}

std::string rows_to_text(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows,
                         const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << (i ? "," : "") << header[i];
    }
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << fmt(row[i]);
      }
      out << "\n";
    }
    return out.str();
  }
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json item;
    for (std::size_t i = 0; i < row.size(); ++i) item[header[i]] = row[i];
    arr.push_back(item);
  }
  return arr.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized summation of trigonometric series by convergence factors"};
  app.require_subcommand(1);

  OutputOptions output;
  app.add_option("--output", output.path, "output file (default: stdout)");
  output.format = "csv";
  app.add_option("--format", output.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  MethodOptions method;
  int n_terms = 512;
  int grid_size = 1024;
  int quad_nodes = 32;
  int spectral_terms = 4096;
  std::string builtin;
  std::string input_path;
  std::string kernel_kind = "de";
  std::string suite = "all";

  auto* factors_cmd = app.add_subcommand("factors", "emit a factor table k,mu_k");
  add_method_flags(factors_cmd, method);
  factors_cmd->add_option("--N", n_terms, "table order");

  auto* kernel_cmd = app.add_subcommand(
      "kernel", "evaluate a De kernel by both routes on a grid");
  kernel_cmd->add_option("--r", method.sigma_r, "kernel order");
  kernel_cmd->add_option("--alpha", method.alpha, "step alpha in radians");
  kernel_cmd->add_option("--M", grid_size, "grid size");
  kernel_cmd->add_option("--N", spectral_terms, "spectral truncation");

  auto* sum_cmd = app.add_subcommand("sum", "sum a factored series on a grid");
  add_method_flags(sum_cmd, method);
  sum_cmd->add_option("--builtin", builtin, "square|sawtooth");
  sum_cmd->add_option("--input", input_path, "JSON series spec");
  sum_cmd->add_option("--N", n_terms, "truncation order");
  sum_cmd->add_option("--M", grid_size, "grid size");

  auto* conv_cmd = app.add_subcommand("convolve",
                                      "convolve a function with a kernel on a grid");
  conv_cmd->add_option("--builtin", builtin, "square|sawtooth");
  conv_cmd->add_option("--input", input_path, "JSON series spec");
  conv_cmd->add_option("--kernel", kernel_kind, "de|poisson")
      ->check(CLI::IsMember({"de", "poisson"}));
  conv_cmd->add_option("--r", method.sigma_r, "De kernel order");
  conv_cmd->add_option("--alpha", method.alpha, "De kernel step");
  conv_cmd->add_option("--poisson-r", method.poisson_r, "Poisson parameter");
  conv_cmd->add_option("--M", grid_size, "grid size");
  conv_cmd->add_option("--quad", quad_nodes, "quadrature nodes per panel");

  auto* gibbs_cmd = app.add_subcommand("gibbs", "measure overshoot above the supremum");
  add_method_flags(gibbs_cmd, method);
  gibbs_cmd->add_option("--builtin", builtin, "square|sawtooth");
  gibbs_cmd->add_option("--N", n_terms, "truncation order");
  gibbs_cmd->add_option("--M", grid_size, "grid size (>= 4096)");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--suite", suite, "splines|kernels|engine|analysis|all");

  // Let --output/--format appear after the subcommand as well as before it.
  for (auto* cmd : app.get_subcommands({})) cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (factors_cmd->parsed()) {
      auto table = trigsum::factor_table(make_family(method), n_terms);
      std::vector<std::vector<double>> rows;
      for (std::size_t k = 0; k < table.size(); ++k) {
        rows.push_back({static_cast<double>(k), table[k]});
      }
      write_output(output, rows_to_text({"k", "mu_k"}, rows, output.format));
    } else if (kernel_cmd->parsed()) {
      const trigsum::DeSpec spec{method.sigma_r, method.alpha};
      std::vector<std::vector<double>> rows;
      for (int j = 0; j < grid_size; ++j) {
        const double t = trigsum::grid_point(static_cast<std::size_t>(j),
                                             static_cast<std::size_t>(grid_size));
        const double closed = trigsum::de_kernel_closed(spec, t);
        const double spectral = trigsum::de_kernel_spectral(spec, t, spectral_terms);
        rows.push_back({t, closed, spectral, std::abs(closed - spectral)});
      }
      write_output(output,
                   rows_to_text({"t", "De_closed", "De_spectral", "abs_diff"},
                                rows, output.format));
    } else if (sum_cmd->parsed()) {
      const auto fn = load_function(builtin, input_path);
      const auto g = trigsum::summed_function(fn, make_family(method), n_terms,
                                              static_cast<std::size_t>(grid_size));
      std::vector<std::vector<double>> rows;
      for (std::size_t j = 0; j < g.size(); ++j) {
        rows.push_back({trigsum::grid_point(j, g.size()), g.samples[j]});
      }
      write_output(output, rows_to_text({"t", "value"}, rows, output.format));
    } else if (conv_cmd->parsed()) {
      const auto fn = load_function(builtin, input_path);
      trigsum::KernelSpec spec;
      if (kernel_kind == "de") {
        spec = trigsum::DeSpec{method.sigma_r, method.alpha};
      } else {
        spec = trigsum::PoissonSpec{method.poisson_r};
      }
      std::vector<std::vector<double>> rows;
      for (int j = 0; j < grid_size; ++j) {
        const double t = trigsum::grid_point(static_cast<std::size_t>(j),
                                             static_cast<std::size_t>(grid_size));
        rows.push_back({t, trigsum::convolve_with_kernel(fn, spec, t, quad_nodes)});
      }
      write_output(output, rows_to_text({"t", "value"}, rows, output.format));
    } else if (gibbs_cmd->parsed()) {
      const auto fn = load_function(builtin.empty() ? "square" : builtin, "");
      const double overshoot = trigsum::gibbs_overshoot(
          fn, make_family(method), n_terms, static_cast<std::size_t>(grid_size));
      write_output(output, rows_to_text({"N", "M", "overshoot"},
                                        {{static_cast<double>(n_terms),
                                          static_cast<double>(grid_size),
                                          overshoot}},
                                        output.format));
    } else if (verify_cmd->parsed()) {
      const auto reports = trigsum::run_suite(suite);
      write_output(output, trigsum::reports_to_json(reports));
      for (const auto& r : reports) {
        if (!r.passed) return 1;
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
