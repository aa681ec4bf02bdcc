#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "goswf/approx.hpp"
#include "goswf/basis.hpp"
#include "goswf/errors.hpp"
#include "goswf/laplace_operator.hpp"
#include "goswf/nystrom.hpp"
#include "goswf/quadrature.hpp"
#include "goswf/version.hpp"

namespace goswf::cli {

namespace {

using nlohmann::json;

constexpr double kCrossMethodTol = 1e-8;
constexpr double kCrossMethodMuMin = 1e-10;
constexpr double kKernelTol = 1e-10;
constexpr double kDerivativeTol = 1e-5;
constexpr double kDerivativeStep = 1e-4;

struct Preset {
  std::size_t n;
  double c, alpha, beta;
};
constexpr Preset kPresets[] = {{3, 5.0, 0.0, 1.0}, {4, 5.0, 1.0, 2.0}, {5, 6.0, 2.0, 1.0}};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell(const json& v) {
  if (v.is_number_float()) return num(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::vector<std::pair<std::string, std::string>> base_meta(const RunConfig& cfg,
                                                           std::size_t n_max,
                                                           std::size_t quad_order,
                                                           std::size_t trunc_order) {
  return {
      {"goswf_version", kVersion},
      {"command", command_name(cfg.command)},
      {"alpha", num(cfg.alpha)},
      {"beta", num(cfg.beta)},
      {"c", num(cfg.c)},
      {"n_max", std::to_string(n_max)},
      {"quad_order", std::to_string(quad_order)},
      {"trunc_order", trunc_order == 0 ? "n/a" : std::to_string(trunc_order)},
      {"grid_points", std::to_string(cfg.grid_points)},
      {"precision_floor", num(cfg.precision_floor)},
      {"format", cfg.format == Format::csv ? "csv" : "json"},
      {"seed", std::to_string(cfg.seed)},
  };
}

OperatorParams make_op(const RunConfig& cfg) {
  return OperatorParams(WeightParams(cfg.alpha, cfg.beta), cfg.c, cfg.quad_order);
}

Outcome cmd_eigenvalues(const RunConfig& cfg) {
  const std::size_t n_max = cfg.n_max != 0 ? cfg.n_max : 21;
  const OperatorParams op = make_op(cfg);
  const GoswfBasis basis = solve_method1(op, n_max, cfg.trunc_order, cfg.precision_floor);
  const NystromSystem nys = solve_method2_nystrom(op);
  if (n_max > nys.order()) {
    throw DomainError("eigenvalues: n_max exceeds the quadrature order");
  }
  Outcome out;
  out.table.meta = base_meta(cfg, n_max, op.quad_order(), basis.trunc_order());
  out.table.columns = {"n", "mu_method1", "mu_method2", "rel_diff", "below_floor"};
  double worst = 0.0;
  bool decays = true;
  for (std::size_t n = 0; n < n_max; ++n) {
    const double m1 = basis.mu(n);
    const double m2 = nys.mu(n);
    const double rel = std::abs(m1 - m2) / std::abs(m1);
    if (std::abs(m1) >= kCrossMethodMuMin) worst = std::max(worst, rel);
    if (n > 0 && !basis.below_floor(n) && !(m1 < basis.mu(n - 1))) decays = false;
    out.table.rows.push_back({json(n), json(m1), json(m2), json(rel), json(basis.below_floor(n))});
  }
  out.table.meta.emplace_back("max_rel_diff_above_1e-10", num(worst));
  out.table.meta.emplace_back("strict_decay_to_floor", decays ? "yes" : "no");
  if (worst > kCrossMethodTol) {
    out.within_tolerance = false;
    out.messages.push_back("method 1 / method 2 relative gap " + num(worst) + " exceeds 1e-8");
  }
  if (!decays) {
    out.within_tolerance = false;
    out.messages.push_back("mu_n is not strictly decreasing above the precision floor");
  }
  return out;
}

Outcome cmd_pswf_check(const RunConfig& cfg) {
  const std::size_t n_max = cfg.n_max != 0 ? cfg.n_max : 21;
  if (!(cfg.c > 0.0)) throw DomainError("pswf-check: c must be > 0");
  const std::size_t n_quad =
      cfg.quad_order != 0 ? cfg.quad_order : std::max(kDefaultQuadOrder, min_quad_order(cfg.c));
  if (n_quad < std::max(kDefaultQuadOrder, min_quad_order(cfg.c))) {
    throw DomainError("pswf-check: quad_order must be at least max(ceil(2ec)+1, 40)");
  }
  const std::vector<double> lambda = pswf_eigenvalues(cfg.c, n_max, n_quad);
  Outcome out;
  out.table.meta = base_meta(cfg, n_max, n_quad, 0);
  out.table.columns = {"n", "lambda", "below_floor"};
  for (std::size_t n = 0; n < n_max; ++n) {
    out.table.rows.push_back(
        {json(n), json(lambda[n]), json(std::abs(lambda[n]) < cfg.precision_floor)});
  }
  return out;
}

Outcome cmd_eigenfunctions(const RunConfig& cfg) {
  const std::size_t n_max = cfg.n_max != 0 ? cfg.n_max : 4;
  const OperatorParams op = make_op(cfg);
  const GoswfBasis basis = solve_method1(op, n_max, cfg.trunc_order, cfg.precision_floor);
  const std::vector<double> grid = uniform_grid(cfg.grid_points);

  Outcome out;
  out.table.meta = base_meta(cfg, n_max, op.quad_order(), basis.trunc_order());
  out.table.columns = {"x"};
  for (std::size_t n = 0; n < n_max; ++n) out.table.columns.push_back("psi_" + std::to_string(n));

  std::vector<std::vector<double>> m1(n_max), m2;
  double norm_defect = 0.0;
  for (std::size_t n = 0; n < n_max; ++n) {
    for (double x : grid) m1[n].push_back(eval_psi(basis, n, x));
    const std::vector<double> v = sample_psi(basis, n, basis.op().rule());
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) s += basis.op().rule().weights()[j] * v[j] * v[j];
    norm_defect = std::max(norm_defect, std::abs(s - 1.0));
  }
  out.table.meta.emplace_back("max_unit_norm_defect", num(norm_defect));
  if (norm_defect > kCrossMethodTol) {
    out.within_tolerance = false;
    out.messages.push_back("unit-norm defect " + num(norm_defect) + " exceeds 1e-8");
  }

  if (cfg.with_method2) {
    std::size_t n_quad = min_quad_order(op.c());
    for (std::size_t n = 0; n < n_max; ++n) {
      if (basis.below_floor(n)) {
        throw PrecisionError("eigenfunctions: mu_" + std::to_string(n) +
                                 " is below the precision floor",
                             basis.mu(n), n);
      }
      n_quad = std::max(n_quad, k_epsilon(op.weight(), op.c(), kCrossMethodTol, basis.mu(n)));
    }
    const NystromSystem nys = solve_method2_nystrom(op, n_quad);
    double gap = 0.0;
    m2.resize(n_max);
    for (std::size_t n = 0; n < n_max; ++n) {
      double dot = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        m2[n].push_back(nys.eval(n, grid[i]));
        dot += m2[n].back() * m1[n][i];
      }
      const double sign = dot < 0.0 ? -1.0 : 1.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        m2[n][i] *= sign;
        gap = std::max(gap, std::abs(m2[n][i] - m1[n][i]));
      }
      out.table.columns.push_back("psi_m2_" + std::to_string(n));
    }
    out.table.meta.emplace_back("method2_quad_order", std::to_string(n_quad));
    out.table.meta.emplace_back("max_method_gap", num(gap));
    if (gap > kCrossMethodTol) {
      out.within_tolerance = false;
      out.messages.push_back("method 1 / method 2 sup gap " + num(gap) + " exceeds 1e-8");
    }
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<json> row{json(grid[i])};
    for (std::size_t n = 0; n < n_max; ++n) row.emplace_back(m1[n][i]);
    for (std::size_t n = 0; n < m2.size(); ++n) row.emplace_back(m2[n][i]);
    out.table.rows.push_back(std::move(row));
  }
  return out;
}

GSpec g_spec(const std::string& name, const LaplaceOperator& op) {
  if (name == "one") return gspec::Constant{1.0};
  if (name == "y") return gspec::Polynomial{{0.0, 1.0}};
  if (name == "y2") return gspec::Polynomial{{0.0, 0.0, 1.0}};
  if (name == "exp") {
    std::vector<double> v;
    for (double y : op.rule().nodes()) v.push_back(std::exp(y));
    return gspec::NodeSamples{std::move(v)};
  }
  throw DomainError("approx-compare: unknown g '" + name + "'");
}

Outcome cmd_approx_compare(const RunConfig& in) {
  RunConfig cfg = in;
  std::size_t big_n = cfg.n_max != 0 ? cfg.n_max : 3;
  if (cfg.preset) {
    const Preset& p = kPresets[*cfg.preset - 1];
    big_n = p.n;
    cfg.c = p.c;
    cfg.alpha = p.alpha;
    cfg.beta = p.beta;
  }
  const OperatorParams op = make_op(cfg);
  const LaplaceOperator lop(op);
  const BandlimitedFunction f = make_bandlimited(op, g_spec(cfg.g, lop));
  const GoswfBasis basis =
      solve_method1(op, std::max<std::size_t>(big_n + 2, 21), cfg.trunc_order, cfg.precision_floor);
  std::vector<std::size_t> n_list(big_n + 1);
  for (std::size_t n = 0; n <= big_n; ++n) n_list[n] = n;
  const ApproxReport r = compare_truncations(f, basis, n_list);

  Outcome out;
  out.table.meta = base_meta(cfg, big_n, op.quad_order(), basis.trunc_order());
  out.table.meta.emplace_back("preset", cfg.preset ? std::to_string(*cfg.preset) : "none");
  out.table.meta.emplace_back("g", cfg.g);
  out.table.meta.emplace_back("f_norm", num(r.f_norm));
  out.table.meta.emplace_back("g_norm", num(r.g_norm));
  out.table.columns = {"N",          "goswf_err_l2", "jacobi_err_l2", "goswf_err_sup",
                       "jacobi_err_sup", "tail_bound", "goswf_coeff",  "jacobi_coeff",
                       "coeff_bound"};
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const std::size_t n = n_list[i];
    out.table.rows.push_back({json(n), json(r.goswf_err_l2[i]), json(r.jacobi_err_l2[i]),
                              json(r.goswf_err_sup[i]), json(r.jacobi_err_sup[i]),
                              json(r.tail_bound[i]), json(r.goswf_coeffs[n]),
                              json(r.jacobi_coeffs[n]), json(r.coeff_bound[n])});
  }

  const std::size_t last = n_list.size() - 1;
  if (r.goswf_err_l2[last] > r.jacobi_err_l2[last] || r.goswf_err_sup[last] > r.jacobi_err_sup[last]) {
    out.within_tolerance = false;
    out.messages.push_back("GOSWF error exceeds Jacobi error at N = " + std::to_string(big_n));
  }
  const double slack = 1e-14 * r.f_norm;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (r.goswf_err_l2[i] > r.tail_bound[i] + 1e-10) {
      out.within_tolerance = false;
      out.messages.push_back("GOSWF error above the coefficient tail bound at N = " +
                             std::to_string(n_list[i]));
    }
    if (i > 0 && (r.goswf_err_l2[i] > r.goswf_err_l2[i - 1] + slack ||
                  r.jacobi_err_l2[i] > r.jacobi_err_l2[i - 1] + slack)) {
      out.within_tolerance = false;
      out.messages.push_back("L2 error increases at N = " + std::to_string(n_list[i]));
    }
  }

  Table samples;
  samples.meta = out.table.meta;
  samples.columns = {"x", "f", "f_goswf", "f_jacobi"};
  const JacobiTable table(op.weight(), big_n);
  std::vector<double> p(big_n + 1);
  for (double x : uniform_grid(cfg.grid_points)) {
    double fg = 0.0, fj = 0.0;
    table.eval(x, p);
    for (std::size_t n = 0; n <= big_n; ++n) {
      fg += r.goswf_coeffs[n] * eval_psi(basis, n, x);
      fj += r.jacobi_coeffs[n] * p[n];
    }
    samples.rows.push_back({json(x), json(f(x)), json(fg), json(fj)});
  }
  out.samples = std::move(samples);
  return out;
}

Outcome cmd_kernel_check(const RunConfig& cfg) {
  const OperatorParams op = make_op(cfg);
  const LaplaceOperator lop(op);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  Outcome out;
  out.table.meta = base_meta(cfg, 0, op.quad_order(), 0);
  out.table.columns = {"x", "y", "direct", "whittaker", "rel_gap"};
  double worst = 0.0;
  std::size_t produced = 0;
  while (produced < cfg.grid_points) {
    const double x = u(rng);
    const double y = u(rng);
    if (!(x + y > 0.0)) continue;
    const double d = lop.kernel(x, y, KernelMethod::direct);
    const double w = lop.kernel(x, y, KernelMethod::whittaker);
    const double gap = std::abs(d - w) / std::abs(w);
    worst = std::max(worst, gap);
    out.table.rows.push_back({json(x), json(y), json(d), json(w), json(gap)});
    ++produced;
  }
  out.table.meta.emplace_back("max_rel_gap", num(worst));
  if (worst > kKernelTol) {
    out.within_tolerance = false;
    out.messages.push_back("kernel direct / whittaker gap " + num(worst) + " exceeds 1e-10");
  }
  return out;
}

Outcome cmd_derivative_check(const RunConfig& cfg) {
  const std::size_t n = cfg.index;
  const OperatorParams op = make_op(cfg);
  const GoswfBasis basis = solve_method1(op, n + 1, cfg.trunc_order, cfg.precision_floor);
  const MuDerivative d = mu_derivative(basis, n);
  const double fd = mu_central_difference(basis, n, kDerivativeStep);
  const double err_a = std::abs(d.variant_a - fd) / std::abs(fd);
  const double err_b = std::abs(d.variant_b - fd) / std::abs(fd);
  const bool ok_a = err_a <= kDerivativeTol;
  const bool ok_b = err_b <= kDerivativeTol;
  const std::string matching = ok_a && ok_b ? "both" : ok_a ? "variant_a" : ok_b ? "variant_b" : "none";

  Outcome out;
  out.table.meta = base_meta(cfg, n + 1, op.quad_order(), basis.trunc_order());
  out.table.meta.emplace_back("index", std::to_string(n));
  out.table.meta.emplace_back("variant_a", "(1/mu)(I/c - mu^2), I with ||psi|| = mu");
  out.table.meta.emplace_back("variant_b", "(1/mu)(I/c - 1), I with ||psi|| = 1");
  out.table.meta.emplace_back("matching_variant", matching);
  out.table.columns = {"n",         "mu",        "finite_difference", "variant_a", "variant_b",
                       "corrected", "rel_err_a", "rel_err_b",         "i_unit",    "matching"};
  out.table.rows.push_back({json(n), json(basis.mu(n)), json(fd), json(d.variant_a),
                            json(d.variant_b), json(d.corrected), json(err_a), json(err_b),
                            json(d.i_unit), json(matching)});
  if (ok_a == ok_b) {
    out.within_tolerance = false;
    out.messages.push_back("expected exactly one matching derivative variant, got " + matching);
  }
  return out;
}

std::string render_table(const Table& t, Format format) {
  if (format == Format::json) {
    json doc;
    doc["meta"] = json::object();
    for (const auto& [k, v] : t.meta) doc["meta"][k] = v;
    doc["columns"] = t.columns;
    doc["rows"] = json::array();
    for (const auto& row : t.rows) doc["rows"].push_back(row);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
    os << "\n";
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "eigenvalues") return Command::eigenvalues;
  if (name == "pswf-check") return Command::pswf_check;
  if (name == "eigenfunctions") return Command::eigenfunctions;
  if (name == "approx-compare") return Command::approx_compare;
  if (name == "kernel-check") return Command::kernel_check;
  if (name == "derivative-check") return Command::derivative_check;
  throw DomainError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::eigenvalues: return "eigenvalues";
    case Command::pswf_check: return "pswf-check";
    case Command::eigenfunctions: return "eigenfunctions";
    case Command::approx_compare: return "approx-compare";
    case Command::kernel_check: return "kernel-check";
    case Command::derivative_check: return "derivative-check";
  }
  return "unknown";
}

Outcome run(const RunConfig& cfg) {
  if (cfg.grid_points < 2) throw DomainError("grid_points must be at least 2");
  if (!(cfg.precision_floor >= 0.0)) throw DomainError("precision_floor must be >= 0");
  switch (cfg.command) {
    case Command::eigenvalues: return cmd_eigenvalues(cfg);
    case Command::pswf_check: return cmd_pswf_check(cfg);
    case Command::eigenfunctions: return cmd_eigenfunctions(cfg);
    case Command::approx_compare: return cmd_approx_compare(cfg);
    case Command::kernel_check: return cmd_kernel_check(cfg);
    case Command::derivative_check: return cmd_derivative_check(cfg);
  }
  throw DomainError("unknown command");
}

std::string render(const Table& table, Format format) { return render_table(table, format); }

int main_entry(int argc, char** argv) {
  CLI::App app{"Generalized oblate spheroidal wave functions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "csv";
  app.add_option("--alpha", cfg.alpha, "Weight exponent at x = 1 (> -1)");
  app.add_option("--beta", cfg.beta, "Weight exponent at x = -1 (> -1)");
  app.add_option("--c", cfg.c, "Bandwidth (c-tilde for pswf-check)");
  app.add_option("--n-max", cfg.n_max, "Number of functions (N for approx-compare)");
  app.add_option("--quad-order", cfg.quad_order, "Quadrature order, 0 = auto");
  app.add_option("--trunc-order", cfg.trunc_order, "Jacobi truncation order, 0 = auto");
  app.add_option("--grid-points", cfg.grid_points, "Uniform grid size / kernel sample count");
  app.add_option("--precision-floor", cfg.precision_floor, "Below-floor threshold");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_path, "Output path (default stdout)");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");

  app.add_subcommand("eigenvalues", "mu_n by both methods");
  app.add_subcommand("pswf-check", "(c/2pi)|mu|^2 of the finite Fourier transform");
  auto* ef = app.add_subcommand("eigenfunctions", "psi_n on a uniform grid");
  ef->add_flag("--with-method2", cfg.with_method2, "Also emit interpolated Nystrom values");
  auto* ac = app.add_subcommand("approx-compare", "GOSWF vs Jacobi truncation errors");
  int preset = 0;
  ac->add_option("--preset", preset, "Parameter preset 1..3")->check(CLI::Range(1, 3));
  ac->add_option("--g", cfg.g, "Source function g")->check(CLI::IsMember({"one", "y", "exp", "y2"}));
  ac->add_option("--samples", cfg.samples_path, "Write grid samples of f, f_N to this CSV");
  app.add_subcommand("kernel-check", "Kernel closed form vs quadrature");
  auto* dc = app.add_subcommand("derivative-check", "d mu_n / dc variants vs finite difference");
  dc->add_option("--n", cfg.index, "Index n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  cfg.command = parse_command(app.get_subcommands().front()->get_name());
  cfg.format = format == "json" ? Format::json : Format::csv;
  if (preset != 0) cfg.preset = preset;

  try {
    const Outcome out = run(cfg);
    std::string text = render(out.table, cfg.format);
    if (out.samples && cfg.format == Format::json) {
      json doc = json::parse(text);
      json s = json::parse(render(*out.samples, Format::json));
      doc["samples"] = {{"columns", s["columns"]}, {"rows", s["rows"]}};
      text = doc.dump(2) + "\n";
    }
    write_file(cfg.out_path, text);
    if (out.samples && !cfg.samples_path.empty()) {
      write_file(cfg.samples_path, render(*out.samples, Format::csv));
    }
    for (const auto& m : out.messages) std::cerr << "goswf: " << m << "\n";
    return out.within_tolerance ? kExitOk : kExitTolerance;
  } catch (const PrecisionError& e) {
    std::cerr << "goswf: precision floor: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const DomainError& e) {
    std::cerr << "goswf: configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ContractError& e) {
    std::cerr << "goswf: configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "goswf: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace goswf::cli
