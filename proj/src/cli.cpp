#include "darboux_dirac/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "darboux_dirac/darboux.hpp"
#include "darboux_dirac/errors.hpp"
#include "darboux_dirac/numerics.hpp"
#include "darboux_dirac/riccati.hpp"
#include "darboux_dirac/verify.hpp"

namespace darboux_dirac::cli {

namespace {

// Figure 5 and 7 auxiliary indices, approaching the ground state from below.
const std::vector<double> kDeformationAux{-0.5, -1.0 / 50.0, -1e-4};

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const Grid& grid,
               const std::vector<std::vector<double>>& columns) {
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    out << format_number(grid.points[i]);
    for (const auto& col : columns) out << ',' << format_number(col[i]);
    out << '\n';
  }
}

std::vector<double> values_on(const ScalarField& f, const Grid& g) {
  const auto jets = f.sample(g.points, 0);
  std::vector<double> v(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) v[i] = jets[i].value();
  return v;
}

riccati::Mode mode_of(const RunConfig& cfg) {
  return cfg.c_const ? riccati::Mode::general : riccati::Mode::particular;
}

/// Throws PoleError when the family has a pole on the grid.
void certify(const riccati::RiccatiFamily& fam, const Grid& g, const char* what) {
  auto brackets = riccati::singularity_scan(fam.qhat, g);
  if (brackets.empty() && fam.mode == riccati::Mode::general) {
    brackets = riccati::singularity_scan(riccati::general_denominator(fam), g);
  }
  if (!brackets.empty()) {
    throw PoleError(std::string(what) + " has a pole in the requested range (bracket [" +
                        format_number(brackets.front().lo) + ", " +
                        format_number(brackets.front().hi) + "])",
                    brackets.front().lo);
  }
}

ScalarField initial_q(const RunConfig& cfg) {
  const riccati::RiccatiFamily fam{riccati::zero_energy_seed(cfg.params()), cfg.c_const.value_or(0.0),
                                   1.0, mode_of(cfg)};
  certify(fam, cfg.grid, "q0");
  return riccati::q_general(fam);
}

darboux::DarbouxConfig darboux_config(const RunConfig& cfg) {
  if (static_cast<int>(cfg.aux.size()) != cfg.order) {
    throw DomainError("--order " + std::to_string(cfg.order) + " needs exactly that many --aux values");
  }
  return darboux::make_config(cfg.params(), cfg.aux);
}

ScalarField transformed_q(const RunConfig& cfg, const darboux::DarbouxConfig& dc) {
  const riccati::RiccatiFamily fam{darboux::transformed_seed(dc), cfg.c_const.value_or(0.0), 1.0,
                                   mode_of(cfg)};
  certify(fam, cfg.grid, "q1");
  return riccati::q_general(fam);
}

double spinor_energy(const RunConfig& cfg, const oscillator::ModelParams& state) {
  const double eps = oscillator::energy(state);
  if (cfg.kind == dirac::Kind::scalar) {
    if (eps < 0.0) throw DomainError("scalar spinor needs eps >= 0");
    return cfg.esign * std::sqrt(eps);
  }
  return dirac::dirac_energy(state, cfg.esign);
}

/// Normalized density of the (possibly transformed) spinor for state n.
std::vector<double> density_column(const RunConfig& cfg, double n, const ScalarField& q,
                                   const darboux::DarbouxConfig* dc) {
  const auto state = cfg.params(n);
  const double e = spinor_energy(cfg, state);
  dirac::Spinor s;
  if (dc == nullptr) {
    const ScalarField coeff =
        cfg.kind == dirac::Kind::pseudoscalar ? q : dirac::scalar_coefficient(q, cfg.m);
    s = dirac::spinor_from_schrodinger(oscillator::eigenfunction(state), coeff, cfg.m, e, cfg.kind);
  } else {
    s = darboux::transformed_spinor(*dc, state, e, cfg.kind, q).spinor;
  }
  const dirac::Spinor unit = dirac::normalize(s, cfg.omega);
  std::vector<double> col;
  col.reserve(cfg.grid.points.size());
  for (double x : cfg.grid.points) col.push_back(dirac::density(unit, x));
  return col;
}

void check_bound_indices(const std::vector<double>& ns) {
  if (ns.empty()) throw DomainError("--n needs at least one state index");
  for (double n : ns) {
    if (n < 0.0 || n != std::floor(n)) {
      throw DomainError("density needs nonnegative integer state indices, got " + short_number(n));
    }
  }
}

void validate(const RunConfig& cfg) {
  oscillator::validate(cfg.params());
  if (cfg.order < 0 || cfg.order > darboux::kMaxOrder) {
    throw DomainError("--order must be between 0 and " + std::to_string(darboux::kMaxOrder));
  }
  if (cfg.esign != 1 && cfg.esign != -1) throw DomainError("--esign must be + or -");
}

dirac::Kind parse_kind(const std::string& s) {
  if (s == "pseudoscalar") return dirac::Kind::pseudoscalar;
  if (s == "scalar") return dirac::Kind::scalar;
  throw DomainError("--kind must be pseudoscalar or scalar, got '" + s + "'");
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "plus") return 1;
  if (s == "-" || s == "-1" || s == "minus") return -1;
  throw DomainError("--esign must be + or -, got '" + s + "'");
}

double tolerance_from_env() {
  const char* env = std::getenv(kToleranceEnv);
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0)) {
    throw DomainError(std::string(kToleranceEnv) + " must be a positive number, got '" + env + "'");
  }
  return v;
}

/// Raw option strings; converted after parsing so that conversion errors are
/// reported uniformly.
struct RawOptions {
  double omega = 1.0;
  int l = 1;
  double m = 1.0;
  std::string n = "0,1,2";
  int order = 0;
  std::string aux;
  std::optional<double> c_const;
  std::string grid = "0.1:8:400";
  std::string kind = "pseudoscalar";
  std::string esign = "+";
  std::string out;
  bool crum_literal = false;
};

void add_common_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--omega", raw.omega, "oscillator frequency (> 0)");
  sub->add_option("--l", raw.l, "angular momentum (nonnegative integer)");
  sub->add_option("--m", raw.m, "Dirac mass (>= 0)");
  sub->add_option("--n", raw.n, "comma separated state indices");
  sub->add_option("--order", raw.order, "Darboux transformation order N (0..3)");
  sub->add_option("--aux", raw.aux, "comma separated auxiliary indices n_1..n_N");
  sub->add_option("--c-const", raw.c_const, "Riccati family constant (general solution)");
  sub->add_option("--grid", raw.grid, "output grid a:b:count");
  sub->add_option("--kind", raw.kind, "pseudoscalar | scalar");
  sub->add_option("--esign", raw.esign, "sign of the Dirac energy, + or -");
  sub->add_option("--out", raw.out, "output file (default: standard output)");
}

RunConfig to_config(const RawOptions& raw) {
  RunConfig cfg;
  cfg.omega = raw.omega;
  cfg.l = raw.l;
  cfg.m = raw.m;
  cfg.n = parse_list(raw.n);
  cfg.order = raw.order;
  cfg.aux = raw.aux.empty() ? std::vector<double>{} : parse_list(raw.aux);
  cfg.c_const = raw.c_const;
  cfg.grid = parse_grid(raw.grid);
  cfg.kind = parse_kind(raw.kind);
  cfg.esign = parse_sign(raw.esign);
  cfg.out = raw.out;
  cfg.crum_literal = raw.crum_literal;
  cfg.tolerance = tolerance_from_env();
  validate(cfg);
  return cfg;
}

}  // namespace

oscillator::ModelParams RunConfig::params(double index) const { return {omega, l, m, index}; }

Grid default_grid() { return make_grid(0.1, 8.0, 400); }

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !std::isfinite(v)) {
      throw DomainError("bad number '" + item + "' in list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) {
    throw DomainError("bad list '" + text + "'");
  }
  return out;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void cmd_potential(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> header{"x", "q0"};
  std::vector<std::vector<double>> cols{values_on(initial_q(cfg), cfg.grid)};
  if (cfg.order >= 1) {
    const auto dc = darboux_config(cfg);
    header.push_back("q1");
    cols.push_back(values_on(transformed_q(cfg, dc), cfg.grid));
  }
  write_csv(out, header, cfg.grid, cols);
}

void cmd_density(const RunConfig& cfg, std::ostream& out) {
  check_bound_indices(cfg.n);
  std::vector<std::string> header{"x"};
  std::vector<std::vector<double>> cols;
  if (cfg.order == 0) {
    const ScalarField q0 = initial_q(cfg);
    for (double n : cfg.n) {
      header.push_back("rho_n" + short_number(n));
      cols.push_back(density_column(cfg, n, q0, nullptr));
    }
  } else {
    const auto dc = darboux_config(cfg);
    const ScalarField q1 = transformed_q(cfg, dc);
    for (double n : cfg.n) {
      header.push_back("rho_n" + short_number(n));
      cols.push_back(density_column(cfg, n, q1, &dc));
    }
  }
  write_csv(out, header, cfg.grid, cols);
}

void cmd_darboux(const RunConfig& cfg, std::ostream& out) {
  if (cfg.order < 1) throw DomainError("darboux needs --order >= 1 with matching --aux");
  const auto dc = darboux_config(cfg);
  std::vector<std::string> header{"x", "wronskian", "crum_shift", "q1"};
  std::vector<std::vector<double>> cols{values_on(darboux::wronskian_field(dc.aux_fields), cfg.grid),
                                        values_on(darboux::crum_shift(dc), cfg.grid),
                                        values_on(transformed_q(cfg, dc), cfg.grid)};
  for (double n : cfg.n) {
    header.push_back("phi_n" + short_number(n));
    cols.push_back(values_on(
        darboux::darboux_transform(oscillator::eigenfunction(cfg.params(n)), dc), cfg.grid));
  }
  write_csv(out, header, cfg.grid, cols);
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  out << "kind,n,epsilon,abs_E\n";
  auto row = [&](const char* kind, double n) {
    const double eps = oscillator::energy(cfg.params(n));
    const double radicand = cfg.kind == dirac::Kind::scalar ? eps : cfg.m * cfg.m + eps;
    const double abs_e = radicand >= 0.0 ? std::sqrt(radicand) : std::nan("");
    out << kind << ',' << format_number(n) << ',' << format_number(eps) << ','
        << format_number(abs_e) << '\n';
  };
  for (double n : cfg.n) row("state", n);
  for (double n : cfg.aux) row("aux", n);
}

int cmd_verify(const RunConfig& cfg, std::ostream& report) {
  verify::Settings s;
  s.params = cfg.params();
  s.states = cfg.n;
  if (!cfg.aux.empty()) s.aux = {cfg.aux.front()};
  s.c_const = cfg.c_const;
  s.tolerance = cfg.tolerance;
  s.crum = cfg.crum_literal ? darboux::CrumReading::literal_first
                            : darboux::CrumReading::second_log_derivative;
  report << "darboux_dirac verify: omega=" << short_number(cfg.omega) << " l=" << cfg.l
         << " m=" << short_number(cfg.m) << " residual tolerance=" << short_number(s.tolerance)
         << (cfg.crum_literal ? " crum-reading=literal-first-derivative" : "") << '\n';
  const auto checks = verify::run_suite(s);
  return verify::print_report(checks, report) ? kOk : kVerificationFailed;
}

void cmd_figure(int figure, const RunConfig& base, std::ostream& out) {
  RunConfig cfg;
  cfg.grid = base.grid;
  cfg.omega = 1.0;
  cfg.l = 1;
  cfg.m = 1.0;
  switch (figure) {
    case 1:
      cmd_potential(cfg, out);
      return;
    case 2:
      cfg.n = {0, 1, 2};
      cmd_density(cfg, out);
      return;
    case 3:
      cfg.order = 1;
      cfg.aux = {-0.5};
      cmd_potential(cfg, out);
      return;
    case 4:
      cfg.order = 1;
      cfg.aux = {-0.5};
      cfg.n = {0, 1, 2};
      cmd_density(cfg, out);
      return;
    case 5: {
      std::vector<std::string> header{"x", "q0"};
      std::vector<std::vector<double>> cols{values_on(initial_q(cfg), cfg.grid)};
      for (double n1 : kDeformationAux) {
        cfg.order = 1;
        cfg.aux = {n1};
        header.push_back("q1_aux" + short_number(n1));
        cols.push_back(values_on(transformed_q(cfg, darboux_config(cfg)), cfg.grid));
      }
      write_csv(out, header, cfg.grid, cols);
      return;
    }
    case 6:
      cfg.order = 2;
      cfg.aux = {1.5, 1.25};
      cmd_potential(cfg, out);
      return;
    case 7: {
      std::vector<std::string> header{"x"};
      std::vector<std::vector<double>> cols;
      for (double n1 : kDeformationAux) {
        cfg.order = 1;
        cfg.aux = {n1};
        const auto dc = darboux_config(cfg);
        header.push_back("rho_n1_aux" + short_number(n1));
        cols.push_back(density_column(cfg, 1.0, transformed_q(cfg, dc), &dc));
      }
      write_csv(out, header, cfg.grid, cols);
      return;
    }
    default:
      throw DomainError("figure must be between 1 and 7");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"CSV curves and checks for Dirac systems obtained by Wronskian transforms of an "
               "extended radial oscillator",
               "darboux_dirac"};
  app.require_subcommand(1);
  RawOptions raw;
  int figure = 0;

  struct Command {
    CLI::App* sub;
    std::function<int(const RunConfig&, std::ostream&)> action;
  };
  std::vector<Command> commands;
  auto emit = [](void (*fn)(const RunConfig&, std::ostream&)) {
    return [fn](const RunConfig& c, std::ostream& os) {
      fn(c, os);
      return static_cast<int>(kOk);
    };
  };
  commands.push_back({app.add_subcommand("potential", "CSV of q0 (and q1 for --order >= 1)"),
                      emit(cmd_potential)});
  commands.push_back({app.add_subcommand("density", "CSV of normalized spinor densities"),
                      emit(cmd_density)});
  commands.push_back({app.add_subcommand("darboux", "CSV of Wronskian, Crum shift, q1, phi_n"),
                      emit(cmd_darboux)});
  commands.push_back(
      {app.add_subcommand("spectrum", "CSV of n, eps_n, |E_n|"), emit(cmd_spectrum)});
  commands.push_back({app.add_subcommand("verify", "run the invariant suite"), cmd_verify});
  CLI::App* fig = app.add_subcommand("figure", "CSV data for figure 1..7");
  fig->add_option("figure", figure, "figure number")->required();
  commands.push_back({fig, [&figure](const RunConfig& c, std::ostream& os) {
                        cmd_figure(figure, c, os);
                        return static_cast<int>(kOk);
                      }});
  for (auto& c : commands) add_common_options(c.sub, raw);
  commands[4].sub->add_flag("--crum-literal", raw.crum_literal)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "darboux_dirac: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const RunConfig cfg = to_config(raw);
    for (const auto& c : commands) {
      if (!c.sub->parsed()) continue;
      if (cfg.out.empty()) return c.action(cfg, out);
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        err << "darboux_dirac: cannot open '" << cfg.out << "' for writing\n";
        return kUsageError;
      }
      const int code = c.action(cfg, file);
      file.close();
      if (!file) {
        err << "darboux_dirac: write to '" << cfg.out << "' failed\n";
        return kUsageError;
      }
      return code;
    }
    return kUsageError;
  } catch (const PoleError& e) {
    err << "darboux_dirac: pole: " << e.what() << '\n';
    return kNumericalError;
  } catch (const DivergenceError& e) {
    err << "darboux_dirac: quadrature failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const ConvergenceError& e) {
    err << "darboux_dirac: series failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const DomainError& e) {
    err << "darboux_dirac: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace darboux_dirac::cli
