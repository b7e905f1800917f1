#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exwave/compton.hpp"
#include "exwave/csv.hpp"
#include "exwave/energetics.hpp"
#include "exwave/errors.hpp"
#include "exwave/fields.hpp"
#include "exwave/interaction.hpp"
#include "exwave/relativity.hpp"
#include "exwave/spin.hpp"
#include "exwave/uncertainty.hpp"
#include "exwave/verify.hpp"

namespace exwave::cli {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string units = "natural";
  std::string out;
  std::string format = "csv";

  std::optional<std::string> kind;
  std::optional<double> speed;
  std::optional<double> omega;
  int n = 64;
  int wavelengths = 1;
  double omega_scale = 1.0;
  std::vector<std::string> tolerances;

  std::string dump = "rho";
  double time = 0.0;

  double theta_start = 0.0;
  double theta_end = 180.0;
  int theta_steps = 19;
  std::optional<double> lambda_in;
  std::string svg;

  double beta_max = 0.9;
  int steps = 10;

  std::vector<double> speeds{0.01, 0.1, 0.5};
  std::optional<double> delta_v;

  double rho_el = 1.0;
  double sigma_el = 1.0;
  double phi_start = 1.0;
  double phi_end = 0.0;
  double xdot2_initial = 0.01;
  double xdot2_final = 0.51;
  double position = 0.5;
  bool use_path = false;

  double nu_max = 1.0;
  double alpha = 1.0;
};

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> result;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("tolerance must be name=value: " + item);
    const std::string value = item.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0' || !std::isfinite(v))
      throw UsageError("tolerance value is not a number: " + item);
    result[item.substr(0, eq)] = v;
  }
  return result;
}

Units units_of(const Options& o) { return make_units(parse_scheme(o.units)); }

void warn_speed_for_photon(const Options& o, std::ostream& err) {
  if (o.kind && parse_kind(*o.kind) == Kind::photon && o.speed)
    err << "warning: --speed is ignored for photons\n";
}

ParticleModel model_of(const Options& o, Kind kind) {
  const Units u = units_of(o);
  ParticleModel m = kind == Kind::electron
                        ? canonical_electron(u, o.speed.value_or(0.1) * u.c0)
                        : canonical_photon(u, o.omega.value_or(u.m_e * u.c0 * u.c0 / u.hbar));
  return with_omega_scale(std::move(m), o.omega_scale);
}

// Every table is produced as CSV first; JSON is the same rows as objects.
std::string csv_to_json(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> header;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (std::getline(in, line)) header = split(line);
  while (std::getline(in, line)) {
    const auto cells = split(line);
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
      const std::string& c = cells[i];
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (!c.empty() && *end == '\0') {
        if (std::isfinite(v))
          row[header[i]] = v;
        else
          row[header[i]] = nullptr;
      } else if (c == "true" || c == "false") {
        row[header[i]] = c == "true";
      } else {
        row[header[i]] = c;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + path);
  file << content;
  file.flush();
  if (!file) throw UsageError("cannot write output file: " + path);
}

int emit_table(const Options& o, std::size_t rows, const std::string& csv, std::ostream& out) {
  const std::string body = o.format == "json" ? csv_to_json(csv) : csv;
  if (o.out.empty()) {
    out << body;
  } else {
    write_file(o.out, body);
    out << "wrote " << rows << " rows to " << o.out << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  warn_speed_for_photon(o, err);
  VerifyConfig config;
  config.units = units_of(o);
  config.speed = o.speed.value_or(0.1);
  config.points_per_wavelength = o.n;
  config.wavelengths = o.wavelengths;
  config.omega_scale = o.omega_scale;
  if (o.kind) config.kind = parse_kind(*o.kind);
  config.tolerances = parse_tolerances(o.tolerances);
  const std::vector<Check> checks = run_checks(config);

  std::size_t passed = 0;
  for (const auto& c : checks) {
    print_check(out, c);
    passed += c.pass ? 1 : 0;
  }
  out << "SUMMARY " << passed << '/' << checks.size() << " passed\n";

  if (!o.out.empty()) {
    std::ostringstream csv;
    CsvWriter w(csv);
    w.header({"name", "value", "threshold", "status"});
    for (const auto& c : checks) w.row(c.name, c.value, c.threshold, c.pass ? "PASS" : "FAIL");
    write_file(o.out, o.format == "json" ? csv_to_json(csv.str()) : csv.str());
  }
  return all_pass(checks) ? 0 : kExitFail;
}

int cmd_fields(const Options& o, std::ostream& out, std::ostream& err) {
  warn_speed_for_photon(o, err);
  const Kind kind = o.kind ? parse_kind(*o.kind) : Kind::electron;
  const ParticleModel model = model_of(o, kind);
  const auto samples = sample_along_propagation(model, parse_field_quantity(o.dump), o.n,
                                                o.wavelengths, o.time);
  std::ostringstream csv;
  const std::size_t rows = write_field_csv(csv, samples);
  return emit_table(o, rows, csv.str(), out);
}

int cmd_compton(const Options& o, std::ostream& out) {
  const Units u = units_of(o);
  const double deg = std::numbers::pi / 180.0;
  const double lambda_in = o.lambda_in.value_or(100.0 * compton_wavelength(u));
  const auto rows =
      angular_sweep(u, o.theta_start * deg, o.theta_end * deg, o.theta_steps, lambda_in);
  if (!o.svg.empty()) {
    std::ostringstream svg;
    write_compton_svg(svg, rows, compton_wavelength(u));
    write_file(o.svg, svg.str());
  }
  std::ostringstream csv;
  const std::size_t n = write_compton_csv(csv, rows);
  return emit_table(o, n, csv.str(), out);
}

int cmd_relativity(const Options& o, std::ostream& out, std::ostream& err) {
  warn_speed_for_photon(o, err);
  const Kind kind = o.kind ? parse_kind(*o.kind) : Kind::electron;
  const auto rows = relativity_sweep(model_of(o, kind), o.beta_max, o.steps);
  std::ostringstream csv;
  const std::size_t n = write_relativity_csv(csv, rows);
  return emit_table(o, n, csv.str(), out);
}

int cmd_uncertainty(const Options& o, std::ostream& out) {
  const Units u = units_of(o);
  std::vector<UncertaintyReport> rows;
  for (double s : o.speeds) {
    const ParticleModel el = canonical_electron(u, s * u.c0);
    std::optional<double> dv;
    if (o.delta_v) dv = *o.delta_v;
    rows.push_back(uncertainty_floor(el, dv));
  }
  std::ostringstream csv;
  const std::size_t n = write_uncertainty_csv(csv, rows);
  return emit_table(o, n, csv.str(), out);
}

int cmd_spin(const Options& o, std::ostream& out) {
  std::vector<SpinSolution> rows;
  for (Kind k : {Kind::photon, Kind::electron}) {
    if (o.kind && parse_kind(*o.kind) != k) continue;
    rows.push_back(solve_spin(k, model_of(o, k)));
  }
  std::ostringstream csv;
  const std::size_t n = write_spin_csv(csv, rows);
  return emit_table(o, n, csv.str(), out);
}

int cmd_interaction(const Options& o, std::ostream& out) {
  InteractionScenario s;
  s.rho_el0 = o.rho_el;
  s.sigma_el0 = o.sigma_el;
  s.phi_ext = PotentialProfile({0.0, 1.0}, {o.phi_start, o.phi_end});
  s.xdot_sq_initial = o.xdot2_initial;
  s.xdot_sq_final = o.xdot2_final;
  s.c0 = units_of(o).c0;
  if (o.use_path) s.path = std::make_pair(0.0, 1.0);
  const InteractionReport r = emission_balance(s, o.position);
  if (o.format == "json") {
    const std::string body = to_json(r) + "\n";
    if (o.out.empty()) {
      out << body;
    } else {
      write_file(o.out, body);
      out << "wrote 1 rows to " << o.out << '\n';
    }
    return 0;
  }
  std::ostringstream csv;
  CsvWriter w(csv);
  w.header({"lagrangian", "hamiltonian", "h_w", "rho_ph0_emitted", "v_em"});
  w.row(r.lagrangian, r.hamiltonian, r.h_w, r.rho_ph0_emitted, r.v_em);
  return emit_table(o, w.rows(), csv.str(), out);
}

int cmd_transfer(const Options& o, std::ostream& out) {
  if (o.steps < 1) throw InvalidArgument("--steps must be at least 1");
  const Units u = units_of(o);
  std::vector<TransferRate> rows;
  for (int i = 1; i <= o.steps; ++i) rows.push_back(transfer_rate(u, o.nu_max * i / o.steps, o.alpha));
  std::ostringstream csv;
  const std::size_t n = write_transfer_csv(csv, rows);
  return emit_table(o, n, csv.str(), out);
}

void add_model_flags(CLI::App* sub, Options& o) {
  sub->add_option("--kind", o.kind, "electron|photon")->check(CLI::IsMember({"electron", "photon"}));
  sub->add_option("--speed", o.speed, "electron speed as a fraction of c0");
  sub->add_option("--omega", o.omega, "photon angular frequency");
  sub->add_option("--omega-scale", o.omega_scale, "multiply every omega (off-shell test)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended-particle wave model: verification suites and tables", "exwave"};
  app.set_config("--config", "", "key=value file with [section] per subcommand");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--units", o.units, "natural|si")->check(CLI::IsMember({"natural", "si"}));
  app.add_option("--out", o.out, "output path (default: stdout)");
  app.add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run all registered checks");
  add_model_flags(verify, o);
  verify->add_option("--N", o.n, "points per wavelength")->capture_default_str();
  verify->add_option("--wavelengths", o.wavelengths)->capture_default_str();
  verify->add_option("--tolerance", o.tolerances, "override a check threshold, name=value");

  auto* fields = app.add_subcommand("fields", "sample a field along the propagation axis");
  add_model_flags(fields, o);
  fields->add_option("--dump", o.dump, "psi|rho|phi|p|A|E|B")->capture_default_str();
  fields->add_option("--N", o.n, "points per wavelength")->capture_default_str();
  fields->add_option("--wavelengths", o.wavelengths)->capture_default_str();
  fields->add_option("--time", o.time)->capture_default_str();

  auto* compton = app.add_subcommand("compton", "wavelength shift against scattering angle");
  compton->add_option("--theta-start", o.theta_start, "degrees")->capture_default_str();
  compton->add_option("--theta-end", o.theta_end, "degrees")->capture_default_str();
  compton->add_option("--theta-steps", o.theta_steps)->capture_default_str();
  compton->add_option("--lambda-in", o.lambda_in, "incident wavelength (default 100 lambda_C)");
  compton->add_option("--svg", o.svg, "also write an SVG chart");

  auto* relativity = app.add_subcommand("relativity", "frame energy audit sweep");
  add_model_flags(relativity, o);
  relativity->add_option("--beta-max", o.beta_max)->capture_default_str();
  relativity->add_option("--steps", o.steps)->capture_default_str();

  auto* uncertainty = app.add_subcommand("uncertainty", "position-momentum floor per speed");
  uncertainty->add_option("--speeds", o.speeds, "fractions of c0")->delimiter(',');
  uncertainty->add_option("--delta-v", o.delta_v, "potential spread (default m u^2)");

  auto* spin = app.add_subcommand("spin", "g and s for photons and electrons");
  add_model_flags(spin, o);

  auto* interaction = app.add_subcommand("interaction", "emission balance in a linear potential");
  interaction->add_option("--rho-el", o.rho_el)->capture_default_str();
  interaction->add_option("--sigma-el", o.sigma_el)->capture_default_str();
  interaction->add_option("--phi-start", o.phi_start, "phi at x = 0")->capture_default_str();
  interaction->add_option("--phi-end", o.phi_end, "phi at x = 1")->capture_default_str();
  interaction->add_option("--xdot2-initial", o.xdot2_initial)->capture_default_str();
  interaction->add_option("--xdot2-final", o.xdot2_final)->capture_default_str();
  interaction->add_option("--x", o.position, "evaluation point in [0, 1]")->capture_default_str();
  interaction->add_flag("--path", o.use_path, "take the field energy from x = 0 to x = 1");

  auto* transfer = app.add_subcommand("transfer", "energy transfer rate against frequency");
  transfer->add_option("--nu-max", o.nu_max)->capture_default_str();
  transfer->add_option("--steps", o.steps)->capture_default_str();
  transfer->add_option("--alpha", o.alpha, "fraction transferred per period")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, out, err);
    if (*fields) return cmd_fields(o, out, err);
    if (*compton) return cmd_compton(o, out);
    if (*relativity) return cmd_relativity(o, out, err);
    if (*uncertainty) return cmd_uncertainty(o, out);
    if (*spin) return cmd_spin(o, out);
    if (*interaction) return cmd_interaction(o, out);
    if (*transfer) return cmd_transfer(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace exwave::cli
