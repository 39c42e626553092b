// rqi: negativity queries, figure sweeps, coefficient tables and the
// self-verification suite for Dirac-field entanglement seen by an
// accelerated observer.
//
// Exit codes: 0 success, 1 verification failure, 2 flag parse error,
// 3 domain error, 4 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rqi/analytic.hpp"
#include "rqi/sweep.hpp"
#include "rqi/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kParseError = 2, kDomainError = 3, kIoError = 4 };

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kStates{"psi-plus", "psi-minus", "psi1"};
const std::vector<std::string> kPairs{"alice-rob", "alice-antirob"};
const std::vector<std::string> kDetectors{"full", "particle", "antiparticle"};
const std::vector<std::string> kSides{"alice", "other"};
const std::vector<std::string> kTraces{"product", "jordan-wigner"};

std::string fmt(double x) { return rqi::format_number(x); }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

double parse_double_flag(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CLI::ConversionError(flag, text);
  }
}

template <class T, class Parse>
std::vector<T> parse_list(const std::string& flag, const std::string& text, const std::vector<std::string>& allowed,
                          Parse parse) {
  std::vector<T> out;
  for (const auto& item : split_list(text)) {
    if (std::find(allowed.begin(), allowed.end(), item) == allowed.end())
      throw CLI::ValidationError(flag, "'" + item + "' is not one of " + CLI::detail::join(allowed, ", "));
    out.push_back(parse(item));
  }
  return out;
}

// Plain "key = value" lines; '#' starts a comment. Only options that were not
// given on the command line take the file's value.
void apply_config_file(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string{};
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos)
      throw CLI::ParseError(path + ":" + std::to_string(lineno) + ": expected 'key = value'", CLI::ExitCodes::InvalidError);
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    auto* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config")
      throw CLI::ParseError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'",
                            CLI::ExitCodes::InvalidError);
    if (opt->count() == 0) {
      opt->add_result(value);
      opt->run_callback();
    }
  }
}

struct PointFlags {
  std::string state = "psi-plus";
  double qr = 1.0;
  double q_phase = 0.0;
  std::optional<double> r;
  std::optional<double> a;
  std::optional<double> omega;
  std::string pair = "alice-rob";
  std::string detector = "full";
  std::string side = "alice";
  std::string trace = "product";
};

int cmd_negativity(const PointFlags& f) {
  if (!(f.qr >= 0.0 && f.qr <= 1.0)) throw DomainError("--qr must lie in [0, 1], got " + fmt(f.qr));
  if (!std::isfinite(f.q_phase)) throw DomainError("--q-phase must be finite");

  double r = 0.0;
  bool from_acceleration = false;
  if (f.r) {
    r = *f.r;
    if (!(r >= 0.0 && r <= rqi::max_r)) throw DomainError("--r must lie in [0, pi/4], got " + fmt(r));
  } else if (f.a && f.omega) {
    if (!(*f.a > 0.0)) throw DomainError("--a must be positive, got " + fmt(*f.a));
    if (!(*f.omega > 0.0) || !std::isfinite(*f.omega))
      throw DomainError("--omega must be positive, got " + fmt(*f.omega));
    r = rqi::r_of_acceleration(*f.omega, *f.a);
    from_acceleration = true;
  } else {
    throw CLI::ParseError("either --r or both --a and --omega are required", CLI::ExitCodes::RequiredError);
  }

  const auto params = rqi::UnruhParams::from_modulus(r, f.qr, f.q_phase);
  const auto state = rqi::entangled_state(rqi::parse_state_kind(f.state), params);
  rqi::PartitionSpec spec{rqi::parse_observer_pair(f.pair), rqi::parse_detector(f.detector), rqi::parse_side(f.side),
                          f.trace == "product" ? rqi::TraceConvention::product : rqi::TraceConvention::jordan_wigner};
  const double n = rqi::negativity(state, spec);

  std::cout << "state=" << f.state << " pair=" << f.pair << " detector=" << f.detector << " q_r_abs=" << fmt(f.qr)
            << " q_phase=" << fmt(f.q_phase);
  if (from_acceleration) std::cout << " a=" << fmt(*f.a) << " omega=" << fmt(*f.omega);
  std::cout << " r_omega=" << fmt(r) << " negativity=" << fmt(n) << '\n';
  return kOk;
}

struct SweepFlags {
  std::string state = "psi-plus";
  std::string qr = "1,0.9,0.8,0.7";
  double q_phase = 0.0;
  long long count = 200;
  std::string pairs = "alice-rob,alice-antirob";
  std::string detectors = "full";
  std::string side = "alice";
  unsigned threads = 0;
  std::string output = "-";
  std::string config;
};

int cmd_sweep(const SweepFlags& f) {
  rqi::SweepConfig config;
  config.state = rqi::parse_state_kind(f.state);
  config.q_right_abs.clear();
  for (const auto& item : split_list(f.qr)) {
    const double q = parse_double_flag("--qr", item);
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("--qr values must lie in [0, 1], got " + item);
    config.q_right_abs.push_back(q);
  }
  if (!std::isfinite(f.q_phase)) throw DomainError("--q-phase must be finite");
  config.q_phase = f.q_phase;
  if (f.count < 1) throw DomainError("--count must be at least 1, got " + std::to_string(f.count));
  config.r_count = static_cast<std::size_t>(f.count);
  config.pairs = parse_list<rqi::ObserverPair>("--pairs", f.pairs, kPairs, rqi::parse_observer_pair);
  config.detectors = parse_list<rqi::Detector>("--detectors", f.detectors, kDetectors, rqi::parse_detector);
  config.transpose_side = rqi::parse_side(f.side);
  config.threads = f.threads;

  const auto rows = rqi::run_sweep(config);

  if (f.output == "-") {
    rqi::write_csv(std::cout, rows);
    return kOk;
  }
  std::ofstream out(f.output, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open --output '" + f.output + "' for writing");
  rqi::write_csv(out, rows);
  out.close();
  if (!out) throw IoError("failed writing --output '" + f.output + "'");
  std::cerr << "wrote " << rows.size() << " rows to " << f.output << '\n';
  return kOk;
}

int cmd_verify(double tolerance) {
  if (!(tolerance >= 0.0)) throw DomainError("--tolerance must be non-negative");
  const auto results = rqi::run_verification(tolerance);
  std::size_t passed = 0;
  for (const auto& r : results) {
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3e", r.max_deviation);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " max_deviation=" << dev << '\n';
    passed += r.passed ? 1 : 0;
  }
  char tol[32];
  std::snprintf(tol, sizeof tol, "%.3e", tolerance);
  std::cout << passed << "/" << results.size() << " checks passed (tolerance " << tol << ")\n";
  return passed == results.size() ? kOk : kVerifyFailed;
}

int cmd_coeffs(double rindler_energy, double minkowski_energy, double theta) {
  if (!(minkowski_energy > 0.0) || !std::isfinite(minkowski_energy))
    throw DomainError("--minkowski-energy must be positive, got " + fmt(minkowski_energy));
  if (!std::isfinite(rindler_energy)) throw DomainError("--rindler-energy must be finite");
  if (!std::isfinite(theta)) throw DomainError("--theta must be finite");

  const auto b = rqi::bogoliubov_coefficients(rindler_energy, minkowski_energy, theta);
  const std::pair<const char*, rqi::Complex> rows[] = {
      {"alpha_I", b.alpha_I},   {"beta_I", b.beta_I},   {"gamma_I", b.gamma_I},   {"eta_I", b.eta_I},
      {"alpha_II", b.alpha_II}, {"beta_II", b.beta_II}, {"gamma_II", b.gamma_II}, {"eta_II", b.eta_II},
  };
  std::cout << "r_omega=" << fmt(std::atan(std::exp(-std::numbers::pi * rindler_energy))) << '\n';
  std::cout << "coefficient,re,im,abs\n";
  for (const auto& [name, z] : rows)
    std::cout << name << ',' << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(std::abs(z)) << '\n';

  const double region_II = std::max({std::abs(b.alpha_II - std::conj(b.alpha_I)),
                                     std::abs(b.beta_II - std::conj(b.beta_I)),
                                     std::abs(b.gamma_II - std::conj(b.gamma_I)),
                                     std::abs(b.eta_II - std::conj(b.eta_I))});
  std::cout << "residual gamma_I+conj(beta_I)=" << fmt(std::abs(b.gamma_I + std::conj(b.beta_I))) << '\n';
  std::cout << "residual eta_I-conj(alpha_I)=" << fmt(std::abs(b.eta_I - std::conj(b.alpha_I))) << '\n';
  std::cout << "residual region_II-conj(region_I)=" << fmt(region_II) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Particle/antiparticle entanglement of a Dirac mode seen by a uniformly accelerated observer"};
  app.require_subcommand(1);

  PointFlags point;
  auto* neg = app.add_subcommand("negativity", "Negativity at a single parameter point");
  neg->add_option("--state", point.state, "Entangled state")->check(CLI::IsMember(kStates))->capture_default_str();
  neg->add_option("--qr", point.qr, "|q_R|, modulus of the right Unruh weight")->capture_default_str();
  neg->add_option("--q-phase", point.q_phase, "Phase of q_R in radians")->capture_default_str();
  auto* r_opt = neg->add_option("--r", point.r, "Acceleration parameter r in [0, pi/4]");
  auto* a_opt = neg->add_option("--a", point.a, "Proper acceleration (with --omega)");
  auto* w_opt = neg->add_option("--omega", point.omega, "Mode frequency (with --a)");
  r_opt->excludes(a_opt)->excludes(w_opt);
  a_opt->needs(w_opt);
  w_opt->needs(a_opt);
  neg->add_option("--pair", point.pair, "Bipartition")->check(CLI::IsMember(kPairs))->capture_default_str();
  neg->add_option("--detector", point.detector, "Detector filter")
      ->check(CLI::IsMember(kDetectors))
      ->capture_default_str();
  neg->add_option("--side", point.side, "Factor to transpose")->check(CLI::IsMember(kSides))->capture_default_str();
  neg->add_option("--trace", point.trace, "Sign convention of the partial trace")
      ->check(CLI::IsMember(kTraces))
      ->capture_default_str();

  SweepFlags sweep;
  auto* sw = app.add_subcommand("sweep", "Negativity curves over an r grid, written as CSV");
  sw->add_option("--state", sweep.state, "Entangled state")->check(CLI::IsMember(kStates))->capture_default_str();
  sw->add_option("--qr", sweep.qr, "Comma-separated |q_R| values (empty for none)")->capture_default_str();
  sw->add_option("--q-phase", sweep.q_phase, "Phase of q_R in radians")->capture_default_str();
  sw->add_option("--count", sweep.count, "Number of r points on [0, pi/4]")->capture_default_str();
  sw->add_option("--pairs", sweep.pairs, "Comma-separated bipartitions")->capture_default_str();
  sw->add_option("--detectors", sweep.detectors, "Comma-separated detector filters")->capture_default_str();
  sw->add_option("--side", sweep.side, "Factor to transpose")->check(CLI::IsMember(kSides))->capture_default_str();
  sw->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)")->capture_default_str();
  sw->add_option("--output,-o", sweep.output, "CSV path, '-' for stdout")->capture_default_str();
  sw->add_option("--config", sweep.config, "File of 'key = value' lines; flags take precedence");

  double tolerance = 1e-10;
  auto* ver = app.add_subcommand("verify", "Run the identity and closed-form suite");
  ver->add_option("--tolerance", tolerance, "Maximum allowed deviation per check")->capture_default_str();

  double rindler_energy = 0.0;
  double minkowski_energy = 0.0;
  double theta = 0.0;
  auto* co = app.add_subcommand("coeffs", "Print the monochromatic Bogoliubov coefficients");
  co->add_option("--rindler-energy", rindler_energy, "Rindler mode energy E_Omega")->required();
  co->add_option("--minkowski-energy", minkowski_energy, "Minkowski mode energy E_omega")->required();
  co->add_option("--theta", theta, "Rapidity parameter theta")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (sw->parsed() && !sweep.config.empty()) apply_config_file(*sw, sweep.config);

    if (neg->parsed()) return cmd_negativity(point);
    if (sw->parsed()) return cmd_sweep(sweep);
    if (ver->parsed()) return cmd_verify(tolerance);
    if (co->parsed()) return cmd_coeffs(rindler_energy, minkowski_energy, theta);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kParseError;
}
