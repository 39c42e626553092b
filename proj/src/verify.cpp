#include "rqi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "rqi/analytic.hpp"
#include "rqi/sweep.hpp"

namespace rqi {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

const std::vector<double>& moduli() {
  static const std::vector<double> q{1.0, 0.9, 0.8, 0.75, std::sqrt(0.5)};
  return q;
}

// (phase of q_R, phase of q_L)
const std::vector<std::pair<double, double>>& phases() {
  static const std::vector<std::pair<double, double>> p{{0.0, 0.0}, {0.7, -1.3}, {2.4, 0.5}};
  return p;
}

void for_each_params(std::size_t r_count, const std::function<void(const UnruhParams&)>& fn) {
  for (double r : r_grid(r_count))
    for (double q : moduli())
      for (auto [pr, pl] : phases()) fn(UnruhParams(r, std::polar(q, pr), std::polar(std::sqrt(1.0 - q * q), pl)));
}

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double car_deviation(const std::vector<OperatorMatrix>& ops) {
  const auto& reg = ops.front().reg;
  const auto id = OperatorMatrix::identity(reg).entries;
  double dev = 0.0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const auto mixed = anticommutator(ops[i], ops[j].adjoint()).entries;
      dev = std::max(dev, max_abs(i == j ? Matrix(mixed - id) : mixed));
      dev = std::max(dev, max_abs(anticommutator(ops[i], ops[j]).entries));
    }
  }
  return dev;
}

std::vector<OperatorMatrix> rindler_annihilators() {
  const auto& reg = rindler_register();
  return {annihilation_matrix(reg, mode::particle_I), annihilation_matrix(reg, mode::antiparticle_I),
          annihilation_matrix(reg, mode::particle_II), annihilation_matrix(reg, mode::antiparticle_II)};
}

double check_car_rindler() { return car_deviation(rindler_annihilators()); }

double check_car_unruh() {
  double dev = 0.0;
  for (double r : r_grid(5)) {
    for (double q : {1.0, 0.9, 0.8, std::sqrt(0.5)}) {
      const UnruhParams p(r, std::polar(q, 0.4), std::polar(std::sqrt(1 - q * q), -0.9));
      const auto a = unruh_annihilators(rindler_register(), r);
      dev = std::max(dev, car_deviation({a.c_right, a.c_left, a.d_right, a.d_left}));
      const auto cr = unruh_creators(rindler_register(), p);
      dev = std::max(dev, car_deviation({cr.particle.adjoint(), cr.antiparticle.adjoint()}));
    }
  }
  return dev;
}

double check_vacuum_annihilation() {
  double dev = 0.0;
  for (double r : r_grid(50)) {
    const auto v = rindler_vacuum(r);
    const auto a = unruh_annihilators(rindler_register(), r);
    for (const auto* op : {&a.c_right, &a.c_left, &a.d_right, &a.d_left}) dev = std::max(dev, apply(*op, v).norm());
  }
  return dev;
}

double check_excitations() {
  double dev = 0.0;
  for_each_params(10, [&](const UnruhParams& p) {
    dev = std::max(dev, max_abs(unruh_particle(p).amplitudes - unruh_particle_from_operators(p).amplitudes));
    dev = std::max(dev, max_abs(unruh_antiparticle(p).amplitudes - unruh_antiparticle_from_operators(p).amplitudes));
  });
  return dev;
}

double check_density(ObserverPair pair, const std::vector<Detector>& detectors) {
  double dev = 0.0;
  for_each_params(10, [&](const UnruhParams& p) {
    const auto state = entangled_state(StateKind::psi_plus, p);
    for (auto det : detectors) {
      const auto rho = reduce(state, PartitionSpec{pair, det});
      dev = std::max(dev, max_abs(rho.entries() - psi_plus_density_closed_form(p, pair, det).entries()));
    }
  });
  return dev;
}

double check_block_equivalence() {
  double dev = 0.0;
  for_each_params(10, [&](const UnruhParams& p) {
    const auto state = entangled_state(StateKind::psi_plus, p);
    for (auto pair : {ObserverPair::alice_rob, ObserverPair::alice_antirob}) {
      for (auto det : {Detector::full, Detector::particle_only, Detector::antiparticle_only}) {
        const double full = negativity(state, PartitionSpec{pair, det});
        dev = std::max(dev, std::abs(full - block_negativity(psi_plus_pt_blocks(p, pair, det))));
      }
    }
  });
  return dev;
}

double check_psi1_closed_form() {
  double dev = 0.0;
  for_each_params(20, [&](const UnruhParams& p) {
    const auto state = entangled_state(StateKind::psi_one, p);
    for (auto pair : {ObserverPair::alice_rob, ObserverPair::alice_antirob})
      dev = std::max(dev, std::abs(negativity(state, PartitionSpec{pair}) - analytic_negativity_psi1(p, pair)));
  });
  return dev;
}

double check_psi1_vanishing() {
  double dev = 0.0;
  for (double q : {1.0, 0.95, 0.9, 0.8, 0.75, std::sqrt(0.5)}) {
    const auto r = psi1_vanishing_r(q);
    if (!r) return inf;
    const auto p = UnruhParams::from_modulus(*r, q);
    dev = std::max(dev, analytic_negativity_psi1(p, ObserverPair::alice_antirob));
    dev = std::max(dev, negativity(entangled_state(StateKind::psi_one, p), PartitionSpec{ObserverPair::alice_antirob}));
  }
  return dev;
}

double check_psi1_limit() {
  double dev = 0.0;
  for (double q : {1.0, 0.9, 0.8, std::sqrt(0.5)}) {
    const auto p = UnruhParams::from_modulus(max_r, q);
    const double expected = 0.25 * (q * q - (1.0 - q * q));
    const auto state = entangled_state(StateKind::psi_one, p);
    for (auto pair : {ObserverPair::alice_rob, ObserverPair::alice_antirob})
      dev = std::max(dev, std::abs(negativity(state, PartitionSpec{pair}) - expected));
  }
  return dev;
}

double check_psi1_sector_extinction() {
  double dev = 0.0;
  for_each_params(20, [&](const UnruhParams& p) {
    const auto state = entangled_state(StateKind::psi_one, p);
    for (auto pair : {ObserverPair::alice_rob, ObserverPair::alice_antirob})
      for (auto det : {Detector::particle_only, Detector::antiparticle_only})
        dev = std::max(dev, negativity(state, PartitionSpec{pair, det}));
  });
  return dev;
}

double check_symmetry() {
  double dev = 0.0;
  for (double r : r_grid(20))
    for (double q : {1.0, 0.9, 0.8, 0.75, std::sqrt(0.5)})
      for (const auto& e : symmetry_check_psi_plus_minus(UnruhParams::from_modulus(r, q, 0.3)))
        dev = std::max(dev, e.difference);
  return dev;
}

double all_negativities_spread(const std::vector<UnruhParams>& params) {
  // max over (state, pair, detector) of max - min across the parameter set
  double dev = 0.0;
  for (auto kind : {StateKind::psi_plus, StateKind::psi_minus, StateKind::psi_one}) {
    for (auto pair : {ObserverPair::alice_rob, ObserverPair::alice_antirob}) {
      for (auto det : {Detector::full, Detector::particle_only, Detector::antiparticle_only}) {
        double lo = inf, hi = -inf;
        for (const auto& p : params) {
          const double n = negativity(entangled_state(kind, p), PartitionSpec{pair, det});
          lo = std::min(lo, n);
          hi = std::max(hi, n);
        }
        dev = std::max(dev, hi - lo);
      }
    }
  }
  return dev;
}

double check_phase_invariance() {
  std::mt19937_64 rng(20100518);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  double dev = 0.0;
  for (double r : {0.0, 0.3, 0.6, max_r}) {
    for (double q : {0.9, 0.8, std::sqrt(0.5)}) {
      std::vector<UnruhParams> params;
      for (int i = 0; i < 10; ++i)
        params.emplace_back(r, std::polar(q, phase(rng)), std::polar(std::sqrt(1 - q * q), phase(rng)));
      dev = std::max(dev, all_negativities_spread(params));
    }
  }
  return dev;
}

double check_threshold() {
  const auto grid = r_grid(200);
  double dev = 0.0;
  const PartitionSpec spec{ObserverPair::alice_rob, Detector::antiparticle_only};

  const double q_active = std::sqrt(0.6);
  const auto onset = antiparticle_transfer_threshold(q_active);
  if (!onset) return inf;
  for (double r : grid) {
    if (r >= *onset) break;
    dev = std::max(dev, negativity(entangled_state(StateKind::psi_plus, UnruhParams::from_modulus(r, q_active)), spec));
  }
  const double top = negativity(entangled_state(StateKind::psi_plus, UnruhParams::from_modulus(max_r, q_active)), spec);
  if (!(top > 1e-6)) return inf;

  const double q_never = std::sqrt(0.7);
  if (antiparticle_transfer_threshold(q_never)) return inf;
  for (double r : grid)
    dev = std::max(dev, negativity(entangled_state(StateKind::psi_plus, UnruhParams::from_modulus(r, q_never)), spec));
  return dev;
}

double check_monotonicity() {
  const auto grid = r_grid(200);
  double dev = 0.0;
  for (double q : {1.0, 0.9, 0.8, 0.71}) {
    double prev_particle = inf, prev_anti = -inf;
    for (double r : grid) {
      const auto state = entangled_state(StateKind::psi_plus, UnruhParams::from_modulus(r, q));
      const double particle = negativity(state, PartitionSpec{ObserverPair::alice_rob, Detector::particle_only});
      const double anti = negativity(state, PartitionSpec{ObserverPair::alice_antirob, Detector::antiparticle_only});
      if (std::isfinite(prev_particle)) dev = std::max(dev, particle - prev_particle);
      if (std::isfinite(prev_anti)) dev = std::max(dev, prev_anti - anti);
      prev_particle = particle;
      prev_anti = anti;
    }
  }
  return dev;
}

double check_transpose_side() {
  double dev = 0.0;
  for_each_params(5, [&](const UnruhParams& p) {
    for (auto kind : {StateKind::psi_plus, StateKind::psi_minus, StateKind::psi_one}) {
      const auto state = entangled_state(kind, p);
      for (auto pair : {ObserverPair::alice_rob, ObserverPair::alice_antirob}) {
        const auto rho = reduce(state, PartitionSpec{pair});
        const auto a = hermitian_eigenvalues(partial_transpose(rho, Side::alice));
        const auto b = hermitian_eigenvalues(partial_transpose(rho, Side::other));
        for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
      }
    }
  });
  return dev;
}

double check_upper_bound() {
  double dev = 0.0;
  for_each_params(10, [&](const UnruhParams& p) {
    for (auto kind : {StateKind::psi_plus, StateKind::psi_minus, StateKind::psi_one})
      for (auto pair : {ObserverPair::alice_rob, ObserverPair::alice_antirob})
        dev = std::max(dev, negativity(entangled_state(kind, p), PartitionSpec{pair}) - 0.5);
  });
  return dev;
}

double check_bell_limit() {
  double dev = 0.0;
  const auto p = UnruhParams::from_modulus(0.0, 1.0);
  for (auto kind : {StateKind::psi_plus, StateKind::psi_minus}) {
    const auto state = entangled_state(kind, p);
    dev = std::max(dev, std::abs(negativity(state, PartitionSpec{ObserverPair::alice_rob}) - 0.5));
    dev = std::max(dev, negativity(state, PartitionSpec{ObserverPair::alice_antirob}));
  }
  return dev;
}

}  // namespace

std::vector<CheckResult> run_verification(double tolerance) {
  const std::vector<std::pair<std::string, std::function<double()>>> checks{
      {"car-rindler-modes", check_car_rindler},
      {"car-unruh-operators", check_car_unruh},
      {"vacuum-annihilation", check_vacuum_annihilation},
      {"excitation-closed-forms", check_excitations},
      {"density-alice-rob", [] { return check_density(ObserverPair::alice_rob, {Detector::full}); }},
      {"density-alice-antirob", [] { return check_density(ObserverPair::alice_antirob, {Detector::full}); }},
      {"density-sectors",
       [] {
         const std::vector<Detector> sectors{Detector::particle_only, Detector::antiparticle_only};
         return std::max(check_density(ObserverPair::alice_rob, sectors),
                         check_density(ObserverPair::alice_antirob, sectors));
       }},
      {"pt-block-equivalence", check_block_equivalence},
      {"psi1-closed-form", check_psi1_closed_form},
      {"psi1-vanishing-point", check_psi1_vanishing},
      {"psi1-infinite-acceleration", check_psi1_limit},
      {"psi1-sector-extinction", check_psi1_sector_extinction},
      {"psi-plus-minus-symmetry", check_symmetry},
      {"phase-invariance", check_phase_invariance},
      {"antiparticle-threshold", check_threshold},
      {"sector-monotonicity", check_monotonicity},
      {"transpose-side-invariance", check_transpose_side},
      {"negativity-upper-bound", check_upper_bound},
      {"bell-limit", check_bell_limit},
  };

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const auto& [name, fn] : checks) {
    const double dev = std::max(fn(), 0.0);
    results.push_back({name, dev, dev <= tolerance});
  }
  return results;
}

}  // namespace rqi
