#include "rqi/unruh.hpp"

#include <cmath>
#include <stdexcept>

namespace rqi {

const ModeRegister& rindler_register() {
  static const ModeRegister reg({std::string(mode::particle_I), std::string(mode::antiparticle_II),
                                 std::string(mode::antiparticle_I), std::string(mode::particle_II)});
  return reg;
}

UnruhParams::UnruhParams(double r, Complex q_right, Complex q_left) : r_(r), q_right_(q_right), q_left_(q_left) {
  if (!std::isfinite(r) || r < 0.0 || r > max_r)
    throw std::domain_error("r must lie in [0, pi/4], got " + std::to_string(r));
  const double norm = std::norm(q_right) + std::norm(q_left);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12)
    throw std::domain_error("|q_R|^2 + |q_L|^2 must equal 1, got " + std::to_string(norm));
}

UnruhParams UnruhParams::from_modulus(double r, double q_right_abs, double phase) {
  if (!(q_right_abs >= 0.0 && q_right_abs <= 1.0))
    throw std::domain_error("|q_R| must lie in [0, 1], got " + std::to_string(q_right_abs));
  const double q_left_abs = std::sqrt(1.0 - q_right_abs * q_right_abs);
  return {r, std::polar(q_right_abs, phase), Complex(q_left_abs, 0.0)};
}

double r_of_acceleration(double omega, double acceleration) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::domain_error("mode frequency must be positive");
  if (!(acceleration > 0.0)) throw std::domain_error("acceleration must be positive");
  // a = +inf is allowed and gives π/4
  return std::atan(std::exp(-std::numbers::pi * omega / acceleration));
}

BogoCoefficients bogoliubov_coefficients(double rindler_energy, double minkowski_energy, double theta) {
  if (!(minkowski_energy > 0.0) || !std::isfinite(minkowski_energy))
    throw std::domain_error("Minkowski energy must be positive");
  if (!std::isfinite(rindler_energy) || !std::isfinite(theta))
    throw std::domain_error("Rindler energy and theta must be finite");

  const double r = std::atan(std::exp(-std::numbers::pi * rindler_energy));
  const Complex prefactor = std::polar(1.0, theta * rindler_energy) * Complex(1.0, 1.0) /
                            (2.0 * std::sqrt(std::numbers::pi * minkowski_energy));
  BogoCoefficients b{};
  b.alpha_I = prefactor * std::cos(r);
  b.beta_I = -prefactor * std::sin(r);
  b.gamma_I = -std::conj(b.beta_I);
  b.eta_I = std::conj(b.alpha_I);
  b.alpha_II = std::conj(b.alpha_I);
  b.beta_II = std::conj(b.beta_I);
  b.gamma_II = std::conj(b.gamma_I);
  b.eta_II = std::conj(b.eta_I);
  return b;
}

namespace {

void require_rindler_labels(const ModeRegister& reg) {
  if (reg.size() != 4 || !reg.contains(mode::particle_I) || !reg.contains(mode::antiparticle_I) ||
      !reg.contains(mode::particle_II) || !reg.contains(mode::antiparticle_II))
    throw std::invalid_argument("Unruh operators need a register of exactly {I+, I-, II+, II-}");
}

}  // namespace

UnruhAnnihilators unruh_annihilators(const ModeRegister& reg, double r) {
  require_rindler_labels(reg);
  if (!std::isfinite(r)) throw std::domain_error("r must be finite");
  const double c = std::cos(r);
  const double s = std::sin(r);

  const auto c_I = annihilation_matrix(reg, mode::particle_I);
  const auto d_I = annihilation_matrix(reg, mode::antiparticle_I);
  const auto c_II = annihilation_matrix(reg, mode::particle_II);
  const auto d_II = annihilation_matrix(reg, mode::antiparticle_II);

  auto c_right = c * c_I - s * d_II.adjoint();
  auto c_left = c * c_II - s * d_I.adjoint();
  auto d_right_dag = s * c_I + c * d_II.adjoint();
  auto d_left_dag = s * c_II + c * d_I.adjoint();
  return {std::move(c_right), std::move(c_left), d_right_dag.adjoint(), d_left_dag.adjoint()};
}

UnruhCreators unruh_creators(const ModeRegister& reg, const UnruhParams& params) {
  const auto ops = unruh_annihilators(reg, params.r());
  const Complex q_r = params.q_right();
  const Complex q_l = params.q_left();
  // the antiparticle weights are swapped (p_L = q_R, p_R = q_L) so that both
  // excitations refer to the same wedges
  return {q_r * ops.c_right.adjoint() + q_l * ops.c_left.adjoint(),
          q_l * ops.d_right.adjoint() + q_r * ops.d_left.adjoint()};
}

}  // namespace rqi
