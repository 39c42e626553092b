#pragma once

// Bogoliubov layer between Unruh and Rindler modes for a single frequency.

#include <numbers>

#include "rqi/fock.hpp"

namespace rqi {

namespace mode {
inline constexpr std::string_view particle_I = "I+";
inline constexpr std::string_view antiparticle_I = "I-";
inline constexpr std::string_view particle_II = "II+";
inline constexpr std::string_view antiparticle_II = "II-";
}  // namespace mode

inline constexpr double max_r = std::numbers::pi / 4;

/// The four Rindler modes of one frequency, ordered R sector (I+, II-) then
/// L sector (I-, II+). Operators of the R and L Unruh modes each touch one
/// contiguous pair, which makes the register equivalent to the R ⊗ L product.
const ModeRegister& rindler_register();

/// Acceleration parameter r ∈ [0, π/4] and the right/left mixing weights.
class UnruhParams {
 public:
  /// Throws std::domain_error if r is outside [0, π/4] or |q_R|²+|q_L|² ≠ 1.
  UnruhParams(double r, Complex q_right, Complex q_left);

  /// q_R = |q_R| e^{i phase}, q_L = sqrt(1 - |q_R|²).
  static UnruhParams from_modulus(double r, double q_right_abs, double phase = 0.0);

  double r() const { return r_; }
  Complex q_right() const { return q_right_; }
  Complex q_left() const { return q_left_; }
  double q_right_abs() const { return std::abs(q_right_); }
  double q_left_abs() const { return std::abs(q_left_); }

 private:
  double r_;
  Complex q_right_;
  Complex q_left_;
};

/// r = arctan(exp(-π Ω / a)) for a massless mode.
double r_of_acceleration(double omega, double acceleration);

struct BogoCoefficients {
  Complex alpha_I, beta_I, gamma_I, eta_I;
  Complex alpha_II, beta_II, gamma_II, eta_II;
};

/// Monochromatic Minkowski/Rindler coefficients with tan r = exp(-π E_Ω).
/// Throws std::domain_error unless minkowski_energy > 0.
BogoCoefficients bogoliubov_coefficients(double rindler_energy, double minkowski_energy, double theta);

struct UnruhAnnihilators {
  OperatorMatrix c_right;
  OperatorMatrix c_left;
  OperatorMatrix d_right;
  OperatorMatrix d_left;
};

/// C_R = cos r c_I - sin r d_II^†,  C_L = cos r c_II - sin r d_I^†,
/// D_R^† = sin r c_I + cos r d_II^†,  D_L^† = sin r c_II + cos r d_I^†.
/// The register must hold exactly the four Rindler labels; any order works
/// for the algebra, but states are only defined on rindler_register().
UnruhAnnihilators unruh_annihilators(const ModeRegister& reg, double r);

struct UnruhCreators {
  OperatorMatrix particle;      // c_U^† = q_R C_R^† + q_L C_L^†
  OperatorMatrix antiparticle;  // d_U^† = q_L D_R^† + q_R D_L^†
};

UnruhCreators unruh_creators(const ModeRegister& reg, const UnruhParams& params);

}  // namespace rqi
