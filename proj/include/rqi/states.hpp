#pragma once

// Minkowski vacuum, Unruh excitations and the three inertially maximally
// entangled states, written out in the Rindler occupation basis.

#include <string_view>

#include "rqi/unruh.hpp"

namespace rqi {

/// Basis index on rindler_register() of the shorthand ket |ijkl⟩, where the
/// digits are the occupations of I+, I-, II+, II- in that order.
std::size_t shorthand_index(std::string_view ijkl);

/// cos²r|0000⟩ - sin r cos r|0110⟩ + sin r cos r|1001⟩ - sin²r|1111⟩.
/// Throws std::domain_error if r is outside [0, π/4].
StateVector rindler_vacuum(double r);

// Closed forms:
//   |1⟩⁺_U = q_R[cos r|1000⟩ - sin r|1110⟩] + q_L[cos r|0010⟩ + sin r|1011⟩]
//   |1⟩⁻_U = q_L[cos r|0001⟩ - sin r|0111⟩] + q_R[cos r|0100⟩ + sin r|1101⟩]
StateVector unruh_particle(const UnruhParams& params);
StateVector unruh_antiparticle(const UnruhParams& params);

// The same states built as c_U^† |0⟩ and d_U^† |0⟩ from the operator algebra.
StateVector unruh_particle_from_operators(const UnruhParams& params);
StateVector unruh_antiparticle_from_operators(const UnruhParams& params);

enum class StateKind { psi_plus, psi_minus, psi_one };

std::string_view to_string(StateKind kind);
/// Accepts "psi-plus", "psi-minus", "psi1" (and "psi-one"); throws std::invalid_argument.
StateKind parse_state_kind(std::string_view name);

/// Alice ⊗ Rindler pure state. Alice is the leading two-level factor: for
/// Ψ± its levels are {|0⟩, |1⟩}, for Ψ₁ they are {|+⟩, |−⟩}. The amplitude of
/// |a⟩ ⊗ |s⟩ sits at a * 16 + s, with s a rindler_register() basis index.
struct CompositeState {
  StateKind kind;
  UnruhParams params;
  Vector amplitudes;

  static constexpr std::size_t alice_dimension = 2;

  const ModeRegister& rindler() const { return rindler_register(); }
  Complex amplitude(std::size_t alice, std::size_t rindler_index) const;
};

/// Ψ₊ = (|0⟩|0⟩_U + |1⟩|1⟩⁺_U)/√2, Ψ₋ = (|0⟩|0⟩_U + |1⟩|1⟩⁻_U)/√2,
/// Ψ₁ = (|+⟩|1⟩⁻_U + |−⟩|1⟩⁺_U)/√2.
CompositeState entangled_state(StateKind kind, const UnruhParams& params);

}  // namespace rqi
