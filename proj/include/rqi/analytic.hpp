#pragma once

// Closed-form density matrices, partial-transpose blocks and negativities.
// These are the reference expressions the numerical pipeline is checked
// against; nothing here calls reduce() except symmetry_check_psi_plus_minus.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rqi/entanglement.hpp"

namespace rqi {

/// Closed-form reduced density matrix of Ψ₊ for a pair and detector, in the
/// basis |i⟩_M|j⟩⁺|k⟩⁻ (full) or |i⟩_M|j⟩ (one sector).
DensityMatrix psi_plus_density_closed_form(const UnruhParams& params, ObserverPair pair,
                                           Detector detector = Detector::full);

/// A principal sub-block of a partial transpose, with its basis kets.
struct PtBlock {
  std::vector<std::string> basis;
  Matrix entries;
};

/// The blocks of (ρ⁺)^{T_A} that carry all negative eigenvalues: two 3×3
/// blocks for the full detector, one 2×2 block for a single sector.
std::vector<PtBlock> psi_plus_pt_blocks(const UnruhParams& params, ObserverPair pair,
                                        Detector detector = Detector::full);

/// Sum of |negative eigenvalues| over a set of blocks.
double block_negativity(const std::vector<PtBlock>& blocks);

/// Ψ₁ with the full detector: ½| |q_R|²C² - |q_L|²S² | for Alice-Rob and
/// ½| |q_L|²C² - |q_R|²S² | for Alice-AntiRob.
double analytic_negativity_psi1(const UnruhParams& params, ObserverPair pair);

/// r where the Ψ₁ Alice-AntiRob negativity vanishes, tan²r = 1/|q_R|² - 1.
/// Empty when that r lies beyond π/4 (|q_R|² < 1/2).
std::optional<double> psi1_vanishing_r(double q_right_abs);

/// Onset of entanglement in the Alice-Rob antiparticle sector of Ψ₊,
/// cos²r = |q_L|²/|q_R|². Empty when |q_R|² > 2/3 (never reached on
/// [0, π/4]); 0 when |q_L| ≥ |q_R| (present for every r > 0).
std::optional<double> antiparticle_transfer_threshold(double q_right_abs);

struct SymmetryEntry {
  std::string relation;
  double psi_plus;
  double psi_minus;
  double difference;
};

/// The six Ψ₊ ↔ Ψ₋ negativity equalities (particle and antiparticle roles
/// swapped), evaluated through the full reduction pipeline.
std::array<SymmetryEntry, 6> symmetry_check_psi_plus_minus(const UnruhParams& params);

}  // namespace rqi
