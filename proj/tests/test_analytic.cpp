#include "doctest.h"
#include "rqi/analytic.hpp"

#include <cmath>

using namespace rqi;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<UnruhParams> grid() {
  std::vector<UnruhParams> out;
  for (double r : {0.0, 0.2, 0.55, max_r}) {
    for (double q : {1.0, 0.9, 0.75, std::sqrt(0.5), 0.4}) {
      out.emplace_back(r, std::polar(q, -0.6), std::polar(std::sqrt(1 - q * q), 2.1));
    }
  }
  return out;
}

const std::vector<std::pair<ObserverPair, Detector>> partitions{
    {ObserverPair::alice_rob, Detector::full},
    {ObserverPair::alice_rob, Detector::particle_only},
    {ObserverPair::alice_rob, Detector::antiparticle_only},
    {ObserverPair::alice_antirob, Detector::full},
    {ObserverPair::alice_antirob, Detector::particle_only},
    {ObserverPair::alice_antirob, Detector::antiparticle_only},
};

}  // namespace

TEST_CASE("closed-form Ψ₊ density matrices equal the reduction") {
  for (const auto& p : grid()) {
    const auto s = entangled_state(StateKind::psi_plus, p);
    for (const auto& [pair, det] : partitions) {
      const auto closed = psi_plus_density_closed_form(p, pair, det);
      CHECK(max_abs(closed.entries() - reduce(s, PartitionSpec{pair, det}).entries()) <= 1e-14);
    }
  }
}

TEST_CASE("partial-transpose blocks are sub-blocks of the full transpose") {
  for (const auto& p : grid()) {
    const auto s = entangled_state(StateKind::psi_plus, p);
    for (const auto& [pair, det] : partitions) {
      const Matrix pt = partial_transpose(reduce(s, PartitionSpec{pair, det}), Side::alice);
      const auto blocks = psi_plus_pt_blocks(p, pair, det);
      CHECK(blocks.size() == (det == Detector::full ? 2U : 1U));
      for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.basis.size(); ++i) {
          for (std::size_t j = 0; j < b.basis.size(); ++j) {
            const auto bi = static_cast<Eigen::Index>(i), bj = static_cast<Eigen::Index>(j);
            CHECK(std::abs(b.entries(bi, bj) - pt(ket_index(b.basis[i]), ket_index(b.basis[j]))) <= 1e-14);
          }
        }
      }
      CHECK(block_negativity(blocks) == doctest::Approx(negativity(s, PartitionSpec{pair, det})).epsilon(1e-10));
    }
  }
}

TEST_CASE("Ψ₁ closed-form negativity") {
  for (const auto& p : grid()) {
    const auto s = entangled_state(StateKind::psi_one, p);
    for (auto pair : {ObserverPair::alice_rob, ObserverPair::alice_antirob}) {
      CHECK(negativity(s, PartitionSpec{pair}) ==
            doctest::Approx(analytic_negativity_psi1(p, pair)).epsilon(1e-10));
    }
  }
  SUBCASE("infinite acceleration: ½| |q_R|² - |q_L|² | / 2") {
    const auto p = UnruhParams::from_modulus(max_r, 0.9);
    CHECK(analytic_negativity_psi1(p, ObserverPair::alice_rob) == doctest::Approx(0.5 * 0.5 * (0.81 - 0.19)));
    CHECK(analytic_negativity_psi1(p, ObserverPair::alice_antirob) == doctest::Approx(0.5 * 0.5 * (0.81 - 0.19)));
  }
}

TEST_CASE("Ψ₁ vanishing point") {
  // arctan(sqrt(1/0.81 - 1)), mpmath
  CHECK(psi1_vanishing_r(0.9).value() == doctest::Approx(0.45102681179626236).epsilon(1e-14));
  CHECK(psi1_vanishing_r(1.0).value() == 0.0);
  CHECK(psi1_vanishing_r(std::sqrt(0.5)).value() == doctest::Approx(max_r));
  CHECK_FALSE(psi1_vanishing_r(0.5).has_value());
  CHECK_THROWS_AS(psi1_vanishing_r(1.2), std::domain_error);

  const double rv = psi1_vanishing_r(0.9).value();
  const auto at = entangled_state(StateKind::psi_one, UnruhParams::from_modulus(rv, 0.9));
  CHECK(negativity(at, PartitionSpec{ObserverPair::alice_antirob}) <= 1e-12);
}

TEST_CASE("antiparticle transfer threshold") {
  // arccos(sqrt(0.4 / 0.6))
  CHECK(antiparticle_transfer_threshold(std::sqrt(0.6)).value() == doctest::Approx(0.6154797086703874).epsilon(1e-12));
  CHECK(antiparticle_transfer_threshold(std::sqrt(2.0 / 3.0)).value() == doctest::Approx(max_r).epsilon(1e-10));
  CHECK_FALSE(antiparticle_transfer_threshold(std::sqrt(0.7)).has_value());
  CHECK_FALSE(antiparticle_transfer_threshold(1.0).has_value());
  // fl(√0.5)² = 0.5 + 1.1e-16, which puts the exact onset near 2.1e-8
  CHECK(antiparticle_transfer_threshold(std::sqrt(0.5)).value() <= 3e-8);
  CHECK(antiparticle_transfer_threshold(0.7).value() == 0.0);
  CHECK(antiparticle_transfer_threshold(0.3).value() == 0.0);

  const PartitionSpec anti{ObserverPair::alice_rob, Detector::antiparticle_only};
  const double q = std::sqrt(0.6);
  CHECK(negativity(entangled_state(StateKind::psi_plus, UnruhParams::from_modulus(0.6, q)), anti) == 0.0);
  CHECK(negativity(entangled_state(StateKind::psi_plus, UnruhParams::from_modulus(max_r, q)), anti) ==
        doctest::Approx(0.0291287847477920).epsilon(1e-8));
}

TEST_CASE("Ψ₊ / Ψ₋ symmetry") {
  for (const auto& p : grid()) {
    const auto table = symmetry_check_psi_plus_minus(p);
    for (const auto& e : table) {
      CHECK(e.difference <= 1e-12);
      CHECK(e.difference == doctest::Approx(std::abs(e.psi_plus - e.psi_minus)));
      CHECK_FALSE(e.relation.empty());
    }
  }
}
