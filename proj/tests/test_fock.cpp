#include "doctest.h"
#include "rqi/fock.hpp"

#include <array>
#include <random>

using namespace rqi;

namespace {

const ModeRegister four({"I+", "I-", "II+", "II-"});

// Hand-applied Jordan-Wigner rule on a bit pattern: returns {sign, new state}
// with sign 0 when the mode is already occupied.
std::pair<int, std::size_t> create_by_hand(std::size_t s, std::size_t p) {
  if ((s >> p) & 1U) return {0, s};
  int occupied_before = 0;
  for (std::size_t q = 0; q < p; ++q) occupied_before += static_cast<int>((s >> q) & 1U);
  return {occupied_before % 2 ? -1 : 1, s | (std::size_t{1} << p)};
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("register rejects duplicate and empty labels") {
  CHECK_THROWS_AS(ModeRegister({"a", "b", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(ModeRegister({}), std::invalid_argument);
  CHECK_THROWS_AS(ModeRegister({"a", ""}), std::invalid_argument);
  CHECK_THROWS_AS((void)four.position("III+"), std::out_of_range);
  CHECK(four.dimension() == 16);
}

TEST_CASE("basis_index") {
  const std::array<int, 4> empty{0, 0, 0, 0};
  const std::array<int, 4> full{1, 1, 1, 1};
  const std::array<int, 4> mixed{1, 0, 0, 1};
  CHECK(four.basis_index(empty) == 0);
  CHECK(four.basis_index(full) == 15);
  const auto idx = four.basis_index(mixed);
  CHECK(idx == 9);
  CHECK(four.occupations(idx) == std::vector<int>{1, 0, 0, 1});

  const std::array<int, 3> short_list{1, 0, 0};
  CHECK_THROWS_AS((void)four.basis_index(short_list), std::invalid_argument);
  const std::array<int, 4> not_binary{2, 0, 0, 0};
  CHECK_THROWS_AS((void)four.basis_index(not_binary), std::invalid_argument);

  SUBCASE("bijection over every pattern") {
    for (std::size_t i = 0; i < four.dimension(); ++i) CHECK(four.basis_index(four.occupations(i)) == i);
  }
}

TEST_CASE("single mode creation and annihilation") {
  const ModeRegister one({"c"});
  const auto cd = creation_matrix(one, "c");
  const auto c = annihilation_matrix(one, "c");
  const auto vac = StateVector::basis(one, 0);
  const auto occ = StateVector::basis(one, 1);

  CHECK(max_abs(apply(cd, vac).amplitudes - occ.amplitudes) == 0.0);
  CHECK(apply(cd, occ).norm() == 0.0);
  CHECK(apply(c, vac).norm() == 0.0);
  CHECK_THROWS_AS(creation_matrix(one, "d"), std::out_of_range);
}

TEST_CASE("creation matrices follow the hand-applied JW rule") {
  for (std::size_t p = 0; p < four.size(); ++p) {
    const auto cd = creation_matrix(four, p);
    for (std::size_t s = 0; s < four.dimension(); ++s) {
      const auto [sign, t] = create_by_hand(s, p);
      const auto column = apply(cd, StateVector::basis(four, s));
      auto expected = StateVector::zero(four);
      if (sign != 0) expected.amplitudes[static_cast<Eigen::Index>(t)] = sign;
      CHECK(max_abs(column.amplitudes - expected.amplitudes) == 0.0);
    }
  }

  // c†_{II-} |1000⟩ = -|1001⟩: one occupied mode precedes
  const auto out = apply(creation_matrix(four, "II-"), StateVector::basis(four, 0b0001));
  CHECK(out[0b1001].real() == -1.0);
}

TEST_CASE("c†_{I+} d†_{II-} |0⟩ = -d†_{II-} c†_{I+} |0⟩") {
  const auto c = creation_matrix(four, "I+");
  const auto d = creation_matrix(four, "II-");
  const auto vac = StateVector::basis(four, 0);
  const auto ab = apply(c, apply(d, vac));
  const auto ba = apply(d, apply(c, vac));
  CHECK(max_abs(ab.amplitudes + ba.amplitudes) == 0.0);
  // the composed product lands on |1001⟩ with the sign of the hand-applied rule
  const auto [s1, t1] = create_by_hand(0, 3);
  const auto [s2, t2] = create_by_hand(t1, 0);
  CHECK(ab[t2].real() == doctest::Approx(s1 * s2));
  CHECK(t2 == 0b1001);
}

TEST_CASE("canonical anticommutation relations") {
  const auto id = OperatorMatrix::identity(four).entries;
  for (std::size_t p = 0; p < 4; ++p) {
    const auto cp = annihilation_matrix(four, p);
    CHECK(max_abs((creation_matrix(four, p) * creation_matrix(four, p)).entries) == 0.0);
    for (std::size_t q = 0; q < 4; ++q) {
      const auto cq = annihilation_matrix(four, q);
      const Matrix expected = p == q ? id : Matrix::Zero(16, 16);
      CHECK(max_abs(anticommutator(cp, cq.adjoint()).entries - expected) <= 1e-14);
      CHECK(max_abs(anticommutator(cp, cq).entries) <= 1e-14);
    }
  }
}

TEST_CASE("apply") {
  const auto v = StateVector::basis(four, 5);
  CHECK(max_abs(apply(OperatorMatrix::identity(four), v).amplitudes - v.amplitudes) == 0.0);
  CHECK(apply(creation_matrix(four, "I-"), StateVector::basis(four, 15)).norm() == 0.0);

  const ModeRegister other({"a", "b", "c", "d"});
  CHECK_THROWS_AS(apply(OperatorMatrix::identity(other), v), std::invalid_argument);

  // no implicit renormalization
  StateVector half(four, 0.5 * v.amplitudes);
  CHECK(apply(OperatorMatrix::identity(four), half).norm() == doctest::Approx(0.5));
  CHECK_FALSE(half.is_normalized());
}

TEST_CASE("swapping adjacent modes changes operators by a single fermionic swap sign") {
  // Property: for every adjacent pair (k, k+1), the operators built on the
  // swapped register equal S A S^{-1}, with S the relabelling permutation
  // carrying (-1)^{n_k n_{k+1}}.
  const std::vector<std::string> labels{"a", "b", "c", "d", "e"};
  const ModeRegister base(labels);
  for (std::size_t k = 0; k + 1 < labels.size(); ++k) {
    auto swapped_labels = labels;
    std::swap(swapped_labels[k], swapped_labels[k + 1]);
    const ModeRegister swapped(swapped_labels);

    const auto d = static_cast<Eigen::Index>(base.dimension());
    Matrix s = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < base.dimension(); ++i) {
      const auto occ = base.occupations(i);
      std::vector<int> moved(occ.size());
      for (std::size_t p = 0; p < occ.size(); ++p) moved[swapped.position(labels[p])] = occ[p];
      const double sign = (occ[k] && occ[k + 1]) ? -1.0 : 1.0;
      s(static_cast<Eigen::Index>(swapped.basis_index(moved)), static_cast<Eigen::Index>(i)) = sign;
    }
    for (const auto& label : labels) {
      const Matrix rebuilt = s * creation_matrix(base, label).entries * s.adjoint();
      CHECK(max_abs(rebuilt - creation_matrix(swapped, label).entries) == 0.0);
    }
  }
}

TEST_CASE("random superpositions: apply is linear") {
  std::mt19937 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Vector a(16), b(16);
    for (int i = 0; i < 16; ++i) {
      a[i] = Complex(g(rng), g(rng));
      b[i] = Complex(g(rng), g(rng));
    }
    const Complex k(g(rng), g(rng));
    const auto op = creation_matrix(four, static_cast<std::size_t>(trial % 4));
    const auto lhs = apply(op, StateVector(four, a + k * b));
    const Vector rhs = apply(op, StateVector(four, a)).amplitudes + k * apply(op, StateVector(four, b)).amplitudes;
    CHECK(max_abs(lhs.amplitudes - rhs) <= 1e-12);
  }
}
