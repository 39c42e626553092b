#pragma once

// Fermionic occupation-number algebra on a small, ordered set of modes.
//
// Basis states are indexed by bitmask: bit p holds the occupation of the
// mode at register position p. Creation operators carry the Jordan-Wigner
// string in register order, so c_p^† acting on a basis state picks up
// (-1)^(number of occupied modes at positions < p).

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace rqi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ordered, immutable list of mode labels. The order fixes the sign convention.
class ModeRegister {
 public:
  explicit ModeRegister(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  std::size_t dimension() const { return std::size_t{1} << labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(std::string_view label) const;
  /// Throws std::out_of_range for unknown labels.
  std::size_t position(std::string_view label) const;

  /// Occupations are listed in register order; each must be 0 or 1.
  std::size_t basis_index(std::span<const int> occupations) const;
  std::vector<int> occupations(std::size_t index) const;

  bool operator==(const ModeRegister&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Amplitudes over the 2^n occupation basis of a register.
struct StateVector {
  ModeRegister reg;
  Vector amplitudes;

  StateVector(ModeRegister r, Vector amps);

  static StateVector zero(const ModeRegister& r);
  static StateVector basis(const ModeRegister& r, std::size_t index);

  double norm() const { return amplitudes.norm(); }
  bool is_normalized(double tol = 1e-12) const;
  Complex operator[](std::size_t index) const { return amplitudes[static_cast<Eigen::Index>(index)]; }
};

/// Dense operator on the Fock space of a register.
struct OperatorMatrix {
  ModeRegister reg;
  Matrix entries;

  OperatorMatrix(ModeRegister r, Matrix m);

  static OperatorMatrix identity(const ModeRegister& r);
  static OperatorMatrix zero(const ModeRegister& r);

  OperatorMatrix adjoint() const { return {reg, entries.adjoint()}; }

  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(Complex s);
};

OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b);
OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b);
OperatorMatrix operator*(Complex s, OperatorMatrix a);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

/// {a, b} = ab + ba
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix creation_matrix(const ModeRegister& reg, std::string_view mode);
OperatorMatrix creation_matrix(const ModeRegister& reg, std::size_t position);
OperatorMatrix annihilation_matrix(const ModeRegister& reg, std::string_view mode);
OperatorMatrix annihilation_matrix(const ModeRegister& reg, std::size_t position);

/// Matrix-vector product. No renormalization.
StateVector apply(const OperatorMatrix& op, const StateVector& v);

}  // namespace rqi
