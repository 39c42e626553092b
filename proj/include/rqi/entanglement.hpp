#pragma once

// Reduction of Alice ⊗ Rindler states to Alice-Rob / Alice-AntiRob density
// matrices, partial transposition and negativity.

#include <span>
#include <string_view>
#include <vector>

#include "rqi/states.hpp"

namespace rqi {

enum class ObserverPair { alice_rob, alice_antirob };
enum class Detector { full, particle_only, antiparticle_only };
enum class Side { alice, other };

/// How fermionic signs are treated when tracing out Rindler modes.
enum class TraceConvention {
  /// Plain tensor-product trace over occupation labels. Reproduces the
  /// closed-form Alice-Rob / Alice-AntiRob matrices and is the default.
  product,
  /// Kept modes are moved to the front of the register (traced ones to the
  /// tail) with the Jordan-Wigner parity of the reordering, then traced.
  jordan_wigner,
};

struct PartitionSpec {
  ObserverPair pair = ObserverPair::alice_rob;
  Detector detector = Detector::full;
  Side transpose_side = Side::alice;
  TraceConvention convention = TraceConvention::product;
};

std::string_view to_string(ObserverPair pair);
std::string_view to_string(Detector detector);
std::string_view to_string(Side side);
ObserverPair parse_observer_pair(std::string_view name);  // alice-rob | alice-antirob
Detector parse_detector(std::string_view name);           // full | particle | antiparticle
Side parse_side(std::string_view name);                   // alice | other

/// Rindler modes kept by a partition, in the order of the reduced basis
/// (particle before antiparticle).
std::vector<std::string_view> kept_modes(ObserverPair pair, Detector detector);

/// Hermitian, unit-trace, positive semidefinite matrix over a tensor product.
/// Index convention is big-endian: the first factor is most significant, so
/// in dims {2,2,2} the ket |ijk⟩ sits at 4i + 2j + k.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument when dims do not match the matrix or the
  /// Hermiticity (1e-12), trace (1e-12) or positivity (-1e-10) checks fail.
  DensityMatrix(std::vector<std::size_t> dims, Matrix entries);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const Matrix& entries() const { return entries_; }
  Eigen::Index dimension() const { return entries_.rows(); }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

 private:
  std::vector<std::size_t> dims_;
  Matrix entries_;
};

/// Index of a big-endian binary ket label such as "110" in a qubit product.
Eigen::Index ket_index(std::string_view bits);

/// Reduced state of Alice and the listed Rindler modes (in that order).
DensityMatrix reduce_to_modes(const CompositeState& state, std::span<const std::string_view> kept,
                              TraceConvention convention = TraceConvention::product);

DensityMatrix reduce(const CompositeState& state, const PartitionSpec& spec);

/// Transposes the indices of the listed tensor factors.
Matrix partial_transpose(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> factors);

/// Side::alice transposes factor 0, Side::other every remaining factor.
Matrix partial_transpose(const DensityMatrix& rho, Side side);

/// Eigenvalues in ascending order. Throws std::invalid_argument if m is not
/// square or deviates from Hermitian by more than 1e-10.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

/// Eigenvalues below this count as negative; [-1e-12, 0] is numerical zero.
inline constexpr double negative_eigenvalue_cutoff = 1e-12;

/// |sum of negative eigenvalues| of a Hermitian matrix.
double negative_part(const Matrix& m);

/// Magnitude of the sum of negative eigenvalues of the partial transpose.
double negativity(const DensityMatrix& rho, Side side = Side::alice);

double negativity(const CompositeState& state, const PartitionSpec& spec);

}  // namespace rqi
