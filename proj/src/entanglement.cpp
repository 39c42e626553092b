#include "rqi/entanglement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rqi {

std::string_view to_string(ObserverPair pair) {
  switch (pair) {
    case ObserverPair::alice_rob:
      return "alice-rob";
    case ObserverPair::alice_antirob:
      return "alice-antirob";
  }
  throw std::invalid_argument("unknown observer pair");
}

std::string_view to_string(Detector detector) {
  switch (detector) {
    case Detector::full:
      return "full";
    case Detector::particle_only:
      return "particle";
    case Detector::antiparticle_only:
      return "antiparticle";
  }
  throw std::invalid_argument("unknown detector");
}

std::string_view to_string(Side side) { return side == Side::alice ? "alice" : "other"; }

ObserverPair parse_observer_pair(std::string_view name) {
  if (name == "alice-rob") return ObserverPair::alice_rob;
  if (name == "alice-antirob") return ObserverPair::alice_antirob;
  throw std::invalid_argument("unknown observer pair '" + std::string(name) + "'");
}

Detector parse_detector(std::string_view name) {
  if (name == "full") return Detector::full;
  if (name == "particle" || name == "particle-only") return Detector::particle_only;
  if (name == "antiparticle" || name == "antiparticle-only") return Detector::antiparticle_only;
  throw std::invalid_argument("unknown detector '" + std::string(name) + "'");
}

Side parse_side(std::string_view name) {
  if (name == "alice") return Side::alice;
  if (name == "other") return Side::other;
  throw std::invalid_argument("unknown transpose side '" + std::string(name) + "'");
}

std::vector<std::string_view> kept_modes(ObserverPair pair, Detector detector) {
  const bool rob = pair == ObserverPair::alice_rob;
  const std::string_view particle = rob ? mode::particle_I : mode::particle_II;
  const std::string_view antiparticle = rob ? mode::antiparticle_I : mode::antiparticle_II;
  switch (detector) {
    case Detector::full:
      return {particle, antiparticle};
    case Detector::particle_only:
      return {particle};
    case Detector::antiparticle_only:
      return {antiparticle};
  }
  throw std::invalid_argument("unknown detector");
}

DensityMatrix::DensityMatrix(std::vector<std::size_t> dims, Matrix entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  if (dims_.empty()) throw std::invalid_argument("DensityMatrix: tensor-factor dimensions required");
  const auto total = std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
  if (entries_.rows() != entries_.cols() || static_cast<std::size_t>(entries_.rows()) != total)
    throw std::invalid_argument("DensityMatrix: matrix shape does not match factor dimensions");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(entries_.trace() - 1.0) > 1e-12) throw std::invalid_argument("DensityMatrix: trace is not 1");
  if (hermitian_eigenvalues(entries_).front() < -1e-10)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

Eigen::Index ket_index(std::string_view bits) {
  Eigen::Index index = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') throw std::invalid_argument("ket label must be binary, got '" + std::string(bits) + "'");
    index = 2 * index + (b - '0');
  }
  return index;
}

DensityMatrix reduce_to_modes(const CompositeState& state, std::span<const std::string_view> kept,
                              TraceConvention convention) {
  const auto& reg = state.rindler();
  const std::size_t n = reg.size();

  std::vector<std::size_t> kept_pos;
  for (auto label : kept) {
    const auto p = reg.position(label);
    if (std::find(kept_pos.begin(), kept_pos.end(), p) != kept_pos.end())
      throw std::invalid_argument("reduce: mode listed twice");
    kept_pos.push_back(p);
  }
  std::vector<std::size_t> traced_pos;
  for (std::size_t p = 0; p < n; ++p)
    if (std::find(kept_pos.begin(), kept_pos.end(), p) == kept_pos.end()) traced_pos.push_back(p);

  // target order for the Jordan-Wigner variant: kept modes first, then the rest
  std::vector<std::size_t> target_rank(n);
  for (std::size_t i = 0; i < kept_pos.size(); ++i) target_rank[kept_pos[i]] = i;
  for (std::size_t i = 0; i < traced_pos.size(); ++i) target_rank[traced_pos[i]] = kept_pos.size() + i;

  const auto kept_dim = Eigen::Index{1} << kept_pos.size();
  const auto traced_dim = Eigen::Index{1} << traced_pos.size();
  const auto alice_dim = static_cast<Eigen::Index>(CompositeState::alice_dimension);

  // rows: (alice, kept) big-endian; cols: traced configuration
  Matrix psi = Matrix::Zero(alice_dim * kept_dim, traced_dim);
  for (std::size_t s = 0; s < reg.dimension(); ++s) {
    Eigen::Index k = 0;
    for (auto p : kept_pos) k = 2 * k + static_cast<Eigen::Index>((s >> p) & 1U);
    Eigen::Index t = 0;
    for (auto p : traced_pos) t = 2 * t + static_cast<Eigen::Index>((s >> p) & 1U);

    double sign = 1.0;
    if (convention == TraceConvention::jordan_wigner) {
      // parity of the permutation restricted to occupied modes
      int inversions = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (!((s >> a) & 1U)) continue;
        for (std::size_t b = a + 1; b < n; ++b)
          if (((s >> b) & 1U) && target_rank[a] > target_rank[b]) ++inversions;
      }
      if (inversions & 1) sign = -1.0;
    }
    for (Eigen::Index a = 0; a < alice_dim; ++a)
      psi(a * kept_dim + k, t) += sign * state.amplitude(static_cast<std::size_t>(a), s);
  }

  std::vector<std::size_t> dims{CompositeState::alice_dimension};
  dims.insert(dims.end(), kept_pos.size(), 2);
  return {std::move(dims), psi * psi.adjoint()};
}

DensityMatrix reduce(const CompositeState& state, const PartitionSpec& spec) {
  const auto kept = kept_modes(spec.pair, spec.detector);
  return reduce_to_modes(state, kept, spec.convention);
}

Matrix partial_transpose(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> factors) {
  if (dims.empty()) throw std::invalid_argument("partial_transpose: tensor-factor dimensions required");
  const auto total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != total)
    throw std::invalid_argument("partial_transpose: matrix shape does not match factor dimensions");
  for (auto f : factors)
    if (f >= dims.size()) throw std::out_of_range("partial_transpose: factor index out of range");

  // stride of each factor in the big-endian flattening
  std::vector<std::size_t> stride(dims.size());
  std::size_t acc = 1;
  for (std::size_t f = dims.size(); f-- > 0;) {
    stride[f] = acc;
    acc *= dims[f];
  }

  Matrix out(m.rows(), m.cols());
  for (Eigen::Index row = 0; row < m.rows(); ++row) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      auto r = static_cast<std::size_t>(row);
      auto c = static_cast<std::size_t>(col);
      for (auto f : factors) {
        const std::size_t rd = (r / stride[f]) % dims[f];
        const std::size_t cd = (c / stride[f]) % dims[f];
        r = r - rd * stride[f] + cd * stride[f];
        c = c - cd * stride[f] + rd * stride[f];
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(row, col);
    }
  }
  return out;
}

Matrix partial_transpose(const DensityMatrix& rho, Side side) {
  std::vector<std::size_t> factors;
  if (side == Side::alice) {
    factors.push_back(0);
  } else {
    for (std::size_t f = 1; f < rho.dims().size(); ++f) factors.push_back(f);
  }
  return partial_transpose(rho.entries(), rho.dims(), factors);
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  if (m.size() == 0) return {};
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigenvalues: solver did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

double negative_part(const Matrix& m) {
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(m))
    if (ev < -negative_eigenvalue_cutoff) sum += ev;
  return sum == 0.0 ? 0.0 : -sum;
}

double negativity(const DensityMatrix& rho, Side side) { return negative_part(partial_transpose(rho, side)); }

double negativity(const CompositeState& state, const PartitionSpec& spec) {
  return negativity(reduce(state, spec), spec.transpose_side);
}

}  // namespace rqi
