#include "rqi/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace rqi {

namespace {

void require_same_register(const ModeRegister& a, const ModeRegister& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": register mismatch");
}

}  // namespace

ModeRegister::ModeRegister(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("ModeRegister: at least one mode required");
  if (labels_.size() > 20) throw std::invalid_argument("ModeRegister: too many modes for a dense basis");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("ModeRegister: empty mode label");
    if (!seen.insert(l).second) throw std::invalid_argument("ModeRegister: duplicate mode label '" + l + "'");
  }
}

bool ModeRegister::contains(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t ModeRegister::position(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown mode label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t ModeRegister::basis_index(std::span<const int> occupations) const {
  if (occupations.size() != labels_.size())
    throw std::invalid_argument("basis_index: expected " + std::to_string(labels_.size()) + " occupations, got " +
                                std::to_string(occupations.size()));
  std::size_t index = 0;
  for (std::size_t p = 0; p < occupations.size(); ++p) {
    if (occupations[p] != 0 && occupations[p] != 1)
      throw std::invalid_argument("basis_index: occupations must be 0 or 1");
    index |= static_cast<std::size_t>(occupations[p]) << p;
  }
  return index;
}

std::vector<int> ModeRegister::occupations(std::size_t index) const {
  if (index >= dimension()) throw std::out_of_range("occupations: index outside the Fock space");
  std::vector<int> occ(labels_.size());
  for (std::size_t p = 0; p < occ.size(); ++p) occ[p] = static_cast<int>((index >> p) & 1U);
  return occ;
}

StateVector::StateVector(ModeRegister r, Vector amps) : reg(std::move(r)), amplitudes(std::move(amps)) {
  if (static_cast<std::size_t>(amplitudes.size()) != reg.dimension())
    throw std::invalid_argument("StateVector: amplitude count does not match 2^n");
}

StateVector StateVector::zero(const ModeRegister& r) {
  return {r, Vector::Zero(static_cast<Eigen::Index>(r.dimension()))};
}

StateVector StateVector::basis(const ModeRegister& r, std::size_t index) {
  if (index >= r.dimension()) throw std::out_of_range("StateVector::basis: index outside the Fock space");
  auto v = zero(r);
  v.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

bool StateVector::is_normalized(double tol) const { return std::abs(amplitudes.squaredNorm() - 1.0) <= tol; }

OperatorMatrix::OperatorMatrix(ModeRegister r, Matrix m) : reg(std::move(r)), entries(std::move(m)) {
  const auto d = static_cast<Eigen::Index>(reg.dimension());
  if (entries.rows() != d || entries.cols() != d)
    throw std::invalid_argument("OperatorMatrix: dimensions do not match 2^n");
}

OperatorMatrix OperatorMatrix::identity(const ModeRegister& r) {
  const auto d = static_cast<Eigen::Index>(r.dimension());
  return {r, Matrix::Identity(d, d)};
}

OperatorMatrix OperatorMatrix::zero(const ModeRegister& r) {
  const auto d = static_cast<Eigen::Index>(r.dimension());
  return {r, Matrix::Zero(d, d)};
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  require_same_register(reg, other.reg, "operator+");
  entries += other.entries;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  require_same_register(reg, other.reg, "operator-");
  entries -= other.entries;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex s) {
  entries *= s;
  return *this;
}

OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
OperatorMatrix operator*(Complex s, OperatorMatrix a) { return a *= s; }

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_register(a.reg, b.reg, "operator*");
  return {a.reg, a.entries * b.entries};
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b + b * a; }

OperatorMatrix creation_matrix(const ModeRegister& reg, std::size_t position) {
  if (position >= reg.size()) throw std::out_of_range("creation_matrix: mode position outside register");
  auto op = OperatorMatrix::zero(reg);
  const std::size_t bit = std::size_t{1} << position;
  const std::size_t below = bit - 1;
  for (std::size_t s = 0; s < reg.dimension(); ++s) {
    if (s & bit) continue;
    const int parity = std::popcount(s & below) & 1;
    op.entries(static_cast<Eigen::Index>(s | bit), static_cast<Eigen::Index>(s)) = parity ? -1.0 : 1.0;
  }
  return op;
}

OperatorMatrix creation_matrix(const ModeRegister& reg, std::string_view mode) {
  return creation_matrix(reg, reg.position(mode));
}

OperatorMatrix annihilation_matrix(const ModeRegister& reg, std::size_t position) {
  return creation_matrix(reg, position).adjoint();
}

OperatorMatrix annihilation_matrix(const ModeRegister& reg, std::string_view mode) {
  return creation_matrix(reg, mode).adjoint();
}

StateVector apply(const OperatorMatrix& op, const StateVector& v) {
  require_same_register(op.reg, v.reg, "apply");
  return {v.reg, op.entries * v.amplitudes};
}

}  // namespace rqi
