#include "rqi/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace rqi {

namespace {

struct Trig {
  double c, s;
  Complex q_r, q_l;
  double qr2, ql2;

  explicit Trig(const UnruhParams& p)
      : c(std::cos(p.r())),
        s(std::sin(p.r())),
        q_r(p.q_right()),
        q_l(p.q_left()),
        qr2(std::norm(p.q_right())),
        ql2(std::norm(p.q_left())) {}
};

// Accumulates ½ Σ terms plus the Hermitian conjugate of off-diagonal terms.
class Builder {
 public:
  explicit Builder(Eigen::Index dim) : m_(Matrix::Zero(dim, dim)) {}

  Builder& add(std::string_view ket, std::string_view bra, Complex value) {
    const auto i = ket_index(ket);
    const auto j = ket_index(bra);
    m_(i, j) += 0.5 * value;
    if (i != j) m_(j, i) += 0.5 * std::conj(value);
    return *this;
  }

  Matrix take() { return std::move(m_); }

 private:
  Matrix m_;
};

void require_modulus(double q_right_abs) {
  if (!(q_right_abs >= 0.0 && q_right_abs <= 1.0))
    throw std::domain_error("|q_R| must lie in [0, 1], got " + std::to_string(q_right_abs));
}

Matrix alice_rob_full(const Trig& t) {
  const auto [c, s, q_r, q_l, qr2, ql2] = t;
  Builder b(8);
  b.add("000", "000", c * c * c * c)
      .add("010", "010", s * s * c * c)
      .add("001", "001", s * s * c * c)
      .add("011", "011", s * s * s * s)
      .add("110", "110", qr2 * c * c)
      .add("111", "111", qr2 * s * s)
      .add("110", "110", ql2 * s * s)
      .add("100", "100", ql2 * c * c)
      .add("000", "110", std::conj(q_r) * c * c * c)
      .add("001", "111", std::conj(q_r) * s * s * c)
      .add("001", "100", -std::conj(q_l) * c * c * s)
      .add("011", "110", -std::conj(q_l) * s * s * s)
      .add("111", "100", -q_r * std::conj(q_l) * s * c);
  return b.take();
}

Matrix alice_antirob_full(const Trig& t) {
  const auto [c, s, q_r, q_l, qr2, ql2] = t;
  Builder b(8);
  b.add("000", "000", c * c * c * c)
      .add("001", "001", s * s * c * c)
      .add("010", "010", s * s * c * c)
      .add("011", "011", s * s * s * s)
      .add("100", "100", qr2 * c * c)
      .add("110", "110", qr2 * s * s)
      .add("111", "111", ql2 * s * s)
      .add("110", "110", ql2 * c * c)
      .add("000", "110", std::conj(q_l) * c * c * c)
      .add("001", "111", std::conj(q_l) * s * s * c)
      .add("001", "100", std::conj(q_r) * c * c * s)
      .add("011", "110", std::conj(q_r) * s * s * s)
      .add("100", "111", q_r * std::conj(q_l) * s * c);
  return b.take();
}

Matrix alice_rob_particle(const Trig& t) {
  const auto [c, s, q_r, q_l, qr2, ql2] = t;
  Builder b(4);
  b.add("00", "00", c * c)
      .add("01", "01", s * s)
      .add("00", "11", std::conj(q_r) * c)
      .add("11", "11", qr2 + ql2 * s * s)
      .add("10", "10", ql2 * c * c);
  return b.take();
}

Matrix alice_antirob_particle(const Trig& t) {
  const auto [c, s, q_r, q_l, qr2, ql2] = t;
  Builder b(4);
  b.add("00", "00", c * c)
      .add("01", "01", s * s)
      .add("00", "11", std::conj(q_l) * c)
      .add("11", "11", ql2 + qr2 * s * s)
      .add("10", "10", qr2 * c * c);
  return b.take();
}

Matrix alice_rob_antiparticle(const Trig& t) {
  const auto [c, s, q_r, q_l, qr2, ql2] = t;
  Builder b(4);
  b.add("00", "00", c * c)
      .add("01", "01", s * s)
      .add("01", "10", -std::conj(q_l) * s)
      .add("10", "10", ql2 + qr2 * c * c)
      .add("11", "11", qr2 * s * s);
  return b.take();
}

Matrix alice_antirob_antiparticle(const Trig& t) {
  const auto [c, s, q_r, q_l, qr2, ql2] = t;
  Builder b(4);
  b.add("00", "00", c * c)
      .add("01", "01", s * s)
      .add("10", "10", qr2 + ql2 * c * c)
      .add("11", "11", ql2 * s * s)
      .add("01", "10", std::conj(q_r) * s);
  return b.take();
}

PtBlock block(std::vector<std::string> basis, std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = 0.5 * v;
    ++i;
  }
  return {std::move(basis), std::move(m)};
}

}  // namespace

DensityMatrix psi_plus_density_closed_form(const UnruhParams& params, ObserverPair pair, Detector detector) {
  const Trig t(params);
  const bool rob = pair == ObserverPair::alice_rob;
  switch (detector) {
    case Detector::full:
      return {{2, 2, 2}, rob ? alice_rob_full(t) : alice_antirob_full(t)};
    case Detector::particle_only:
      return {{2, 2}, rob ? alice_rob_particle(t) : alice_antirob_particle(t)};
    case Detector::antiparticle_only:
      return {{2, 2}, rob ? alice_rob_antiparticle(t) : alice_antirob_antiparticle(t)};
  }
  throw std::invalid_argument("unknown detector");
}

std::vector<PtBlock> psi_plus_pt_blocks(const UnruhParams& params, ObserverPair pair, Detector detector) {
  const auto [c, s, q_r, q_l, qr2, ql2] = Trig(params);
  const Complex zero{};
  const auto cj = [](Complex z) { return std::conj(z); };
  const bool rob = pair == ObserverPair::alice_rob;

  switch (detector) {
    case Detector::full:
      if (rob) {
        return {block({"100", "010", "111"}, {{c * c * ql2, c * c * c * cj(q_r), -cj(q_r) * q_l * s * c},
                                              {c * c * c * q_r, s * s * c * c, -q_l * s * s * s},
                                              {-q_r * cj(q_l) * s * c, -cj(q_l) * s * s * s, qr2 * s * s}}),
                block({"000", "101", "011"}, {{c * c * c * c, -q_l * c * c * s, zero},
                                              {-cj(q_l) * c * c * s, zero, cj(q_r) * s * s * c},
                                              {zero, q_r * s * s * c, s * s * s * s}})};
      }
      return {block({"111", "010", "100"}, {{s * s * ql2, s * s * s * cj(q_r), cj(q_r) * q_l * s * c},
                                            {s * s * s * q_r, c * c * s * s, q_l * c * c * c},
                                            {q_r * cj(q_l) * s * c, cj(q_l) * c * c * c, qr2 * c * c}}),
              block({"011", "101", "000"}, {{s * s * s * s, q_l * s * s * c, zero},
                                            {cj(q_l) * s * s * c, zero, cj(q_r) * c * c * s},
                                            {zero, q_r * c * c * s, c * c * c * c}})};
    case Detector::particle_only:
      if (rob) return {block({"10", "01"}, {{ql2 * c * c, cj(q_r) * c}, {q_r * c, s * s}})};
      return {block({"10", "01"}, {{qr2 * c * c, cj(q_l) * c}, {q_l * c, s * s}})};
    case Detector::antiparticle_only:
      if (rob) return {block({"11", "00"}, {{qr2 * s * s, -cj(q_l) * s}, {-q_l * s, c * c}})};
      return {block({"11", "00"}, {{ql2 * s * s, cj(q_r) * s}, {q_r * s, c * c}})};
  }
  throw std::invalid_argument("unknown detector");
}

double block_negativity(const std::vector<PtBlock>& blocks) {
  double total = 0.0;
  for (const auto& b : blocks) total += negative_part(b.entries);
  return total;
}

double analytic_negativity_psi1(const UnruhParams& params, ObserverPair pair) {
  const Trig t(params);
  const double cc = t.c * t.c;
  const double ss = t.s * t.s;
  if (pair == ObserverPair::alice_rob) return 0.5 * std::abs(t.qr2 * cc - t.ql2 * ss);
  return 0.5 * std::abs(t.ql2 * cc - t.qr2 * ss);
}

std::optional<double> psi1_vanishing_r(double q_right_abs) {
  require_modulus(q_right_abs);
  const double qr2 = q_right_abs * q_right_abs;
  if (qr2 < 0.5) return std::nullopt;
  const double tan2 = 1.0 / qr2 - 1.0;
  return std::min(std::atan(std::sqrt(std::max(tan2, 0.0))), max_r);
}

std::optional<double> antiparticle_transfer_threshold(double q_right_abs) {
  require_modulus(q_right_abs);
  const double qr2 = q_right_abs * q_right_abs;
  const double ql2 = 1.0 - qr2;
  if (ql2 >= qr2) return 0.0;
  const double ratio = ql2 / qr2;
  if (ratio < 0.5) return std::nullopt;
  return std::acos(std::sqrt(ratio));
}

std::array<SymmetryEntry, 6> symmetry_check_psi_plus_minus(const UnruhParams& params) {
  const auto plus = entangled_state(StateKind::psi_plus, params);
  const auto minus = entangled_state(StateKind::psi_minus, params);
  const auto neg = [](const CompositeState& st, ObserverPair pair, Detector det) {
    return negativity(st, PartitionSpec{pair, det});
  };
  const auto entry = [&](std::string relation, ObserverPair pair, Detector det_plus, Detector det_minus) {
    const double a = neg(plus, pair, det_plus);
    const double b = neg(minus, pair, det_minus);
    return SymmetryEntry{std::move(relation), a, b, std::abs(a - b)};
  };
  using enum Detector;
  const auto rob = ObserverPair::alice_rob;
  const auto antirob = ObserverPair::alice_antirob;
  return {entry("N+(AR+) = N-(AR-)", rob, particle_only, antiparticle_only),
          entry("N+(AaR+) = N-(AaR-)", antirob, particle_only, antiparticle_only),
          entry("N+(AR-) = N-(AR+)", rob, antiparticle_only, particle_only),
          entry("N+(AaR-) = N-(AaR+)", antirob, antiparticle_only, particle_only),
          entry("N+(AR) = N-(AR)", rob, full, full),
          entry("N+(AaR) = N-(AaR)", antirob, full, full)};
}

}  // namespace rqi
