#include "rqi/states.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rqi {

namespace {

constexpr std::array<std::string_view, 4> shorthand_order{mode::particle_I, mode::antiparticle_I, mode::particle_II,
                                                          mode::antiparticle_II};

void require_physical_r(double r) {
  if (!std::isfinite(r) || r < 0.0 || r > max_r)
    throw std::domain_error("r must lie in [0, pi/4], got " + std::to_string(r));
}

StateVector from_terms(std::initializer_list<std::pair<std::string_view, Complex>> terms) {
  auto v = StateVector::zero(rindler_register());
  for (const auto& [ket, amp] : terms) v.amplitudes[static_cast<Eigen::Index>(shorthand_index(ket))] += amp;
  return v;
}

}  // namespace

std::size_t shorthand_index(std::string_view ijkl) {
  if (ijkl.size() != shorthand_order.size())
    throw std::invalid_argument("shorthand ket needs four occupation digits, got '" + std::string(ijkl) + "'");
  const auto& reg = rindler_register();
  std::vector<int> occ(reg.size(), 0);
  for (std::size_t i = 0; i < ijkl.size(); ++i) {
    if (ijkl[i] != '0' && ijkl[i] != '1')
      throw std::invalid_argument("shorthand ket digits must be 0 or 1, got '" + std::string(ijkl) + "'");
    occ[reg.position(shorthand_order[i])] = ijkl[i] - '0';
  }
  return reg.basis_index(occ);
}

StateVector rindler_vacuum(double r) {
  require_physical_r(r);
  const double c = std::cos(r);
  const double s = std::sin(r);
  return from_terms({{"0000", c * c}, {"0110", -s * c}, {"1001", s * c}, {"1111", -s * s}});
}

StateVector unruh_particle(const UnruhParams& params) {
  const double c = std::cos(params.r());
  const double s = std::sin(params.r());
  const Complex q_r = params.q_right();
  const Complex q_l = params.q_left();
  return from_terms({{"1000", q_r * c}, {"1110", -q_r * s}, {"0010", q_l * c}, {"1011", q_l * s}});
}

StateVector unruh_antiparticle(const UnruhParams& params) {
  const double c = std::cos(params.r());
  const double s = std::sin(params.r());
  const Complex q_r = params.q_right();
  const Complex q_l = params.q_left();
  return from_terms({{"0001", q_l * c}, {"0111", -q_l * s}, {"0100", q_r * c}, {"1101", q_r * s}});
}

StateVector unruh_particle_from_operators(const UnruhParams& params) {
  return apply(unruh_creators(rindler_register(), params).particle, rindler_vacuum(params.r()));
}

StateVector unruh_antiparticle_from_operators(const UnruhParams& params) {
  return apply(unruh_creators(rindler_register(), params).antiparticle, rindler_vacuum(params.r()));
}

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::psi_plus:
      return "psi-plus";
    case StateKind::psi_minus:
      return "psi-minus";
    case StateKind::psi_one:
      return "psi1";
  }
  throw std::invalid_argument("unknown state kind");
}

StateKind parse_state_kind(std::string_view name) {
  if (name == "psi-plus") return StateKind::psi_plus;
  if (name == "psi-minus") return StateKind::psi_minus;
  if (name == "psi1" || name == "psi-one") return StateKind::psi_one;
  throw std::invalid_argument("unknown state kind '" + std::string(name) + "'");
}

Complex CompositeState::amplitude(std::size_t alice, std::size_t rindler_index) const {
  const std::size_t d = rindler_register().dimension();
  if (alice >= alice_dimension || rindler_index >= d) throw std::out_of_range("CompositeState::amplitude");
  return amplitudes[static_cast<Eigen::Index>(alice * d + rindler_index)];
}

CompositeState entangled_state(StateKind kind, const UnruhParams& params) {
  const auto d = static_cast<Eigen::Index>(rindler_register().dimension());
  Vector amps(2 * d);
  const auto place = [&](const StateVector& first, const StateVector& second) {
    amps.head(d) = first.amplitudes;
    amps.tail(d) = second.amplitudes;
  };
  switch (kind) {
    case StateKind::psi_plus:
      place(rindler_vacuum(params.r()), unruh_particle(params));
      break;
    case StateKind::psi_minus:
      place(rindler_vacuum(params.r()), unruh_antiparticle(params));
      break;
    case StateKind::psi_one:
      place(unruh_antiparticle(params), unruh_particle(params));
      break;
    default:
      throw std::invalid_argument("unknown state kind");
  }
  amps /= std::sqrt(2.0);
  return {kind, params, std::move(amps)};
}

}  // namespace rqi
