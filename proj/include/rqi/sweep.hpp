#pragma once

// Parameter sweeps over r for fixed |q_R| values, written as CSV.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rqi/entanglement.hpp"

namespace rqi {

struct SweepConfig {
  StateKind state = StateKind::psi_plus;
  std::vector<double> q_right_abs{1.0, 0.9, 0.8, 0.7};
  double q_phase = 0.0;
  std::size_t r_count = 200;
  std::vector<ObserverPair> pairs{ObserverPair::alice_rob, ObserverPair::alice_antirob};
  std::vector<Detector> detectors{Detector::full};
  Side transpose_side = Side::alice;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SweepRow {
  StateKind state;
  double q_right_abs;
  double q_phase;
  double r;
  ObserverPair pair;
  Detector detector;
  double negativity;
};

/// count points evenly spaced on [0, π/4], both ends included.
std::vector<double> r_grid(std::size_t count);

/// Throws std::domain_error on |q_R| outside [0, 1], a zero r count or a
/// non-finite phase.
void validate(const SweepConfig& config);

/// Rows in canonical order: state, |q_R| descending, r ascending, then pair
/// and detector in enum order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr std::string_view csv_header = "state,q_r_abs,q_phase,r_omega,pair,detector,negativity";

/// 12 significant digits, '.' separator, never "-0".
std::string format_number(double x);

/// Writes the header and the rows, sorted into canonical order first.
void write_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace rqi
