#include "rqi/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace rqi {

namespace {

struct Task {
  double q_right_abs;
  double r;
  ObserverPair pair;
  Detector detector;
};

auto sort_key(const SweepRow& row) {
  return std::make_tuple(static_cast<int>(row.state), -row.q_right_abs, row.r, static_cast<int>(row.pair),
                         static_cast<int>(row.detector));
}

void sort_rows(std::vector<SweepRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& a, const SweepRow& b) { return sort_key(a) < sort_key(b); });
}

}  // namespace

std::vector<double> r_grid(std::size_t count) {
  if (count == 0) throw std::domain_error("r grid needs at least one point");
  if (count == 1) return {0.0};
  std::vector<double> grid(count);
  const double step = max_r / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = static_cast<double>(i) * step;
  grid.back() = max_r;
  return grid;
}

void validate(const SweepConfig& config) {
  for (double q : config.q_right_abs)
    if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("|q_R| values must lie in [0, 1], got " + format_number(q));
  if (config.r_count == 0) throw std::domain_error("r grid needs at least one point");
  if (!std::isfinite(config.q_phase)) throw std::domain_error("q phase must be finite");
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config);
  const auto grid = r_grid(config.r_count);

  std::vector<Task> tasks;
  tasks.reserve(config.q_right_abs.size() * grid.size() * config.pairs.size() * config.detectors.size());
  for (double q : config.q_right_abs)
    for (double r : grid)
      for (auto pair : config.pairs)
        for (auto det : config.detectors) tasks.push_back({q, r, pair, det});

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      const auto params = UnruhParams::from_modulus(t.r, t.q_right_abs, config.q_phase);
      const auto state = entangled_state(config.state, params);
      const double n = negativity(state, PartitionSpec{t.pair, t.detector, config.transpose_side});
      rows[i] = {config.state, t.q_right_abs, config.q_phase, t.r, t.pair, t.detector, n};
    }
  };

  unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }

  sort_rows(rows);
  return rows;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  std::vector<SweepRow> sorted(rows.begin(), rows.end());
  sort_rows(sorted);
  out << csv_header << '\n';
  for (const auto& row : sorted) {
    out << to_string(row.state) << ',' << format_number(row.q_right_abs) << ',' << format_number(row.q_phase) << ','
        << format_number(row.r) << ',' << to_string(row.pair) << ',' << to_string(row.detector) << ','
        << format_number(row.negativity) << '\n';
  }
}

}  // namespace rqi
