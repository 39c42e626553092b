#include "doctest.h"
#include "rqi/sweep.hpp"
#include "rqi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace rqi;

namespace {

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("r_grid") {
  const auto g = r_grid(200);
  CHECK(g.size() == 200);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == max_r);
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(r_grid(1) == std::vector<double>{0.0});
  CHECK(r_grid(2) == std::vector<double>{0.0, max_r});
  CHECK_THROWS_AS(r_grid(0), std::domain_error);
}

TEST_CASE("format_number") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(max_r) == "0.785398163397");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("validate") {
  SweepConfig c;
  CHECK_NOTHROW(validate(c));
  c.q_right_abs = {1.1};
  CHECK_THROWS_AS(validate(c), std::domain_error);
  c.q_right_abs = {0.5};
  c.r_count = 0;
  CHECK_THROWS_AS(validate(c), std::domain_error);
  c.r_count = 5;
  c.q_phase = std::nan("");
  CHECK_THROWS_AS(validate(c), std::domain_error);
}

TEST_CASE("default sweep") {
  SweepConfig c;
  const auto rows = run_sweep(c);
  CHECK(rows.size() == 200 * 4 * 2);
  const auto text = to_csv(rows);
  CHECK(text.rfind(std::string(csv_header) + "\n", 0) == 0);
  CHECK(line_count(text) == rows.size() + 1);

  // |q_R| descending, then r ascending
  CHECK(rows.front().q_right_abs == 1.0);
  CHECK(rows.back().q_right_abs == 0.7);
  CHECK(rows[0].pair == ObserverPair::alice_rob);
  CHECK(rows[1].pair == ObserverPair::alice_antirob);
  CHECK(rows[2].r > rows[0].r);
  CHECK(rows[0].negativity == doctest::Approx(0.5));
}

TEST_CASE("empty |q_R| list gives a header-only CSV") {
  SweepConfig c;
  c.q_right_abs.clear();
  const auto rows = run_sweep(c);
  CHECK(rows.empty());
  CHECK(to_csv(rows) == std::string(csv_header) + "\n");
}

TEST_CASE("output is independent of threads and input order") {
  SweepConfig c;
  c.state = StateKind::psi_one;
  c.r_count = 37;
  c.detectors = {Detector::full, Detector::particle_only, Detector::antiparticle_only};
  c.threads = 1;
  const auto serial = to_csv(run_sweep(c));

  c.threads = 7;
  CHECK(to_csv(run_sweep(c)) == serial);
  CHECK(to_csv(run_sweep(c)) == serial);

  auto shuffled = run_sweep(c);
  std::reverse(shuffled.begin(), shuffled.end());
  CHECK(to_csv(shuffled) == serial);

  c.q_right_abs = {0.7, 0.9, 1.0, 0.8};
  c.pairs = {ObserverPair::alice_antirob, ObserverPair::alice_rob};
  CHECK(to_csv(run_sweep(c)) == serial);
}

TEST_CASE("verification suite") {
  const auto results = run_verification();
  CHECK(results.size() >= 15);
  for (const auto& r : results) {
    INFO(r.name);
    CHECK(r.passed);
    CHECK(r.max_deviation <= 1e-10);
  }
  const auto strict = run_verification(1e-16);
  CHECK(std::any_of(strict.begin(), strict.end(), [](const CheckResult& r) { return !r.passed; }));
}
