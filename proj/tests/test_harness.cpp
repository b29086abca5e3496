#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "idealext/harness.hpp"
#include "idealext/spec_io.hpp"

using namespace idealext;
using namespace testing;

TEST_CASE("check names round trip") {
  for (Check c : all_checks()) CHECK(check_from_string(to_string(c)) == c);
  CHECK_FALSE(check_from_string("nope"));
}

TEST_CASE("random ideal extensions are valid antichains") {
  std::uint64_t finite = 0;
  const std::uint64_t n = 1000;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto rng = trial_rng(99, i);
    std::size_t d = 2 + i % 2;
    auto s = random_ideal_extension(rng, d, 4, 0.5);
    CHECK(s.dim() == d);
    CHECK(is_antichain(s.minimals()));
    for (const Vec& m : s.minimals()) {
      CHECK_FALSE(m.is_zero());
      for (Coord c : m) CHECK(c <= 4);
    }
    if (s.has_finite_gaps()) ++finite;
  }
  CHECK(finite >= 400);
  CHECK(finite <= 700);
  for (std::uint64_t i = 0; i < 100; ++i) CHECK(random_ie(5, i, 3, 4, true).has_finite_gaps());
}

TEST_CASE("trial streams are reproducible") {
  auto a = trial_rng(7, 3), b = trial_rng(7, 3), c = trial_rng(7, 4);
  auto x = a();
  CHECK(x == b());
  CHECK(x != c());
}

TEST_CASE("fuzz is deterministic and independent of thread count") {
  FuzzConfig cfg;
  cfg.trials = 60;
  cfg.seed = 11;
  cfg.threads = 1;
  auto one = summary_json(fuzz(cfg));
  cfg.threads = 4;
  auto four = summary_json(fuzz(cfg));
  CHECK(one == four);
  CHECK(one == summary_json(fuzz(cfg)));
  CHECK(one["trials"] == 60);
  CHECK(one["failures"].empty());
}

TEST_CASE("zero trials and skipped checks") {
  FuzzConfig cfg;
  cfg.trials = 0;
  auto s = fuzz(cfg);
  CHECK(s.trials == 0);
  CHECK(s.ok());
  CHECK(s.finite_gap_trials == 0);

  cfg.trials = 30;
  cfg.finite_probability = 0.0;
  cfg.checks = {Check::GapAbsorbing};
  s = fuzz(cfg);
  CHECK(s.finite_gap_trials <= 30);
  auto n = s.counts[Check::GapAbsorbing];
  CHECK(n.pass + n.fail + n.skip == 30);
  CHECK(n.skip == 30 - s.finite_gap_trials);
}

TEST_CASE("plane trials satisfy every check") {
  FuzzConfig cfg;
  cfg.trials = 150;
  cfg.seed = 2024;
  cfg.finite_probability = 1.0;
  auto s = fuzz(cfg);
  CHECK(s.ok());
  CHECK(s.finite_gap_trials == 150);
  for (Check c : all_checks()) CHECK(s.counts[c].pass + s.counts[c].skip == 150);
  CHECK(s.omega_atoms_tested > 0);
}

TEST_CASE("clean runs write no counterexamples") {
  auto dir = std::filesystem::temp_directory_path() / "idealext_fuzz_clean";
  std::filesystem::remove_all(dir);
  FuzzConfig cfg;
  cfg.trials = 20;
  cfg.out_dir = dir;
  CHECK(fuzz(cfg).ok());
  CHECK(std::filesystem::is_directory(dir));
  CHECK(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}
