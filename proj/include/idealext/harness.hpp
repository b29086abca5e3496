#ifndef IDEALEXT_HARNESS_HPP
#define IDEALEXT_HARNESS_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "idealext/monoid.hpp"
#include "idealext/spec_io.hpp"

namespace idealext {

enum class Check {
  GapAbsorbing,
  TwoAIntervals,
  BettiIn2A,
  BettiIn23A,
  CatenaryRClass,
  Catenary3,
  Catenary4,
  DeltaOne,
  LengthsInterval,
  LengthMonotone,
  OmegaBounds,
};

std::string_view to_string(Check c);
std::optional<Check> check_from_string(std::string_view s);
std::set<Check> all_checks();

struct FuzzConfig {
  std::uint64_t trials = 100;
  std::size_t dim_min = 2;
  std::size_t dim_max = 2;
  Coord max_coord = 4;
  std::uint64_t seed = 1;
  std::set<Check> checks = all_checks();
  /// Probability that every axis gets a pure-axis minimal (finite gaps).
  double finite_probability = 0.5;
  std::chrono::milliseconds budget{10'000};
  unsigned threads = 1;
  /// ω is computed for this many atoms of smallest norm.
  std::size_t omega_atoms = 3;
  std::optional<std::filesystem::path> out_dir;
};

struct Failure {
  std::uint64_t trial;
  Check check;
  /// "self-test-failure" for checks backed by a theorem, "conjecture-violation" otherwise.
  std::string label;
  std::string detail;
  Json spec;
};

struct CheckCount {
  std::uint64_t pass = 0, fail = 0, skip = 0;
};

struct FuzzSummary {
  std::uint64_t trials = 0;
  std::uint64_t finite_gap_trials = 0;
  std::uint64_t budget_skips = 0;
  std::map<Check, CheckCount> counts;
  std::vector<Failure> failures;
  /// Atoms tested for ω, and how many of them reached ‖a‖₁ + 1.
  std::uint64_t omega_atoms_tested = 0;
  std::uint64_t omega_bound_attained = 0;

  bool ok() const { return failures.empty(); }
};

/// Independent stream for trial i; results do not depend on scheduling.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

IdealExtension random_ideal_extension(std::mt19937_64& rng, std::size_t dim, Coord max_coord,
                                      double finite_probability = 0.5);

FuzzSummary fuzz(const FuzzConfig& cfg);
Json summary_json(const FuzzSummary& s);

}  // namespace idealext

#endif  // IDEALEXT_HARNESS_HPP
