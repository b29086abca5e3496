#include "idealext/harness.hpp"

#include <algorithm>
#include <fstream>
#include <thread>

#include "idealext/error.hpp"
#include "idealext/factor.hpp"
#include "idealext/invariants.hpp"

namespace idealext {

namespace {

constexpr std::pair<Check, std::string_view> kNames[] = {
    {Check::GapAbsorbing, "ga"},
    {Check::TwoAIntervals, "2a-intervals"},
    {Check::BettiIn2A, "betti-in-2a"},
    {Check::BettiIn23A, "betti-in-2a-3a"},
    {Check::CatenaryRClass, "catenary-rclass"},
    {Check::Catenary3, "catenary-le-3"},
    {Check::Catenary4, "catenary-le-4"},
    {Check::DeltaOne, "delta-le-1"},
    {Check::LengthsInterval, "lengths-intervals"},
    {Check::LengthMonotone, "length-monotone"},
    {Check::OmegaBounds, "omega-bounds"},
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Clock = std::chrono::steady_clock;

struct OverBudget {};

struct TrialResult {
  bool finite = false;
  bool budget = false;
  std::map<Check, char> outcome;  // 'p', 'f', 's'
  std::vector<Failure> failures;
  std::uint64_t omega_tested = 0, omega_attained = 0;
};

class Trial {
 public:
  Trial(const FuzzConfig& cfg, std::uint64_t index, const IdealExtension& s)
      : cfg_(cfg), index_(index), s_(s), deadline_(Clock::now() + cfg.budget) {}

  TrialResult run() {
    r_.finite = s_.has_finite_gaps();
    for (Check c : cfg_.checks) r_.outcome[c] = 's';
    if (!r_.finite) return r_;
    try {
      body();
    } catch (const OverBudget&) {
      r_.budget = true;
    } catch (const DeadlineExceeded&) {
      r_.budget = true;
    }
    return r_;
  }

 private:
  bool on(Check c) const { return cfg_.checks.count(c) > 0; }

  void tick() const {
    if (Clock::now() > deadline_) throw OverBudget{};
  }

  void verdict(Check c, bool ok, bool theorem, const std::string& detail) {
    if (!on(c)) return;
    r_.outcome[c] = ok ? 'p' : 'f';
    if (!ok)
      r_.failures.push_back({index_, c, theorem ? "self-test-failure" : "conjecture-violation", detail, spec_to_json(s_)});
  }

  void body() {
    const std::size_t d = s_.dim();
    const bool plane = d == 2;

    auto ga = is_gap_absorbing(s_);
    verdict(Check::GapAbsorbing, ga.holds, plane,
            ga.holds ? "" : ga.rule + " fails at " + to_string(ga.lhs) + ", " + to_string(ga.rhs));
    tick();
    if (on(Check::TwoAIntervals)) {
      auto iv = check_2A_interval_closed(s_);
      verdict(Check::TwoAIntervals, iv.holds, plane,
              iv.holds ? "" : to_string(iv.u) + " <= " + to_string(iv.w) + " <= " + to_string(iv.v) + " with the middle outside 2A");
      tick();
    }
    // Everything below is proven for gap absorbing monoids only.
    if (!ga.holds) return;

    const auto& atoms = s_.atoms();
    AtomBasis basis(atoms);
    Vec g(d);
    for (const Vec& a : atoms) g = join(g, a);

    auto betti = betti_elements(s_).elements;
    tick();
    LengthTable table(basis, scale(g, 3));
    tick();

    bool in2 = true;
    std::string where;
    for (const Vec& b : betti)
      if (table.min_length(b) != 2u) {
        in2 = false;
        where = to_string(b);
        break;
      }
    verdict(Check::BettiIn2A, in2, plane, in2 ? "" : "Betti element " + where + " has minimal length 3");

    if (on(Check::BettiIn23A)) {
      auto scanned = betti_in_box(s_, Box::below(scale(g, 3))).elements;
      bool ok = scanned == betti;
      std::string detail;
      if (!ok) {
        std::vector<Vec> diff;
        std::set_symmetric_difference(scanned.begin(), scanned.end(), betti.begin(), betti.end(), std::back_inserter(diff));
        detail = "box scan and 2A u 3A scan disagree at " + to_string(diff.front());
      }
      verdict(Check::BettiIn23A, ok, true, detail);
      tick();
    }

    std::uint64_t cat = 0;
    bool rclass_ok = true;
    std::string rclass_detail;
    for (const Vec& b : betti) {
      auto zs = factorizations(basis, b);
      std::uint64_t c = catenary_of(zs);
      cat = std::max(cat, c);
      if (rclass_ok && on(Check::CatenaryRClass)) {
        std::uint64_t f = r_classes(zs).size() >= 2 ? catenary_rclass_formula(zs) : 0;
        if (f != c) {
          rclass_ok = false;
          rclass_detail = "at " + to_string(b) + ": bottleneck " + std::to_string(c) + ", R-class formula " + std::to_string(f);
        }
      }
      tick();
    }
    verdict(Check::CatenaryRClass, rclass_ok, true, rclass_detail);
    verdict(Check::Catenary4, cat <= 4, true, "c(S) = " + std::to_string(cat));
    verdict(Check::Catenary3, cat <= 3, plane || in2, "c(S) = " + std::to_string(cat));

    if (on(Check::DeltaOne)) {
      auto delta = delta_over(s_, betti, Provenance::Exact).values;
      std::uint64_t mx = delta.empty() ? 0 : delta.back();
      bool ok = mx <= 1 && (delta.empty() || 2 + mx <= cat);
      verdict(Check::DeltaOne, ok, true, "max Delta = " + std::to_string(mx) + ", c(S) = " + std::to_string(cat));
      tick();
    }

    if (on(Check::LengthsInterval) || on(Check::LengthMonotone)) {
      Box scan = Box::below(scale(g, 2));
      bool iv_ok = true, mono_ok = true;
      std::string iv_detail, mono_detail;
      for (const Vec& x : scan) {
        auto l = table.lengths(x);
        if (l.empty()) continue;
        if (iv_ok && l.back() - l.front() + 1 != l.size()) {
          iv_ok = false;
          iv_detail = "L" + to_string(x) + " is not an interval";
        }
        if (x.is_zero()) continue;
        for (std::size_t i = 0; i < d && mono_ok; ++i) {
          Vec y = x + Vec::unit(d, i);
          auto ly = table.min_length(y);
          if (!ly || *ly < l.front() || *ly > l.front() + 1) {
            mono_ok = false;
            mono_detail = "l" + to_string(x) + " = " + std::to_string(l.front()) + ", l" + to_string(y) + " = " +
                          (ly ? std::to_string(*ly) : std::string("none"));
          }
        }
      }
      verdict(Check::LengthsInterval, iv_ok, true, iv_detail);
      verdict(Check::LengthMonotone, mono_ok, true, mono_detail);
      tick();
    }

    if (on(Check::OmegaBounds)) {
      std::vector<Vec> picks = atoms;
      std::stable_sort(picks.begin(), picks.end(), [](const Vec& a, const Vec& b) { return norm1(a) < norm1(b); });
      picks.resize(std::min(picks.size(), cfg_.omega_atoms));
      bool ok = true;
      std::string detail;
      OmegaOptions opt;
      opt.deadline = deadline_;
      for (const Vec& a : picks) {
        auto w = omega_elem(s_, a, opt).value.value();
        auto [lo, hi] = omega_bounds(s_, a);
        ++r_.omega_tested;
        if (w == hi) ++r_.omega_attained;
        if (ok && (w < lo || w > hi)) {
          ok = false;
          detail = "omega" + to_string(a) + " = " + std::to_string(w) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]";
        }
      }
      verdict(Check::OmegaBounds, ok, true, detail);
    }
  }

  const FuzzConfig& cfg_;
  std::uint64_t index_;
  const IdealExtension& s_;
  Clock::time_point deadline_;
  TrialResult r_;
};

}  // namespace

std::string_view to_string(Check c) {
  for (const auto& [k, n] : kNames)
    if (k == c) return n;
  return "?";
}

std::optional<Check> check_from_string(std::string_view s) {
  for (const auto& [k, n] : kNames)
    if (n == s) return k;
  return std::nullopt;
}

std::set<Check> all_checks() {
  std::set<Check> out;
  for (const auto& [k, n] : kNames) out.insert(k);
  return out;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ trial));
}

IdealExtension random_ideal_extension(std::mt19937_64& rng, std::size_t dim, Coord max_coord, double finite_probability) {
  if (dim == 0) throw Error(ErrorCode::InvalidSpec, "dimension must be positive");
  if (max_coord == 0) throw Error(ErrorCode::InvalidSpec, "max coordinate must be positive");
  std::uniform_int_distribution<Coord> coord(0, max_coord), pos(1, max_coord);
  std::uniform_int_distribution<std::size_t> count(1, 6), axis(0, dim - 1);
  std::bernoulli_distribution finite(finite_probability);

  std::vector<Vec> vs;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    Vec v(dim);
    do {
      for (std::size_t c = 0; c < dim; ++c) v[c] = coord(rng);
    } while (v.is_zero());
    vs.push_back(v);
  }
  if (finite(rng)) {
    for (std::size_t i = 0; i < dim; ++i) vs.push_back(scale(Vec::unit(dim, i), pos(rng)));
  } else if (dim >= 2) {
    // Keep one axis free of pure-axis generators, so its gaps are infinite.
    const std::size_t free = axis(rng);
    for (Vec& v : vs) {
      auto supp = support(v);
      if (supp.size() == 1 && supp[0] == free) {
        std::size_t other = axis(rng);
        while (other == free) other = axis(rng);
        v[other] = pos(rng);
      }
    }
  }
  return IdealExtension::from_minimals(dim, vs);
}

FuzzSummary fuzz(const FuzzConfig& cfg) {
  if (cfg.dim_min == 0 || cfg.dim_min > cfg.dim_max) throw Error(ErrorCode::InvalidSpec, "bad dimension range");
  std::vector<TrialResult> results(cfg.trials);
  auto work = [&](std::uint64_t i) {
    auto rng = trial_rng(cfg.seed, i);
    std::uniform_int_distribution<std::size_t> dim(cfg.dim_min, cfg.dim_max);
    std::size_t d = dim(rng);
    auto s = random_ideal_extension(rng, d, cfg.max_coord, cfg.finite_probability);
    results[i] = Trial(cfg, i, s).run();
  };
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    for (std::uint64_t i = 0; i < cfg.trials; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t i = t; i < cfg.trials; i += threads) work(i);
      });
    for (auto& th : pool) th.join();
  }

  FuzzSummary sum;
  sum.trials = cfg.trials;
  for (Check c : cfg.checks) sum.counts[c];
  for (auto& r : results) {
    sum.finite_gap_trials += r.finite;
    sum.budget_skips += r.budget;
    for (auto [c, o] : r.outcome) {
      auto& cc = sum.counts[c];
      (o == 'p' ? cc.pass : o == 'f' ? cc.fail : cc.skip)++;
    }
    sum.omega_atoms_tested += r.omega_tested;
    sum.omega_bound_attained += r.omega_attained;
    for (auto& f : r.failures) sum.failures.push_back(std::move(f));
  }
  if (cfg.out_dir) {
    std::filesystem::create_directories(*cfg.out_dir);
    for (const auto& f : sum.failures) {
      std::ofstream out(*cfg.out_dir / ("trial-" + std::to_string(f.trial) + "-" + std::string(to_string(f.check)) + ".json"));
      out << f.spec.dump(2) << "\n";
    }
  }
  return sum;
}

Json summary_json(const FuzzSummary& s) {
  Json j;
  j["trials"] = s.trials;
  j["finite_gap_trials"] = s.finite_gap_trials;
  j["budget_skips"] = s.budget_skips;
  Json checks = Json::object();
  for (const auto& [c, n] : s.counts)
    checks[std::string(to_string(c))] = {{"pass", n.pass}, {"fail", n.fail}, {"skip", n.skip}};
  j["checks"] = checks;
  j["omega"] = {{"atoms_tested", s.omega_atoms_tested}, {"norm_bound_attained", s.omega_bound_attained}};
  Json fails = Json::array();
  for (const auto& f : s.failures)
    fails.push_back({{"trial", f.trial}, {"check", to_string(f.check)}, {"label", f.label}, {"detail", f.detail}, {"spec", f.spec}});
  j["failures"] = fails;
  return j;
}

}  // namespace idealext
