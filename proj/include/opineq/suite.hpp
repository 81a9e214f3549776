#ifndef OPINEQ_SUITE_HPP
#define OPINEQ_SUITE_HPP

#include "opineq/sampling.hpp"

namespace opineq {

struct SuiteConfig {
  std::vector<Family> families;
  std::vector<int> dims = {2, 3, 4};
  int trials = 200;
  std::uint64_t seed = 1;
  ToleranceConfig tol;
  IsometryMode mode = IsometryMode::Constructive;
};

struct FamilyStats {
  Family family = Family::CHDA;
  int trials = 0;
  int passes = 0;
  int skips = 0;
  int failures = 0;
  double worst_gap = std::numeric_limits<double>::infinity(); // min gap over checked trials
  std::optional<Instance> example_witness;
};

struct SuiteReport {
  std::vector<FamilyStats> stats;

  int theorem_failures() const {
    int n = 0;
    for (const auto& s : stats)
      if (theorem_family(s.family)) n += s.failures;
    return n;
  }
};

// Runs every listed family over seeded random instances. Trials execute
// serially here, but each trial's randomness is fully determined by
// derive_seed(seed, family, trial), so a concurrent runner merging in trial
// order would produce the identical report.
inline SuiteReport run_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  for (Family fam : cfg.families) {
    FamilyStats st;
    st.family = fam;
    st.trials = cfg.trials;
    const std::uint64_t stream = hash_str(family_name(fam));
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t trial_seed = derive_seed(cfg.seed, stream, static_cast<std::uint64_t>(t));
      Rng pick(derive_seed(trial_seed, hash_str("dim"), 0));
      const int dim = cfg.dims[static_cast<std::size_t>(pick.uniform_int(
          0, static_cast<int>(cfg.dims.size()) - 1))];
      const Instance inst = sampling::sample_instance(fam, dim, trial_seed);
      CheckResult res;
      try {
        res = check_family(fam, inst, cfg.tol, cfg.mode);
      } catch (const domain_error& e) {
        res = detail::skipped(fam, std::string("evaluation error: ") + e.what());
      }
      if (res.status == CheckStatus::Skipped) {
        ++st.skips;
        continue;
      }
      st.worst_gap = std::min(st.worst_gap, res.verdict.gap_min_eig);
      if (res.verdict.holds) {
        ++st.passes;
      } else {
        ++st.failures;
        if (!st.example_witness) st.example_witness = inst;
      }
    }
    rep.stats.push_back(std::move(st));
  }
  return rep;
}

} // namespace opineq

#endif
