#pragma once

#include <string>
#include <vector>

#include "ckit/verify/criteria.hpp"

namespace ckit::verify {

// suite: compalg | jordan | classical | calgmod | cubic27 | all.
struct SuiteConfig {
  std::string suite = "all";
  FieldContext field = FieldContext::rationals();
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  bool long_running = false;
  unsigned workers = 0;
};

const std::vector<std::string>& suite_names();
// Throws PreconditionError on an unknown suite or trials = 0.
void validate(const SuiteConfig& config);

// Sampled batteries run over config.field. Exhaustive sweeps over F_p run when the
// chosen field is that F_p and the sweep is small, or with long_running.
Report run_suite(const SuiteConfig& config);

// {"config": {...}, "passed", "checks_run", "failed": [names], "checks": [...]}
Json suite_report(const SuiteConfig& config, const Report& report);
Json config_to_json(const SuiteConfig& config);

}  // namespace ckit::verify
