#pragma once

#include <functional>
#include <string>

#include "ckit/foundation/random.hpp"
#include "ckit/foundation/report.hpp"

namespace ckit::verify {

struct SampleSpec {
  std::string stream;  // keys the generator together with seed and trial index
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  unsigned workers = 0;
};

// Runs trial k on TrialRng(seed, stream_id(stream), k) for k < trials across
// workers and folds the per-trial reports into rep: one check per name, in
// order of first appearance, failing with the lowest failing trial's payload.
void sampled(Report& rep, const SampleSpec& spec, const std::function<Report(TrialRng&)>& trial);

}  // namespace ckit::verify
