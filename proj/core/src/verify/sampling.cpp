#include "ckit/verify/sampling.hpp"

#include <map>

#include "ckit/foundation/parallel.hpp"

namespace ckit::verify {

void sampled(Report& rep, const SampleSpec& spec, const std::function<Report(TrialRng&)>& trial) {
  std::vector<Report> out(spec.trials);
  const std::uint64_t stream = stream_id(spec.stream);
  parallel_for(
      spec.trials,
      [&](std::size_t k) {
        TrialRng rng(spec.seed, stream, k);
        Report r = trial(rng);
        Report slim;
        for (const auto& c : r.checks()) slim.add(c.name, c.passed, c.passed ? Json() : c.detail);
        out[k] = std::move(slim);
      },
      spec.workers);

  std::vector<std::string> order;
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> samples;
  std::vector<const CheckOutcome*> failure;
  std::vector<std::size_t> failure_trial, failures;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& c : out[k].checks()) {
      auto [it, fresh] = seen.emplace(c.name, order.size());
      if (fresh) {
        order.push_back(c.name);
        samples.push_back(0);
        failure.push_back(nullptr);
        failure_trial.push_back(0);
        failures.push_back(0);
      }
      const std::size_t i = it->second;
      ++samples[i];
      if (!c.passed) {
        ++failures[i];
        if (!failure[i]) {
          failure[i] = &c;
          failure_trial[i] = k;
        }
      }
    }
  for (std::size_t i = 0; i < order.size(); ++i) {
    Json detail{{"stream", spec.stream}, {"samples", samples[i]}};
    if (failure[i]) {
      detail["failures"] = failures[i];
      detail["trial"] = failure_trial[i];
      detail["counterexample"] = failure[i]->detail;
    }
    rep.add(order[i], failure[i] == nullptr, detail);
  }
}

}  // namespace ckit::verify
