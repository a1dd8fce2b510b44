#include "ckit/verify/suite.hpp"

#include <algorithm>

#include "ckit/jordan/hermitian.hpp"

namespace ckit::verify {

using comp::AlgebraTag;
using comp::Kind;

namespace {

constexpr std::uint64_t kSweepLimit = 1u << 12;
constexpr std::uint64_t kLongSweepLimit = 1u << 16;

bool sweep_allowed(const SuiteConfig& c, std::uint64_t size) {
  return c.field.is_prime() && size <= (c.long_running ? kLongSweepLimit : kSweepLimit);
}

std::uint64_t power(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Report compalg_suite(const SuiteConfig& c, const Sampling& s) {
  Report rep;
  rep.merge(field_axioms(c.field, s), "field.");
  rep.merge(linear_algebra_invariants(c.field, s), "linalg.");
  rep.merge(composition_identities(c.field, s), "composition.");
  rep.merge(composition_exhaustive_f2(), "composition.f2.");
  rep.merge(composition_general_sampled(c.field, s), "general.");
  rep.merge(left_image_sampled(c.field, s), "left_image.");
  rep.merge(triality_sampled(c.field, s), "triality.");
  if (c.field.is_prime() && sweep_allowed(c, power(c.field.characteristic(), 8) / 2))
    rep.merge(isotropic_octonions_exhaustive(c.field), "isotropic_sweep.");
  return rep;
}

Report jordan_suite(const SuiteConfig& c, const Sampling& s) {
  Report rep;
  rep.merge(rank_one_sampled(c.field, s), "rank_one.");
  rep.merge(fundamental_identity_sampled(c.field, s), "fundamental.");
  rep.merge(octonion_u_crosscheck_sampled(c.field, s), "octonion_u.");
  rep.merge(veronese_scaling_sampled(c.field, s), "veronese.");
  rep.merge(rank_one_sums_sampled(c.field, s), "sums.");
  rep.merge(x1_classification_sampled(c.field, s), "plane.");
  rep.merge(x0_witness_checks(constructed_x0_witness()), "plane.");
  rep.merge(scaling_failure_search(), "plane.");
  if (c.field.is_prime()) {
    const std::pair<Kind, std::size_t> shapes[] = {{Kind::C, 3}, {Kind::H, 2}, {Kind::H, 3}};
    for (auto [kind, n] : shapes) {
      AlgebraTag tag(kind, c.field);
      if (!sweep_allowed(c, jordan::hermitian_count(tag, n))) continue;
      rep.merge(rank_one_exhaustive(tag, n), "sweep." + tag.name() + "_n" + std::to_string(n) + ".");
    }
  }
  return rep;
}

Report classical_suite(const SuiteConfig& c, const Sampling& s) {
  Report rep;
  rep.merge(structure_group_sampled(c.field, s), "structure.");
  rep.merge(classical_rank_sampled(c.field, s), "rank.");
  rep.merge(scorza_agreement_exhaustive(), "scorza.");
  return rep;
}

Report calgmod_suite(const SuiteConfig& c, const Sampling& s) {
  Report rep;
  rep.merge(grassmann_census(), "census.");
  rep.merge(submodule_lattice_exhaustive(), "lattice.");
  rep.merge(duality_sampled(c.field, s), "duality.");
  return rep;
}

Report cubic27_suite(const SuiteConfig& c, const Sampling& s) {
  Report rep;
  rep.merge(theta_identity(), "theta.");
  rep.merge(incidence_checks(), "incidence.");
  rep.merge(theta_grids(), "grids.");
  rep.merge(beta_invariance_sampled(c.field, s), "invariance.");
  rep.merge(singular_locus_sampled(c.field, s), "singular.");
  if (c.long_running) rep.merge(automorphism_census(std::chrono::minutes(5)), "automorphisms.");
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"compalg", "jordan", "classical", "calgmod", "cubic27", "all"};
  return names;
}

void validate(const SuiteConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), config.suite) == names.end())
    throw PreconditionError("unknown suite '" + config.suite + "'");
  if (config.trials == 0) throw PreconditionError("trials must be at least 1");
}

Report run_suite(const SuiteConfig& config) {
  validate(config);
  const Sampling s{config.seed, config.trials, config.workers};
  using Fn = Report (*)(const SuiteConfig&, const Sampling&);
  const std::pair<const char*, Fn> suites[] = {{"compalg", compalg_suite},
                                               {"jordan", jordan_suite},
                                               {"classical", classical_suite},
                                               {"calgmod", calgmod_suite},
                                               {"cubic27", cubic27_suite}};
  Report rep;
  for (auto [name, fn] : suites)
    if (config.suite == "all" || config.suite == name) rep.merge(fn(config, s), std::string(name) + ".");
  return rep;
}

Json config_to_json(const SuiteConfig& config) {
  Json j{{"suite", config.suite}};
  put_context(j, config.field);
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["long"] = config.long_running;
  return j;
}

Json suite_report(const SuiteConfig& config, const Report& report) {
  Json failed = Json::array();
  for (const auto& c : report.checks())
    if (!c.passed) failed.push_back(c.name);
  return Json{{"config", config_to_json(config)},
              {"passed", report.passed()},
              {"checks_run", report.checks().size()},
              {"failed", failed},
              {"checks", report.to_json()}};
}

}  // namespace ckit::verify
