#include <doctest.h>

#include <optional>

#include "ckit/verify/suite.hpp"

using namespace ckit;
using namespace ckit::verify;

TEST_CASE("sampled folds trials by name") {
  Report rep;
  sampled(rep, SampleSpec{"fold", 7, 50, 3}, [&](TrialRng& rng) {
    Report r;
    const auto k = rng.between(0, 1000);
    r.add("always", true);
    r.add("value_small", k < 900, Json{{"k", k}});
    return r;
  });
  REQUIRE(rep.checks().size() == 2);
  CHECK(rep.checks()[0].name == "always");
  CHECK(rep.find("always")->passed);
  CHECK(rep.find("always")->detail["samples"] == 50);

  Report again;
  sampled(again, SampleSpec{"fold", 7, 50, 1}, [&](TrialRng& rng) {
    Report r;
    const auto k = rng.between(0, 1000);
    r.add("always", true);
    r.add("value_small", k < 900, Json{{"k", k}});
    return r;
  });
  CHECK(rep.to_json() == again.to_json());
}

TEST_CASE("sampled reports the lowest failing trial") {
  Report empty;
  sampled(empty, SampleSpec{"lowest", 1, 40, 4}, [](TrialRng&) { return Report(); });
  CHECK(empty.checks().empty());

  auto bad = [](TrialRng& rng) { return rng.engine()() % 5 == 0; };
  Report rep;
  sampled(rep, SampleSpec{"lowest", 1, 40, 4}, [&](TrialRng& rng) {
    Report r;
    r.add("sometimes", !bad(rng), Json{{"x", 1}});
    return r;
  });
  std::optional<std::uint64_t> first;
  std::size_t failures = 0;
  for (std::uint64_t t = 0; t < 40; ++t) {
    TrialRng rng(1, stream_id("lowest"), t);
    if (bad(rng)) {
      ++failures;
      if (!first) first = t;
    }
  }
  REQUIRE(first);
  const CheckOutcome* c = rep.find("sometimes");
  REQUIRE(c);
  CHECK(!c->passed);
  CHECK(c->detail["trial"] == *first);
  CHECK(c->detail["failures"] == failures);
}

TEST_CASE("suite validation") {
  SuiteConfig c;
  c.suite = "nope";
  CHECK_THROWS_AS(validate(c), PreconditionError);
  c.suite = "compalg";
  c.trials = 0;
  CHECK_THROWS_AS(validate(c), PreconditionError);
  c.trials = 5;
  CHECK_NOTHROW(validate(c));
  CHECK(suite_names().size() == 6);
}

TEST_CASE("suite reports do not depend on the worker count") {
  SuiteConfig c;
  c.suite = "all";
  c.field = FieldContext::prime(7);
  c.trials = 20;
  c.seed = 3;
  c.workers = 1;
  Json one = suite_report(c, run_suite(c));
  c.workers = 3;
  Json three = suite_report(c, run_suite(c));
  one["config"].erase("workers");
  three["config"].erase("workers");
  CHECK(one.dump() == three.dump());
  CHECK(one["passed"] == true);
  CHECK(one["config"]["seed"] == 3);
}

TEST_CASE("a different seed draws different samples") {
  SuiteConfig c;
  c.suite = "compalg";
  c.field = FieldContext::prime(5);
  c.trials = 10;
  Report a = run_suite(c);
  c.seed = 2;
  Report b = run_suite(c);
  CHECK(a.passed());
  CHECK(b.passed());
  CHECK(a.checks().size() == b.checks().size());
}

TEST_CASE("exhaustive jordan sweep over F2 finds the square counterexample") {
  SuiteConfig c;
  c.suite = "jordan";
  c.field = FieldContext::prime(2);
  c.trials = 10;
  Report r = run_suite(c);
  CHECK(!r.passed());
  const CheckOutcome* f = r.first_failure();
  REQUIRE(f);
  CHECK(f->name.find("square_iff_definition") != std::string::npos);
  for (const auto& ch : r.checks())
    if (!ch.passed) CHECK(ch.name.find("square_iff_definition") != std::string::npos);
}
