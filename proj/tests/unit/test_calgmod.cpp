#include <doctest.h>

#include "ckit/calgmod/enumerate.hpp"

using namespace ckit;
using namespace ckit::calgmod;

namespace {

const FieldContext Q = FieldContext::rationals();
const FieldContext F2 = FieldContext::prime(2);

// Number of k-dimensional subspaces of F_q^n.
std::uint64_t gaussian(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t j = 0; j < n - i; ++j) a *= q;
    for (std::uint64_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

ModVector mv(const AlgebraTag& tag, std::vector<std::vector<long>> entries) {
  ModVector v;
  for (const auto& e : entries) {
    VectorK c;
    for (long x : e) c.push_back(tag.context().from_int(x));
    v.emplace_back(tag, c);
  }
  return v;
}

}  // namespace

TEST_CASE("C^2 over F2 in dimension 2") {
  EnumerationLimits lim;
  lim.keep_members = true;
  Census c = enumerate_submodules(Kind::C, 2, 2, 2, lim);
  REQUIRE(c.groups.size() == 3);
  CHECK(c.groups[0].dims == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(c.groups[0].count == 1);
  CHECK(c.groups[1].dims == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(c.groups[1].count == 9);
  CHECK(c.groups[1].free);
  CHECK(c.groups[2].count == 1);
  CHECK(c.total == 11);
  CHECK(c.free_count == 9);
  CHECK(c.members.size() == 11);
  CHECK(component_formula(2, 1) == 2);
  CHECK(census_to_json(c)["total"] == 11);
}

TEST_CASE("C^n census splits into pairs of subspaces") {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t d = 0; d <= 2 * n; ++d) {
        std::uint64_t expected = 0;
        for (std::size_t a = 0; a <= d; ++a) expected += gaussian(n, a, p) * gaussian(n, d - a, p);
        REQUIRE(enumerate_submodules(Kind::C, n, d, p).total == expected);
      }
}

TEST_CASE("H^n submodules correspond to subspaces of F^{2n}") {
  auto all = all_submodules(Kind::H, 2, 2);
  CHECK(all.size() == 67);
  const std::size_t by_dim[] = {1, 0, 15, 0, 35, 0, 15, 0, 1};
  for (std::size_t d = 0; d <= 8; ++d) {
    CHECK(enumerate_submodules(Kind::H, 2, d, 2).total == by_dim[d]);
    CHECK(brute_force_submodules(Kind::H, 2, d, 2).size() == by_dim[d]);
  }
  CHECK(enumerate_submodules(Kind::H, 3, 6, 3).total == gaussian(6, 3, 3));
  CHECK(gaussian(6, 3, 3) == 33880);
  CHECK(enumerate_submodules(Kind::H, 3, 5, 3).total == 0);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_submodules(Kind::H, 4, 8, 3), ScaleGuardExceeded);
  CHECK_THROWS_AS(enumerate_submodules(Kind::H, 2, 4, 5), PreconditionError);
  EnumerationLimits tight;
  tight.max_modules = 10;
  CHECK_THROWS_AS(enumerate_submodules(Kind::H, 3, 6, 3, tight), ScaleGuardExceeded);
}

TEST_CASE("submodule construction and spans") {
  AlgebraTag h(Kind::H, Q);
  SubspaceK line = SubspaceK::span(Q, 8, {flatten(mv(h, {{1, 0, 0, 0}, {0, 0, 0, 0}}))});
  CHECK_THROWS_AS(RightSubmodule(h, 2, line), NotSubmodule);
  Span s = module_span(h, 2, {mv(h, {{1, 0, 0, 0}, {0, 0, 0, 0}})});
  CHECK(s.module.dim() == 2);
  CHECK(!s.free);
  CHECK(!s.module.is_free());
  Span t = module_span(h, 2, {mv(h, {{1, 0, 0, 0}, {0, 1, 1, 0}})});
  CHECK(t.module.dim() == 4);
  CHECK(t.free);
  CHECK(t.module.free_rank() == 1);
  CHECK(RightSubmodule::full(h, 2).dim() == 8);
  CHECK(unit_e(h) + unit_f(h) == CompElement::one(h));
  ModVector v = mv(h, {{1, 2, 3, 4}, {0, 1, 0, 1}});
  CHECK(flatten(right_mul(v, unit_h(h))) == right_mult_operator(unit_h(h), 2).apply(flatten(v)));
  CHECK(unflatten(h, 2, flatten(v)) == v);
}

TEST_CASE("generators, Grassmann data and duality") {
  for (const auto& e : all_submodules(Kind::H, 2, 2)) {
    auto gens = extract_generators(e);
    REQUIRE(gens.size() == (e.dim() + 3) / 4);
    if (!gens.empty()) REQUIRE(module_span(e.tag(), 2, gens).module == e);
    if (e.is_free()) {
      auto g = grassmann_iso(e);
      REQUIRE(g.plus.dim() * 2 == e.dim());
      REQUIRE(grassmann_inverse(g, F2, 2) == e);
      REQUIRE(dual_perp(dual_perp(e)) == e);
    }
  }
  for (std::uint64_t t = 0; t < 60; ++t) {
    TrialRng rng(1, stream_id("calgmod"), t);
    AlgebraTag tag(t % 2 ? Kind::C : Kind::H, t % 3 ? Q : FieldContext::prime(3));
    const std::size_t n = 1 + rng.below(3);
    RightSubmodule y = random_free_submodule(tag, n, rng.below(n + 1), rng);
    REQUIRE(y.is_free());
    RightSubmodule perp = dual_perp(y);
    REQUIRE(perp.dim() + y.dim() == n * tag.dim());
    REQUIRE(perp == dual_perp_via_pairing(y));
    auto pm = decompose_pm(y);
    REQUIRE(pm.plus.dim() + pm.minus.dim() == y.dim());
    if (tag.kind() == Kind::C) {
      auto gens = paired_generators(y);
      REQUIRE(module_span(tag, n, gens).module == y);
    }
  }
}
