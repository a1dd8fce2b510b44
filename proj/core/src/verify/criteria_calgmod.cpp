#include <algorithm>

#include "ckit/calgmod/enumerate.hpp"
#include "ckit/verify/criteria.hpp"

namespace ckit::verify {

using calgmod::Kind;
using calgmod::RightSubmodule;

Report grassmann_census() {
  Report rep;
  calgmod::EnumerationLimits lim;
  lim.keep_members = true;
  calgmod::Census c = calgmod::enumerate_submodules(Kind::C, 2, 2, 2, lim);
  Json census = calgmod::census_to_json(c);

  using Group = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::vector<Group> got;
  for (const auto& g : c.groups) got.emplace_back(g.dims.first, g.dims.second, g.count);
  const std::vector<Group> expected = {{0, 2, 1}, {1, 1, 9}, {2, 0, 1}};
  rep.add("c2_dim2_groups", got == expected, census);

  bool locus = true;
  for (const auto& e : c.members) {
    auto pm = calgmod::decompose_pm(e);
    locus = locus && e.is_free() == (pm.plus.dim() == 1 && pm.minus.dim() == 1);
  }
  rep.add("c2_free_locus_is_balanced_group", locus && c.free_count == 9, Json{{"free_count", c.free_count}});

  auto oracle = calgmod::brute_force_submodules(Kind::C, 2, 2, 2);
  rep.add("c2_dim2_matches_echelon_oracle", oracle.size() == c.total,
          Json{{"oracle", oracle.size()}, {"search", c.total}});
  return rep;
}

Report submodule_lattice_exhaustive() {
  Report rep;
  auto all = calgmod::all_submodules(Kind::H, 2, 2);
  Json bad_gen, bad_even, bad_iso;
  for (const auto& e : all) {
    if (e.dim() % 2 != 0 && bad_even.is_null()) bad_even = calgmod::submodule_to_json(e);
    auto gens = calgmod::extract_generators(e);
    SubspaceK sum = SubspaceK::zero(e.tag().context(), e.space().ambient_dim());
    std::size_t dims = 0;
    for (const auto& g : gens) {
      auto sp = calgmod::module_span(e.tag(), e.n(), {g});
      dims += sp.module.dim();
      sum = sum.sum(sp.module.space());
    }
    const bool ok = gens.size() == (e.dim() + 3) / 4 && dims == e.dim() && sum == e.space();
    if (!ok && bad_gen.is_null()) bad_gen = calgmod::submodule_to_json(e);
    if (e.is_free() && calgmod::grassmann_inverse(calgmod::grassmann_iso(e), e.tag().context(), e.n()) != e &&
        bad_iso.is_null())
      bad_iso = calgmod::submodule_to_json(e);
  }
  Json stats{{"submodules", all.size()}};
  rep.add("h2_f2_dimensions_even", bad_even.is_null(), bad_even.is_null() ? stats : bad_even);
  rep.add("h2_f2_extract_generators_regenerates", bad_gen.is_null(), bad_gen.is_null() ? stats : bad_gen);
  rep.add("h2_f2_grassmann_round_trip", bad_iso.is_null(), bad_iso.is_null() ? stats : bad_iso);

  auto oracle_sizes = [](Kind k, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t d = 0; d <= n * comp::kind_dim(k); ++d) total += calgmod::brute_force_submodules(k, n, d, 2).size();
    return total;
  };
  const std::size_t h2_oracle = oracle_sizes(Kind::H, 2);
  rep.add("h2_f2_lattice_matches_echelon_oracle", h2_oracle == all.size(),
          Json{{"oracle", h2_oracle}, {"search", all.size()}});

  auto c_all = calgmod::all_submodules(Kind::C, 2, 2);
  Json bad_c;
  for (const auto& e : c_all)
    if (e.is_free() && calgmod::grassmann_inverse(calgmod::grassmann_iso(e), e.tag().context(), e.n()) != e && bad_c.is_null())
      bad_c = calgmod::submodule_to_json(e);
  rep.add("c2_f2_grassmann_round_trip", bad_c.is_null(), bad_c.is_null() ? Json{{"submodules", c_all.size()}} : bad_c);
  return rep;
}

Report duality_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  for (Kind kind : {Kind::C, Kind::H}) {
    comp::AlgebraTag tag(kind, ctx);
    Report part;
    sampled(part, s.spec("duality_" + tag.name()), [&](TrialRng& rng) {
      const std::size_t n = 1 + rng.below(3);
      RightSubmodule y = calgmod::random_free_submodule(tag, n, rng.below(n + 1), rng);
      RightSubmodule perp = calgmod::dual_perp(y);
      Json detail{{"Y", calgmod::submodule_to_json(y)}};
      Report r;
      r.add("double_perp_is_identity", calgmod::dual_perp(perp) == y, detail);
      r.add("perp_dimension", perp.dim() + y.dim() == n * tag.dim(), detail);
      r.add("perp_matches_pairing", perp == calgmod::dual_perp_via_pairing(y), detail);
      return r;
    });
    rep.merge(part, tag.name() + ".");
  }
  return rep;
}

}  // namespace ckit::verify
