#include "ckit/foundation/parallel.hpp"
#include "ckit/jordan/cubic.hpp"
#include "ckit/jordan/octonion_plane.hpp"
#include "ckit/verify/criteria.hpp"
#include "ckit/verify/generators.hpp"

namespace ckit::verify {

using comp::AlgebraTag;
using comp::CompElement;
using comp::Kind;
using jordan::HermitianMatrix;
using jordan::Triple;

namespace {

HermitianMatrix reduce_mod(const HermitianMatrix& a, const FieldContext& fp) {
  AlgebraTag tag(a.tag().kind(), fp);
  VectorK c;
  for (const auto& x : a.coordinates()) c.push_back(Scalar(fp, x.rational()));
  return HermitianMatrix::from_coordinates(tag, a.n(), c);
}

struct Verdicts {
  bool zero = true;
  bool definition = false, minors = false, lrank = false, lrank_div = true, preimage = false;
  bool square = false;
};

}  // namespace

Report rank_one_exhaustive(const AlgebraTag& tag, std::size_t n) {
  const std::uint64_t total = jordan::hermitian_count(tag, n);
  std::vector<Verdicts> out(total);
  const std::size_t d = tag.dim();
  parallel_for(total, [&](std::size_t idx) {
    HermitianMatrix a = jordan::hermitian_at(tag, n, idx);
    Verdicts& v = out[idx];
    if (a.is_zero()) return;
    v.zero = false;
    v.definition = jordan::jordan_rank_one(a);
    if (n == 3) v.minors = jordan::minors_rank_one_3(a);
    const std::size_t r = rank(jordan::l_operator(a));
    v.lrank = r == d;
    v.lrank_div = r % d == 0;
    v.preimage = jordan::find_veronese_preimage(a).has_value();
    if (n == 3) v.square = jordan::square_test(a).square_identity;
  });

  struct Clause {
    const char* name;
    bool Verdicts::*field;
    bool needs_n3;
  };
  const Clause clauses[] = {{"minors_iff_definition", &Verdicts::minors, true},
                            {"l_rank_iff_definition", &Verdicts::lrank, false},
                            {"preimage_iff_definition", &Verdicts::preimage, false},
                            {"square_iff_definition", &Verdicts::square, true}};
  std::size_t rank_one = 0;
  for (const auto& v : out) rank_one += !v.zero && v.definition;
  Json census{{"elements", total}, {"rank_one", rank_one}};

  Report rep;
  for (const auto& c : clauses) {
    if (c.needs_n3 && n != 3) continue;
    std::size_t disagree = 0;
    std::optional<std::uint64_t> first;
    for (std::uint64_t i = 0; i < total; ++i) {
      const Verdicts& v = out[i];
      if (!v.zero && v.*c.field != v.definition) {
        ++disagree;
        if (!first) first = i;
      }
    }
    Json detail = census;
    if (first) {
      detail["disagreements"] = disagree;
      detail["counterexample"] = hermitian_to_json(jordan::hermitian_at(tag, n, *first));
      detail["definition"] = out[*first].definition;
    }
    rep.add(c.name, !first, detail);
  }
  std::optional<std::uint64_t> bad_div;
  for (std::uint64_t i = 0; i < total && !bad_div; ++i)
    if (!out[i].lrank_div) bad_div = i;
  rep.add("l_rank_divisible_by_dim", !bad_div,
          bad_div ? hermitian_to_json(jordan::hermitian_at(tag, n, *bad_div)) : census);
  return rep;
}

Report rank_one_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  const std::pair<Kind, std::size_t> shapes[] = {{Kind::C, 3}, {Kind::H, 3}, {Kind::H, 2}};
  for (auto [kind, n] : shapes) {
    AlgebraTag tag(kind, ctx);
    Report part;
    sampled(part, s.spec("rank_one_" + tag.name() + "_n" + std::to_string(n)), [&, n = n](TrialRng& rng) {
      Report r;
      const bool from_nu2 = rng.coin();
      HermitianMatrix a = from_nu2 ? random_nonzero_scalar(ctx, rng) * jordan::veronese(random_triple(tag, n, rng))
                                   : jordan::random_hermitian(tag, n, rng);
      if (a.is_zero()) return r;
      const bool def = jordan::jordan_rank_one(a);
      Json detail{{"A", hermitian_to_json(a)}, {"definition", def}};
      if (from_nu2) r.add("nu2_image_is_rank_one", def, detail);
      if (n == 3) r.add("minors_iff_definition", jordan::minors_rank_one_3(a) == def, detail);
      r.merge(jordan::l_rank_tests(a));
      if (n == 3) r.add("square_iff_definition", jordan::square_test(a).agrees(), detail);
      return r;
    });
    rep.merge(part, tag.name() + "_n" + std::to_string(n) + ".");
  }
  return rep;
}

Report fundamental_identity_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  for (Kind kind : {Kind::C, Kind::H}) {
    AlgebraTag tag(kind, ctx);
    Report part;
    sampled(part, s.spec("fundamental_" + tag.name()), [&](TrialRng& rng) {
      HermitianMatrix a = jordan::random_hermitian(tag, 3, rng), b = jordan::random_hermitian(tag, 3, rng);
      MatrixK ua = jordan::u_operator_matrix(a);
      Report r;
      r.add("fundamental_identity",
            jordan::u_operator_matrix(jordan::u_operator(a, b)) == ua * jordan::u_operator_matrix(b) * ua,
            Json{{"A", hermitian_to_json(a)}, {"B", hermitian_to_json(b)}});
      return r;
    });
    rep.merge(part, tag.name() + ".");
  }
  return rep;
}

Report octonion_u_crosscheck_sampled(const FieldContext& ctx, const Sampling& s) {
  AlgebraTag h(Kind::H, ctx);
  Report rep;
  sampled(rep, s.spec("octonion_u"), [&](TrialRng& rng) {
    HermitianMatrix a = jordan::random_hermitian(h, 3, rng), b = jordan::random_hermitian(h, 3, rng);
    HermitianMatrix via_o = jordan::u_operator(jordan::embed(a, Kind::O), jordan::embed(b, Kind::O));
    Report r;
    r.add("octonion_u_matches_aba", via_o == jordan::embed(jordan::u_operator(a, b), Kind::O),
          Json{{"A", hermitian_to_json(a)}, {"B", hermitian_to_json(b)}});
    return r;
  });
  return rep;
}

Report veronese_scaling_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  for (Kind kind : {Kind::C, Kind::H}) {
    AlgebraTag tag(kind, ctx);
    Report part;
    sampled(part, s.spec("veronese_scaling_" + tag.name()), [&](TrialRng& rng) {
      Triple z = random_triple(tag, 3, rng);
      CompElement l = comp::random_element(tag, rng);
      Triple zl;
      for (const auto& x : z) zl.push_back(x * l);
      Report r;
      r.add("nu2_scaling", jordan::veronese(zl) == comp::norm_q(l) * jordan::veronese(z),
            Json{{"z", jordan::triple_to_json(z)}, {"lambda", element_to_json(l)}});
      return r;
    });
    rep.merge(part, tag.name() + ".");
  }
  return rep;
}

Report rank_one_sums_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  sampled(rep, s.spec("rank_one_sums"), [&](TrialRng& rng) {
    HermitianMatrix a = jordan::veronese(random_associative_triple(ctx, rng));
    HermitianMatrix b = jordan::veronese(random_associative_triple(ctx, rng));
    Report r;
    r.add("det_vanishes_on_two_rank_ones", jordan::det3(a + b).is_zero(),
          Json{{"A", hermitian_to_json(a)}, {"B", hermitian_to_json(b)}});
    return r;
  });
  return rep;
}

Report x1_classification_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  sampled(rep, s.spec("x1_classification"), [&](TrialRng& rng) {
    Report r;
    Triple z = random_associative_triple(ctx, rng);
    HermitianMatrix a = jordan::veronese(z);
    if (a.is_zero()) return r;
    Json detail{{"A", hermitian_to_json(a)}, {"z", jordan::triple_to_json(z)}};
    r.add("nu2_image_quadrics_vanish", is_zero_vector(jordan::octonion_quadrics(a)), detail);
    auto c = jordan::classify_rank_one_octonion(a);
    detail["classification"] = jordan::classification_to_json(c);
    const bool x1 = c.cls == jordan::PlaneClass::X1;
    r.add("classified_x1", x1, detail);
    r.add("witness_round_trip", x1 && jordan::proportional(a, jordan::veronese(c.triple)), detail);
    return r;
  });
  return rep;
}

HermitianMatrix constructed_x0_witness() {
  auto plane = jordan::find_null_plane(FieldContext::prime(3));
  if (!plane) throw Error("no null plane over F_3");
  CompElement a = jordan::lift_to_rationals(plane->first), b = jordan::lift_to_rationals(plane->second);
  return jordan::null_plane_matrix(a, b, CompElement::zero(a.tag()));
}

Report x0_witness_checks(const HermitianMatrix& a) {
  Report rep;
  if (a.tag().kind() != Kind::O || a.n() != 3) throw PreconditionError("X0 witness must lie in H_3(O)");
  Json detail{{"A", hermitian_to_json(a)}};
  rep.add("x0_quadrics_vanish", is_zero_vector(jordan::octonion_quadrics(a)), detail);
  rep.add("x0_rank_one", !a.is_zero() && jordan::jordan_rank_one(a), detail);
  auto c = jordan::classify_rank_one_octonion(a);
  rep.add("x0_classified_x0", c.cls == jordan::PlaneClass::X0, jordan::classification_to_json(c));
  const FieldContext f3 = FieldContext::prime(3);
  HermitianMatrix a3 = a.context().is_rational() ? reduce_mod(a, f3) : a;
  if (!(a3.context() == f3)) throw PreconditionError("X0 witness must be over Q or F_3");
  auto pre = jordan::find_veronese_preimage(a3);
  rep.add("x0_no_nu2_preimage_f3", !pre, pre ? jordan::triple_to_json(pre->z) : Json{{"searched", "F_3"}});
  return rep;
}

Report scaling_failure_search() {
  Report rep;
  auto w = jordan::find_scaling_failure(FieldContext::prime(3));
  if (!w) {
    rep.add("scaling_failure_witness", false, Json{{"searched", "F_3"}, {"found", false}});
    return rep;
  }
  const bool ok = !comp::norm_q(w->lambda).is_zero() && !w->nu2_z.is_zero() &&
                  jordan::generates_associative(w->z) && !jordan::proportional(w->nu2_z_lambda, w->nu2_z);
  rep.add("scaling_failure_witness", ok,
          Json{{"z", jordan::triple_to_json(w->z)},
               {"lambda", element_to_json(w->lambda)},
               {"Q_lambda", scalar_to_json(comp::norm_q(w->lambda))},
               {"nu2_z", hermitian_to_json(w->nu2_z)},
               {"nu2_z_lambda", hermitian_to_json(w->nu2_z_lambda)}});
  return rep;
}

}  // namespace ckit::verify
