#include <map>

#include "ckit/cubic27/theta.hpp"
#include "ckit/jordan/cubic.hpp"
#include "ckit/jordan/octonion_plane.hpp"
#include "ckit/verify/criteria.hpp"
#include "ckit/verify/generators.hpp"

namespace ckit::verify {

using namespace cubic27;
using jordan::HermitianMatrix;

namespace {

Polynomial alpha_polynomial(const IncidenceStructure& s) {
  Polynomial p;
  for (const auto& t : s.planes())
    p += Polynomial::monomial(t.sign, Monomial(t.points.begin(), t.points.end()));
  return p;
}

Json term_summary(const Polynomial& p) {
  std::map<long long, std::size_t> coefs;
  for (const auto& [m, c] : p.terms()) ++coefs[c];
  Json j{{"terms", p.num_terms()}};
  Json cj = Json::object();
  for (const auto& [c, k] : coefs) cj[std::to_string(c)] = k;
  j["coefficients"] = cj;
  return j;
}

Json first_difference(const Polynomial& a, const Polynomial& b) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < kPoints; ++v) names.push_back(point_label(v));
  Polynomial d = a - b;
  Polynomial first;
  if (!d.is_zero()) first.add_term(d.terms().begin()->first, d.terms().begin()->second);
  return Json{{"difference_terms", d.num_terms()}, {"first", first.to_string(names)}};
}

GridTriple pull_back_rank_one(const FieldContext& ctx, TrialRng& rng) {
  return theta_preimage(random_nonzero_scalar(ctx, rng) * jordan::veronese(random_associative_triple(ctx, rng)));
}

}  // namespace

Report theta_identity() {
  Report rep;
  Polynomial lhs = det_theta_polynomial();
  Polynomial beta = beta_polynomial();
  Json detail{{"det_theta", term_summary(lhs)}, {"beta", term_summary(beta)}};
  if (lhs != beta) detail["mismatch"] = first_difference(lhs, beta);
  rep.add("det_theta_equals_beta", lhs == beta, detail);
  for (const FieldContext& ctx : {FieldContext::rationals(), FieldContext::prime(2)})
    rep.add("theta_bijective_" + ctx.name(), rank(theta_matrix(ctx)) == kPoints,
            Json{{"rank", rank(theta_matrix(ctx))}});
  GridTriple b13 = GridTriple::zero(FieldContext::rationals());
  b13.b(0, 2) = FieldContext::rationals().one();
  HermitianMatrix img = theta_map(b13);
  rep.add("theta_b13_is_e11", img == HermitianMatrix::unit_diag(img.tag(), 3, 0), hermitian_to_json(img));
  return rep;
}

Report incidence_checks() {
  Report rep;
  const IncidenceStructure& s = IncidenceStructure::get();
  bool five = true;
  for (std::size_t v = 0; v < kPoints; ++v) five = five && s.planes_through(v).size() == 5;
  rep.add("planes_45", s.planes().size() == 45, Json{{"planes", s.planes().size()}});
  rep.add("five_planes_per_point", five);
  Polynomial alpha = alpha_polynomial(s), beta = beta_polynomial();
  rep.add("alpha_equals_beta", alpha == beta, alpha == beta ? term_summary(alpha) : first_difference(alpha, beta));
  auto idx = [](char l, int i, int j) { return static_cast<std::size_t>(var_index(l, i, j)); };
  std::array<std::size_t, 6> e{idx('a', 1, 1), idx('a', 2, 1), idx('a', 3, 1), idx('b', 2, 1), idx('b', 2, 2), idx('b', 2, 3)};
  std::array<std::size_t, 6> f{idx('a', 1, 2), idx('a', 2, 2), idx('a', 3, 2), idx('b', 1, 1), idx('b', 1, 2), idx('b', 1, 3)};
  rep.add("double_six_example", is_double_six(s, e, f));
  return rep;
}

Report theta_grids() {
  Report rep;
  const IncidenceStructure& s = IncidenceStructure::get();
  auto grids = enumerate_3grids(s);
  Report g = check_theta_grids(s, grids);
  rep.merge(g);
  rep.add("grid_count", grids.size() == 120 && enumerate_3grids(s).size() == grids.size(),
          Json{{"grids", grids.size()}});
  std::size_t broken = 0;
  for (std::size_t i = 0; i < s.planes().size(); ++i)
    broken += !check_theta_grids(s.with_sign_flipped(i), grids).passed();
  rep.add("single_flip_breaks_identity", broken == s.planes().size(), Json{{"flips_detected", broken}});
  rep.add("theta_product_recorded", true, Json{{"product", theta_product(s)}});
  return rep;
}

Report beta_invariance_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  sampled(rep, s.spec("beta_invariance"), [&](TrialRng& rng) {
    GridTriple t = random_grid(ctx, rng);
    MatrixK m = random_special_linear(ctx, 3, rng), n = random_special_linear(ctx, 3, rng),
            p = random_special_linear(ctx, 3, rng);
    Report r;
    r.add("beta_sl3_invariant", evaluate_beta(triple_action(m, n, p, t)) == evaluate_beta(t),
          Json{{"t", vector_to_json(t.to_vector())}, {"M", matrix_to_json(m)}, {"N", matrix_to_json(n)},
               {"P", matrix_to_json(p)}});
    GridTriple a_only = GridTriple::zero(ctx);
    a_only.a = t.a;
    r.add("beta_restricts_to_det", evaluate_beta(a_only) == determinant(t.a), Json{{"A", matrix_to_json(t.a)}});
    r.add("det_theta_pointwise", jordan::det3(theta_map(t)) == evaluate_beta(t),
          Json{{"t", vector_to_json(t.to_vector())}});
    return r;
  });
  return rep;
}

Report singular_locus_sampled(const FieldContext& ctx, const Sampling& s) {
  Report rep;
  sampled(rep, s.spec("singular_locus"), [&](TrialRng& rng) { return singular_locus_check(random_grid(ctx, rng)); });
  Sampling built = s;
  built.trials = std::max<std::size_t>(1, s.trials / 10);
  Report constructed;
  sampled(constructed, built.spec("singular_locus_rank_one"), [&](TrialRng& rng) {
    GridTriple t = pull_back_rank_one(ctx, rng);
    if (is_zero_vector(t.to_vector())) return Report();
    Report r = singular_locus_check(t);
    const bool all = is_zero_vector(beta_gradient(t)) &&
                     is_zero_vector(jordan::octonion_quadrics(theta_map(t))) &&
                     jordan::jordan_rank_one(theta_map(t));
    r.add("rank_one_point_is_singular", all, Json{{"t", vector_to_json(t.to_vector())}});
    return r;
  });
  rep.merge(constructed, "rank_one_points.");
  return rep;
}

Report automorphism_census(std::chrono::milliseconds budget) {
  Report rep;
  AutomorphismCount c = incidence_automorphism_count(IncidenceStructure::get(), budget);
  rep.add("automorphism_count_51840", c.complete && c.count == 51840,
          Json{{"count", c.count}, {"complete", c.complete}});
  return rep;
}

}  // namespace ckit::verify
