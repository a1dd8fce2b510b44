#include <doctest.h>

#include <bit>
#include <numeric>

#include "ckit/cubic27/theta.hpp"
#include "ckit/jordan/octonion_plane.hpp"
#include "ckit/jordan/rank_one.hpp"

using namespace ckit;
using namespace ckit::cubic27;
using jordan::HermitianMatrix;

namespace {

const FieldContext Q = FieldContext::rationals();

std::size_t idx(char l, int i, int j) { return var_index(l, i, j); }

}  // namespace

TEST_CASE("points and planes") {
  const IncidenceStructure& s = IncidenceStructure::get();
  CHECK(s.planes().size() == 45);
  for (std::size_t v = 0; v < kPoints; ++v) {
    CHECK(s.planes_through(v).size() == 5);
    CHECK(std::popcount(s.meets(v)) == 10);
    CHECK(point_from_label(point_label(v)) == v);
  }
  CHECK(point_label(idx('b', 2, 3)) == "b23");
  CHECK(s.coplanar(idx('a', 1, 1), idx('a', 2, 2)));
  CHECK(!s.coplanar(idx('a', 1, 1), idx('a', 1, 2)));
  CHECK(beta_polynomial().num_terms() == 45);
  CHECK(incidence_to_json(s)["planes"].size() == 45);
  CHECK(IncidenceStructure::from_polynomial(beta_polynomial()).planes().size() == 45);
}

TEST_CASE("double sixes") {
  const IncidenceStructure& s = IncidenceStructure::get();
  std::array<std::size_t, 6> e{idx('a', 1, 1), idx('a', 2, 1), idx('a', 3, 1), idx('b', 2, 1), idx('b', 2, 2), idx('b', 2, 3)};
  std::array<std::size_t, 6> f{idx('a', 1, 2), idx('a', 2, 2), idx('a', 3, 2), idx('b', 1, 1), idx('b', 1, 2), idx('b', 1, 3)};
  CHECK(is_double_six(s, e, f));
  std::swap(e[0], f[0]);
  CHECK(!is_double_six(s, e, f));
}

TEST_CASE("grids and the theta signs") {
  const IncidenceStructure& s = IncidenceStructure::get();
  auto grids = enumerate_3grids(s);
  CHECK(grids.size() == 120);
  CHECK(check_theta_grids(s, grids).passed());
  CHECK(theta_product(s) == 1);
  for (std::size_t i : {0u, 17u, 44u}) CHECK(!check_theta_grids(s.with_sign_flipped(i), grids).passed());
}

TEST_CASE("automorphism group order") {
  const IncidenceStructure& s = IncidenceStructure::get();
  AutomorphismCount c = incidence_automorphism_count(s, std::chrono::milliseconds(120000));
  CHECK(c.complete);
  CHECK(c.count == 51840);
  std::array<std::uint8_t, kPoints> id;
  std::iota(id.begin(), id.end(), 0);
  CHECK(is_automorphism(s, id));
  std::swap(id[idx('a', 1, 1)], id[idx('a', 1, 2)]);
  CHECK(!is_automorphism(s, id));
  AutomorphismCount partial = incidence_automorphism_count(s, std::chrono::milliseconds(0));
  CHECK(!partial.complete);
}

TEST_CASE("theta carries det3 to beta") {
  CHECK(det_theta_polynomial() == beta_polynomial());
  CHECK(rank(theta_matrix(Q)) == 27);
  CHECK(rank(theta_matrix(FieldContext::prime(2))) == 27);
  for (std::uint64_t t = 0; t < 100; ++t) {
    TrialRng rng(1, stream_id("theta"), t);
    const FieldContext ctx = t % 2 ? Q : FieldContext::prime(7);
    GridTriple g = random_grid(ctx, rng);
    REQUIRE(jordan::det3(theta_map(g)) == evaluate_beta(g));
    REQUIRE(theta_preimage(theta_map(g)) == g);
    REQUIRE(GridTriple::from_vector(ctx, g.to_vector()) == g);
    MatrixK m = random_special_linear(ctx, 3, rng), n = random_special_linear(ctx, 3, rng),
            p = random_special_linear(ctx, 3, rng);
    REQUIRE(evaluate_beta(triple_action(m, n, p, g)) == evaluate_beta(g));
    REQUIRE(evaluate_alpha(IncidenceStructure::get(), g.to_vector()) == evaluate_beta(g));
  }
}

TEST_CASE("triple action") {
  TrialRng rng(2, 2, 2);
  GridTriple g = random_grid(Q, rng);
  MatrixK id = MatrixK::identity(Q, 3);
  CHECK(triple_action(id, id, id, g) == g);
  MatrixK d = MatrixK::from_rows(Q, 3, {{Q.from_int(2), Q.zero(), Q.zero()},
                                         {Q.zero(), Q.one(), Q.zero()},
                                         {Q.zero(), Q.zero(), Q.fraction(1, 2)}});
  GridTriple h = triple_action(d, id, id, g);
  CHECK(h.a(0, 1) == Q.from_int(2) * g.a(0, 1));
  CHECK(h.c(1, 0) == Q.fraction(1, 2) * g.c(1, 0));
  CHECK(h.c(0, 1) == g.c(0, 1));
  CHECK(h.b == g.b);
  CHECK(evaluate_beta(h) == evaluate_beta(g));
}

TEST_CASE("singular locus") {
  GridTriple e = theta_preimage(HermitianMatrix::unit_diag(jordan::AlgebraTag(comp::Kind::O, Q), 3, 0));
  CHECK(is_zero_vector(beta_gradient(e)));
  CHECK(singular_locus_check(e).passed());
  GridTriple id = theta_preimage(HermitianMatrix::identity(jordan::AlgebraTag(comp::Kind::O, Q), 3));
  CHECK(!is_zero_vector(beta_gradient(id)));
  CHECK(singular_locus_check(id).passed());
  for (std::uint64_t t = 0; t < 200; ++t) {
    TrialRng rng(3, stream_id("singular"), t);
    REQUIRE(singular_locus_check(random_grid(FieldContext::prime(3), rng)).passed());
  }
  CHECK_THROWS_AS(theta_preimage(HermitianMatrix::identity(jordan::AlgebraTag(comp::Kind::H, Q), 3)),
                  PreconditionError);
}
