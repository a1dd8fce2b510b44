#include <doctest.h>

#include <fstream>

#include "ckit/jordan/cubic.hpp"
#include "ckit/jordan/octonion_plane.hpp"

using namespace ckit;
using namespace ckit::jordan;
using comp::CompElement;

namespace {

const FieldContext Q = FieldContext::rationals();
const FieldContext F2 = FieldContext::prime(2);
const FieldContext F3 = FieldContext::prime(3);

CompElement el(const AlgebraTag& tag, std::vector<long> c) {
  VectorK v;
  for (long x : c) v.push_back(tag.context().from_int(x));
  return CompElement(tag, v);
}

std::size_t census(const AlgebraTag& tag, std::size_t n) {
  std::size_t k = 0;
  for_each_hermitian(tag, n, [&](const HermitianMatrix& a) { k += !a.is_zero() && jordan_rank_one(a); });
  return k;
}

std::uint64_t ipow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= q;
  return r;
}

HermitianMatrix diag(const AlgebraTag& tag, long a, long b, long c) {
  HermitianMatrix m(tag, 3);
  m.set_diag(0, tag.context().from_int(a));
  m.set_diag(1, tag.context().from_int(b));
  m.set_diag(2, tag.context().from_int(c));
  return m;
}

}  // namespace

TEST_CASE("hermitian shapes") {
  CHECK(HermitianMatrix::dimension(Kind::O, 3) == 27);
  CHECK(HermitianMatrix::dimension(Kind::H, 3) == 15);
  CHECK(HermitianMatrix::dimension(Kind::C, 2) == 4);
  AlgebraTag c(Kind::C, F2);
  CHECK(hermitian_count(c, 3) == 512);
  HermitianMatrix a = HermitianMatrix::identity(AlgebraTag(Kind::H, Q), 3);
  a.set_entry(1, 0, el(a.tag(), {1, 2, 3, 4}));
  CHECK(a.upper(0, 1) == comp::conj(el(a.tag(), {1, 2, 3, 4})));
  CHECK(hermitian_from_json(hermitian_to_json(a)) == a);
  CHECK(HermitianMatrix::from_coordinates(a.tag(), 3, a.coordinates()) == a);
  CHECK(trace(a) == Q.from_int(3));
}

TEST_CASE("det3 on fixed matrices") {
  AlgebraTag o(Kind::O, Q);
  CHECK(det3(HermitianMatrix::identity(o, 3)).is_one());
  CHECK(det3(diag(o, 2, 3, 5)) == Q.from_int(30));
  HermitianMatrix a = diag(o, 1, 1, 1);
  a.set_entry(1, 0, CompElement::one(o));
  a.set_entry(2, 0, CompElement::one(o));
  a.set_entry(1, 2, CompElement::one(o));
  // Q(1) = 1 and <1*1, 1> = 2 in the split models.
  CHECK(det3(a) == Q.from_int(1 + 2 - 3));
  CHECK(det3_doubled_product(a) == Q.from_int(1 + 4 - 3));
  CHECK_THROWS_AS(det3(HermitianMatrix(o, 2)), PreconditionError);
}

TEST_CASE("cubic identities on samples") {
  for (const auto& ctx : {Q, FieldContext::prime(7)})
    for (Kind k : {Kind::C, Kind::H, Kind::O})
      for (std::uint64_t t = 0; t < 60; ++t) {
        TrialRng rng(1, stream_id("cubic"), t);
        AlgebraTag tag(k, ctx);
        HermitianMatrix a = random_hermitian(tag, 3, rng), b = random_hermitian(tag, 3, rng);
        REQUIRE(adjoint(adjoint(a)) == det3(a) * a);
        REQUIRE(det3(u_operator(a, b)) == det3(a) * det3(a) * det3(b));
        REQUIRE(det3_directional(a, b) == trace_form(adjoint(a), b));
        REQUIRE(u_operator(HermitianMatrix::identity(tag, 3), b) == b);
      }
}

TEST_CASE("rank one basics") {
  AlgebraTag o(Kind::O, Q);
  HermitianMatrix e11 = HermitianMatrix::unit_diag(o, 3, 0);
  CHECK(jordan_rank_one(e11));
  CHECK(!jordan_rank_one(HermitianMatrix::identity(o, 3)));
  CHECK(minors_rank_one_3(e11));
  CHECK(veronese({CompElement::one(o), CompElement::zero(o), CompElement::zero(o)}) == e11);
  HermitianMatrix h11 = HermitianMatrix::unit_diag(AlgebraTag(Kind::H, F3), 3, 0);
  CHECK(rank(l_operator(h11)) == 4);
  CHECK(l_rank_tests(h11).passed());
  CHECK_THROWS_AS(l_operator(e11), PreconditionError);
  auto pre = find_veronese_preimage(h11);
  REQUIRE(pre);
  CHECK(pre->scale * veronese(pre->z) == h11);
  CHECK_THROWS_AS(jordan_rank_one(HermitianMatrix(o, 3)), PreconditionError);
}

TEST_CASE("rank one census against point counts") {
  // Split models: H_3(C) ~ M_3, H_2(H) ~ 6-dim hyperbolic space, H_3(H) ~ Alt_6.
  for (std::uint64_t q : {2u, 3u}) {
    const FieldContext ctx = FieldContext::prime(static_cast<std::uint32_t>(q));
    CHECK(census(AlgebraTag(Kind::C, ctx), 3) == (ipow(q, 3) - 1) * (ipow(q, 3) - 1) / (q - 1));
    CHECK(census(AlgebraTag(Kind::H, ctx), 2) == ipow(q, 5) + ipow(q, 3) - ipow(q, 2) - 1);
  }
  CHECK(census(AlgebraTag(Kind::C, F2), 3) == 49);
}

TEST_CASE("square test fails only at the identity over F2") {
  AlgebraTag c(Kind::C, F2);
  std::vector<HermitianMatrix> bad;
  for_each_hermitian(c, 3, [&](const HermitianMatrix& a) {
    if (!a.is_zero() && !square_test(a).agrees()) bad.push_back(a);
  });
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == HermitianMatrix::identity(c, 3));
  SquareTest s = square_test(bad[0]);
  CHECK(s.square_identity);
  CHECK(!s.rank_one);
  CHECK(square_test(HermitianMatrix::identity(AlgebraTag(Kind::C, F3), 3)).agrees());
}

TEST_CASE("nu2 scales by the norm in associative families") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    TrialRng rng(2, stream_id("scaling"), t);
    AlgebraTag h(Kind::H, t % 2 ? Q : F3);
    Triple z;
    for (int i = 0; i < 3; ++i) z.push_back(comp::random_element(h, rng));
    CompElement l = comp::random_element(h, rng);
    Triple zl;
    for (const auto& x : z) zl.push_back(x * l);
    REQUIRE(veronese(zl) == comp::norm_q(l) * veronese(z));
    if (!veronese(z).is_zero()) REQUIRE(jordan_rank_one(veronese(z)));
  }
}

TEST_CASE("fundamental identity for U") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    TrialRng rng(3, stream_id("fundamental"), t);
    AlgebraTag tag(t % 2 ? Kind::C : Kind::H, Q);
    HermitianMatrix a = random_hermitian(tag, 3, rng), b = random_hermitian(tag, 3, rng);
    MatrixK ua = u_operator_matrix(a);
    REQUIRE(u_operator_matrix(u_operator(a, b)) == ua * u_operator_matrix(b) * ua);
  }
}

TEST_CASE("octonion plane classification") {
  AlgebraTag o(Kind::O, Q);
  auto c = classify_rank_one_octonion(HermitianMatrix::unit_diag(o, 3, 1));
  CHECK(c.cls == PlaneClass::X1);
  CHECK(c.route == "diagonal");

  CompElement x = CompElement::basis(o, 1);
  HermitianMatrix line = null_plane_matrix(x, Q.from_int(2) * x, CompElement::zero(o));
  REQUIRE(is_zero_vector(octonion_quadrics(line)));
  auto cl = classify_rank_one_octonion(line);
  CHECK(cl.cls == PlaneClass::X1);
  CHECK(cl.route == "isotropic_line");
  CHECK(proportional(line, veronese(cl.triple)));

  CHECK_THROWS_AS(classify_rank_one_octonion(HermitianMatrix::identity(o, 3)), NotRankOne);
  CHECK_THROWS_AS(classify_rank_one_octonion(HermitianMatrix(o, 3)), PreconditionError);
}

TEST_CASE("null plane over F3 and the X0 witness") {
  auto plane = find_null_plane(F3);
  REQUIRE(plane);
  AlgebraTag o3(Kind::O, F3);
  CHECK(plane->first == el(o3, {0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(plane->second == el(o3, {0, 0, 0, 0, 0, 0, 1, 0}));

  std::ifstream in(std::string(CKIT_DATA_DIR) + "/x0_witness.json");
  REQUIRE(in);
  HermitianMatrix w = hermitian_from_json(Json::parse(in));
  CHECK(is_zero_vector(octonion_quadrics(w)));
  CHECK(jordan_rank_one(w));
  auto c = classify_rank_one_octonion(w);
  CHECK(c.cls == PlaneClass::X0);
  CHECK(c.plane.size() == 2);
}

TEST_CASE("scaling failure witness over F3") {
  auto w = find_scaling_failure(F3);
  REQUIRE(w);
  AlgebraTag o3(Kind::O, F3);
  CHECK(w->z[0] == el(o3, {0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(w->z[1] == el(o3, {0, 0, 0, 0, 0, 1, 0, 0}));
  CHECK(w->lambda == el(o3, {0, 0, 1, 0, 0, 1, 1, 0}));
  CHECK(!comp::norm_q(w->lambda).is_zero());
  CHECK(!proportional(w->nu2_z_lambda, w->nu2_z));
}

TEST_CASE("octonion cubic data") {
  const CubicData& d = CubicData::octonion();
  CHECK(d.det().num_terms() == 45);
  CHECK(d.gradient().size() == 27);
  for (std::uint64_t t = 0; t < 50; ++t) {
    TrialRng rng(4, stream_id("cubic_data"), t);
    HermitianMatrix a = random_hermitian(AlgebraTag(Kind::O, Q), 3, rng);
    REQUIRE(d.det().evaluate(Q, a.coordinates()) == det3(a));
  }
}
