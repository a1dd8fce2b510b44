#include <doctest.h>

#include "ckit/comp/checks.hpp"

using namespace ckit;
using namespace ckit::comp;

namespace {

const FieldContext Q = FieldContext::rationals();
const FieldContext F3 = FieldContext::prime(3);
const FieldContext F5 = FieldContext::prime(5);

CompElement el(const AlgebraTag& tag, std::vector<long> c) {
  VectorK v;
  for (long x : c) v.push_back(tag.context().from_int(x));
  return CompElement(tag, v);
}

std::size_t isotropic_count(const AlgebraTag& tag) {
  std::size_t n = 0;
  for (const auto& x : all_elements(tag)) n += !x.is_zero() && norm_q(x).is_zero();
  return n;
}

}  // namespace

TEST_CASE("quaternion model is 2x2 matrices") {
  AlgebraTag h(Kind::H, Q);
  CompElement e = el(h, {1, 0, 0, 0}), f = el(h, {0, 0, 0, 1}), e12 = el(h, {0, 1, 0, 0});
  CHECK(e * e == e);
  CHECK((e * f).is_zero());
  CHECK(e + f == CompElement::one(h));
  CHECK(norm_q(el(h, {1, 2, 3, 4})) == Q.from_int(-2));
  CHECK(conj(el(h, {1, 2, 3, 4})) == el(h, {4, -2, -3, 1}));
  CHECK(norm_q(e12).is_zero());
  CHECK(re(CompElement::one(h)) == Q.from_int(2));
  CHECK(e12 * e12 == CompElement::zero(h));
}

TEST_CASE("octonions are alternative but not associative") {
  AlgebraTag o(Kind::O, Q);
  bool some_nonzero = false;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k)
        some_nonzero = some_nonzero || !associator(CompElement::basis(o, i), CompElement::basis(o, j),
                                                   CompElement::basis(o, k)).is_zero();
  CHECK(some_nonzero);
  for (std::uint64_t t = 0; t < 500; ++t) {
    TrialRng rng(1, stream_id("moufang"), t);
    CompElement x = random_element(o, rng), y = random_element(o, rng), z = random_element(o, rng);
    REQUIRE(associator(x, x, y).is_zero());
    REQUIRE(associator(y, x, x).is_zero());
    REQUIRE(((z * x) * z) * y == z * (x * (z * y)));  // Moufang
    REQUIRE(x * conj(x) == CompElement::scalar(o, norm_q(x)));
  }
}

TEST_CASE("composition law exhaustively over F2 and on samples") {
  const FieldContext f2 = FieldContext::prime(2);
  for (Kind k : {Kind::R, Kind::C, Kind::H}) {
    auto all = all_elements(AlgebraTag(k, f2));
    for (const auto& x : all)
      for (const auto& y : all) REQUIRE(norm_q(x * y) == norm_q(x) * norm_q(y));
  }
  for (const auto& ctx : {Q, F5})
    for (Kind k : {Kind::R, Kind::C, Kind::H, Kind::O})
      for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng(2, stream_id("norm"), t);
        AlgebraTag tag(k, ctx);
        CompElement x = random_element(tag, rng), y = random_element(tag, rng);
        REQUIRE(norm_q(x * y) == norm_q(x) * norm_q(y));
        REQUIRE(conj(x) * (x * y) == norm_q(x) * y);
        REQUIRE(bilinear(x, y) == norm_q(x + y) - norm_q(x) - norm_q(y));
      }
}

TEST_CASE("isotropic counts match the split quadric point counts") {
  // Nonzero zeros of a hyperbolic form in 2m variables over F_q: q^{2m-1} + q^m - q^{m-1} - 1.
  auto expected = [](std::uint64_t q, unsigned m) {
    std::uint64_t a = 1, b = 1, c = 1;
    for (unsigned i = 0; i < 2 * m - 1; ++i) a *= q;
    for (unsigned i = 0; i < m; ++i) b *= q;
    for (unsigned i = 0; i + 1 < m; ++i) c *= q;
    return a + b - c - 1;
  };
  CHECK(isotropic_count(AlgebraTag(Kind::C, F3)) == expected(3, 1));
  CHECK(isotropic_count(AlgebraTag(Kind::H, F3)) == expected(3, 2));
  CHECK(isotropic_count(AlgebraTag(Kind::O, FieldContext::prime(2))) == expected(2, 4));
  CHECK(isotropic_count(AlgebraTag(Kind::O, F3)) == 2240);
}

TEST_CASE("left and right images") {
  AlgebraTag o(Kind::O, Q);
  CompElement e = CompElement::basis(o, 0);
  Report r = check_composition_general(e);
  CHECK(r.passed());
  CHECK(r.find("isotropic_dim_L_half"));
  CHECK(left_image(e).dim() == 4);
  CHECK(check_composition_general(CompElement::one(o)).find("invertible_L_full")->passed);
  CHECK_THROWS_AS(check_composition_general(CompElement::zero(o)), PreconditionError);
  CHECK_THROWS_AS(check_composition_general(CompElement::one(AlgebraTag(Kind::R, Q))), PreconditionError);
  CHECK_THROWS_AS(inverse(e), DivisionByZero);
  for (const auto& ctx : {Q, F5})
    for (Kind k : {Kind::C, Kind::H, Kind::O})
      for (std::uint64_t t = 0; t < 200; ++t) {
        TrialRng rng(3, stream_id("images"), t);
        AlgebraTag tag(k, ctx);
        CompElement z = random_isotropic(tag, rng);
        REQUIRE(norm_q(z).is_zero());
        REQUIRE(check_composition_general(z).passed());
        CompElement w = z * random_element(tag, rng);
        if (!w.is_zero()) REQUIRE(left_image_criterion(z, w));
        REQUIRE(left_image_criterion(z, random_isotropic(tag, rng)));
        CompElement u = random_invertible_element(tag, rng);
        REQUIRE(u * inverse(u) == CompElement::one(tag));
      }
}

TEST_CASE("triality dimensions") {
  AlgebraTag o(Kind::O, Q);
  CompElement e = CompElement::basis(o, 0);
  TrialityDims same = triality_dims(e, e);
  CHECK(same.ll == 4);
  CHECK(same.rr == 4);
  CHECK(triality_parity(e, e));
  for (const auto& ctx : {F3, F5, Q})
    for (std::uint64_t t = 0; t < 200; ++t) {
      TrialRng rng(4, stream_id("triality"), t);
      AlgebraTag tag(Kind::O, ctx);
      CompElement x = random_isotropic(tag, rng);
      CompElement y = t % 2 ? random_isotropic_orthogonal(x, rng) : random_isotropic(tag, rng);
      REQUIRE(bilinear(x, y).is_zero() == (t % 2 == 1 || bilinear(x, y).is_zero()));
      REQUIRE(check_triality(x, y).passed());
      REQUIRE(triality_parity(x, y));
    }
  CHECK_THROWS_AS(check_triality(CompElement::one(o), e), PreconditionError);
}

TEST_CASE("embeddings and restrictions") {
  AlgebraTag c(Kind::C, Q), o(Kind::O, Q);
  CompElement x = el(c, {2, -3});
  CompElement xo = embed(x, Kind::O);
  CHECK(norm_q(xo) == norm_q(x));
  CHECK(restrict_to(xo, Kind::C) == x);
  CHECK(!restrict_to(CompElement::basis(o, 5), Kind::H));
  TrialRng rng(5, 5, 5);
  CompElement a = random_element(AlgebraTag(Kind::H, Q), rng), b = random_element(AlgebraTag(Kind::H, Q), rng);
  CHECK(embed(a * b, Kind::O) == embed(a, Kind::O) * embed(b, Kind::O));
  CHECK_THROWS_AS(embed(xo, Kind::H), PreconditionError);
}

TEST_CASE("element json round trip") {
  for (const auto& ctx : {Q, F5}) {
    TrialRng rng(6, 6, 6);
    CompElement x = random_element(AlgebraTag(Kind::O, ctx), rng);
    CHECK(element_from_json(element_to_json(x)) == x);
  }
  CHECK_THROWS_AS(element_from_json(Json{{"alg", "o"}}), ParseError);
}
