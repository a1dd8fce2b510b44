#include <doctest.h>

#include "ckit/classical/model.hpp"

using namespace ckit;
using namespace ckit::classical;

namespace {

const FieldContext Q = FieldContext::rationals();
const FieldContext F3 = FieldContext::prime(3);

std::size_t rank_one_count(const ClassicalModel& m, std::uint32_t p) {
  const std::size_t d = carrier_basis(m).size();
  std::size_t total = 1, count = 0;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  for (std::size_t idx = 1; idx < total; ++idx) {
    VectorK c;
    for (std::size_t i = 0, r = idx; i < d; ++i, r /= p) c.push_back(m.ctx.from_int(static_cast<long>(r % p)));
    MatrixK a = carrier_element(m, c);
    const bool u = rank_one_classical(m, a);
    REQUIRE(u == matrix_rank_characterization(m, a));
    count += u;
  }
  return count;
}

}  // namespace

TEST_CASE("carrier dimensions") {
  CHECK(carrier_basis(ClassicalModel::make(1, 3, Q)).size() == 6);
  CHECK(carrier_basis(ClassicalModel::make(2, 3, Q)).size() == 9);
  CHECK(carrier_basis(ClassicalModel::make(4, 2, Q)).size() == 6);
  CHECK(ClassicalModel::make(4, 2, Q).size() == 4);
  ClassicalModel m = ClassicalModel::make(4, 3, Q);
  CHECK(trace_form(m, m.base, m.base) == Q.from_int(3));
  CHECK(in_carrier(m, m.base));
  CHECK(!in_carrier(ClassicalModel::make(1, 2, Q), MatrixK::from_ints(Q, {{0, 1}, {0, 0}})));
}

TEST_CASE("fixed rank one elements") {
  ClassicalModel sym = ClassicalModel::make(1, 3, Q);
  CHECK(rank_one_classical(sym, MatrixK::from_ints(Q, {{1, 2, 0}, {2, 4, 0}, {0, 0, 0}})));
  CHECK(!rank_one_classical(sym, MatrixK::identity(Q, 3)));
  ClassicalModel full = ClassicalModel::make(2, 2, Q);
  CHECK(rank_one_classical(full, MatrixK::from_ints(Q, {{0, 1}, {0, 0}})));
  ClassicalModel alt = ClassicalModel::make(4, 2, Q);
  MatrixK e12 = MatrixK::from_ints(Q, {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(rank_one_classical(alt, e12));
  CHECK(!rank_one_classical(alt, alt.base));
  CHECK(rank_one_report(alt, e12).passed());
}

TEST_CASE("rank one counts over F3 match point counts") {
  // q^2 - 1 symmetric, (q^2-1)^2/(q-1) full, (q-1)(q^2+1)(q^2+q+1) decomposable bivectors.
  CHECK(rank_one_count(ClassicalModel::make(1, 2, F3), 3) == 8);
  CHECK(rank_one_count(ClassicalModel::make(2, 2, F3), 3) == 32);
  CHECK(rank_one_count(ClassicalModel::make(4, 2, F3), 3) == 260);
}

TEST_CASE("random rank one elements and structure group") {
  for (const auto& ctx : {Q, FieldContext::prime(5)})
    for (int a : {1, 2, 4})
      for (std::uint64_t t = 0; t < 40; ++t) {
        ClassicalModel m = ClassicalModel::make(a, a == 4 ? 2 : 3, ctx);
        TrialRng rng(1, stream_id("classical"), t);
        MatrixK r = random_rank_one(m, rng);
        REQUIRE(in_carrier(m, r));
        REQUIRE(rank_one_classical(m, r));
        GroupElement g = random_group_element(m, rng);
        REQUIRE(is_structure_element(m, g));
        REQUIRE(rank_one_classical(m, structure_action(m, g, r)));
        MatrixK x = random_carrier_element(m, rng), y = random_carrier_element(m, rng);
        GroupElement gs = structure_adjoint(m, g);
        REQUIRE(trace_form(m, structure_action(m, g, x), y) == trace_form(m, x, structure_action(m, gs, y)));
        REQUIRE(carrier_element(m, carrier_coordinates(m, x)) == x);
      }
}

TEST_CASE("classical json and errors") {
  ClassicalModel m = ClassicalModel::make(2, 2, Q);
  MatrixK x = MatrixK::from_ints(Q, {{1, 2}, {3, 4}});
  auto [m2, x2] = classical_from_json(classical_to_json(m, x));
  CHECK(m2.a == 2);
  CHECK(x2 == x);
  CHECK_THROWS_AS(ClassicalModel::make(3, 2, Q), PreconditionError);
  CHECK_THROWS(rank_one_classical(m, MatrixK::from_ints(Q, {{0, 0}, {0, 0}})));
}
