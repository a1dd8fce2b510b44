#include <doctest.h>

#include <set>

#include "ckit/foundation/fp_kernel.hpp"
#include "ckit/foundation/json_io.hpp"
#include "ckit/foundation/parallel.hpp"
#include "ckit/foundation/polynomial.hpp"
#include "ckit/foundation/random.hpp"
#include "ckit/foundation/subspace.hpp"

using namespace ckit;

namespace {

const FieldContext Q = FieldContext::rationals();
const FieldContext F2 = FieldContext::prime(2);
const FieldContext F5 = FieldContext::prime(5);
const FieldContext F7 = FieldContext::prime(7);

}  // namespace

TEST_CASE("prime field arithmetic wraps") {
  CHECK(F5.from_int(3) + F5.from_int(4) == F5.from_int(2));
  CHECK(F5.from_int(2) * F5.from_int(3) == F5.one());
  CHECK(F5.from_int(-1) == F5.from_int(4));
  CHECK(F7.from_int(3).inverse() == F7.from_int(5));
  CHECK(F5.fraction(1, 2) == F5.from_int(3));
  CHECK_THROWS_AS(F5.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(FieldContext::prime(9), PreconditionError);
  CHECK_THROWS_AS(FieldContext::prime(65537), PreconditionError);
}

TEST_CASE("rationals are exact") {
  Scalar third = Q.fraction(1, 3);
  CHECK(third + third + third == Q.one());
  CHECK(Scalar::parse(Q, "-6/4") == Q.fraction(-3, 2));
  CHECK(Q.fraction(-3, 2).to_string() == "-3/2");
  CHECK_THROWS_AS(F5.one() + Q.one(), ContextMismatch);
}

TEST_CASE("field axioms hold on random triples") {
  for (const auto& ctx : {Q, F2, F5, F7})
    for (std::uint64_t k = 0; k < 1000; ++k) {
      TrialRng rng(3, stream_id("axioms"), k);
      Scalar a = random_scalar(ctx, rng), b = random_scalar(ctx, rng), c = random_scalar(ctx, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a + b) + c == a + (b + c));
      if (!a.is_zero()) REQUIRE((a / a).is_one());
    }
}

TEST_CASE("determinant, inverse and solve on a fixed matrix") {
  MatrixK m = MatrixK::from_ints(Q, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(m) == Q.from_int(18));
  CHECK(m * inverse(m) == MatrixK::identity(Q, 3));
  auto x = solve(m, {Q.from_int(3), Q.from_int(5), Q.from_int(5)});
  REQUIRE(x);
  CHECK(*x == VectorK{Q.one(), Q.one(), Q.one()});
  MatrixK m3 = MatrixK::from_ints(FieldContext::prime(3), {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(m3).is_zero());
  CHECK(rank(m3) == 2);
  CHECK_THROWS_AS(inverse(m3), DivisionByZero);
}

TEST_CASE("rref is canonical") {
  MatrixK m = MatrixK::from_ints(Q, {{0, 2, 4}, {1, 1, 1}, {1, 2, 3}});
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.form == MatrixK::from_ints(Q, {{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
  for (std::uint64_t k = 0; k < 300; ++k) {
    TrialRng rng(5, stream_id("rref"), k);
    const FieldContext& ctx = k % 2 ? F5 : Q;
    MatrixK a = random_matrix(ctx, 1 + rng.below(5), 1 + rng.below(5), rng);
    MatrixK once = rref(a).form;
    REQUIRE(rref(once).form == once);
    REQUIRE(rank(a) == rank(a.transpose()));
  }
}

TEST_CASE("subspace dimension formula and kernels") {
  for (std::uint64_t k = 0; k < 300; ++k) {
    TrialRng rng(7, stream_id("subspace"), k);
    const FieldContext& ctx = k % 3 == 0 ? Q : (k % 3 == 1 ? F2 : F7);
    const std::size_t n = 1 + rng.below(6);
    std::vector<VectorK> us, vs;
    for (std::size_t i = 0, e = rng.below(n + 1); i < e; ++i) us.push_back(random_vector(ctx, n, rng));
    for (std::size_t i = 0, e = rng.below(n + 1); i < e; ++i) vs.push_back(random_vector(ctx, n, rng));
    SubspaceK u = SubspaceK::span(ctx, n, us), v = SubspaceK::span(ctx, n, vs);
    REQUIRE(u.intersect(v).dim() + u.sum(v).dim() == u.dim() + v.dim());
    REQUIRE(u.sum(v).contains(u));
    REQUIRE(u.contains(u.intersect(v)));

    MatrixK m = random_matrix(ctx, 1 + rng.below(4), n, rng);
    KernelImage ki = kernel_image(m);
    REQUIRE(ki.kernel.dim() + ki.image.dim() == n);
    for (const auto& b : ki.kernel.basis_vectors()) REQUIRE(is_zero_vector(m.apply(b)));
  }
}

TEST_CASE("orthogonal complement under a Gram matrix") {
  MatrixK gram = MatrixK::from_ints(Q, {{0, 1}, {1, 0}});
  SubspaceK line = SubspaceK::span(Q, 2, {{Q.one(), Q.zero()}});
  CHECK(orthogonal(line, gram) == line);
}

TEST_CASE("packed kernel agrees with generic rref") {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldContext ctx = FieldContext::prime(p);
    fp::Kernel ker(p, 8);
    for (std::uint64_t k = 0; k < 200; ++k) {
      TrialRng rng(11, stream_id("kernel"), k);
      const std::size_t rows = 1 + rng.below(6);
      MatrixK m = random_matrix(ctx, rows, 8, rng);
      fp::Rows packed;
      for (std::size_t i = 0; i < rows; ++i) {
        fp::Vec v{};
        for (std::size_t j = 0; j < 8; ++j) v[j] = static_cast<std::uint8_t>(m(i, j).residue());
        packed.push_back(v);
      }
      ker.rref(packed);
      RrefResult r = rref(m);
      REQUIRE(packed.size() == r.rank);
      for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < 8; ++j) REQUIRE(packed[i][j] == r.form(i, j).residue());
    }
  }
  fp::Kernel k3(3, 2);
  CHECK(k3.space_size() == 9);
  CHECK(k3.decode(5)[0] == 1);
  CHECK(k3.decode(5)[1] == 2);
}

TEST_CASE("polynomials: products, derivatives, composition") {
  Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  Polynomial p = x * x * y - Polynomial::constant(2) * y;
  CHECK(p.num_terms() == 2);
  CHECK(p.coefficient({0, 0, 1}) == 1);
  CHECK(p.derivative(0) == Polynomial::constant(2) * x * y);
  CHECK(p.degree() == 3);
  CHECK(p.evaluate(Q, {Q.from_int(3), Q.from_int(2)}) == Q.from_int(14));
  Polynomial swapped = p.compose({y, x});
  CHECK(swapped == y * y * x - Polynomial::constant(2) * x);
  CHECK((p - p).is_zero());
  Polynomial cube = interpolate_cubic_form(3, [&](const VectorK& v) { return v[0] * v[1] * v[2] - v[0] * v[0] * v[0]; });
  CHECK(cube == Polynomial::variable(0) * Polynomial::variable(1) * Polynomial::variable(2) -
                    Polynomial::variable(0) * Polynomial::variable(0) * Polynomial::variable(0));
}

TEST_CASE("trial generator is keyed by (seed, stream, trial)") {
  TrialRng a(1, 2, 3), b(1, 2, 3), c(1, 2, 4);
  const auto va = a.engine()(), vb = b.engine()(), vc = c.engine()();
  CHECK(va == vb);
  CHECK(va != vc);
  CHECK(stream_id("x") != stream_id("y"));
  std::set<long> seen;
  TrialRng r(9, 9, 9);
  for (int i = 0; i < 200; ++i) seen.insert(r.between(-2, 2));
  CHECK(seen == std::set<long>{-2, -1, 0, 1, 2});
}

TEST_CASE("random special linear matrices have determinant one") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    TrialRng rng(2, stream_id("sl"), k);
    REQUIRE(determinant(random_special_linear(F7, 3, rng)).is_one());
    REQUIRE(!determinant(random_invertible(Q, 3, rng)).is_zero());
  }
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, 4);
  CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
  CHECK_THROWS(parallel_for(10, [](std::size_t i) { if (i == 7) throw Error("boom"); }, 3));
}

TEST_CASE("json round trips") {
  for (const auto& ctx : {Q, F7}) {
    TrialRng rng(4, 4, 4);
    MatrixK m = random_matrix(ctx, 2, 3, rng);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    VectorK v = random_vector(ctx, 4, rng);
    CHECK(vector_from_json(ctx, vector_to_json(v)) == v);
  }
  CHECK(scalar_to_json(Q.fraction(2, 4)) == "1/2");
  CHECK(scalar_to_json(F7.from_int(10)) == 3);
}
