#pragma once

#include <vector>

#include "ckit/foundation/random.hpp"
#include "ckit/foundation/report.hpp"

// The models V^n_a: symmetric n x n (a = 1), all n x n (a = 2) and
// alternating 2n x 2n (a = 4) matrices with U_A B = A I^-1 B I^-1 A.
namespace ckit::classical {

struct ClassicalModel {
  int a = 1;
  std::size_t n = 1;
  FieldContext ctx;
  MatrixK base;      // I
  MatrixK base_inv;  // I^-1

  // a = 4 uses I = diag([[0,-1],[1,0]], ...).
  static ClassicalModel make(int a, std::size_t n, const FieldContext& ctx);
  std::size_t size() const { return a == 4 ? 2 * n : n; }
};

bool in_carrier(const ClassicalModel& m, const MatrixK& x);
std::vector<MatrixK> carrier_basis(const ClassicalModel& m);
VectorK carrier_coordinates(const ClassicalModel& m, const MatrixK& x);
MatrixK carrier_element(const ClassicalModel& m, const VectorK& c);

MatrixK u_classical(const ClassicalModel& m, const MatrixK& a, const MatrixK& b);
// Matrix of B -> U_A B on carrier coordinates.
MatrixK u_classical_matrix(const ClassicalModel& m, const MatrixK& a);

// tr(A I^-1 B I^-1) for a = 1, 2. For a = 4 the half trace
// sum_{i<j} A_ij X_ji with X = I^-1 B I^-1, so that T(I, I) = n in every characteristic.
Scalar trace_form(const ClassicalModel& m, const MatrixK& a, const MatrixK& b);
MatrixK trace_form_gram(const ClassicalModel& m);

// U_A B = T(A,B) A on the carrier basis. A != 0.
bool rank_one_classical(const ClassicalModel& m, const MatrixK& a);
// Matrix rank 1 (a = 1, 2) or 2 (a = 4). A != 0.
bool matrix_rank_characterization(const ClassicalModel& m, const MatrixK& a);
Report rank_one_report(const ClassicalModel& m, const MatrixK& a);

// g for a = 1, 4; (g, h) for a = 2.
struct GroupElement {
  MatrixK g;
  MatrixK h;
};

// gAg^T (a = 1, 4) or gAh^T (a = 2).
MatrixK structure_action(const ClassicalModel& m, const GroupElement& g, const MatrixK& a);
MatrixK structure_action_matrix(const ClassicalModel& m, const GroupElement& g);
// g* with T(gA, B) = T(A, g* B): g^T; (h^T, g^T); I g^T I^-1.
GroupElement structure_adjoint(const ClassicalModel& m, const GroupElement& g);
// U_{gA} = g U_A g* on basis elements and pairwise sums.
bool is_structure_element(const ClassicalModel& m, const GroupElement& g);
// Structure identity plus preservation of the rank-one predicate on the given samples.
Report structure_report(const ClassicalModel& m, const GroupElement& g,
                        const std::vector<MatrixK>& rank_one_samples);

MatrixK random_carrier_element(const ClassicalModel& m, TrialRng& rng);
// v v^T scaled (a = 1), u v^T (a = 2), u v^T - v u^T (a = 4); nonzero.
MatrixK random_rank_one(const ClassicalModel& m, TrialRng& rng);
GroupElement random_group_element(const ClassicalModel& m, TrialRng& rng);

// {"model": {"a", "n"}, "matrix": ...}
Json classical_to_json(const ClassicalModel& m, const MatrixK& x);
std::pair<ClassicalModel, MatrixK> classical_from_json(const Json& j);

}  // namespace ckit::classical
