#pragma once

#include <functional>

#include "ckit/comp/algebra.hpp"

namespace ckit::jordan {

using comp::AlgebraTag;
using comp::CompElement;
using comp::Kind;

// Element of H_n(A). Indices are 0-based; the diagonal holds base-field
// scalars and only the strict upper triangle is stored.
//
// Coordinates: the n diagonal entries, then the upper entries (0,1), (0,2), ...,
// (0,n-1), (1,2), ... each expanded in the algebra basis.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  HermitianMatrix(AlgebraTag tag, std::size_t n);

  static HermitianMatrix identity(const AlgebraTag& tag, std::size_t n);
  static HermitianMatrix unit_diag(const AlgebraTag& tag, std::size_t n, std::size_t i);
  static HermitianMatrix from_coordinates(const AlgebraTag& tag, std::size_t n, const VectorK& c);
  // entries[i][j] must satisfy entries[j][i] = conj(entries[i][j]) with scalar diagonal.
  static HermitianMatrix from_entries(const AlgebraTag& tag,
                                      const std::vector<std::vector<CompElement>>& entries);
  static std::size_t dimension(Kind kind, std::size_t n);
  static std::vector<HermitianMatrix> basis(const AlgebraTag& tag, std::size_t n);

  std::size_t n() const { return n_; }
  const AlgebraTag& tag() const { return tag_; }
  const FieldContext& context() const { return tag_.context(); }
  std::size_t dimension() const { return dimension(tag_.kind(), n_); }

  const Scalar& diag(std::size_t i) const { return diag_.at(i); }
  void set_diag(std::size_t i, const Scalar& s);
  const CompElement& upper(std::size_t i, std::size_t j) const;
  void set_upper(std::size_t i, std::size_t j, const CompElement& x);
  // Any entry, with entry(j,i) = conj(entry(i,j)).
  CompElement entry(std::size_t i, std::size_t j) const;
  // Sets entry (i,j), i != j, and its conjugate mirror.
  void set_entry(std::size_t i, std::size_t j, const CompElement& x);

  VectorK coordinates() const;
  bool is_zero() const;

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(const Scalar& s, const HermitianMatrix& a);

  bool operator==(const HermitianMatrix& o) const;
  bool operator!=(const HermitianMatrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  void check_same(const HermitianMatrix& o) const;

  AlgebraTag tag_;
  std::size_t n_ = 0;
  VectorK diag_;
  std::vector<CompElement> upper_;
};

// tr(A) = sum of the diagonal = T(Id, A).
Scalar trace(const HermitianMatrix& a);
// T(A,B) = sum_i a_ii b_ii + sum_{i<j} <a_ij, b_ij>.
Scalar trace_form(const HermitianMatrix& a, const HermitianMatrix& b);
// Gram matrix of T on the coordinate basis.
MatrixK trace_form_gram(const AlgebraTag& tag, std::size_t n);

// U_A B: ABA for associative tags, T(A,B)A - A# x B on H_3(O).
HermitianMatrix u_operator(const HermitianMatrix& a, const HermitianMatrix& b);
// Matrix of B -> U_A B on coordinates.
MatrixK u_operator_matrix(const HermitianMatrix& a);
// Full matrix product for associative tags (not Hermitian in general).
std::vector<std::vector<CompElement>> matrix_product(
    const std::vector<std::vector<CompElement>>& x, const std::vector<std::vector<CompElement>>& y);
std::vector<std::vector<CompElement>> entries_of(const HermitianMatrix& a);

// r1 r2 r3 + <x1 x2, x3> - r1 Q(x1) - r2 Q(x2) - r3 Q(x3) for
// [[r1, conj x3, conj x2], [x3, r2, x1], [x2, conj x1, r3]].
Scalar det3(const HermitianMatrix& a);
// Same layout with the product term doubled; kept for comparison only.
Scalar det3_doubled_product(const HermitianMatrix& a);

HermitianMatrix embed(const HermitianMatrix& a, Kind target);
std::optional<HermitianMatrix> restrict_to(const HermitianMatrix& a, Kind target);

HermitianMatrix random_hermitian(const AlgebraTag& tag, std::size_t n, TrialRng& rng);
// Calls f on every element of H_n(A) over F_p in coordinate-lexicographic order.
void for_each_hermitian(const AlgebraTag& tag, std::size_t n,
                        const std::function<void(const HermitianMatrix&)>& f);
std::uint64_t hermitian_count(const AlgebraTag& tag, std::size_t n);
HermitianMatrix hermitian_at(const AlgebraTag& tag, std::size_t n, std::uint64_t index);

// JSON: {"n","alg","field","p","diag":[...],"upper":[[i,j,coords...],...]}, 1-based i<j.
Json hermitian_to_json(const HermitianMatrix& a);
HermitianMatrix hermitian_from_json(const Json& j);

}  // namespace ckit::jordan
