#pragma once

#include <vector>

#include "ckit/comp/algebra.hpp"

// Right A-submodules of A^n for A = C, H. A vector of A^n is flattened to
// K^{n d}, coordinate u of the vector occupying entries u d .. u d + d - 1.
namespace ckit::calgmod {

using comp::AlgebraTag;
using comp::CompElement;
using comp::Kind;
using ModVector = std::vector<CompElement>;

class NotSubmodule : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

VectorK flatten(const ModVector& v);
ModVector unflatten(const AlgebraTag& tag, std::size_t n, const VectorK& c);
ModVector right_mul(const ModVector& v, const CompElement& l);
// Block-diagonal matrix of v -> v l on K^{n d}.
MatrixK right_mult_operator(const CompElement& l, std::size_t n);

// e = E11, f = E22, h = E12 + E21.
CompElement unit_e(const AlgebraTag& tag);
CompElement unit_f(const AlgebraTag& tag);
CompElement unit_h(const AlgebraTag& tag);

class RightSubmodule {
 public:
  RightSubmodule() = default;
  // Throws NotSubmodule unless E l lies in E for every basis element l.
  RightSubmodule(AlgebraTag tag, std::size_t n, SubspaceK space);

  static RightSubmodule zero(const AlgebraTag& tag, std::size_t n);
  static RightSubmodule full(const AlgebraTag& tag, std::size_t n);
  static bool is_closed(const AlgebraTag& tag, std::size_t n, const SubspaceK& space);

  const AlgebraTag& tag() const { return tag_; }
  std::size_t n() const { return n_; }
  const SubspaceK& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  // Isomorphic to A^r: balanced E+/E- for C, dim divisible by 4 for H.
  bool is_free() const;
  // dim / dim A when free.
  std::size_t free_rank() const;

  bool operator==(const RightSubmodule& o) const = default;

 private:
  AlgebraTag tag_;
  std::size_t n_ = 0;
  SubspaceK space_;
};

struct Span {
  RightSubmodule module;
  bool free = false;  // dim = dim A * (number of vectors)
};

// K-span of {v_t l : l in a basis of A}. Tags C, H.
Span module_span(const AlgebraTag& tag, std::size_t n, const std::vector<ModVector>& vs);

struct PlusMinus {
  SubspaceK plus;   // E n (A^n e)
  SubspaceK minus;  // E n (A^n f)
};
PlusMinus decompose_pm(const RightSubmodule& e);

// Tag H: E+ as a subspace of R(e)^n = K^{2n} (coordinates m11, m21 per entry).
// Tag C: (E+, E-) as subspaces of K^n.
struct GrassmannDatum {
  Kind kind = Kind::H;
  SubspaceK plus;
  SubspaceK minus;  // tag C only
};

GrassmannDatum grassmann_iso(const RightSubmodule& e);
RightSubmodule grassmann_inverse(const GrassmannDatum& g, const FieldContext& ctx, std::size_t n);
// Tag C, balanced E: generators v+_t e + v-_t f.
std::vector<ModVector> paired_generators(const RightSubmodule& e);

// Y^perp = {l : l(y) = 0 for y in Y}, a right-form l(x) = sum a_u x_u written as the
// vector conj(a), which turns the left module of forms into a right submodule.
RightSubmodule dual_perp(const RightSubmodule& y);
// The same set through the bilinear pairing (x, l) -> <1, l(x)>.
RightSubmodule dual_perp_via_pairing(const RightSubmodule& y);

// Inductive extraction: ceil(dim E / 4) vectors whose spans direct-sum to E. Tag H.
std::vector<ModVector> extract_generators(const RightSubmodule& e);

RightSubmodule random_free_submodule(const AlgebraTag& tag, std::size_t n, std::size_t r,
                                     TrialRng& rng);

Json submodule_to_json(const RightSubmodule& e);

}  // namespace ckit::calgmod
