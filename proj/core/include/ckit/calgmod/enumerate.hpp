#pragma once

#include <map>
#include <utility>

#include "ckit/calgmod/submodule.hpp"
#include "ckit/foundation/fp_kernel.hpp"

namespace ckit::calgmod {

class ScaleGuardExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct EnumerationLimits {
  std::size_t max_modules = 4'000'000;
  unsigned workers = 0;
  bool keep_members = false;
};

struct CensusGroup {
  std::pair<std::size_t, std::size_t> dims;  // (dim E+, dim E-)
  std::size_t count = 0;
  bool free = false;
};

struct Census {
  Kind kind = Kind::C;
  std::size_t n = 0, target_dim = 0;
  std::uint32_t p = 0;
  std::vector<CensusGroup> groups;  // sorted by dims
  std::size_t total = 0;
  std::size_t free_count = 0;
  std::vector<RightSubmodule> members;  // sorted by echelon key
};

// Packed right-multiplication tables for A^n over F_p.
class ModuleSpace {
 public:
  ModuleSpace(Kind kind, std::size_t n, std::uint32_t p);

  const fp::Kernel& kernel() const { return ker_; }
  const AlgebraTag& tag() const { return tag_; }
  std::size_t n() const { return n_; }
  std::size_t ambient() const { return n_ * tag_.dim(); }

  fp::Vec right_mul(const fp::Vec& v, std::size_t basis_index) const;
  // Echelon basis of v A.
  fp::Rows cyclic(const fp::Vec& v) const;
  bool closed(const fp::Rows& basis) const;

  fp::Vec pack(const VectorK& v) const;
  VectorK unpack(const fp::Vec& v) const;
  RightSubmodule to_module(const fp::Rows& basis) const;

 private:
  AlgebraTag tag_;
  std::size_t n_;
  fp::Kernel ker_;
  // ops_[k][i][j]: coordinate i of (unit vector j) * b_k.
  std::vector<std::vector<std::vector<std::uint8_t>>> ops_;
};

// Every F_p-subspace of dimension target_dim closed under right multiplication.
// Guard: p in {2, 3}, n dim A <= 12.
Census enumerate_submodules(Kind kind, std::size_t n, std::size_t target_dim, std::uint32_t p,
                            const EnumerationLimits& limits = {});
// All submodules of every dimension, by the same search.
std::vector<RightSubmodule> all_submodules(Kind kind, std::size_t n, std::uint32_t p,
                                           const EnumerationLimits& limits = {});

// Independent oracle: walks all reduced echelon forms of the given dimension
// and keeps the closed ones. Exponential; for tiny cases only.
std::vector<RightSubmodule> brute_force_submodules(Kind kind, std::size_t n, std::size_t target_dim,
                                                   std::uint32_t p);

// min{n + 1 - r, r + 1} for dim = 2r.
std::size_t component_formula(std::size_t n, std::size_t r);

Json census_to_json(const Census& c);

}  // namespace ckit::calgmod
