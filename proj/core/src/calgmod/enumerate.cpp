#include "ckit/calgmod/enumerate.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ckit/foundation/parallel.hpp"

namespace ckit::calgmod {

namespace {

void guard(Kind kind, std::size_t n, std::size_t target_dim, std::uint32_t p) {
  if (kind != Kind::C && kind != Kind::H) throw PreconditionError("enumeration needs tag C or H");
  if (p != 2 && p != 3) throw ScaleGuardExceeded("enumeration runs over F_2 and F_3 only");
  if (n == 0 || n * kind_dim(kind) > 12) throw ScaleGuardExceeded("enumeration needs 1 <= n dim A <= 12");
  if (target_dim > n * kind_dim(kind)) throw PreconditionError("target dimension exceeds the ambient space");
}

std::size_t image_dim(const ModuleSpace& ms, const fp::Rows& basis, std::size_t k) {
  fp::Rows rows;
  for (const auto& r : basis) rows.push_back(ms.right_mul(r, k));
  ms.kernel().rref(rows);
  return rows.size();
}

// Simple submodules: cyclic modules of dimension dim A / 2. Every submodule
// of A^n is a sum of them since C and H are semisimple.
std::vector<fp::Rows> simple_submodules(const ModuleSpace& ms) {
  const auto& ker = ms.kernel();
  const std::size_t half = ms.tag().dim() / 2;
  std::map<std::string, fp::Rows> found;
  const std::uint64_t total = ker.space_size();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    fp::Vec v = ker.decode(idx);
    if (v[fp::leading(v, ker.n())] != 1) continue;
    fp::Rows c = ms.cyclic(v);
    if (c.size() == half) found.emplace(ker.key(c), std::move(c));
  }
  std::vector<fp::Rows> out;
  for (auto& [k, rows] : found) out.push_back(std::move(rows));
  return out;
}

// Levels of the lattice by dimension, up to max_dim; visit(dim, key, rows) for each module.
template <class Visit>
void walk_lattice(const ModuleSpace& ms, std::size_t max_dim, const EnumerationLimits& limits,
                  Visit&& visit) {
  const auto& ker = ms.kernel();
  const auto simples = simple_submodules(ms);
  const std::size_t step = ms.tag().dim() / 2;
  std::map<std::string, fp::Rows> level;
  level.emplace(ker.key({}), fp::Rows{});
  std::size_t seen = 0;
  for (std::size_t dim = 0;; dim += step) {
    for (const auto& [k, rows] : level) visit(dim, k, rows);
    seen += level.size();
    if (seen > limits.max_modules) throw ScaleGuardExceeded("submodule count exceeds the cap");
    if (dim + step > max_dim || level.empty()) break;
    std::vector<const fp::Rows*> frontier;
    for (const auto& [k, rows] : level) frontier.push_back(&rows);
    std::vector<std::vector<std::pair<std::string, fp::Rows>>> found(frontier.size());
    parallel_for(
        frontier.size(),
        [&](std::size_t i) {
          const fp::Rows& m = *frontier[i];
          std::set<std::string> local;
          for (const auto& s : simples) {
            if (ker.contains(m, s)) continue;
            fp::Rows sum = ker.sum(m, s);
            std::string key = ker.key(sum);
            if (local.insert(key).second) found[i].emplace_back(std::move(key), std::move(sum));
          }
        },
        limits.workers);
    std::map<std::string, fp::Rows> next;
    for (auto& batch : found)
      for (auto& [k, rows] : batch) next.emplace(std::move(k), std::move(rows));
    level = std::move(next);
  }
}

}  // namespace

ModuleSpace::ModuleSpace(Kind kind, std::size_t n, std::uint32_t p)
    : tag_(kind, FieldContext::prime(p)), n_(n), ker_(p, n * kind_dim(kind)) {
  const std::size_t d = tag_.dim(), big = n * d;
  for (std::size_t k = 0; k < d; ++k) {
    MatrixK r = right_mult_operator(CompElement::basis(tag_, k), n);
    std::vector<std::vector<std::uint8_t>> op(big, std::vector<std::uint8_t>(big));
    for (std::size_t i = 0; i < big; ++i)
      for (std::size_t j = 0; j < big; ++j) op[i][j] = static_cast<std::uint8_t>(r(i, j).residue());
    ops_.push_back(std::move(op));
  }
}

fp::Vec ModuleSpace::right_mul(const fp::Vec& v, std::size_t k) const {
  fp::Vec w{};
  const auto& op = ops_[k];
  const std::size_t big = ambient();
  for (std::size_t j = 0; j < big; ++j) {
    if (!v[j]) continue;
    for (std::size_t i = 0; i < big; ++i)
      if (op[i][j]) w[i] = ker_.add(w[i], ker_.mul(op[i][j], v[j]));
  }
  return w;
}

fp::Rows ModuleSpace::cyclic(const fp::Vec& v) const {
  fp::Rows rows;
  for (std::size_t k = 0; k < tag_.dim(); ++k) rows.push_back(right_mul(v, k));
  ker_.rref(rows);
  return rows;
}

bool ModuleSpace::closed(const fp::Rows& basis) const {
  for (const auto& r : basis)
    for (std::size_t k = 0; k < tag_.dim(); ++k)
      if (!ker_.in_span(basis, right_mul(r, k))) return false;
  return true;
}

fp::Vec ModuleSpace::pack(const VectorK& v) const {
  fp::Vec w{};
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = static_cast<std::uint8_t>(v[i].residue());
  return w;
}

VectorK ModuleSpace::unpack(const fp::Vec& v) const {
  VectorK w;
  for (std::size_t i = 0; i < ambient(); ++i) w.push_back(Scalar::residue(tag_.context(), v[i]));
  return w;
}

RightSubmodule ModuleSpace::to_module(const fp::Rows& basis) const {
  std::vector<VectorK> vs;
  for (const auto& r : basis) vs.push_back(unpack(r));
  return RightSubmodule(tag_, n_, SubspaceK::span(tag_.context(), ambient(), vs));
}

Census enumerate_submodules(Kind kind, std::size_t n, std::size_t target_dim, std::uint32_t p,
                            const EnumerationLimits& limits) {
  guard(kind, n, target_dim, p);
  ModuleSpace ms(kind, n, p);
  const std::size_t f_index = kind == Kind::C ? 1 : 3;
  Census c;
  c.kind = kind;
  c.n = n;
  c.target_dim = target_dim;
  c.p = p;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> groups;
  walk_lattice(ms, target_dim, limits, [&](std::size_t dim, const std::string&, const fp::Rows& rows) {
    if (dim != target_dim) return;
    // E+ = E e and E- = E f for a submodule E.
    auto key = std::make_pair(image_dim(ms, rows, 0), image_dim(ms, rows, f_index));
    ++groups[key];
    ++c.total;
    if (limits.keep_members) c.members.push_back(ms.to_module(rows));
  });
  for (const auto& [dims, count] : groups) {
    bool free = kind == Kind::C ? dims.first == dims.second : target_dim % 4 == 0;
    c.groups.push_back({dims, count, free});
    if (free) c.free_count += count;
  }
  return c;
}

std::vector<RightSubmodule> all_submodules(Kind kind, std::size_t n, std::uint32_t p,
                                           const EnumerationLimits& limits) {
  guard(kind, n, 0, p);
  ModuleSpace ms(kind, n, p);
  std::vector<RightSubmodule> out;
  walk_lattice(ms, ms.ambient(), limits, [&](std::size_t, const std::string&, const fp::Rows& rows) {
    out.push_back(ms.to_module(rows));
  });
  return out;
}

std::vector<RightSubmodule> brute_force_submodules(Kind kind, std::size_t n, std::size_t target_dim,
                                                   std::uint32_t p) {
  guard(kind, n, target_dim, p);
  ModuleSpace ms(kind, n, p);
  const std::size_t big = ms.ambient();
  std::vector<RightSubmodule> out;
  std::vector<bool> choose(big, false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(target_dim), true);
  // Pivot sets in lexicographic order of their indicator vectors.
  do {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < big; ++i)
      if (choose[i]) piv.push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (std::size_t j = piv[r] + 1; j < big; ++j)
        if (!choose[j]) free_slots.emplace_back(r, j);
    std::uint64_t count = 1;
    for (std::size_t s = 0; s < free_slots.size(); ++s) {
      count *= p;
      if (count > 50'000'000) throw ScaleGuardExceeded("echelon enumeration too large");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      fp::Rows rows(piv.size(), fp::Vec{});
      for (std::size_t r = 0; r < piv.size(); ++r) rows[r][piv[r]] = 1;
      std::uint64_t x = idx;
      for (const auto& [r, j] : free_slots) {
        rows[r][j] = static_cast<std::uint8_t>(x % p);
        x /= p;
      }
      if (ms.closed(rows)) out.push_back(ms.to_module(rows));
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

std::size_t component_formula(std::size_t n, std::size_t r) { return std::min(n + 1 - r, r + 1); }

Json census_to_json(const Census& c) {
  Json j;
  j["config"] = {{"alg", std::string(1, comp::kind_letter(c.kind))},
                 {"n", c.n},
                 {"dim", c.target_dim},
                 {"p", c.p}};
  Json groups = Json::array();
  for (const auto& g : c.groups)
    groups.push_back({{"dims", {g.dims.first, g.dims.second}}, {"count", g.count}, {"free", g.free}});
  j["groups"] = groups;
  j["free_count"] = c.free_count;
  j["total"] = c.total;
  j["realized_groups"] = c.groups.size();
  if (c.kind == Kind::C && c.target_dim % 2 == 0 && c.target_dim / 2 <= c.n)
    j["component_formula"] = component_formula(c.n, c.target_dim / 2);
  return j;
}

}  // namespace ckit::calgmod
