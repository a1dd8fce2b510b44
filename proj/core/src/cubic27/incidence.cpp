#include "ckit/cubic27/incidence.hpp"

#include <algorithm>
#include <bit>

namespace ckit::cubic27 {

namespace {

using Clock = std::chrono::steady_clock;

Polynomial var(char letter, int i, int j) { return Polynomial::variable(var_index(letter, i, j)); }

Polynomial det_symbolic(char x) {
  static const int perms[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {3, 2, 1}, {2, 1, 3}};
  Polynomial d;
  for (int k = 0; k < 6; ++k) {
    Polynomial t = var(x, 1, perms[k][0]) * var(x, 2, perms[k][1]) * var(x, 3, perms[k][2]);
    d += k < 3 ? t : t.scaled(-1);
  }
  return d;
}

MatrixK block_of(const FieldContext& ctx, const VectorK& v, std::size_t off) {
  MatrixK m(ctx, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = v.at(off + 3 * i + j);
  return m;
}

}  // namespace

std::uint16_t var_index(char letter, int i, int j) {
  if (letter < 'a' || letter > 'c' || i < 1 || i > 3 || j < 1 || j > 3)
    throw PreconditionError("point labels are a_ij, b_ij, c_ij with 1 <= i, j <= 3");
  return static_cast<std::uint16_t>((letter - 'a') * 9 + 3 * (i - 1) + (j - 1));
}

std::string point_label(std::size_t v) {
  if (v >= kPoints) throw PreconditionError("point index out of range");
  std::string s(1, static_cast<char>('a' + v / 9));
  s += static_cast<char>('1' + (v % 9) / 3);
  s += static_cast<char>('1' + v % 3);
  return s;
}

std::size_t point_from_label(const std::string& label) {
  if (label.size() != 3) throw ParseError("bad point label \"" + label + "\"");
  return var_index(label[0], label[1] - '0', label[2] - '0');
}

GridTriple GridTriple::zero(const FieldContext& ctx) {
  return {MatrixK(ctx, 3, 3), MatrixK(ctx, 3, 3), MatrixK(ctx, 3, 3)};
}

GridTriple GridTriple::from_vector(const FieldContext& ctx, const VectorK& v) {
  if (v.size() != kPoints) throw PreconditionError("grid triple needs 27 coordinates");
  return {block_of(ctx, v, 0), block_of(ctx, v, 9), block_of(ctx, v, 18)};
}

VectorK GridTriple::to_vector() const {
  VectorK v;
  for (const MatrixK* m : {&a, &b, &c})
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) v.push_back((*m)(i, j));
  return v;
}

Polynomial beta_polynomial() {
  Polynomial tr;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) tr += var('a', i, j) * var('b', j, k) * var('c', k, i);
  return det_symbolic('a') + det_symbolic('b') + det_symbolic('c') - tr;
}

IncidenceStructure IncidenceStructure::from_polynomial(const Polynomial& cubic) {
  IncidenceStructure s;
  for (const auto& [m, c] : cubic.terms()) {
    if (m.size() != 3 || m[0] == m[1] || m[1] == m[2] || m[2] >= kPoints)
      throw Error("cubic has a monomial that is not a product of three distinct points");
    if (c != 1 && c != -1) throw Error("cubic has a coefficient other than +-1");
    TritangentPlane p;
    p.points = {m[0], m[1], m[2]};
    p.sign = static_cast<int>(c);
    for (auto v : m) p.mask |= PointSet(1) << v;
    s.planes_.push_back(p);
  }
  s.through_.assign(kPoints, {});
  s.meets_.assign(kPoints, 0);
  for (std::size_t i = 0; i < s.planes_.size(); ++i)
    for (auto v : s.planes_[i].points) {
      s.through_[v].push_back(i);
      s.meets_[v] |= s.planes_[i].mask & ~(PointSet(1) << v);
    }
  return s;
}

const IncidenceStructure& IncidenceStructure::get() {
  static const IncidenceStructure s = from_polynomial(beta_polynomial());
  return s;
}

std::size_t IncidenceStructure::plane_index(PointSet mask) const {
  for (std::size_t i = 0; i < planes_.size(); ++i)
    if (planes_[i].mask == mask) return i;
  return planes_.size();
}

IncidenceStructure IncidenceStructure::with_sign_flipped(std::size_t plane) const {
  IncidenceStructure s = *this;
  s.planes_.at(plane).sign = -s.planes_[plane].sign;
  return s;
}

Scalar evaluate_beta(const GridTriple& t) {
  MatrixK abc = t.a * t.b * t.c;
  Scalar tr = abc(0, 0) + abc(1, 1) + abc(2, 2);
  return determinant(t.a) + determinant(t.b) + determinant(t.c) - tr;
}

Scalar evaluate_alpha(const IncidenceStructure& s, const VectorK& f) {
  if (f.size() != kPoints) throw PreconditionError("alpha needs 27 values");
  const FieldContext& ctx = f.front().context();
  Scalar sum = ctx.zero();
  for (const auto& p : s.planes()) {
    Scalar t = f[p.points[0]] * f[p.points[1]] * f[p.points[2]];
    sum += p.sign > 0 ? t : -t;
  }
  return sum;
}

std::vector<Polynomial> beta_gradient_polynomials() {
  static const std::vector<Polynomial> grad = [] {
    Polynomial b = beta_polynomial();
    std::vector<Polynomial> g;
    for (std::uint16_t v = 0; v < kPoints; ++v) g.push_back(b.derivative(v));
    return g;
  }();
  return grad;
}

VectorK beta_gradient(const GridTriple& t) {
  VectorK x = t.to_vector();
  VectorK g;
  for (const auto& p : beta_gradient_polynomials()) g.push_back(p.evaluate(t.context(), x));
  return g;
}

std::vector<ThreeGrid> enumerate_3grids(const IncidenceStructure& s) {
  const auto& pl = s.planes();
  const std::size_t np = pl.size();
  std::vector<ThreeGrid> out;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i + 1; j < np; ++j) {
      if (pl[i].mask & pl[j].mask) continue;
      for (std::size_t k = j + 1; k < np; ++k) {
        if ((pl[i].mask | pl[j].mask) & pl[k].mask) continue;
        const PointSet u = pl[i].mask | pl[j].mask | pl[k].mask;
        std::vector<std::size_t> cand;
        for (std::size_t c = 0; c < np; ++c) {
          const PointSet m = pl[c].mask;
          if ((m & ~u) != 0) continue;
          if (std::popcount(m & pl[i].mask) == 1 && std::popcount(m & pl[j].mask) == 1 &&
              std::popcount(m & pl[k].mask) == 1)
            cand.push_back(c);
        }
        for (std::size_t x = 0; x < cand.size(); ++x)
          for (std::size_t y = x + 1; y < cand.size(); ++y) {
            if (pl[cand[x]].mask & pl[cand[y]].mask) continue;
            for (std::size_t z = y + 1; z < cand.size(); ++z) {
              if ((pl[cand[x]].mask | pl[cand[y]].mask) & pl[cand[z]].mask) continue;
              ThreeGrid g{{i, j, k}, {cand[x], cand[y], cand[z]}};
              if (g.l < g.m) out.push_back(g);
            }
          }
      }
    }
  return out;
}

Report check_theta_grids(const IncidenceStructure& s, const std::vector<ThreeGrid>& grids) {
  const auto& pl = s.planes();
  Json bad;
  std::size_t failures = 0;
  for (const auto& g : grids) {
    int tl = pl[g.l[0]].sign * pl[g.l[1]].sign * pl[g.l[2]].sign;
    int tm = pl[g.m[0]].sign * pl[g.m[1]].sign * pl[g.m[2]].sign;
    if (tl + tm != 0) {
      if (failures++ == 0) bad = Json{{"l", g.l}, {"m", g.m}, {"theta_l", tl}, {"theta_m", tm}};
    }
  }
  Report rep;
  Json detail{{"grids", grids.size()}, {"failures", failures}};
  if (!bad.is_null()) detail["first_failure"] = bad;
  rep.add("theta_grid_identity", failures == 0 && !grids.empty(), detail);
  return rep;
}

int theta_product(const IncidenceStructure& s) {
  int t = 1;
  for (const auto& p : s.planes()) t *= p.sign;
  return t;
}

bool is_double_six(const IncidenceStructure& s, const std::array<std::size_t, 6>& e,
                   const std::array<std::size_t, 6>& f) {
  PointSet all = 0;
  for (auto v : e) all |= PointSet(1) << v;
  for (auto v : f) all |= PointSet(1) << v;
  if (std::popcount(all) != 12) throw PreconditionError("double-six needs 12 distinct points");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (i != j && (s.coplanar(e[i], e[j]) || s.coplanar(f[i], f[j]))) return false;
      if (s.coplanar(e[i], f[j]) != (i != j)) return false;
    }
  return true;
}

GridTriple triple_action(const MatrixK& m, const MatrixK& n, const MatrixK& p, const GridTriple& t) {
  MatrixK mi = inverse(m), ni = inverse(n), pi = inverse(p);
  return {m * t.a * ni, n * t.b * pi, p * t.c * mi};
}

bool is_automorphism(const IncidenceStructure& s, const std::array<std::uint8_t, kPoints>& perm) {
  PointSet seen = 0;
  for (auto v : perm) seen |= PointSet(1) << v;
  if (seen != (PointSet(1) << kPoints) - 1) return false;
  for (const auto& p : s.planes()) {
    PointSet img = 0;
    for (auto v : p.points) img |= PointSet(1) << perm[v];
    if (s.plane_index(img) == s.planes().size()) return false;
  }
  return true;
}

AutomorphismCount incidence_automorphism_count(const IncidenceStructure& s,
                                               std::chrono::milliseconds budget) {
  const auto start = Clock::now();
  // Breadth-first order in the coplanarity graph, so each point after the
  // first is constrained by an earlier neighbour.
  std::vector<std::size_t> order{0};
  PointSet placed = 1;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t v = 0; v < kPoints; ++v)
      if (s.coplanar(order[k], v) && !((placed >> v) & 1u)) {
        placed |= PointSet(1) << v;
        order.push_back(v);
      }
  if (order.size() != kPoints) throw Error("coplanarity graph is not connected");

  AutomorphismCount res;
  std::array<std::uint8_t, kPoints> perm{};
  PointSet used = 0;
  std::uint64_t nodes = 0;
  bool out_of_time = false;

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (out_of_time) return;
    if ((++nodes & 0xFFF) == 0 && Clock::now() - start > budget) {
      out_of_time = true;
      return;
    }
    if (depth == kPoints) {
      if (is_automorphism(s, perm)) ++res.count;
      return;
    }
    const std::size_t v = order[depth];
    for (std::size_t c = 0; c < kPoints; ++c) {
      if ((used >> c) & 1u) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k)
        ok = s.coplanar(v, order[k]) == s.coplanar(c, perm[order[k]]);
      if (!ok) continue;
      perm[v] = static_cast<std::uint8_t>(c);
      used |= PointSet(1) << c;
      self(self, depth + 1);
      used &= ~(PointSet(1) << c);
    }
  };
  rec(rec, 0);
  res.complete = !out_of_time;
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

Json incidence_to_json(const IncidenceStructure& s) {
  Json points = Json::array();
  for (std::size_t v = 0; v < kPoints; ++v) points.push_back(point_label(v));
  Json planes = Json::array();
  for (const auto& p : s.planes()) {
    Json labels = Json::array();
    for (auto v : p.points) labels.push_back(point_label(v));
    planes.push_back({{"points", labels}, {"sign", p.sign}});
  }
  return Json{{"points", points}, {"planes", planes}};
}

}  // namespace ckit::cubic27
