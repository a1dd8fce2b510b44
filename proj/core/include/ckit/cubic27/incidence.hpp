#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "ckit/foundation/polynomial.hpp"
#include "ckit/foundation/report.hpp"

// The 27 points a_ij, b_ij, c_ij and the 45 signed planes read off the
// monomials of beta(A,B,C) = det A + det B + det C - tr(ABC).
namespace ckit::cubic27 {

using PointSet = std::uint32_t;  // bit v = variable v

inline constexpr std::size_t kPoints = 27;

// Variable index of letter ('a','b','c') and 1-based (i,j).
std::uint16_t var_index(char letter, int i, int j);
std::string point_label(std::size_t v);
std::size_t point_from_label(const std::string& label);

struct TritangentPlane {
  std::array<std::uint16_t, 3> points;
  int sign = 1;
  PointSet mask = 0;
};

struct GridTriple {
  MatrixK a, b, c;

  static GridTriple zero(const FieldContext& ctx);
  static GridTriple from_vector(const FieldContext& ctx, const VectorK& v);
  VectorK to_vector() const;
  const FieldContext& context() const { return a.context(); }
  bool operator==(const GridTriple& o) const = default;
};

// beta as an integer polynomial in the 27 variables.
Polynomial beta_polynomial();

class IncidenceStructure {
 public:
  static const IncidenceStructure& get();
  // Built from an arbitrary signed cubic with 45 square-free monomials (used for mutation tests).
  static IncidenceStructure from_polynomial(const Polynomial& cubic);

  const std::vector<TritangentPlane>& planes() const { return planes_; }
  // Planes through point v.
  const std::vector<std::size_t>& planes_through(std::size_t v) const { return through_[v]; }
  // Points coplanar with v, v excluded.
  PointSet meets(std::size_t v) const { return meets_[v]; }
  bool coplanar(std::size_t u, std::size_t v) const { return (meets_[u] >> v) & 1u; }
  std::size_t plane_index(PointSet mask) const;  // planes().size() if absent

  IncidenceStructure with_sign_flipped(std::size_t plane) const;

 private:
  IncidenceStructure() = default;
  std::vector<TritangentPlane> planes_;
  std::vector<std::vector<std::size_t>> through_;
  std::vector<PointSet> meets_;
};

Scalar evaluate_beta(const GridTriple& t);
Scalar evaluate_alpha(const IncidenceStructure& s, const VectorK& f);
std::vector<Polynomial> beta_gradient_polynomials();
VectorK beta_gradient(const GridTriple& t);

struct ThreeGrid {
  std::array<std::size_t, 3> l, m;  // plane indices, each sorted; l < m lexicographically
};

std::vector<ThreeGrid> enumerate_3grids(const IncidenceStructure& s);
// theta(l1) theta(l2) theta(l3) + theta(m1) theta(m2) theta(m3) = 0 on every grid.
Report check_theta_grids(const IncidenceStructure& s, const std::vector<ThreeGrid>& grids);
int theta_product(const IncidenceStructure& s);

bool is_double_six(const IncidenceStructure& s, const std::array<std::size_t, 6>& e,
                   const std::array<std::size_t, 6>& f);

// (M A N^-1, N B P^-1, P C M^-1).
GridTriple triple_action(const MatrixK& m, const MatrixK& n, const MatrixK& p, const GridTriple& t);

struct AutomorphismCount {
  std::uint64_t count = 0;
  bool complete = false;
  double seconds = 0;
};

// Point permutations mapping planes to planes, by backtracking; stops at the budget.
AutomorphismCount incidence_automorphism_count(const IncidenceStructure& s,
                                               std::chrono::milliseconds budget);
bool is_automorphism(const IncidenceStructure& s, const std::array<std::uint8_t, kPoints>& perm);

// {"points": [...], "planes": [{"points": [...], "sign": +-1}]}
Json incidence_to_json(const IncidenceStructure& s);

}  // namespace ckit::cubic27
