#include "ckit/classical/model.hpp"

namespace ckit::classical {

namespace {

void require_carrier(const ClassicalModel& m, const MatrixK& x) {
  if (!in_carrier(m, x)) throw PreconditionError("matrix is not in the carrier of V^n_a");
}

void require_nonzero(const MatrixK& x) {
  if (x.is_zero()) throw PreconditionError("rank-one tests need A != 0");
}

MatrixK outer(const VectorK& u, const VectorK& v) {
  MatrixK r(u.front().context(), u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = u[i] * v[j];
  return r;
}

VectorK nonzero_vector(const FieldContext& ctx, std::size_t n, TrialRng& rng) {
  for (;;) {
    VectorK v = random_vector(ctx, n, rng);
    if (!is_zero_vector(v)) return v;
  }
}

}  // namespace

ClassicalModel ClassicalModel::make(int a, std::size_t n, const FieldContext& ctx) {
  if (a != 1 && a != 2 && a != 4) throw PreconditionError("a must be 1, 2 or 4");
  if (n == 0) throw PreconditionError("n must be positive");
  ClassicalModel m;
  m.a = a;
  m.n = n;
  m.ctx = ctx;
  if (a == 4) {
    m.base = MatrixK(ctx, 2 * n, 2 * n);
    for (std::size_t t = 0; t < n; ++t) {
      m.base(2 * t, 2 * t + 1) = -ctx.one();
      m.base(2 * t + 1, 2 * t) = ctx.one();
    }
  } else {
    m.base = MatrixK::identity(ctx, n);
  }
  m.base_inv = inverse(m.base);
  return m;
}

bool in_carrier(const ClassicalModel& m, const MatrixK& x) {
  const std::size_t s = m.size();
  if (x.rows() != s || x.cols() != s || !(x.context() == m.ctx)) return false;
  if (m.a == 2) return true;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      if (m.a == 1 && x(i, j) != x(j, i)) return false;
      if (m.a == 4 && (i == j ? !x(i, i).is_zero() : x(i, j) != -x(j, i))) return false;
    }
  return true;
}

std::vector<MatrixK> carrier_basis(const ClassicalModel& m) {
  const std::size_t s = m.size();
  std::vector<MatrixK> out;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      MatrixK e(m.ctx, s, s);
      if (m.a == 2) {
        e(i, j) = m.ctx.one();
      } else if (m.a == 1) {
        if (j < i) continue;
        e(i, j) = m.ctx.one();
        e(j, i) = m.ctx.one();
      } else {
        if (j <= i) continue;
        e(i, j) = m.ctx.one();
        e(j, i) = -m.ctx.one();
      }
      out.push_back(e);
    }
  return out;
}

VectorK carrier_coordinates(const ClassicalModel& m, const MatrixK& x) {
  require_carrier(m, x);
  const std::size_t s = m.size();
  VectorK c;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if ((m.a == 1 && j < i) || (m.a == 4 && j <= i)) continue;
      c.push_back(x(i, j));
    }
  return c;
}

MatrixK carrier_element(const ClassicalModel& m, const VectorK& c) {
  auto basis = carrier_basis(m);
  if (c.size() != basis.size()) throw PreconditionError("wrong number of carrier coordinates");
  MatrixK x(m.ctx, m.size(), m.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!c[k].is_zero()) x += c[k] * basis[k];
  return x;
}

MatrixK u_classical(const ClassicalModel& m, const MatrixK& a, const MatrixK& b) {
  require_carrier(m, a);
  require_carrier(m, b);
  return a * m.base_inv * b * m.base_inv * a;
}

MatrixK u_classical_matrix(const ClassicalModel& m, const MatrixK& a) {
  std::vector<VectorK> cols;
  for (const auto& b : carrier_basis(m)) cols.push_back(carrier_coordinates(m, u_classical(m, a, b)));
  return MatrixK::from_columns(m.ctx, cols.front().size(), cols);
}

Scalar trace_form(const ClassicalModel& m, const MatrixK& a, const MatrixK& b) {
  require_carrier(m, a);
  require_carrier(m, b);
  MatrixK x = m.base_inv * b * m.base_inv;
  Scalar t = m.ctx.zero();
  const std::size_t s = m.size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (m.a == 4 && j <= i) continue;
      t += a(i, j) * x(j, i);
    }
  return t;
}

MatrixK trace_form_gram(const ClassicalModel& m) {
  auto basis = carrier_basis(m);
  MatrixK g(m.ctx, basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = trace_form(m, basis[i], basis[j]);
  return g;
}

bool rank_one_classical(const ClassicalModel& m, const MatrixK& a) {
  require_carrier(m, a);
  require_nonzero(a);
  for (const auto& b : carrier_basis(m))
    if (u_classical(m, a, b) != trace_form(m, a, b) * a) return false;
  return true;
}

bool matrix_rank_characterization(const ClassicalModel& m, const MatrixK& a) {
  require_carrier(m, a);
  require_nonzero(a);
  return rank(a) == (m.a == 4 ? 2u : 1u);
}

Report rank_one_report(const ClassicalModel& m, const MatrixK& a) {
  bool jr = rank_one_classical(m, a);
  bool mr = matrix_rank_characterization(m, a);
  Report rep;
  rep.add("rank_one_iff_matrix_rank", jr == mr,
          Json{{"jordan", jr}, {"matrix_rank", rank(a)}, {"A", classical_to_json(m, a)}});
  return rep;
}

MatrixK structure_action(const ClassicalModel& m, const GroupElement& g, const MatrixK& a) {
  require_carrier(m, a);
  if (m.a == 2) return g.g * a * g.h.transpose();
  return g.g * a * g.g.transpose();
}

GroupElement structure_adjoint(const ClassicalModel& m, const GroupElement& g) {
  if (m.a == 2) return {g.h.transpose(), g.g.transpose()};
  if (m.a == 4) return {m.base * g.g.transpose() * m.base_inv, {}};
  return {g.g.transpose(), {}};
}

MatrixK structure_action_matrix(const ClassicalModel& m, const GroupElement& g) {
  std::vector<VectorK> cols;
  for (const auto& b : carrier_basis(m))
    cols.push_back(carrier_coordinates(m, structure_action(m, g, b)));
  return MatrixK::from_columns(m.ctx, cols.front().size(), cols);
}

bool is_structure_element(const ClassicalModel& m, const GroupElement& g) {
  const std::size_t s = m.size();
  if (g.g.rows() != s || g.g.cols() != s) throw PreconditionError("group element has the wrong size");
  if (determinant(g.g).is_zero() || (m.a == 2 && determinant(g.h).is_zero()))
    throw PreconditionError("group element is singular");
  MatrixK act = structure_action_matrix(m, g);
  MatrixK adj = structure_action_matrix(m, structure_adjoint(m, g));
  auto basis = carrier_basis(m);
  auto identity_at = [&](const MatrixK& a) {
    return u_classical_matrix(m, structure_action(m, g, a)) == act * u_classical_matrix(m, a) * adj;
  };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!identity_at(basis[i])) return false;
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!identity_at(basis[i] + basis[j])) return false;
  }
  return true;
}

Report structure_report(const ClassicalModel& m, const GroupElement& g,
                        const std::vector<MatrixK>& rank_one_samples) {
  Report rep;
  rep.add("structure_identity", is_structure_element(m, g));
  Json bad;
  for (const auto& a : rank_one_samples) {
    if (!rank_one_classical(m, a)) throw PreconditionError("sample is not rank one");
    MatrixK ga = structure_action(m, g, a);
    if (!rank_one_classical(m, ga)) {
      bad = Json{{"A", classical_to_json(m, a)}, {"gA", classical_to_json(m, ga)}};
      break;
    }
  }
  rep.add("rank_one_preserved", bad.is_null(), bad);
  return rep;
}

MatrixK random_carrier_element(const ClassicalModel& m, TrialRng& rng) {
  return carrier_element(m, random_vector(m.ctx, carrier_basis(m).size(), rng));
}

MatrixK random_rank_one(const ClassicalModel& m, TrialRng& rng) {
  if (m.a == 1) {
    VectorK v = nonzero_vector(m.ctx, m.n, rng);
    return random_nonzero_scalar(m.ctx, rng) * outer(v, v);
  }
  if (m.a == 2) return outer(nonzero_vector(m.ctx, m.n, rng), nonzero_vector(m.ctx, m.n, rng));
  for (;;) {
    VectorK u = random_vector(m.ctx, 2 * m.n, rng), v = random_vector(m.ctx, 2 * m.n, rng);
    MatrixK x = outer(u, v) - outer(v, u);
    if (!x.is_zero()) return x;
  }
}

GroupElement random_group_element(const ClassicalModel& m, TrialRng& rng) {
  GroupElement g;
  g.g = random_invertible(m.ctx, m.size(), rng);
  if (m.a == 2) g.h = random_invertible(m.ctx, m.size(), rng);
  return g;
}

Json classical_to_json(const ClassicalModel& m, const MatrixK& x) {
  return Json{{"model", {{"a", m.a}, {"n", m.n}}}, {"matrix", matrix_to_json(x)}};
}

std::pair<ClassicalModel, MatrixK> classical_from_json(const Json& j) {
  try {
    MatrixK x = matrix_from_json(j.at("matrix"));
    ClassicalModel m = ClassicalModel::make(j.at("model").at("a").get<int>(),
                                            j.at("model").at("n").get<std::size_t>(), x.context());
    require_carrier(m, x);
    return {m, x};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("classical matrix JSON: ") + e.what());
  }
}

}  // namespace ckit::classical
