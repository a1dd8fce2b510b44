#include "ckit/jordan/hermitian.hpp"

#include "ckit/jordan/cubic.hpp"

namespace ckit::jordan {

using comp::bilinear;
using comp::conj;
using comp::mul;
using comp::norm_q;

HermitianMatrix::HermitianMatrix(AlgebraTag tag, std::size_t n)
    : tag_(tag), n_(n), diag_(zero_vector(tag.context(), n)) {
  if (tag.kind() == Kind::O && n > 3)
    throw PreconditionError("octonionic Hermitian matrices are limited to n <= 3");
  upper_.assign(n * (n - (n ? 1 : 0)) / 2, CompElement::zero(tag));
}

HermitianMatrix HermitianMatrix::identity(const AlgebraTag& tag, std::size_t n) {
  HermitianMatrix a(tag, n);
  for (std::size_t i = 0; i < n; ++i) a.diag_[i] = tag.context().one();
  return a;
}

HermitianMatrix HermitianMatrix::unit_diag(const AlgebraTag& tag, std::size_t n, std::size_t i) {
  HermitianMatrix a(tag, n);
  a.set_diag(i, tag.context().one());
  return a;
}

std::size_t HermitianMatrix::dimension(Kind kind, std::size_t n) {
  return n + comp::kind_dim(kind) * (n * (n - (n ? 1 : 0)) / 2);
}

HermitianMatrix HermitianMatrix::from_coordinates(const AlgebraTag& tag, std::size_t n,
                                                  const VectorK& c) {
  HermitianMatrix a(tag, n);
  if (c.size() != a.dimension()) throw PreconditionError("wrong coordinate count for H_n");
  for (std::size_t i = 0; i < n; ++i) a.diag_[i] = c[i];
  const std::size_t d = tag.dim();
  for (std::size_t k = 0; k < a.upper_.size(); ++k)
    a.upper_[k] = CompElement(tag, VectorK(c.begin() + n + k * d, c.begin() + n + (k + 1) * d));
  return a;
}

HermitianMatrix HermitianMatrix::from_entries(
    const AlgebraTag& tag, const std::vector<std::vector<CompElement>>& entries) {
  const std::size_t n = entries.size();
  HermitianMatrix a(tag, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw PreconditionError("entry matrix is not square");
    const CompElement& dii = entries[i][i];
    Scalar s = dii[0];
    if (dii != CompElement::scalar(tag, s))
      throw PreconditionError("diagonal entry is not a scalar");
    a.diag_[i] = s;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries[j][i] != conj(entries[i][j]))
        throw PreconditionError("entry matrix is not Hermitian");
      a.upper_[a.pair_index(i, j)] = entries[i][j];
    }
  }
  return a;
}

std::vector<HermitianMatrix> HermitianMatrix::basis(const AlgebraTag& tag, std::size_t n) {
  std::vector<HermitianMatrix> out;
  const std::size_t dim = dimension(tag.kind(), n);
  for (std::size_t k = 0; k < dim; ++k)
    out.push_back(from_coordinates(tag, n, unit_vector(tag.context(), dim, k)));
  return out;
}

std::size_t HermitianMatrix::pair_index(std::size_t i, std::size_t j) const {
  if (!(i < j && j < n_)) throw PreconditionError("upper index needs i < j < n");
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

void HermitianMatrix::set_diag(std::size_t i, const Scalar& s) {
  if (!(s.context() == context())) throw ContextMismatch("diagonal scalar field differs");
  diag_.at(i) = s;
}

const CompElement& HermitianMatrix::upper(std::size_t i, std::size_t j) const {
  return upper_[pair_index(i, j)];
}

void HermitianMatrix::set_upper(std::size_t i, std::size_t j, const CompElement& x) {
  if (!(x.tag() == tag_)) throw ContextMismatch("entry algebra differs from matrix algebra");
  upper_[pair_index(i, j)] = x;
}

CompElement HermitianMatrix::entry(std::size_t i, std::size_t j) const {
  if (i == j) return CompElement::scalar(tag_, diag_.at(i));
  if (i < j) return upper(i, j);
  return conj(upper(j, i));
}

void HermitianMatrix::set_entry(std::size_t i, std::size_t j, const CompElement& x) {
  if (i == j) throw PreconditionError("set_entry is for off-diagonal positions");
  if (i < j) set_upper(i, j, x);
  else set_upper(j, i, conj(x));
}

VectorK HermitianMatrix::coordinates() const {
  VectorK c = diag_;
  for (const auto& u : upper_) c.insert(c.end(), u.coords().begin(), u.coords().end());
  return c;
}

bool HermitianMatrix::is_zero() const {
  if (!is_zero_vector(diag_)) return false;
  for (const auto& u : upper_)
    if (!u.is_zero()) return false;
  return true;
}

void HermitianMatrix::check_same(const HermitianMatrix& o) const {
  if (n_ != o.n_ || !(tag_ == o.tag_))
    throw PreconditionError("Hermitian matrices differ in size or algebra");
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  check_same(o);
  for (std::size_t i = 0; i < n_; ++i) diag_[i] += o.diag_[i];
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += o.upper_[k];
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  check_same(o);
  for (std::size_t i = 0; i < n_; ++i) diag_[i] -= o.diag_[i];
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] -= o.upper_[k];
  return *this;
}

HermitianMatrix operator*(const Scalar& s, const HermitianMatrix& a) {
  HermitianMatrix r = a;
  for (auto& d : r.diag_) d *= s;
  for (auto& u : r.upper_) u = s * u;
  return r;
}

bool HermitianMatrix::operator==(const HermitianMatrix& o) const {
  return n_ == o.n_ && tag_ == o.tag_ && diag_ == o.diag_ && upper_ == o.upper_;
}

std::string HermitianMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ", ";
      s += i == j ? diag_[i].to_string() : entry(i, j).to_string();
    }
  }
  return s + "]";
}

Scalar trace(const HermitianMatrix& a) {
  Scalar t = a.context().zero();
  for (std::size_t i = 0; i < a.n(); ++i) t += a.diag(i);
  return t;
}

Scalar trace_form(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.n() != b.n() || !(a.tag() == b.tag()))
    throw PreconditionError("trace form of matrices with different shapes");
  Scalar t = a.context().zero();
  for (std::size_t i = 0; i < a.n(); ++i) t += a.diag(i) * b.diag(i);
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = i + 1; j < a.n(); ++j) t += bilinear(a.upper(i, j), b.upper(i, j));
  return t;
}

MatrixK trace_form_gram(const AlgebraTag& tag, std::size_t n) {
  auto basis = HermitianMatrix::basis(tag, n);
  MatrixK g(tag.context(), basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = trace_form(basis[i], basis[j]);
  return g;
}

std::vector<std::vector<CompElement>> entries_of(const HermitianMatrix& a) {
  std::vector<std::vector<CompElement>> e(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) e[i].push_back(a.entry(i, j));
  return e;
}

std::vector<std::vector<CompElement>> matrix_product(
    const std::vector<std::vector<CompElement>>& x, const std::vector<std::vector<CompElement>>& y) {
  const std::size_t n = x.size();
  const AlgebraTag& tag = x.at(0).at(0).tag();
  std::vector<std::vector<CompElement>> z(n, std::vector<CompElement>(n, CompElement::zero(tag)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][k] += mul(x[i][j], y[j][k]);
  return z;
}

HermitianMatrix u_operator(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.n() != b.n() || !(a.tag() == b.tag()))
    throw PreconditionError("U operator on matrices with different shapes");
  if (a.tag().kind() == Kind::O) {
    if (a.n() != 3) throw PreconditionError("octonionic U operator needs n = 3");
    return trace_form(a, b) * a - cross(adjoint(a), b);
  }
  auto ea = entries_of(a);
  return HermitianMatrix::from_entries(a.tag(), matrix_product(matrix_product(ea, entries_of(b)), ea));
}

MatrixK u_operator_matrix(const HermitianMatrix& a) {
  std::vector<VectorK> cols;
  for (const auto& b : HermitianMatrix::basis(a.tag(), a.n()))
    cols.push_back(u_operator(a, b).coordinates());
  return MatrixK::from_columns(a.context(), a.dimension(), cols);
}

namespace {

Scalar det3_with_factor(const HermitianMatrix& a, long factor) {
  if (a.n() != 3) throw PreconditionError("det3 needs n = 3");
  const Scalar& r1 = a.diag(0);
  const Scalar& r2 = a.diag(1);
  const Scalar& r3 = a.diag(2);
  CompElement x1 = a.entry(1, 2);
  CompElement x2 = a.entry(2, 0);
  CompElement x3 = a.entry(1, 0);
  Scalar prod = bilinear(mul(x1, x2), x3);
  if (factor != 1) prod *= a.context().from_int(factor);
  return r1 * r2 * r3 + prod - r1 * norm_q(x1) - r2 * norm_q(x2) - r3 * norm_q(x3);
}

}  // namespace

Scalar det3(const HermitianMatrix& a) { return det3_with_factor(a, 1); }
Scalar det3_doubled_product(const HermitianMatrix& a) { return det3_with_factor(a, 2); }

HermitianMatrix embed(const HermitianMatrix& a, Kind target) {
  AlgebraTag tag(target, a.context());
  HermitianMatrix r(tag, a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    r.set_diag(i, a.diag(i));
    for (std::size_t j = i + 1; j < a.n(); ++j) r.set_upper(i, j, comp::embed(a.upper(i, j), target));
  }
  return r;
}

std::optional<HermitianMatrix> restrict_to(const HermitianMatrix& a, Kind target) {
  AlgebraTag tag(target, a.context());
  HermitianMatrix r(tag, a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    r.set_diag(i, a.diag(i));
    for (std::size_t j = i + 1; j < a.n(); ++j) {
      auto x = comp::restrict_to(a.upper(i, j), target);
      if (!x) return std::nullopt;
      r.set_upper(i, j, *x);
    }
  }
  return r;
}

HermitianMatrix random_hermitian(const AlgebraTag& tag, std::size_t n, TrialRng& rng) {
  return HermitianMatrix::from_coordinates(
      tag, n, random_vector(tag.context(), HermitianMatrix::dimension(tag.kind(), n), rng));
}

std::uint64_t hermitian_count(const AlgebraTag& tag, std::size_t n) {
  if (!tag.context().is_prime()) throw PreconditionError("exhaustive iteration needs a prime field");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < HermitianMatrix::dimension(tag.kind(), n); ++i)
    total *= tag.context().characteristic();
  return total;
}

HermitianMatrix hermitian_at(const AlgebraTag& tag, std::size_t n, std::uint64_t index) {
  const std::size_t dim = HermitianMatrix::dimension(tag.kind(), n);
  const std::uint64_t p = tag.context().characteristic();
  VectorK c(dim);
  for (std::size_t i = dim; i-- > 0;) {
    c[i] = Scalar::residue(tag.context(), index % p);
    index /= p;
  }
  return HermitianMatrix::from_coordinates(tag, n, c);
}

void for_each_hermitian(const AlgebraTag& tag, std::size_t n,
                        const std::function<void(const HermitianMatrix&)>& f) {
  const std::uint64_t total = hermitian_count(tag, n);
  for (std::uint64_t idx = 0; idx < total; ++idx) f(hermitian_at(tag, n, idx));
}

Json hermitian_to_json(const HermitianMatrix& a) {
  Json j;
  j["n"] = a.n();
  j["alg"] = std::string(1, comp::kind_letter(a.tag().kind()));
  put_context(j, a.context());
  Json diag = Json::array();
  for (std::size_t i = 0; i < a.n(); ++i) diag.push_back(scalar_to_json(a.diag(i)));
  j["diag"] = diag;
  Json upper = Json::array();
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j2 = i + 1; j2 < a.n(); ++j2) {
      Json e = Json::array({i + 1, j2 + 1});
      for (const auto& c : a.upper(i, j2).coords()) e.push_back(scalar_to_json(c));
      upper.push_back(e);
    }
  j["upper"] = upper;
  return j;
}

HermitianMatrix hermitian_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("Hermitian matrix must be a JSON object");
    FieldContext ctx = get_context(j);
    AlgebraTag tag(comp::kind_from_letter(j.at("alg").get<std::string>()), ctx);
    std::size_t n = j.at("n").get<std::size_t>();
    if (tag.kind() == Kind::O && n > 3) throw ParseError("octonionic matrices need n <= 3");
    HermitianMatrix a(tag, n);
    VectorK diag = vector_from_json(ctx, j.at("diag"));
    if (diag.size() != n) throw ParseError("\"diag\" must have n entries");
    for (std::size_t i = 0; i < n; ++i) a.set_diag(i, diag[i]);
    if (j.contains("upper")) {
      for (const auto& e : j["upper"]) {
        if (!e.is_array() || e.size() != 2 + tag.dim())
          throw ParseError("\"upper\" items are [i, j, coords...]");
        std::size_t r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
        if (r < 1 || c <= r || c > n) throw ParseError("\"upper\" needs 1 <= i < j <= n");
        VectorK coords;
        for (std::size_t k = 2; k < e.size(); ++k) coords.push_back(scalar_from_json(ctx, e[k]));
        a.set_upper(r - 1, c - 1, CompElement(tag, coords));
      }
    }
    return a;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad Hermitian matrix: ") + e.what());
  }
}

}  // namespace ckit::jordan
