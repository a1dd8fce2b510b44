#include "ckit/foundation/json_io.hpp"

#include <fstream>

namespace ckit {

void put_context(Json& j, const FieldContext& ctx) {
  if (ctx.is_rational()) {
    j["field"] = "q";
  } else {
    j["field"] = "fp";
    j["p"] = ctx.characteristic();
  }
}

FieldContext get_context(const Json& j) {
  try {
    const std::string field = j.at("field").get<std::string>();
    if (field == "q") return FieldContext::rationals();
    if (field == "fp") return FieldContext::prime(j.at("p").get<std::uint32_t>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad field description: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("field must be \"q\" or \"fp\"");
}

Json scalar_to_json(const Scalar& s) {
  if (s.context().is_prime()) return s.residue();
  return s.to_string();
}

Scalar scalar_from_json(const FieldContext& ctx, const Json& j) {
  if (j.is_number_integer()) {
    long v = j.get<long>();
    if (ctx.is_prime() && (v < 0 || v >= static_cast<long>(ctx.characteristic())))
      throw ParseError("residue out of range [0,p): " + j.dump());
    return ctx.from_int(v);
  }
  if (j.is_string()) return Scalar::parse(ctx, j.get<std::string>());
  throw ParseError("scalar must be an integer or a string: " + j.dump());
}

Json vector_to_json(const VectorK& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(scalar_to_json(s));
  return a;
}

VectorK vector_from_json(const FieldContext& ctx, const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  VectorK v;
  for (const auto& e : j) v.push_back(scalar_from_json(ctx, e));
  return v;
}

Json matrix_to_json(const MatrixK& m) {
  Json j;
  put_context(j, m.context());
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  j["rows"] = rows;
  return j;
}

MatrixK matrix_from_json(const Json& j) {
  FieldContext ctx = get_context(j);
  if (!j.contains("rows") || !j["rows"].is_array()) throw ParseError("matrix needs \"rows\"");
  std::vector<VectorK> rows;
  for (const auto& r : j["rows"]) rows.push_back(vector_from_json(ctx, r));
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("ragged matrix rows");
  return MatrixK::from_rows(ctx, cols, rows);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace ckit
