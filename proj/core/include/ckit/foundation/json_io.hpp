#pragma once

#include <nlohmann/json.hpp>

#include "ckit/foundation/matrix.hpp"

namespace ckit {

using Json = nlohmann::ordered_json;

// Writes "field" and, for prime fields, "p".
void put_context(Json& j, const FieldContext& ctx);
FieldContext get_context(const Json& j);

// Rationals as "a/b" strings, residues as integers.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldContext& ctx, const Json& j);

Json vector_to_json(const VectorK& v);
VectorK vector_from_json(const FieldContext& ctx, const Json& j);

Json matrix_to_json(const MatrixK& m);
MatrixK matrix_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace ckit
