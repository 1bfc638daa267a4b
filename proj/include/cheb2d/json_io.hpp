#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cheb2d/linalg.hpp"

namespace cheb2d {

using json = nlohmann::ordered_json;

// {"rows": r, "cols": c, "data": [[...], ...]} with row-major data.
json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const json& j);

json matrices_to_json(const std::vector<Matrix>& seq);

// Doubles are written in shortest round-trip form, so reparsing is exact.
std::string dump_json(const json& j);

}  // namespace cheb2d
