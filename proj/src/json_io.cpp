#include "cheb2d/json_io.hpp"

namespace cheb2d {

json matrix_to_json(const Matrix& a) {
  json data = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    data.push_back(std::move(row));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (rows < 0 || cols < 0 || static_cast<Eigen::Index>(data.size()) != rows)
    throw Error("matrix_from_json: shape mismatch");
  Matrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = data.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw Error("matrix_from_json: ragged row");
    for (Eigen::Index k = 0; k < cols; ++k) a(i, k) = row.at(k).get<double>();
  }
  return a;
}

json matrices_to_json(const std::vector<Matrix>& seq) {
  json out = json::array();
  for (const auto& m : seq) out.push_back(matrix_to_json(m));
  return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cheb2d
