#pragma once

#include <string>

#include <json.hpp>

#include "qhopf/amodule.hpp"

namespace qhopf {

using json = nlohmann::json;

/// Malformed file content. what() starts with the JSON path of the offending value.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rationals are strings "p/q" or "p"; plain JSON integers are accepted on input.
Rational rational_from_json(const json& j, const std::string& path);

json algebra_to_json(const AlgebraData& d);
AlgebraData algebra_from_json(const json& j);

/// {"dim", "action"}: flat n*d*d, index (i, row, col).
json module_to_json(const HModule& m);
HModule module_from_json(const Algebra& alg, const json& j, const std::string& path = "");

/// Module plus "coaction": the (n*d) x d matrix flattened column by column.
json center_to_json(const CenterObject& c);
CenterObject center_from_json(const Algebra& alg, const json& j, const std::string& path = "");

/// Center plus "mu": the d x (d*n) matrix flattened row by row.
json amodule_to_json(const AModule& m);
AModule amodule_from_json(const Algebra& alg, const json& j, const std::string& path = "");

/// Row-major flat array of strings.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path);

/// List of {id, status, details}.
json report_to_json(const Report& r);

/// Deterministic text form, two-space indent and a trailing newline.
std::string dump(const json& j);
json read_json_file(const std::string& path);

}  // namespace qhopf
