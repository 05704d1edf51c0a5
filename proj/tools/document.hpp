#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "adlie/lie_algebra.hpp"
#include "adlie/rho.hpp"

namespace adlie::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Malformed input; the message names the offending field as a JSON pointer
/// or the line and column of a syntax error.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The interchange document for kinds "lie", "metric_lie" and "rho".
/// Bracket entries use 1-based indices with i < j.
struct AlgebraDocument {
  std::string kind;
  LieAlgebra algebra;
  std::vector<std::string> labels;
  std::optional<Mat> gram;  ///< metric_lie and rho
  std::vector<Mat> mats;    ///< rho only

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

Json to_json(const Scalar& s);
Json to_json(const Mat& m);
Json to_json(const AlgebraDocument& doc);

Json lie_json(const LieAlgebra& lie);
Json metric_lie_json(const MetricLieAlgebra& m);
Json rho_json(const RhoMap& rho);
Json matrix_json(const Mat& m);
Json certificate_json(const NonexistenceCertificate& cert);

/// Throw SchemaError.
Scalar scalar_from(const Json& j, const std::string& path);
Mat matrix_from(const Json& j, const std::string& path);
AlgebraDocument parse_document(const Json& j);

/// Any of lie / metric_lie; the metric is dropped.
LieAlgebra lie_from(const Json& j);
MetricLieAlgebra metric_lie_from(const Json& j);
RhoMap rho_from(const Json& j);
/// A {"kind": "matrix", "entries": [...]} document or a bare array of rows.
Mat matrix_document_from(const Json& j);

/// Reads and parses a JSON file. Throws SchemaError with line/column on syntax errors.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace adlie::cli
