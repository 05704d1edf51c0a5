#include "document.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "adlie/error.hpp"

namespace adlie::cli {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw SchemaError("field " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "/" + key, "missing");
  return *it;
}

std::size_t index_from(const Json& j, const std::string& path, std::size_t dim) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) bad(path, "index out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

std::size_t key_index(const std::string& key, const std::string& path, std::size_t dim) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(key, &pos);
  } catch (const std::exception&) {
    bad(path, "key is not an integer");
  }
  if (pos != key.size()) bad(path, "key is not an integer");
  if (v < 1 || static_cast<std::size_t>(v) > dim) bad(path, "index out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

std::size_t dim_from(const Json& j) {
  const Json& d = field(j, "", "dim");
  if (!d.is_number_integer() || d.get<long long>() < 0) bad("/dim", "expected a non-negative integer");
  return static_cast<std::size_t>(d.get<long long>());
}

void check_version(const Json& j) {
  const Json& v = field(j, "", "schema_version");
  if (!v.is_string() || v.get<std::string>() != kSchemaVersion) bad("/schema_version", "expected \"1\"");
}

Json header(const char* kind, std::size_t dim) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["dim"] = dim;
  return j;
}

Json brackets_json(const LieAlgebra& lie) {
  Json out = Json::array();
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    for (std::size_t j = i + 1; j < lie.dim(); ++j) {
      const SparseVec& v = lie.bracket_sparse(i, j);
      if (v.empty()) continue;
      Json coeffs = Json::object();
      for (const auto& [k, c] : v) coeffs[std::to_string(k + 1)] = to_string(c);
      out.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coeffs", std::move(coeffs)}});
    }
  }
  return out;
}

LieAlgebra brackets_from(const Json& j, std::size_t dim) {
  LieAlgebra lie(dim);
  auto it = j.find("brackets");
  if (it == j.end()) return lie;
  if (!it->is_array()) bad("/brackets", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < it->size(); ++e) {
    const std::string path = "/brackets/" + std::to_string(e);
    const Json& entry = (*it)[e];
    const std::size_t i = index_from(field(entry, path, "i"), path + "/i", dim);
    const std::size_t k = index_from(field(entry, path, "j"), path + "/j", dim);
    if (i >= k) bad(path, "requires i < j");
    if (!seen.insert({i, k}).second) bad(path, "duplicate bracket entry");
    const Json& coeffs = field(entry, path, "coeffs");
    if (!coeffs.is_object()) bad(path + "/coeffs", "expected an object");
    for (const auto& [key, value] : coeffs.items()) {
      const std::string cpath = path + "/coeffs/" + key;
      const std::size_t target = key_index(key, cpath, dim);
      const Scalar c = scalar_from(value, cpath);
      if (!is_zero(c)) lie.add_bracket_term(i, k, target, c);
    }
  }
  return lie;
}

std::vector<std::string> labels_from(const Json& j, std::size_t dim) {
  auto it = j.find("labels");
  if (it == j.end()) return {};
  if (!it->is_array() || it->size() != dim) bad("/labels", "expected an array of " + std::to_string(dim) + " strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_string()) bad("/labels/" + std::to_string(i), "expected a string");
    out.push_back((*it)[i].get<std::string>());
  }
  return out;
}

Mat square_from(const Json& j, const std::string& path, std::size_t dim) {
  Mat m = matrix_from(j, path);
  if (m.rows() != dim || m.cols() != dim) bad(path, "expected a " + std::to_string(dim) + "×" + std::to_string(dim) + " matrix");
  return m;
}

}  // namespace

Json to_json(const Scalar& s) { return to_string(s); }

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const AlgebraDocument& doc) {
  Json j = header(doc.kind.c_str(), doc.algebra.dim());
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  if (doc.kind != "rho") j["brackets"] = brackets_json(doc.algebra);
  if (doc.gram) j["gram"] = to_json(*doc.gram);
  if (doc.kind == "rho") {
    Json mats = Json::array();
    for (const Mat& m : doc.mats) mats.push_back(to_json(m));
    j["mats"] = std::move(mats);
  }
  return j;
}

Json lie_json(const LieAlgebra& lie) {
  return to_json(AlgebraDocument{"lie", lie, lie.labels(), std::nullopt, {}});
}

Json metric_lie_json(const MetricLieAlgebra& m) {
  return to_json(AlgebraDocument{"metric_lie", m.algebra, m.algebra.labels(), m.gram(), {}});
}

Json rho_json(const RhoMap& rho) {
  return to_json(AlgebraDocument{"rho", LieAlgebra(rho.dim()), {}, rho.space().gram(), rho.mats()});
}

Json matrix_json(const Mat& m) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "matrix";
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = to_json(m);
  return j;
}

Json certificate_json(const NonexistenceCertificate& cert) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "nonexistence_certificate";
  j["n"] = cert.n;
  j["witness_rule"] = cert.witness_rule;
  j["checked_samples"] = cert.checked_samples;
  return j;
}

Scalar scalar_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) bad(path, "expected a rational string \"p/q\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Mat matrix_from(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rpath = path + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) bad(rpath, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from(j[r][c], rpath + "/" + std::to_string(c));
  }
  return m;
}

AlgebraDocument parse_document(const Json& j) {
  check_version(j);
  const Json& kind = field(j, "", "kind");
  if (!kind.is_string()) bad("/kind", "expected a string");
  AlgebraDocument doc;
  doc.kind = kind.get<std::string>();
  if (doc.kind != "lie" && doc.kind != "metric_lie" && doc.kind != "rho") bad("/kind", "expected lie, metric_lie or rho");
  const std::size_t dim = dim_from(j);
  doc.labels = labels_from(j, dim);
  if (doc.kind == "rho") {
    if (j.contains("brackets")) bad("/brackets", "not allowed for kind rho");
    doc.algebra = LieAlgebra(dim);
    doc.gram = square_from(field(j, "", "gram"), "/gram", dim);
    const Json& mats = field(j, "", "mats");
    if (!mats.is_array() || mats.size() != dim) bad("/mats", "expected " + std::to_string(dim) + " matrices");
    for (std::size_t i = 0; i < dim; ++i) doc.mats.push_back(square_from(mats[i], "/mats/" + std::to_string(i), dim));
    return doc;
  }
  doc.algebra = brackets_from(j, dim);
  doc.algebra.set_labels(doc.labels);
  if (doc.kind == "metric_lie") {
    doc.gram = square_from(field(j, "", "gram"), "/gram", dim);
  } else if (j.contains("gram")) {
    bad("/gram", "not allowed for kind lie");
  }
  return doc;
}

LieAlgebra lie_from(const Json& j) {
  AlgebraDocument doc = parse_document(j);
  if (doc.kind == "rho") bad("/kind", "expected lie or metric_lie");
  return std::move(doc.algebra);
}

MetricLieAlgebra metric_lie_from(const Json& j) {
  AlgebraDocument doc = parse_document(j);
  if (doc.kind != "metric_lie") bad("/kind", "expected metric_lie");
  try {
    return MetricLieAlgebra(std::move(doc.algebra), BilinearSpace(*doc.gram));
  } catch (const Error& e) {
    bad("/gram", e.what());
  }
}

RhoMap rho_from(const Json& j) {
  AlgebraDocument doc = parse_document(j);
  if (doc.kind != "rho") bad("/kind", "expected rho");
  try {
    return RhoMap(BilinearSpace(*doc.gram), std::move(doc.mats));
  } catch (const Error& e) {
    bad("/gram", e.what());
  }
}

Mat matrix_document_from(const Json& j) {
  if (j.is_array()) return matrix_from(j, "");
  check_version(j);
  const Json& kind = field(j, "", "kind");
  if (!kind.is_string() || kind.get<std::string>() != "matrix") bad("/kind", "expected matrix");
  return matrix_from(field(j, "", "entries"), "/entries");
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("syntax error: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace adlie::cli
