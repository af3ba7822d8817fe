#include "qhopf/io.hpp"

#include <fstream>
#include <sstream>

namespace qhopf {

namespace {

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw IoError(path.empty() ? "/" : path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw IoError(path + "/" + key + ": missing");
  return *it;
}

std::vector<Rational> vec_from_json(const json& j, std::size_t expect, const std::string& path) {
  if (!j.is_array()) throw IoError(path + ": expected an array");
  if (j.size() != expect)
    throw IoError(path + ": expected " + std::to_string(expect) + " entries, got " + std::to_string(j.size()));
  std::vector<Rational> v;
  v.reserve(expect);
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], path + "/" + std::to_string(i)));
  return v;
}

json vec_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::size_t size_from_json(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw IoError(path + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw IoError(path + ": expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

json algebra_to_json(const AlgebraData& d) {
  json j;
  j["name"] = d.name;
  j["dim"] = d.dim;
  j["basis"] = d.basis;
  j["mult"] = vec_to_json(d.mult);
  j["unit"] = vec_to_json(d.unit);
  j["comult"] = vec_to_json(d.comult);
  j["counit"] = vec_to_json(d.counit);
  j["phi"] = vec_to_json(d.phi);
  if (!d.phi_inv.empty()) j["phi_inv"] = vec_to_json(d.phi_inv);
  j["antipode"] = vec_to_json(d.antipode);
  if (!d.antipode_inv.empty()) j["antipode_inv"] = vec_to_json(d.antipode_inv);
  j["alpha"] = vec_to_json(d.alpha);
  j["beta"] = vec_to_json(d.beta);
  return j;
}

AlgebraData algebra_from_json(const json& j) {
  AlgebraData d;
  d.dim = size_from_json(field(j, "dim", ""), "/dim");
  const std::size_t n = d.dim;
  if (n == 0) throw IoError("/dim: must be positive");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw IoError("/name: expected a string");
    d.name = j["name"].get<std::string>();
  }
  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array() || b.size() != n) throw IoError("/basis: expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) throw IoError("/basis/" + std::to_string(i) + ": expected a string");
      d.basis.push_back(b[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) d.basis.push_back("e" + std::to_string(i));
  }
  d.mult = vec_from_json(field(j, "mult", ""), n * n * n, "/mult");
  d.unit = vec_from_json(field(j, "unit", ""), n, "/unit");
  d.comult = vec_from_json(field(j, "comult", ""), n * n * n, "/comult");
  d.counit = vec_from_json(field(j, "counit", ""), n, "/counit");
  d.phi = vec_from_json(field(j, "phi", ""), n * n * n, "/phi");
  if (j.contains("phi_inv")) d.phi_inv = vec_from_json(j["phi_inv"], n * n * n, "/phi_inv");
  d.antipode = vec_from_json(field(j, "antipode", ""), n * n, "/antipode");
  if (j.contains("antipode_inv")) d.antipode_inv = vec_from_json(j["antipode_inv"], n * n, "/antipode_inv");
  d.alpha = vec_from_json(field(j, "alpha", ""), n, "/alpha");
  d.beta = vec_from_json(field(j, "beta", ""), n, "/beta");
  return d;
}

json matrix_to_json(const Matrix& m) {
  std::vector<Rational> flat(m.rows() * m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, x] : m.column(c).entries) flat[r * m.cols() + c] = x;
  return vec_to_json(flat);
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  return Matrix::from_dense(rows, cols, vec_from_json(j, rows * cols, path));
}

json module_to_json(const HModule& m) {
  json j;
  j["dim"] = m.dim();
  json a = json::array();
  for (const auto& r : m.action())
    for (auto& x : matrix_to_json(r)) a.push_back(std::move(x));
  j["action"] = std::move(a);
  return j;
}

HModule module_from_json(const Algebra& alg, const json& j, const std::string& path) {
  const std::size_t n = alg.dim();
  const std::size_t d = size_from_json(field(j, "dim", path), path + "/dim");
  auto flat = vec_from_json(field(j, "action", path), n * d * d, path + "/action");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < n; ++i)
    act.push_back(Matrix::from_dense(d, d, std::vector<Rational>(flat.begin() + i * d * d, flat.begin() + (i + 1) * d * d)));
  try {
    return HModule::create(alg, std::move(act), j.value("name", std::string("M")));
  } catch (const ValidationError& e) {
    throw IoError(path + "/action: " + e.what());
  }
}

json center_to_json(const CenterObject& c) {
  json j = module_to_json(c.base());
  const Matrix& co = c.coaction();
  json a = json::array();
  for (std::size_t col = 0; col < co.cols(); ++col) {
    SparseVector v = co.column(col);
    std::vector<Rational> dense(co.rows());
    for (const auto& [r, x] : v.entries) dense[r] = x;
    for (const auto& x : dense) a.push_back(x.str());
  }
  j["coaction"] = std::move(a);
  return j;
}

CenterObject center_from_json(const Algebra& alg, const json& j, const std::string& path) {
  HModule m = module_from_json(alg, j, path);
  const std::size_t n = alg.dim(), d = m.dim();
  auto flat = vec_from_json(field(j, "coaction", path), n * d * d, path + "/coaction");
  Matrix co(n * d, d);
  for (std::size_t col = 0; col < d; ++col)
    co.set_column(col, SparseVector::from_dense(
                           std::vector<Rational>(flat.begin() + col * n * d, flat.begin() + (col + 1) * n * d)));
  try {
    return CenterObject::create(m, co);
  } catch (const ValidationError& e) {
    throw IoError(path + "/coaction: " + e.what());
  }
}

json amodule_to_json(const AModule& m) {
  json j = center_to_json(m.center());
  j["mu"] = matrix_to_json(m.mu());
  return j;
}

AModule amodule_from_json(const Algebra& alg, const json& j, const std::string& path) {
  CenterObject c = center_from_json(alg, j, path);
  Matrix mu = matrix_from_json(field(j, "mu", path), c.dim(), c.dim() * alg.dim(), path + "/mu");
  try {
    return AModule::create(c, mu);
  } catch (const ValidationError& e) {
    throw IoError(path + "/mu: " + e.what());
  }
}

json report_to_json(const Report& r) {
  json a = json::array();
  for (const auto& it : r.items())
    a.push_back(json{{"id", it.id}, {"status", it.pass ? "pass" : "fail"}, {"details", it.details}});
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace qhopf
