#include "kchi/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "kchi/error.hpp"

namespace kchi {

namespace {

cplx pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError("matrix entry must be a [re, im] pair of numbers");
  const cplx z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("matrix entry is not finite");
  return z;
}

void check_finite(const Json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>()))
    throw NumericError("refusing to serialize a non-finite number");
  if (j.is_structured())
    for (const auto& item : j) check_finite(item);
}

}  // namespace

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const MultiIndex& alpha) { return Json(alpha.entries()); }

Json to_json(const DerivReport& r) {
  Json j;
  j["chi"] = r.chi.to_string();
  j["m"] = r.m;
  j["n"] = r.n;
  j["k"] = r.k;
  j["formula_value"] = r.formula_value;
  j["identity_value"] = r.identity_value;
  j["attained_value"] = r.attained_value;
  j["sample_max"] = r.sample_max;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["tolerances"] = {{"identity_rel", r.tolerances.identity_rel},
                     {"attained_rel", r.tolerances.attained_rel},
                     {"sample_abs", r.tolerances.sample_abs}};
  j["checks"] = {{"identity", r.identity_ok()}, {"attained", r.attained_ok()}, {"sample", r.sample_ok()}};
  j["pass"] = r.passes();
  return j;
}

Json to_json(const ImmanantReport& r) {
  Json j;
  j["chi"] = r.chi.to_string();
  j["n"] = r.n;
  j["k"] = r.k;
  j["chi_id"] = r.chi_id;
  j["value"] = to_json(r.value);
  j["bound"] = r.bound;
  j["degree_scaled_bound"] = r.degree_scaled_bound;
  j["sample_max"] = r.sample_max;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.passes();
  j["pass_degree_scaled"] = r.passes_degree_scaled();
  return j;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("matrix must be a non-empty JSON array");
  std::vector<cplx> entries;
  std::size_t n = 0;
  if (j[0].is_array() && !j[0].empty() && j[0][0].is_array()) {
    n = j.size();
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != n) throw DomainError("matrix must be square with equal-length rows");
      for (const auto& entry : row) entries.push_back(pair_from_json(entry));
    }
  } else {
    for (const auto& entry : j) entries.push_back(pair_from_json(entry));
    n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (n * n != entries.size()) throw DomainError("flat matrix must hold a square number of entries");
  }
  return CMatrix(n, n, std::move(entries));
}

CMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read matrix file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw DomainError("malformed JSON in " + path.string() + ": " + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const DomainError& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) {
  check_finite(j);
  return j.dump(2) + "\n";
}

}  // namespace kchi
