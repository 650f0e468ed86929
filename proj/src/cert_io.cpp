#include "qchrom/cert_io.hpp"

#include <cmath>

#include <json.hpp>

#include "qchrom/errors.hpp"

namespace qchrom::cert {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ParseError(path + ": " + why);
}

double finite_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "non-finite number");
  return x;
}

std::size_t positive_int(const json& doc, const char* key) {
  const std::string path = std::string("$.") + key;
  if (!doc.contains(key)) fail(path, "missing field");
  const json& j = doc.at(key);
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 1) fail(path, "must be >= 1");
  return static_cast<std::size_t>(v);
}

// rows == 0 accepts any square size.
CMatrix parse_matrix(const json& j, const std::string& path,
                     std::size_t rows) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (rows == 0) rows = j.size();
  if (rows == 0) fail(path, "empty matrix");
  if (j.size() != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows, got " +
                   std::to_string(j.size()));
  }
  const auto n = static_cast<Eigen::Index>(rows);
  CMatrix m(n, n);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    const json& row = j[r];
    if (!row.is_array()) fail(rpath, "expected a row array");
    if (row.size() != rows) {
      fail(rpath, "ragged matrix: row has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(rows));
    }
    for (std::size_t c = 0; c < rows; ++c) {
      const std::string epath = rpath + "[" + std::to_string(c) + "]";
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2) fail(epath, "expected [re, im]");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(finite_number(e[0], epath + "[0]"),
                  finite_number(e[1], epath + "[1]"));
    }
  }
  return m;
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    // Includes number overflow, which the parser reports as out_of_range.
    fail("$", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

QuantumColoringCert read_certificate(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) fail("$", "expected an object");
  const std::size_t n = positive_int(doc, "n");
  const std::size_t c = positive_int(doc, "c");
  const std::size_t d = positive_int(doc, "d");
  if (!doc.contains("projectors")) fail("$.projectors", "missing field");
  const json& outer = doc.at("projectors");
  if (!outer.is_array()) fail("$.projectors", "expected an array");
  if (outer.size() != n) {
    fail("$.projectors", "expected " + std::to_string(n) +
                             " vertex entries, got " +
                             std::to_string(outer.size()));
  }
  std::vector<CMatrix> ps;
  ps.reserve(n * c);
  for (std::size_t v = 0; v < n; ++v) {
    const std::string vpath = "$.projectors[" + std::to_string(v) + "]";
    const json& per_color = outer[v];
    if (!per_color.is_array()) fail(vpath, "expected an array of matrices");
    if (per_color.size() != c) {
      fail(vpath, "expected " + std::to_string(c) + " color matrices, got " +
                      std::to_string(per_color.size()));
    }
    for (std::size_t k = 0; k < c; ++k) {
      ps.push_back(parse_matrix(per_color[k],
                                vpath + "[" + std::to_string(k) + "]", d));
    }
  }
  return QuantumColoringCert(n, c, d, std::move(ps));
}

std::string write_certificate(const QuantumColoringCert& cert) {
  json doc;
  doc["n"] = cert.vertices();
  doc["c"] = cert.colors();
  doc["d"] = cert.dim();
  json outer = json::array();
  for (Vertex v = 0; v < cert.vertices(); ++v) {
    json per_color = json::array();
    for (std::size_t k = 0; k < cert.colors(); ++k) {
      per_color.push_back(matrix_json(cert.p(v, k)));
    }
    outer.push_back(std::move(per_color));
  }
  doc["projectors"] = std::move(outer);
  return doc.dump();
}

CMatrix read_complex_matrix(std::string_view text) {
  return parse_matrix(parse_document(text), "$", 0);
}

std::string write_complex_matrix(const CMatrix& m) {
  return matrix_json(m).dump();
}

bounds::WeightMatrix read_weight_matrix(std::string_view text) {
  return bounds::WeightMatrix(read_complex_matrix(text));
}

}  // namespace qchrom::cert
