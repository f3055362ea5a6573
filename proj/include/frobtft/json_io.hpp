#ifndef FROBTFT_JSON_IO_HPP
#define FROBTFT_JSON_IO_HPP

// Fixture parsing helpers.  Scalars appear in fixture files either as a
// rational string "p/q" or as a coefficient vector ["c0","c1",...] in the
// power basis of the ambient conductor.

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobtft/cyclotomic.hpp"
#include "frobtft/matrix.hpp"

namespace frobtft {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

inline Scalar scalar_from_json(const Json& j, long conductor) {
  if (j.is_string()) return Scalar::from_rational(parse_rational(j.get<std::string>()), conductor);
  if (j.is_number_integer()) return Scalar::integer(j.get<long>(), conductor);
  if (j.is_array()) {
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
      if (c.is_string())
        coeffs.push_back(parse_rational(c.get<std::string>()));
      else if (c.is_number_integer())
        coeffs.push_back(Rational(c.get<long>()));
      else
        throw Error("scalar coefficient must be a string or integer");
    }
    return Scalar(conductor, std::move(coeffs));
  }
  throw Error("scalar must be a rational string, integer or coefficient array");
}

inline Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return Json(rational_str(s.rational_part()));
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(rational_str(c));
  return a;
}

inline Matrix matrix_from_json(const Json& j, long conductor) {
  if (!j.is_array()) throw Error("matrix must be an array of rows");
  size_t rows = j.size();
  size_t cols = rows ? j[0].size() : 0;
  Matrix m(rows, cols, conductor);
  for (size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw Error("ragged matrix in fixture");
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(j[r][c], conductor);
  }
  return m;
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

// Directory holding the bundled fixtures; FROBTFT_FIXTURES overrides.
inline std::string fixture_dir() {
  if (const char* env = std::getenv("FROBTFT_FIXTURES")) return env;
#ifdef FROBTFT_FIXTURE_DIR
  return FROBTFT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

inline std::string fixture_path(const std::string& rel) { return fixture_dir() + "/" + rel; }

}  // namespace frobtft

#endif
