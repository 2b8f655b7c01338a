#include "json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <tuple>

namespace opde::cli {

json to_json(const Rational& r) { return r.str(); }

json to_json(const BivariatePoly& p) {
  std::vector<std::tuple<int, int, Rational>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m.x, m.y, c);
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const int dl = std::get<0>(l) + std::get<1>(l);
    const int dr = std::get<0>(r) + std::get<1>(r);
    if (dl != dr) return dl > dr;
    return std::get<1>(l) < std::get<1>(r);
  });
  json out = json::array();
  for (const auto& [i, j, c] : terms) out.push_back(json::array({i, j, c.str()}));
  return out;
}

json to_json(const PolyVector& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(to_json(p));
  return out;
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

json to_json(const HypergeometricPDE& pde) {
  json out = json::object();
  for (auto name : HypergeometricPDE::kNames) out[std::string(name)] = pde.field(name).str();
  return out;
}

json to_json(const WeightSpec& w) {
  json factors = json::array();
  for (const auto& [q, k] : w.factors) factors.push_back(json::array({to_json(q), k.str()}));
  return json{{"u", w.u.str()}, {"v", w.v.str()}, {"factors", factors}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not a rational: \"" + j.get<std::string>() + "\"");
    }
  }
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

BivariatePoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a list of [i, j, c] triples");
  BivariatePoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || t[0].get<int>() < 0 || t[1].get<int>() < 0) {
      throw ParseError("bad polynomial term " + t.dump());
    }
    p.add_term(t[0].get<int>(), t[1].get<int>(), rational_from_json(t[2]));
  }
  return p;
}

PolyVector poly_vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial vector must be a list");
  PolyVector v;
  for (const auto& p : j) v.push_back(poly_from_json(p));
  return v;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a list of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      throw ParseError("matrix rows must have equal length");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

HypergeometricPDE pde_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("equation must be a JSON object of coefficients");
  HypergeometricPDE pde;
  for (const auto& [key, value] : j.items()) {
    const auto& names = HypergeometricPDE::kNames;
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw ParseError("unknown coefficient \"" + key + "\"");
    }
    pde.field(key) = rational_from_json(value);
  }
  return pde;
}

WeightSpec weight_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("weight must be a JSON object");
  WeightSpec w;
  if (j.contains("u")) w.u = rational_from_json(j["u"]);
  if (j.contains("v")) w.v = rational_from_json(j["v"]);
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) throw ParseError("factors must be a list");
    for (const auto& f : j["factors"]) {
      if (!f.is_array() || f.size() != 2) throw ParseError("factor must be [poly, exponent]");
      w.factors.emplace_back(poly_from_json(f[0]), rational_from_json(f[1]));
    }
  }
  return w;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace opde::cli
