#pragma once

#include <string>

#include "json.hpp"
#include "opde/matrix.hpp"
#include "opde/pde.hpp"
#include "opde/polynomial.hpp"
#include "opde/rational.hpp"
#include "opde/weight.hpp"

namespace opde::cli {

using json = nlohmann::ordered_json;

/// Malformed or ill-typed input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& r);
json to_json(const BivariatePoly& p);
json to_json(const PolyVector& v);
json to_json(const RationalMatrix& m);
json to_json(const HypergeometricPDE& pde);
json to_json(const WeightSpec& w);

Rational rational_from_json(const json& j);
BivariatePoly poly_from_json(const json& j);
PolyVector poly_vector_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j);
HypergeometricPDE pde_from_json(const json& j);
WeightSpec weight_from_json(const json& j);

/// Parses text, reporting the byte offset of a syntax error.
json parse_text(const std::string& text);

/// Reads a file, or standard input for "-".
std::string read_source(const std::string& path);

}  // namespace opde::cli
