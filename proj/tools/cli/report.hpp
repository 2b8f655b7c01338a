#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json_io.hpp"

namespace opde::cli {

enum class Format { json, latex, pretty };

/// Output tree shared by all commands. A node is either a leaf value or a
/// group of children; groups marked as lists serialize to JSON arrays.
struct Node {
  using Value = std::variant<std::monostate, bool, long, std::string, Rational, BivariatePoly,
                             PolyVector, RationalMatrix>;

  std::string key;
  Value value;
  std::vector<Node> children;
  bool list = false;

  static Node group(std::string key) { return Node{std::move(key), {}, {}, false}; }
  static Node array(std::string key) { return Node{std::move(key), {}, {}, true}; }

  template <class T>
  Node& add(std::string k, T v) {
    children.push_back(Node{std::move(k), Value(std::move(v)), {}, false});
    return *this;
  }
  Node& add(std::string k, const char* v) { return add(std::move(k), std::string(v)); }
  Node& add(std::string k, int v) { return add(std::move(k), static_cast<long>(v)); }
  Node& add(Node child) {
    children.push_back(std::move(child));
    return *this;
  }
};

json to_json(const Node& n);
std::string latex(const Rational& r);
std::string latex(const BivariatePoly& p);
std::string latex(const RationalMatrix& m);

void render(std::ostream& os, const Node& root, Format f);

}  // namespace opde::cli
