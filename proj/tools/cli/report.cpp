#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace opde::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json leaf_json(const Node::Value& v) {
  return std::visit(overloaded{[](std::monostate) { return json(nullptr); },
                               [](bool b) { return json(b); },
                               [](long l) { return json(l); },
                               [](const std::string& s) { return json(s); },
                               [](const auto& x) { return to_json(x); }},
                    v);
}

bool is_leaf(const Node& n) { return n.children.empty() && !n.list && n.value.index() != 0; }

std::string monomial_latex(int i, int j) {
  std::string s;
  if (i > 0) s += i == 1 ? "x" : "x^{" + std::to_string(i) + "}";
  if (j > 0) s += (s.empty() ? "" : " ") + std::string(j == 1 ? "y" : "y^{" + std::to_string(j) + "}");
  return s;
}

std::string pretty_matrix(const RationalMatrix& m, const std::string& indent) {
  if (m.rows() == 0 || m.cols() == 0) {
    return "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " empty)";
  }
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], m(r, c).str().size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "\n" << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).str();
      os << (c ? "  " : "") << std::string(width[c] - s.size(), ' ') << s;
    }
    os << "]";
  }
  return os.str();
}

std::string pretty_leaf(const Node::Value& v, const std::string& indent) {
  return std::visit(
      overloaded{[](std::monostate) { return std::string("-"); },
                 [](bool b) { return std::string(b ? "true" : "false"); },
                 [](long l) { return std::to_string(l); },
                 [](const std::string& s) { return s; },
                 [](const Rational& r) { return r.str(); },
                 [](const BivariatePoly& p) { return p.str(); },
                 [&](const PolyVector& pv) {
                   std::string s;
                   for (const auto& p : pv) s += "\n" + indent + "  " + p.str();
                   return s.empty() ? std::string("()") : s;
                 },
                 [&](const RationalMatrix& m) { return pretty_matrix(m, indent + "  "); }},
      v);
}

std::string latex_leaf(const Node::Value& v) {
  return std::visit(
      overloaded{[](std::monostate) { return std::string("-"); },
                 [](bool b) { return std::string(b ? "\\text{true}" : "\\text{false}"); },
                 [](long l) { return std::to_string(l); },
                 [](const std::string& s) { return "\\text{" + s + "}"; },
                 [](const Rational& r) { return latex(r); },
                 [](const BivariatePoly& p) { return latex(p); },
                 [](const PolyVector& pv) {
                   std::string s = "\\begin{pmatrix}";
                   for (std::size_t i = 0; i < pv.size(); ++i) s += (i ? " \\\\ " : " ") + latex(pv[i]);
                   return s + " \\end{pmatrix}";
                 },
                 [](const RationalMatrix& m) { return latex(m); }},
      v);
}

void pretty(std::ostream& os, const Node& n, const std::string& indent) {
  if (is_leaf(n)) {
    os << indent << n.key << ": " << pretty_leaf(n.value, indent) << "\n";
    return;
  }
  if (!n.key.empty()) os << indent << n.key << ":\n";
  const std::string inner = n.key.empty() ? indent : indent + "  ";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    Node c = n.children[i];
    if (n.list && c.key.empty()) c.key = "[" + std::to_string(i) + "]";
    pretty(os, c, inner);
  }
}

void latex_out(std::ostream& os, const Node& n, const std::string& prefix) {
  const std::string label = prefix.empty() ? n.key : (n.key.empty() ? prefix : prefix + "." + n.key);
  if (is_leaf(n)) {
    std::string name;
    for (char ch : label) name += ch == '_' ? std::string("\\_") : std::string(1, ch);
    os << "\\[ \\mathrm{" << name << "} = " << latex_leaf(n.value) << " \\]\n";
    return;
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    Node c = n.children[i];
    if (n.list && c.key.empty()) c.key = std::to_string(i);
    latex_out(os, c, label);
  }
}

}  // namespace

json to_json(const Node& n) {
  if (n.list) {
    json out = json::array();
    for (const auto& c : n.children) out.push_back(to_json(c));
    return out;
  }
  if (n.children.empty()) return leaf_json(n.value);
  json out = json::object();
  for (const auto& c : n.children) out[c.key] = to_json(c);
  return out;
}

std::string latex(const Rational& r) {
  if (r.is_integer()) return r.str();
  const std::string sign = r.sign() < 0 ? "-" : "";
  const Rational a = r.abs();
  return sign + "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

std::string latex(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  const json terms = to_json(p);
  std::string s;
  for (const auto& t : terms) {
    const int i = t[0].get<int>();
    const int j = t[1].get<int>();
    const Rational c = Rational::parse(t[2].get<std::string>());
    const std::string mono = monomial_latex(i, j);
    const Rational a = c.abs();
    std::string coef = (a == Rational(1) && !mono.empty()) ? "" : latex(a);
    if (!coef.empty() && !mono.empty()) coef += " ";
    if (s.empty()) {
      s = (c.sign() < 0 ? "-" : "") + coef + mono;
    } else {
      s += (c.sign() < 0 ? " - " : " + ") + coef + mono;
    }
  }
  return s;
}

std::string latex(const RationalMatrix& m) {
  std::string s = "\\begin{pmatrix}";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? " \\\\ " : " ";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " & " : "") + latex(m(r, c));
  }
  return s + " \\end{pmatrix}";
}

void render(std::ostream& os, const Node& root, Format f) {
  switch (f) {
    case Format::json: os << to_json(root).dump(2) << "\n"; break;
    case Format::pretty: pretty(os, root, ""); break;
    case Format::latex: latex_out(os, root, ""); break;
  }
}

}  // namespace opde::cli
