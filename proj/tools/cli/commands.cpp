#include "commands.hpp"

#include <cstdlib>
#include <functional>
#include <optional>

#include "opde/appell.hpp"
#include "opde/errors.hpp"
#include "opde/golden.hpp"
#include "opde/monic.hpp"
#include "opde/relations.hpp"
#include "opde/rodrigues.hpp"

namespace opde::cli {

namespace {

struct Context {
  HypergeometricPDE pde;
  std::optional<AppellParams> appell;
  std::optional<WeightSpec> weight;
};

Rational parse_param(const std::string& name, const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw ParseError("--" + name + " is not a rational: " + s);
  }
}

Context resolve(const CliConfig& cfg) {
  Context ctx;
  if (!cfg.pde_source.empty()) {
    ctx.pde = pde_from_json(parse_text(read_source(cfg.pde_source)));
    ctx.appell = appell_params_of(ctx.pde);
  } else {
    AppellParams p{parse_param("alpha", cfg.alpha), parse_param("beta", cfg.beta)};
    if (p.alpha.sign() <= 0 || p.beta.sign() <= 0) {
      throw ParseError("Appell parameters must be positive");
    }
    ctx.pde = appell_pde(p);
    ctx.appell = p;
  }
  if (!cfg.weight_source.empty()) {
    ctx.weight = weight_from_json(parse_text(read_source(cfg.weight_source)));
  } else if (ctx.appell) {
    ctx.weight = appell_weight(*ctx.appell);
  }
  if (cfg.family != "monic" && cfg.family != "appell-F" && cfg.family != "koornwinder") {
    throw ParseError("unknown family " + cfg.family);
  }
  if (cfg.family != "monic" && !ctx.appell) {
    throw ParseError("family " + cfg.family + " needs the Appell equation");
  }
  return ctx;
}

VectorFamily select_family(const CliConfig& cfg, const Context& ctx, const MonicFamily& monic,
                           int top) {
  if (cfg.family == "monic") return monic.family;
  std::vector<PolyVector> vs;
  for (int n = 0; n <= top; ++n) {
    vs.push_back(cfg.family == "appell-F" ? nonmonic_F_vector(*ctx.appell, n)
                                          : koornwinder_vector(*ctx.appell, n));
  }
  return VectorFamily(std::move(vs));
}

Node pde_node(const HypergeometricPDE& pde) {
  Node n = Node::group("pde");
  for (auto name : HypergeometricPDE::kNames) n.add(std::string(name), pde.field(name));
  return n;
}

void require_self_adjoint(const HypergeometricPDE& pde) {
  if (auto k = pde.first_vanishing_varpi()) throw NotAdmissible(*k);
  if (!is_potentially_self_adjoint(pde)) throw NotSelfAdjoint();
}

int cmd_check(const Context& ctx, int N, Node& root) {
  const auto& pde = ctx.pde;
  root.add(pde_node(pde));
  Node varpi = Node::array("varpi");
  for (int k = 0; k <= 2 * N; ++k) varpi.add("", pde.varpi(k));
  root.add(varpi);
  const auto vanish = pde.first_vanishing_varpi();
  root.add("admissible", !vanish.has_value());
  if (vanish) {
    root.add("first_vanishing_k", *vanish);
  }
  bool sa = false;
  try {
    sa = is_potentially_self_adjoint(pde);
  } catch (const DegenerateDiscriminant&) {
    root.add("note", "discriminant vanishes identically");
  }
  root.add("self_adjoint", sa);
  root.add("discriminant", pde.discriminant());
  Node eig = Node::array("eigenvalues");
  for (int n = 0; n <= N; ++n) eig.add("", pde.eigenvalue(n));
  root.add(eig);
  if (vanish) return kNotAdmissible;
  return sa ? kOk : kNotSelfAdjoint;
}

int cmd_classify(const Context& ctx, Node& root) {
  root.add(pde_node(ctx.pde));
  root.add("discriminant", ctx.pde.discriminant());
  Node cases = Node::array("cases");
  for (const auto& c : classify_phi(ctx.pde)) {
    Node n;
    n.add("id", c.id).add("phi10", c.phi10).add("phi01", c.phi01).add("verified", c.verified);
    if (!c.note.empty()) n.add("note", c.note);
    cases.add(n);
  }
  root.add(cases);
  const PhiCase sel = select_phi(ctx.pde);
  root.add("selected", sel.id);
  if (ctx.weight) {
    Node pearson = Node::array("pearson");
    bool all = true;
    for (int r = 0; r <= 3; ++r) {
      for (int s = 0; s <= 3; ++s) {
        const bool ok = verify_pearson(ctx.pde, *ctx.weight, sel, r, s);
        all = all && ok;
        Node n;
        n.add("r", r).add("s", s).add("holds", ok);
        pearson.add(n);
      }
    }
    root.add(pearson);
    root.add("pearson_all", all);
  }
  return kOk;
}

Node degree_node(const VectorFamily& fam, const std::optional<PhiCase>& phi, int n) {
  Node d;
  d.add("n", n);
  const TtrrSet t = general_ttrr(fam, n);
  d.add("A1", t.A[0]).add("A2", t.A[1]).add("B1", t.B[0]).add("B2", t.B[1]);
  if (n >= 1) d.add("C1", t.C[0]).add("C2", t.C[1]);
  if (n >= 1 && phi) {
    const StructureSet st = structure_matrices(fam, *phi, n);
    d.add("W1", st.W[0]).add("W2", st.W[1]).add("S1", st.S[0]).add("S2", st.S[1]);
    d.add("T1", st.T[0]).add("T2", st.T[1]);
  }
  if (n >= 2) {
    const DerivRepSet dr = derivative_representation(fam, n);
    d.add("V1", dr.V[0]).add("V2", dr.V[1]).add("Y1", dr.Y[0]).add("Y2", dr.Y[1]);
    d.add("Z1", dr.Z[0]).add("Z2", dr.Z[1]);
  }
  return d;
}

int cmd_build(const CliConfig& cfg, const Context& ctx, int N, Node& root) {
  require_self_adjoint(ctx.pde);
  const MonicFamily monic = build_monic(ctx.pde, N + 1);
  const VectorFamily fam = select_family(cfg, ctx, monic, N + 1);
  std::optional<PhiCase> phi;
  try {
    phi = select_phi(ctx.pde);
  } catch (const Error& e) {
    root.add("structure_note", std::string("structure relations skipped: ") + e.what());
  }
  root.add(pde_node(ctx.pde));
  root.add("family", cfg.family);
  root.add("N", N);
  Node vectors = Node::array("vectors");
  for (int n = 0; n <= N; ++n) vectors.add("P" + std::to_string(n), fam[n]);
  root.add(vectors);
  Node degrees = Node::array("degrees");
  for (int n = 0; n <= N; ++n) degrees.add(degree_node(fam, phi, n));
  root.add(degrees);
  return kOk;
}

int cmd_rodrigues(const Context& ctx, int N, Node& root) {
  require_self_adjoint(ctx.pde);
  if (!ctx.weight) throw ParseError("rodrigues needs --weight or the Appell equation");
  const PhiCase phi = select_phi(ctx.pde);
  const MonicFamily monic = build_monic(ctx.pde, N);
  root.add(pde_node(ctx.pde));
  root.add("weight_case", phi.id);
  Node degrees = Node::array("degrees");
  for (int n = 0; n <= N; ++n) {
    const PolyVector R = rodrigues_vector(*ctx.weight, phi, n);
    const RationalMatrix M = solve_connection(R, monic[n]);
    Node d;
    d.add("n", n).add("vector", R).add("connection", M);
    if (ctx.appell) {
      RationalMatrix scale(n + 1, n + 1);
      for (int l = 0; l <= n; ++l) {
        scale(l, l) = pochhammer(ctx.appell->alpha, n - l) * pochhammer(ctx.appell->beta, l);
      }
      d.add("matches_connection_F", M == scale * connection_F(*ctx.appell, n));
    }
    degrees.add(d);
  }
  root.add(degrees);
  return kOk;
}

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::function<std::string()>& where) {
    ++checks_;
    if (!ok) {
      if (failures_ == 0) first_ = where();
      ++failures_;
    }
  }
  void residual(const PolyVector& r, const std::string& what) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      check(r[i].is_zero(), [&] { return what + ", entry " + std::to_string(i); });
    }
  }
  void equal(const RationalMatrix& a, const RationalMatrix& b, const std::string& what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      check(false, [&] { return what + ", shape differs"; });
      return;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        check(a(r, c) == b(r, c), [&] {
          return what + ", entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
        });
      }
    }
  }
  void skip(const std::string& why) { skipped_ = why; }

  const std::string& name() const { return name_; }
  long failures() const { return failures_; }
  const std::string& first_failure() const { return first_; }

  Node node() const {
    Node n;
    n.add("suite", name_).add("checks", checks_).add("failures", failures_);
    n.add("status", failures_ == 0 ? "pass" : "fail");
    if (!first_.empty()) n.add("first_failure", first_);
    if (!skipped_.empty()) n.add("skipped", skipped_);
    return n;
  }

 private:
  std::string name_;
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
  std::string skipped_;
};

struct Fault {
  std::string suite;
  int n = -1;
  int axis = 0;
};

std::optional<Fault> parse_fault(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto a = s.find(':');
  const auto b = s.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw ParseError("--inject-fault expects <suite>:<n>:<axis>");
  }
  Fault f;
  f.suite = s.substr(0, a);
  try {
    f.n = std::stoi(s.substr(a + 1, b - a - 1));
    f.axis = std::stoi(s.substr(b + 1));
  } catch (const std::exception&) {
    throw ParseError("--inject-fault expects integer degree and axis");
  }
  if (f.axis != 1 && f.axis != 2) throw ParseError("--inject-fault axis must be 1 or 2");
  return f;
}

bool hits(const std::optional<Fault>& f, const std::string& suite, int n, Axis ax) {
  return f && f->suite == suite && f->n == n && f->axis == static_cast<int>(slot(ax)) + 1;
}

void corrupt(RationalMatrix& m) {
  if (m.rows() > 0 && m.cols() > 0) m(0, 0) += Rational(1);
}

std::string at(const std::string& what, int n, Axis ax) {
  return what + ": n=" + std::to_string(n) + ", axis=" + std::to_string(slot(ax) + 1);
}

RationalMatrix pick(const TtrrSet& t, const StructureSet& st, const DerivRepSet& d, char kind,
                    std::size_t s) {
  switch (kind) {
    case 'B': return t.B[s];
    case 'C': return t.C[s];
    case 'W': return st.W[s];
    case 'S': return st.S[s];
    case 'T': return st.T[s];
    case 'V': return d.V[s];
    case 'Y': return d.Y[s];
    default: return d.Z[s];
  }
}

int cmd_verify(const CliConfig& cfg, const Context& ctx, int N, Node& root, std::ostream& err) {
  const auto fault = parse_fault(cfg.inject_fault);
  require_self_adjoint(ctx.pde);
  const MonicFamily monic = build_monic(ctx.pde, N + 1);
  const VectorFamily fam = select_family(cfg, ctx, monic, N + 1);
  const bool is_monic = cfg.family == "monic";
  std::vector<Suite> suites;

  Suite eig("eigen-residual");
  for (int n = 0; n <= N; ++n) {
    for (std::size_t i = 0; i < fam[n].size(); ++i) {
      eig.check(pde_residual(ctx.pde, n, fam[n][i]).is_zero(), [&] {
        return "eigen residual: n=" + std::to_string(n) + ", entry " + std::to_string(i);
      });
    }
  }
  suites.push_back(eig);

  if (is_monic) {
    Suite ex("expansion-closed-form");
    for (int n = 1; n <= N; ++n) {
      const auto [g1, g2] = subleading_matrices(ctx.pde, n);
      ex.equal(g1, fam.G(n, n - 1), "G_{n,n-1}: n=" + std::to_string(n));
      if (g2) ex.equal(*g2, fam.G(n, n - 2), "G_{n,n-2}: n=" + std::to_string(n));
    }
    suites.push_back(ex);
  }

  Suite tt("ttrr");
  for (int n = 0; n <= N; ++n) {
    TtrrSet t = general_ttrr(fam, n);
    for (Axis ax : kAxes) {
      if (hits(fault, "ttrr", n, ax)) corrupt(t.B[slot(ax)]);
      tt.residual(ttrr_residual(fam, t, ax), at("TTRR identity", n, ax));
    }
  }
  suites.push_back(tt);

  if (is_monic) {
    Suite tc("ttrr-closed-form");
    for (int n = 0; n <= N; ++n) {
      const TtrrSet c = monic_ttrr(ctx.pde, n);
      const TtrrSet g = general_ttrr(fam, n);
      for (Axis ax : kAxes) {
        const std::size_t s = slot(ax);
        tc.equal(c.A[s], g.A[s], at("A closed form", n, ax));
        tc.equal(c.B[s], g.B[s], at("B closed form", n, ax));
        tc.equal(c.C[s], g.C[s], at("C closed form", n, ax));
      }
    }
    suites.push_back(tc);
  }

  Suite qt("q-ttrr");
  for (Axis ax : kAxes) {
    const VectorFamily q = derivative_family(fam, ax);
    for (int n = 0; n + 1 <= q.max_degree(); ++n) {
      qt.residual(ttrr_residual(q, derivative_ttrr(fam, n), ax), at("Q-family TTRR identity", n, ax));
    }
  }
  suites.push_back(qt);

  std::optional<PhiCase> phi;
  Suite wt("weight");
  try {
    phi = select_phi(ctx.pde);
    wt.check(phi->verified, [] { return std::string("selected weight case is not verified"); });
    if (ctx.weight) {
      for (int r = 0; r <= 3; ++r) {
        for (int s = 0; s <= 3; ++s) {
          wt.check(verify_pearson(ctx.pde, *ctx.weight, *phi, r, s), [&] {
            return "Pearson equation: r=" + std::to_string(r) + ", s=" + std::to_string(s);
          });
        }
      }
    }
  } catch (const Error& e) {
    wt.skip(e.what());
  }
  suites.push_back(wt);

  Suite sr("structure");
  if (phi) {
    for (int n = 1; n <= N; ++n) {
      StructureSet st = structure_matrices(fam, *phi, n);
      for (Axis ax : kAxes) {
        if (hits(fault, "structure", n, ax)) corrupt(st.S[slot(ax)]);
        sr.residual(structure_residual(fam, st, *phi, ax), at("structure identity", n, ax));
      }
    }
  } else {
    sr.skip("no weight-factor case");
  }
  suites.push_back(sr);

  Suite dr("derivative-representation");
  for (int n = 0; n <= N; ++n) {
    DerivRepSet d = derivative_representation(fam, n);
    for (Axis ax : kAxes) {
      if (hits(fault, "derivative-representation", n, ax)) corrupt(d.V[slot(ax)]);
      dr.residual(derivrep_residual(fam, d, ax), at("derivative representation", n, ax));
    }
  }
  suites.push_back(dr);

  if (is_monic) {
    Suite co("corollary-routes");
    const ExpansionFn closed = monic_closed_expansions(ctx.pde);
    for (int n = 0; n <= N; ++n) {
      std::optional<TtrrSet> qc, qf;
      if (n + 2 <= fam.max_degree()) {
        qc = derivative_ttrr(closed, n);
        qf = derivative_ttrr(fam, n);
      }
      const DerivRepSet dc = derivative_representation(closed, n);
      const DerivRepSet df = derivative_representation(fam, n);
      std::optional<StructureSet> sc, sf;
      if (n >= 1 && phi) {
        sc = structure_matrices(closed, *phi, n);
        sf = structure_matrices(fam, *phi, n);
      }
      for (Axis ax : kAxes) {
        const std::size_t s = slot(ax);
        if (qc) {
          co.equal(qc->B[s], qf->B[s], at("Q-family B", n, ax));
          co.equal(qc->C[s], qf->C[s], at("Q-family C", n, ax));
        }
        co.equal(dc.V[s], df.V[s], at("V", n, ax));
        co.equal(dc.Y[s], df.Y[s], at("Y", n, ax));
        co.equal(dc.Z[s], df.Z[s], at("Z", n, ax));
        if (sc) {
          co.equal(sc->W[s], sf->W[s], at("W", n, ax));
          co.equal(sc->S[s], sf->S[s], at("S", n, ax));
          co.equal(sc->T[s], sf->T[s], at("T", n, ax));
        }
      }
    }
    suites.push_back(co);
  }

  if (ctx.appell) {
    const AppellParams& p = *ctx.appell;
    const VectorFamily& mf = monic.family;

    Suite gd("golden");
    std::optional<PhiCase> aphi = phi;
    for (int n = 0; n <= N; ++n) {
      const TtrrSet t = general_ttrr(mf, n);
      const StructureSet st = n >= 1 ? structure_matrices(mf, *aphi, n) : StructureSet{};
      const DerivRepSet d = derivative_representation(mf, n);
      for (GoldenKind k : kGoldenKinds) {
        if (n < golden_min_degree(k)) continue;
        const std::string name(golden_name(k));
        const std::size_t s = name[1] == '1' ? 0 : 1;
        gd.equal(golden_matrix(p, n, k), pick(t, st, d, name[0], s),
                 name + " printed form: n=" + std::to_string(n));
      }
    }
    suites.push_back(gd);

    Suite se("series-route");
    for (int n = 0; n <= N; ++n) {
      const PolyVector a = monic_appell_vector(p, n);
      for (std::size_t i = 0; i < a.size(); ++i) {
        se.check(a[i] == mf[n][i], [&] {
          return "series route: n=" + std::to_string(n) + ", entry " + std::to_string(i);
        });
      }
    }
    suites.push_back(se);

    Suite og("orthogonality");
    for (int n = 0; n <= N; ++n) {
      for (int m = 0; m < n; ++m) {
        const RationalMatrix b = orthogonality_blocks(p, mf[n], m);
        og.check(b.is_zero(), [&] {
          return "orthogonality block nonzero: n=" + std::to_string(n) + ", m=" + std::to_string(m);
        });
      }
      og.check(!orthogonality_blocks(p, mf[n], n).determinant().is_zero(),
               [&] { return "H_n singular: n=" + std::to_string(n); });
    }
    const int bi_top = std::min(N, 4);
    for (int d1 = 0; d1 <= bi_top; ++d1) {
      const PolyVector F = nonmonic_F_vector(p, d1);
      for (int d2 = 0; d2 <= bi_top; ++d2) {
        for (int i = 0; i <= d1; ++i) {
          for (int j = 0; j <= d2; ++j) {
            const bool diag = d1 == d2 && i == j;
            const Rational v = apply_functional(p, F[i] * mf[d2][j]);
            og.check(diag ? !v.is_zero() : v.is_zero(), [&] {
              return "biorthogonality: F_{" + std::to_string(d1 - i) + "," + std::to_string(i) +
                     "} against A_{" + std::to_string(d2 - j) + "," + std::to_string(j) + "}";
            });
          }
        }
      }
    }
    suites.push_back(og);

    Suite cn("connections");
    for (int n = 0; n <= N; ++n) {
      const PolyVector Fc = connection_F(p, n) * mf[n];
      const PolyVector Fr = nonmonic_F_vector(p, n);
      const PolyVector Kc = connection_K(p, n) * mf[n];
      const PolyVector Kj = koornwinder_vector(p, n);
      for (int i = 0; i <= n; ++i) {
        cn.check(Fc[i] == Fr[i], [&] {
          return "F connection: n=" + std::to_string(n) + ", entry " + std::to_string(i);
        });
        cn.check(Kc[i] == Kj[i], [&] {
          return "K connection: n=" + std::to_string(n) + ", entry " + std::to_string(i);
        });
      }
    }
    suites.push_back(cn);
  }

  Suite ro("rodrigues");
  if (ctx.weight && phi) {
    for (int n = 0; n <= N; ++n) {
      bool ok = true;
      try {
        const RationalMatrix M = solve_connection(rodrigues_vector(*ctx.weight, *phi, n), monic[n]);
        ok = !M.determinant().is_zero();
      } catch (const Error&) {
        ok = false;
      }
      ro.check(ok, [&] { return "Rodrigues vector not a basis of degree " + std::to_string(n); });
    }
  } else {
    ro.skip("no weight supplied");
  }
  suites.push_back(ro);

  Node list = Node::array("suites");
  const Suite* first_bad = nullptr;
  for (const auto& s : suites) {
    list.add(s.node());
    if (!first_bad && s.failures() > 0) first_bad = &s;
  }
  root.add(pde_node(ctx.pde));
  root.add("family", cfg.family);
  root.add("N", N);
  root.add(list);
  root.add("passed", first_bad == nullptr);
  if (first_bad) {
    err << "verification failed in " << first_bad->name() << ": " << first_bad->first_failure()
        << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

void render_verify_pretty(std::ostream& os, const Node& root) {
  for (const auto& c : root.children) {
    if (c.key != "suites") continue;
    for (const auto& s : c.children) {
      const auto get = [&](const std::string& k) -> const Node::Value& {
        for (const auto& f : s.children) {
          if (f.key == k) return f.value;
        }
        static const Node::Value none;
        return none;
      };
      os << std::get<std::string>(get("suite")) << ": " << std::get<long>(get("checks"))
         << " checks, " << std::get<long>(get("failures")) << " failures, "
         << std::get<std::string>(get("status"));
      if (const auto* sk = std::get_if<std::string>(&get("skipped"))) os << " (skipped: " << *sk << ")";
      os << "\n";
    }
  }
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  if (s == "pretty") return Format::pretty;
  throw ParseError("unknown format " + s);
}

int effective_degree(int N, std::ostream& err) {
  if (const char* cap = std::getenv("OPDE_MAX_DEGREE")) {
    try {
      const int c = std::stoi(cap);
      if (c >= 0 && N > c) {
        err << "degree " << N << " capped to " << c << " by OPDE_MAX_DEGREE\n";
        return c;
      }
    } catch (const std::exception&) {
      err << "ignoring malformed OPDE_MAX_DEGREE\n";
    }
  }
  return N;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.N < 0) throw ParseError("N must be nonnegative");
    const int N = effective_degree(cfg.N, err);
    const Context ctx = resolve(cfg);
    Node root;
    int code = kOk;
    if (cfg.command == "check") {
      code = cmd_check(ctx, N, root);
    } else if (cfg.command == "classify") {
      code = cmd_classify(ctx, root);
    } else if (cfg.command == "build") {
      code = cmd_build(cfg, ctx, N, root);
    } else if (cfg.command == "rodrigues") {
      code = cmd_rodrigues(ctx, N, root);
    } else if (cfg.command == "verify") {
      code = cmd_verify(cfg, ctx, N, root, err);
    } else {
      throw ParseError("unknown command " + cfg.command);
    }
    if (cfg.command == "verify" && cfg.format == Format::pretty) {
      render_verify_pretty(out, root);
    } else {
      render(out, root, cfg.format);
    }
    if (code == kNotAdmissible) {
      err << "not admissible: varpi_k = a*k + e vanishes at k = " << *ctx.pde.first_vanishing_varpi()
          << "\n";
    } else if (code == kNotSelfAdjoint) {
      err << "not potentially self-adjoint\n";
    }
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const NotAdmissible& e) {
    err << "error: " << e.what() << "\n";
    return kNotAdmissible;
  } catch (const NotSelfAdjoint& e) {
    err << "error: " << e.what() << "\n";
    return kNotSelfAdjoint;
  } catch (const DegenerateDiscriminant& e) {
    err << "error: " << e.what() << "\n";
    return kWeightError;
  } catch (const NoCaseMatches& e) {
    err << "error: " << e.what() << "\n";
    return kWeightError;
  } catch (const NonPolynomialPhi& e) {
    err << "error: " << e.what() << "\n";
    return kWeightError;
  } catch (const NotReducible& e) {
    err << "error: " << e.what() << "\n";
    return kRodriguesError;
  } catch (const DegreeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kRodriguesError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kLibraryError;
  }
}

}  // namespace opde::cli
