#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "shiftkit/annihilators.hpp"
#include "shiftkit/cartan.hpp"
#include "shiftkit/generic.hpp"
#include "shiftkit/io.hpp"
#include "shiftkit/report.hpp"
#include "shiftkit/verification.hpp"

namespace shiftkit::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::GenericityFailure:
    case ErrorKind::ShiftMismatch:
      return 3;
    case ErrorKind::VerificationFailure:
    case ErrorKind::ConsistencyFailure:
      return 4;
    default:
      return 1;
  }
}

namespace {

struct Config {
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::optional<std::uint64_t> seed;
  int trials = 2;
  std::optional<int> degree_cap;
  std::optional<int> max_i;
  std::optional<int> max_deg;
  bool machine = false;
};

// Output of one command: text lines and the machine document are both
// built, one of them is printed.
struct Output {
  std::ostringstream text;
  Json doc;
};

struct Input {
  std::optional<SimplicialComplex> complex;
  std::optional<MonomialIdeal> ideal;
};

Input load(const std::string& path) {
  const std::string body = read_text_file(path);
  Input in;
  std::istringstream stream(body);
  if (detect_kind(body, path) == InputKind::Complex) {
    in.complex = parse_complex(stream, path);
  } else {
    in.ideal = parse_ideal(stream, path);
  }
  return in;
}

Json input_json(const Input& in) {
  if (in.complex) return Json{{"complex", complex_json(*in.complex)}};
  return Json{{"ideal", ideal_json(*in.ideal)}};
}

MonomialIdeal exterior_ideal_of(const Input& in, const char* command) {
  if (in.complex) return face_ideal(*in.complex, Ring::Exterior);
  require(in.ideal->ring() == Ring::Exterior, ErrorKind::InvalidArgument,
          std::string(command) + " needs a complex or an exterior ideal");
  return *in.ideal;
}

const SimplicialComplex& complex_of_input(const Input& in, const char* command) {
  require(in.complex.has_value(), ErrorKind::InvalidArgument,
          std::string(command) + " needs a complex file");
  return *in.complex;
}

std::vector<int> parse_order(const std::string& text, int n) {
  std::vector<int> order;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      order.push_back(std::stoi(token));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "bad --order entry \"" + token + "\"");
    }
  }
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(sorted.size()) == n;
  for (int k = 0; ok && k < n; ++k) ok = sorted[static_cast<std::size_t>(k)] == k + 1;
  require(ok, ErrorKind::InvalidArgument, "--order must be a permutation of 1.." + std::to_string(n));
  return order;
}

int default_cap(const MonomialIdeal& ideal, const Config& cfg) {
  if (cfg.degree_cap) return *cfg.degree_cap;
  return ideal.is_zero() ? 1 : ideal.max_degree() + 1;
}

// --- shift -----------------------------------------------------------------

void cmd_shift(const std::string& path, const Config& cfg, const GenericContext& ctx, Output& o) {
  const Input in = load(path);
  o.doc["input"] = input_json(in);
  if (in.complex) {
    const ShiftResult sr = exterior_shift_with_gin(*in.complex, ctx);
    o.doc["shifted"] = complex_json(sr.shifted);
    o.doc["gin"] = ideal_json(sr.gin);
    o.text << "shifted facets: " << render_facets(sr.shifted.facets()) << "\n";
    o.text << "f-vector: " << render_f_vector(f_vector(sr.shifted)) << "\n";
    o.text << "gin: " << sr.gin.render() << "\n";
  } else {
    const int cap = in.ideal->ring() == Ring::Exterior ? 0 : default_cap(*in.ideal, cfg);
    const MonomialIdeal gin = gin_rlex(*in.ideal, ctx, cap);
    o.doc["gin"] = ideal_json(gin);
    if (cap > 0) o.doc["degree_cap"] = cap;
    o.text << "gin: " << gin.render() << "\n";
    if (cap > 0) o.text << "degree cap: " << cap << "\n";
  }
}

// --- invariants ------------------------------------------------------------

void cmd_invariants(const std::string& path, const Config& cfg, const GenericContext& ctx, Output& o) {
  const Input in = load(path);
  const SimplicialComplex& delta = complex_of_input(in, "invariants");
  o.doc["input"] = input_json(in);
  const DepthChainReport rep = verify_depth_chain(delta, ctx);
  const int gap = rep.depth_S - rep.depth_E;
  o.doc["depth_E"] = rep.depth_E;
  o.doc["depth_S"] = rep.depth_S;
  o.doc["reg_S"] = rep.reg_S;
  o.doc["cx_E"] = rep.cx_E;
  o.doc["projdim_S"] = rep.projdim_S;
  o.doc["chain"] = Json{{"depth_gap", gap},
                        {"complexity_gap", rep.cx_E - rep.projdim_S},
                        {"reg_S", rep.reg_S},
                        {"holds", all_passed(rep.checks)},
                        {"cohen_macaulay", rep.cohen_macaulay},
                        {"linear_resolution", rep.linear_resolution}};
  o.text << "depth_E   " << rep.depth_E << "\n"
         << "depth_S   " << rep.depth_S << "\n"
         << "reg_S     " << rep.reg_S << "\n"
         << "cx_E      " << rep.cx_E << "\n"
         << "projdim_S " << rep.projdim_S << "\n";
  o.text << "chain: 0 <= " << gap << " = " << rep.cx_E - rep.projdim_S << " <= " << rep.reg_S
         << (gap == rep.reg_S ? " (equality)" : " (strict)") << "\n";
  o.text << "Cohen-Macaulay: " << (rep.cohen_macaulay ? "yes" : "no")
         << ", linear resolution: " << (rep.linear_resolution ? "yes" : "no") << "\n";

  Json tables = Json::array();
  tables.push_back(betti_json(rep.betti_S, "betti_S_shifted", Ring::SymmetricSquarefree, rep.n));
  o.text << "\nbeta^S of the shifted complex:\n" << render_betti(rep.betti_S);
  if (rep.n <= kMaxKoszulVariables) {
    const BettiTable direct =
        koszul_betti_oracle(face_ideal(delta, Ring::SymmetricSquarefree), ctx.field, rep.n, rep.n);
    const int i_max = cfg.max_i.value_or(4);
    const int j_max = cfg.max_deg.value_or(rep.n);
    BettiTable ext;
    for (int i = 0; i <= i_max; ++i) {
      for (int j = 0; j <= j_max; ++j) ext.set(i, i + j, betti_E_from_betti_S(direct, i, j));
    }
    tables.push_back(betti_json(direct, "betti_S", Ring::SymmetricSquarefree, rep.n));
    tables.push_back(betti_json(ext, "betti_E", Ring::Exterior, rep.n));
    o.text << "\nbeta^S (Koszul):\n" << render_betti(direct);
    o.text << "\nbeta^E (i <= " << i_max << ", j <= " << j_max << "):\n" << render_betti(ext);
  } else {
    o.text << "\nbeta^S and beta^E of the complex itself need n <= " << kMaxKoszulVariables << "\n";
  }
  o.doc["tables"] = tables;
  o.doc["checks"] = checks_json(rep.checks);
}

// --- annihilators ----------------------------------------------------------

void cmd_annihilators(const std::string& path, const std::string& order_text, const Config& cfg,
                      const GenericContext& ctx, Output& o) {
  const Input in = load(path);
  o.doc["input"] = input_json(in);
  AnnihilatorTable table;
  std::vector<Check> checks;
  if (in.ideal && in.ideal->ring() != Ring::Exterior) {
    const MonomialIdeal& ideal = *in.ideal;
    const int cap = default_cap(ideal, cfg);
    if (order_text.empty()) {
      table = alpha_S_generic(ideal, ctx, cap);
      o.doc["sequence"] = "generic";
    } else {
      const auto order = parse_order(order_text, ideal.n());
      table = alpha_S_table(ideal, SequenceSpec::permutation(order), cap, ctx.field);
      o.doc["sequence"] = order;
    }
    o.doc["degree_cap"] = cap;
    o.text << "degree cap: " << cap << " (entries with j < cap)\n";
  } else {
    const MonomialIdeal j = exterior_ideal_of(in, "annihilators");
    if (order_text.empty()) {
      const MonomialIdeal gin = gin_rlex(j, ctx);
      table = alpha_E_generic_with_gin(j, gin, ctx);
      o.doc["sequence"] = "generic";
      checks.push_back({"generic table = standard-monomial count",
                        table == alpha_from_standard_monomials_table(gin), ""});
      if (in.complex) {
        checks.push_back({"generic table = shifted face count",
                          table == alpha_complex_shifted(complex_of(gin)), ""});
      }
      o.doc["depth_E"] = depth_from_alpha(table, j.n());
    } else {
      const auto order = parse_order(order_text, j.n());
      table = alpha_E_table(j, SequenceSpec::permutation(order), ctx.field);
      o.doc["sequence"] = order;
    }
  }
  o.doc["table"] = alpha_json(table);
  o.doc["checks"] = checks_json(checks);
  o.text << "alpha (" << to_string(table.ring()) << ", n = " << table.n() << "):\n" << render_alpha(table);
  if (o.doc.contains("depth_E")) o.text << "depth_E from alpha: " << o.doc["depth_E"].get<int>() << "\n";
  o.text << render_checks(checks);
  require_all(checks);
}

// --- cartan-betti ----------------------------------------------------------

void cmd_cartan(const std::string& path, bool bound, const Config& cfg, const GenericContext& ctx,
                Output& o) {
  const Input in = load(path);
  o.doc["input"] = input_json(in);
  const MonomialIdeal j = exterior_ideal_of(in, "cartan-betti");
  const int i_max = cfg.max_i.value_or(4);
  const int j_max = cfg.max_deg.value_or(j.n());
  const BettiTable generic = betti_E_table(j, ctx, i_max, j_max);
  const BettiTable multi = betti_E_multigraded(j, i_max, j_max, ctx.field);
  std::vector<Check> checks{{"generic sequence = multigraded standard basis", generic == multi, ""}};
  o.doc["window"] = Json{{"max_i", i_max}, {"max_j", j_max}};
  o.doc["table"] = betti_json(generic, "betti_E", Ring::Exterior, j.n());
  o.text << "beta^E (i <= " << i_max << ", j <= " << j_max << "):\n" << render_betti(generic);
  if (bound) {
    const BoundReport rep = cartan_betti_bound_check(j, ctx, i_max, j_max);
    Json entries = Json::array();
    o.text << "\nbound  r  i  j  h  bound\n";
    for (const BoundEntry& e : rep.entries) {
      entries.push_back(Json::array({e.r, e.i, e.j, e.h, e.bound}));
      if (e.h != 0 || e.bound != 0) {
        o.text << "      " << e.r << "  " << e.i << "  " << e.j << "  " << e.h << "  " << e.bound
               << (e.equal ? "" : "  <") << "\n";
      }
    }
    o.text << "equality everywhere: " << (rep.equality_everywhere ? "yes" : "no") << "\n";
    o.doc["bound"] = Json{{"entries", entries}, {"equality_everywhere", rep.equality_everywhere}};
    o.doc["alpha"] = alpha_json(rep.alpha);
  }
  o.doc["checks"] = checks_json(checks);
  o.text << render_checks(checks);
  require_all(checks);
}

// --- betti -----------------------------------------------------------------

void cmd_betti(const std::string& path, const Config& cfg, const GenericContext& ctx, Output& o) {
  const Input in = load(path);
  o.doc["input"] = input_json(in);
  Json tables = Json::array();
  std::vector<Check> checks;
  if (in.complex) {
    const SimplicialComplex& delta = *in.complex;
    const ShiftResult sr = exterior_shift_with_gin(delta, ctx);
    const BettiTable shifted = betti_S_eliahou_kervaire(face_ideal(sr.shifted, Ring::SymmetricSquarefree));
    if (delta.n() <= kMaxKoszulVariables) {
      const BettiTable direct = koszul_betti_oracle(face_ideal(delta, Ring::SymmetricSquarefree),
                                                    ctx.field, delta.n(), delta.n());
      tables.push_back(betti_json(direct, "betti_S", Ring::SymmetricSquarefree, delta.n()));
      o.text << "beta^S (Koszul):\n" << render_betti(direct);
      checks.push_back({"projdim and regularity survive shifting",
                        direct.projdim() == shifted.projdim() && direct.regularity() == shifted.regularity(),
                        ""});
    }
    tables.push_back(betti_json(shifted, "betti_S_shifted", Ring::SymmetricSquarefree, delta.n()));
    o.text << "beta^S of the shifted complex (Eliahou-Kervaire):\n" << render_betti(shifted);
  } else {
    const MonomialIdeal& ideal = *in.ideal;
    require(ideal.ring() != Ring::Exterior, ErrorKind::InvalidArgument,
            "betti takes a complex or an S ideal; use cartan-betti for E");
    int lcm_degree = 0;
    {
      Exponents lcm(static_cast<std::size_t>(ideal.n()), 0);
      for (const auto& g : ideal.exponents()) {
        for (std::size_t k = 0; k < lcm.size(); ++k) lcm[k] = std::max(lcm[k], g[k]);
      }
      lcm_degree = total_degree(lcm);
    }
    const int i_max = cfg.max_i.value_or(ideal.n());
    const int d_max = cfg.max_deg.value_or(lcm_degree);
    const BettiTable direct = koszul_betti_oracle(ideal, ctx.field, i_max, d_max);
    tables.push_back(betti_json(direct, "betti_S", ideal.ring(), ideal.n()));
    o.text << "beta^S (Koszul, i <= " << i_max << ", degree <= " << d_max << "):\n" << render_betti(direct);
    if (ideal.squarefree() && stability_flags(ideal).squarefree_stable) {
      const BettiTable ek = betti_S_eliahou_kervaire(ideal);
      BettiTable window;
      for (const auto& [key, v] : ek.entries()) {
        if (key.first <= i_max && key.second <= d_max) window.set(key.first, key.second, v);
      }
      checks.push_back({"Eliahou-Kervaire = Koszul", window == direct, ""});
    }
  }
  o.doc["tables"] = tables;
  o.doc["checks"] = checks_json(checks);
  o.text << render_checks(checks);
  require_all(checks);
}

// --- counterexample --------------------------------------------------------

void cmd_counterexample(const std::string& ring, int n, int i, int j, const GenericContext& ctx,
                        Output& o) {
  require(ring == "E" || ring == "S", ErrorKind::InvalidArgument, "--ring must be E or S");
  const CounterexampleReport rep = ring == "E" ? counterexample_E(n, i, j, ctx) : counterexample_S(n, i, j, ctx);
  o.doc["ring"] = ring;
  o.doc["n"] = n;
  o.doc["i"] = i;
  o.doc["j"] = j;
  o.doc["ideal"] = ideal_json(rep.ideal);
  o.doc["gin_fixed"] = rep.gin_fixed;
  o.doc["generic"] = Json{{"alpha_i_j", rep.generic_i}, {"alpha_prev_j", rep.generic_prev}};
  o.doc["swapped"] = Json{{"alpha_i_j", rep.swapped_i}, {"alpha_prev_j", rep.swapped_prev}};
  o.doc["swapped_order"] = swapped_order(n, i);
  o.doc["strict"] = Json{{"row_i", rep.generic_i > rep.swapped_i}, {"row_prev", rep.generic_prev < rep.swapped_prev}};
  o.text << "ideal: " << rep.ideal.render() << (rep.gin_fixed ? " (equal to its gin)" : "") << "\n";
  o.text << "alpha_{" << i << "," << j << "}: generic " << rep.generic_i << " > swapped " << rep.swapped_i << "\n";
  o.text << "alpha_{" << i - 1 << "," << j << "}: generic " << rep.generic_prev << " < swapped "
         << rep.swapped_prev << "\n";
  require(rep.generic_prev < rep.swapped_prev, ErrorKind::VerificationFailure,
          "swapped sequence does not raise alpha_{i-1,j}");
}

// --- str-complex -----------------------------------------------------------

void cmd_str(int s, int t, int r, const std::string& output, const GenericContext& ctx, Output& o) {
  const StrComplexReport rep = str_complex(s, t, r, ctx);
  o.doc["s"] = s;
  o.doc["t"] = t;
  o.doc["r"] = r;
  o.doc["complex"] = complex_json(rep.delta);
  Json nonfaces = Json::array();
  for (Mask m : rep.nonfaces) nonfaces.push_back(vertices(m));
  o.doc["nonfaces"] = nonfaces;
  o.doc["formula"] = Json{{"depth_E", rep.depth_E_formula}, {"depth_S", rep.depth_S_formula}, {"reg_S", rep.reg_S_formula}};
  o.doc["shifting"] = Json{{"depth_E", rep.depth_E_generic}, {"depth_S", rep.depth_S_generic}, {"reg_S", rep.reg_S_generic}};
  o.doc["checks"] = checks_json(rep.checks);
  o.text << "n = " << rep.n << "\n";
  o.text << "minimal non-faces: " << render_facets(rep.nonfaces) << "\n";
  o.text << "facets: " << render_facets(rep.delta.facets()) << "\n";
  o.text << "           depth_E depth_S reg_S\n";
  o.text << "formula    " << rep.depth_E_formula << "       " << rep.depth_S_formula << "       " << rep.reg_S_formula << "\n";
  o.text << "shifting   " << rep.depth_E_generic << "       " << rep.depth_S_generic << "       " << rep.reg_S_generic << "\n";
  o.text << render_checks(rep.checks);
  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    require(static_cast<bool>(file), ErrorKind::InvalidArgument, "cannot write " + output);
    file << "# (s, t, r) = (" << s << ", " << t << ", " << r << ")\n" << write_complex(rep.delta);
  }
  require_all(rep.checks);
}

// --- verify ----------------------------------------------------------------

class Suite {
 public:
  explicit Suite(const GenericContext& ctx) : ctx_(ctx) {}

  // Runs body; an exception becomes a failed check under `name`.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      add({name, false, std::string(to_string(e.kind())) + ": " + e.what()});
    }
  }
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add_all(const std::string& prefix, const std::vector<Check>& cs) {
    for (const Check& c : cs) add({prefix + ": " + c.name, c.passed, c.detail});
  }
  void table(Json t) { tables_.push_back(std::move(t)); }

  void complex(const std::string& label, const SimplicialComplex& delta) {
    guard(label + ": depth chain", [&] {
      const DepthChainReport rep = depth_chain(delta, ctx_);
      add_all(label, rep.checks);
      Json t = complex_json(rep.shifted);
      t["kind"] = "shifted";
      t["label"] = label;
      table(t);
      Json a = alpha_json(rep.alpha);
      a["label"] = label;
      table(a);
      add({label + ": annihilators = shifted face count", rep.alpha == alpha_complex_shifted(rep.shifted), ""});
      add({label + ": annihilators = standard-monomial count",
           rep.alpha == alpha_from_standard_monomials_table(rep.gin), ""});
    });
    guard(label + ": Betti numbers from annihilators", [&] {
      const BettiTable b = betti_S_from_alpha(delta, ctx_);
      Json t = betti_json(b, "betti_S_shifted", Ring::SymmetricSquarefree, delta.n());
      t["label"] = label;
      table(t);
      add({label + ": Betti numbers from annihilators = Eliahou-Kervaire", true, ""});
    });
    if (delta.n() <= 5) exterior_ideal(label, face_ideal(delta, Ring::Exterior));
  }

  void exterior_ideal(const std::string& label, const MonomialIdeal& j) {
    if (j.n() < 1) return;
    guard(label + ": Cartan-Betti bound", [&] {
      const int window = std::min(3, j.n());
      const BoundReport rep = cartan_betti_bound_check(j, ctx_, window, window);
      add({label + ": Cartan-Betti bound holds", true,
           std::to_string(rep.entries.size()) + " entries"});
    });
    guard(label + ": permutation invariance", [&] {
      const PermutationReport rep = permutation_invariance_check(j, ctx_);
      add({label + ": annihilators independent of sequence order", true,
           std::to_string(rep.permutations) + " orders"});
    });
    guard(label + ": transfer of Betti numbers", [&] {
      if (j.n() > kMaxKoszulVariables) return;
      const MonomialIdeal i = j.as_ring(Ring::SymmetricSquarefree);
      const BettiTable bs = koszul_betti_oracle(i, ctx_.field, j.n(), j.n());
      const int i_max = std::min(3, j.n());
      const BettiTable be = betti_E_multigraded(j, i_max, j.n(), ctx_.field);
      bool ok = true;
      for (int a = 0; a <= i_max; ++a) {
        for (int b = 0; b <= j.n(); ++b) ok = ok && be.strand(a, b) == betti_E_from_betti_S(bs, a, b);
      }
      add({label + ": beta^E = binomial transform of beta^S", ok, ""});
      Json t = betti_json(be, "betti_E", Ring::Exterior, j.n());
      t["label"] = label;
      table(t);
    });
  }

  void symmetric_ideal(const std::string& label, const MonomialIdeal& ideal) {
    guard(label + ": symmetric checks", [&] {
      if (ideal.squarefree() && stability_flags(ideal).squarefree_stable && ideal.n() <= kMaxKoszulVariables) {
        const BettiTable ek = betti_S_eliahou_kervaire(ideal);
        const BettiTable kz = koszul_betti_oracle(ideal, ctx_.field, ideal.n(), ideal.n());
        add({label + ": Eliahou-Kervaire = Koszul", ek == kz, ""});
      }
      const AnnihilatorTable a = alpha_S_generic(ideal, ctx_);
      add({label + ": last annihilator row is beta_0", a.at(ideal.n() + 1, 0) == 1, ""});
      Json t = alpha_json(a);
      t["label"] = label;
      table(t);
    });
  }

  void builtin() {
    const SimplicialComplex not_cm = closure_from_faces(4, {mask_of({1, 2, 3}), mask_of({1, 4}), mask_of({2, 4})});
    guard("two triangles: invariants", [&] {
      const DepthChainReport rep = depth_chain(not_cm, ctx_);
      add({"two triangles: (depth_S, reg_S, depth_E, cx_E) = (2, 2, 0, 4)",
           rep.depth_S == 2 && rep.reg_S == 2 && rep.depth_E == 0 && rep.cx_E == 4, ""});
      add({"two triangles: gin = (e3e4, e1e2e4)", rep.gin.render() == "(e3e4, e1e2e4)", rep.gin.render()});
    });
    complex("two triangles", not_cm);
    complex("full simplex", full_simplex(3));
    complex("hollow triangle", closure_from_faces(3, {mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3})}));
    complex("path", closure_from_faces(3, {mask_of({1, 3}), mask_of({2, 3})}));
    complex("two points", closure_from_faces(2, {mask_of({1}), mask_of({2})}));

    for (int r = 1; r <= 3; ++r) {
      for (int t = 0; t <= 2; ++t) {
        for (int s = t + 1; s <= t + r; ++s) {
          const std::string label =
              "(s,t,r)=(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(r) + ")";
          guard(label, [&] {
            const StrComplexReport rep = str_complex(s, t, r, ctx_);
            add({label + ": invariants by formula and by shifting", all_passed(rep.checks), ""});
            const DepthChainReport chain = depth_chain(rep.delta, ctx_, false);
            add({label + ": depth chain", all_passed(chain.checks), ""});
          });
        }
      }
    }

    guard("exterior counterexample (4,2,1)", [&] {
      const auto rep = counterexample_E(4, 2, 1, ctx_);
      add({"exterior counterexample (4,2,1): values 2 > 0 and 0 < 2",
           rep.generic_i == 2 && rep.swapped_i == 0 && rep.generic_prev == 0 && rep.swapped_prev == 2, ""});
    });
    guard("symmetric counterexample (3,2,1)", [&] {
      const auto rep = counterexample_S(3, 2, 1, ctx_);
      add({"symmetric counterexample (3,2,1): values 2 > 0 and 0 < 2",
           rep.generic_i == 2 && rep.swapped_i == 0 && rep.generic_prev == 0 && rep.swapped_prev == 2, ""});
    });
    guard("exterior counterexample (5,2,2)", [&] {
      const auto rep = counterexample_E(5, 2, 2, ctx_);
      add({"exterior counterexample (5,2,2): strict both ways",
           rep.generic_i > rep.swapped_i && rep.generic_prev < rep.swapped_prev, ""});
    });

    const MonomialIdeal triangle_edges =
        minimalize(Ring::Exterior, 4, {mask_of({2, 3}), mask_of({2, 4}), mask_of({3, 4})});
    exterior_ideal("(e2e3, e2e4, e3e4)", triangle_edges);
    guard("(e2e3, e2e4, e3e4): equality in the bound", [&] {
      const BoundReport rep = cartan_betti_bound_check(triangle_edges, ctx_, 4, 4);
      add({"(e2e3, e2e4, e3e4): equality in the bound", rep.equality_everywhere, ""});
    });
    symmetric_ideal("(x2^2, x2x3, x3^2)", minimalize(3, {{0, 2, 0}, {0, 1, 1}, {0, 0, 2}}));
    symmetric_ideal("(x3x4, x1x2x4)",
                    minimalize(Ring::SymmetricSquarefree, 4, {mask_of({3, 4}), mask_of({1, 2, 4})}));
  }

  const std::vector<Check>& checks() const { return checks_; }
  const Json& tables() const { return tables_; }

 private:
  const GenericContext& ctx_;
  std::vector<Check> checks_;
  Json tables_ = Json::array();
};

void cmd_verify(const std::vector<std::string>& paths, const std::string& suite, const GenericContext& ctx,
                Output& o) {
  require(!paths.empty() || !suite.empty(), ErrorKind::InvalidArgument,
          "verify needs input files or --suite builtin");
  require(suite.empty() || suite == "builtin", ErrorKind::InvalidArgument, "unknown suite \"" + suite + "\"");
  // Parse everything first so a bad file is a parse error, not a failed check.
  std::vector<std::pair<std::string, Input>> inputs;
  for (const auto& p : paths) inputs.emplace_back(p, load(p));

  Suite run(ctx);
  if (!suite.empty()) run.builtin();
  for (const auto& [path, in] : inputs) {
    if (in.complex) {
      run.complex(path, *in.complex);
    } else if (in.ideal->ring() == Ring::Exterior) {
      const MonomialIdeal& j = *in.ideal;
      run.guard(path + ": annihilators", [&] {
        const MonomialIdeal gin = gin_rlex(j, ctx);
        const AnnihilatorTable a = alpha_E_generic_with_gin(j, gin, ctx);
        run.add({path + ": annihilators = standard-monomial count", a == alpha_from_standard_monomials_table(gin), ""});
        run.add({path + ": depth from annihilators = gin formula",
                 depth_from_alpha(a, j.n()) == *stable_invariants(gin).depth_E, ""});
      });
      if (j.n() <= 5) run.exterior_ideal(path, j);
    } else {
      run.symmetric_ideal(path, *in.ideal);
    }
  }
  const bool passed = all_passed(run.checks());
  o.doc["checks"] = checks_json(run.checks());
  o.doc["tables"] = run.tables();
  o.doc["passed"] = passed;
  o.text << render_checks(run.checks());
  std::size_t failed = 0;
  for (const Check& c : run.checks()) failed += c.passed ? 0 : 1;
  o.text << run.checks().size() - failed << " passed, " << failed << " failed\n";
  require_all(run.checks());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic shifting, depth and Betti numbers over E and S", "shiftkit"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Config cfg;
  app.add_option("--prime", cfg.prime, "field characteristic (default 2147483647)");
  app.add_option("--seed", cfg.seed, "random seed (default: drawn from entropy, always printed)");
  app.add_option("--trials", cfg.trials, "independent random transforms that must agree (>= 2)");
  app.add_option("--degree-cap", cfg.degree_cap, "top degree for symmetric computations");
  app.add_option("--max-i", cfg.max_i, "largest homological degree in Betti windows");
  app.add_option("--max-deg", cfg.max_deg, "largest strand j in Betti windows");
  app.add_flag("--machine", cfg.machine, "print one JSON object instead of text");

  std::string path;
  std::string order;
  bool bound = false;
  std::string ring = "E";
  int a = 0;
  int b = 0;
  int c = 0;
  std::string output;
  std::vector<std::string> paths;
  std::string suite;

  auto* shift = app.add_subcommand("shift", "shifted complex, f-vector and gin");
  shift->add_option("file", path, "complex or ideal file")->required();
  auto* invariants = app.add_subcommand("invariants", "depths, regularity, complexity and Betti tables");
  invariants->add_option("file", path, "complex file")->required();
  auto* annihilators = app.add_subcommand("annihilators", "annihilator numbers");
  annihilators->add_option("file", path, "complex or ideal file")->required();
  annihilators->add_option("--order", order, "explicit coordinate sequence, e.g. 2,1,3,4");
  auto* cartan = app.add_subcommand("cartan-betti", "exterior Betti numbers from Cartan homology");
  cartan->add_option("file", path, "complex or exterior ideal file")->required();
  cartan->add_flag("--bound", bound, "also check the annihilator bound for every r");
  auto* betti = app.add_subcommand("betti", "Betti numbers over S");
  betti->add_option("file", path, "complex or S ideal file")->required();
  auto* counter = app.add_subcommand("counterexample", "generic vs swapped annihilator numbers");
  counter->add_option("--ring", ring, "E or S");
  counter->add_option("n", a)->required();
  counter->add_option("i", b)->required();
  counter->add_option("j", c)->required();
  auto* str = app.add_subcommand("str-complex", "complex with prescribed depth_S, depth_E, reg_S");
  str->add_option("s", a)->required();
  str->add_option("t", b)->required();
  str->add_option("r", c)->required();
  str->add_option("--output", output, "write the complex to this file");
  auto* verify = app.add_subcommand("verify", "run the verification checks");
  verify->add_option("files", paths, "complex or ideal files");
  verify->add_option("--suite", suite, "builtin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (!cfg.seed) {
    std::random_device rd;
    cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  Output o;
  o.doc["command"] = command;
  o.doc["config"] = Json{{"prime", cfg.prime}, {"seed", *cfg.seed}, {"trials", cfg.trials}};
  o.text << "# seed " << *cfg.seed << " prime " << cfg.prime << " trials " << cfg.trials << "\n";

  int code = 0;
  try {
    GenericContext ctx{PrimeField(cfg.prime), *cfg.seed, cfg.trials};
    ctx.validate();
    require(!cfg.degree_cap || *cfg.degree_cap >= 1, ErrorKind::InvalidArgument, "--degree-cap must be positive");
    require(!cfg.max_i || *cfg.max_i >= 0, ErrorKind::InvalidArgument, "--max-i must be nonnegative");
    require(!cfg.max_deg || *cfg.max_deg >= 0, ErrorKind::InvalidArgument, "--max-deg must be nonnegative");
    if (command == "shift") cmd_shift(path, cfg, ctx, o);
    else if (command == "invariants") cmd_invariants(path, cfg, ctx, o);
    else if (command == "annihilators") cmd_annihilators(path, order, cfg, ctx, o);
    else if (command == "cartan-betti") cmd_cartan(path, bound, cfg, ctx, o);
    else if (command == "betti") cmd_betti(path, cfg, ctx, o);
    else if (command == "counterexample") cmd_counterexample(ring, a, b, c, ctx, o);
    else if (command == "str-complex") cmd_str(a, b, c, output, ctx, o);
    else if (command == "verify") cmd_verify(paths, suite, ctx, o);
  } catch (const Error& e) {
    code = exit_code(e.kind());
    o.doc["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  }
  if (cfg.machine) {
    out << o.doc.dump() << "\n";
  } else {
    out << o.text.str();
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"shiftkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace shiftkit::cli
