#include "shiftkit/verification.hpp"

#include <algorithm>

#include "shiftkit/error.hpp"

namespace shiftkit {

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void require_all(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    if (!c.passed) {
      fail(ErrorKind::VerificationFailure,
           c.name + " failed" + (c.detail.empty() ? std::string() : ": " + c.detail));
    }
  }
}

namespace {

std::string pair_detail(const char* a_name, int a, const char* b_name, int b) {
  return std::string(a_name) + " = " + std::to_string(a) + ", " + b_name + " = " + std::to_string(b);
}

}  // namespace

DepthChainReport depth_chain(const SimplicialComplex& delta, const GenericContext& ctx, bool koszul) {
  require(delta.full_support(), ErrorKind::InvalidArgument,
          "every vertex must be a face of the complex");
  DepthChainReport rep;
  rep.n = delta.n();
  rep.dim = delta.dim();
  auto& checks = rep.checks;

  ShiftResult sr = exterior_shift_with_gin(delta, ctx);
  rep.shifted = sr.shifted;
  rep.gin = sr.gin;
  const MonomialIdeal j = face_ideal(delta, Ring::Exterior);

  rep.depth_E = *stable_invariants(rep.gin).depth_E;
  rep.alpha = alpha_E_generic_with_gin(j, rep.gin, ctx);
  rep.depth_E_alpha = depth_from_alpha(rep.alpha, rep.n);
  const ConeSplit split = split_cone_part(rep.shifted);
  rep.depth_E_cone = split.r;
  rep.gamma_dim = split.gamma.dim();
  rep.gamma_nonacyclic = is_nonacyclic(split.gamma, ctx.field);
  checks.push_back({"depth_E: gin formula = annihilator rows", rep.depth_E == rep.depth_E_alpha,
                    pair_detail("formula", rep.depth_E, "annihilators", rep.depth_E_alpha)});
  checks.push_back({"depth_E: gin formula = cone part", rep.depth_E == rep.depth_E_cone,
                    pair_detail("formula", rep.depth_E, "cone", rep.depth_E_cone)});
  checks.push_back({"cone decomposition: link is non-acyclic", rep.gamma_nonacyclic, ""});
  checks.push_back({"cone decomposition: dim link = dim - depth_E",
                    rep.gamma_dim == rep.dim - rep.depth_E_cone,
                    pair_detail("dim link", rep.gamma_dim, "dim - r", rep.dim - rep.depth_E_cone)});

  const MonomialIdeal i_shifted = face_ideal(rep.shifted, Ring::SymmetricSquarefree);
  rep.betti_S = betti_S_eliahou_kervaire(i_shifted);
  rep.projdim_S = rep.betti_S.projdim();
  rep.reg_S = rep.betti_S.regularity();
  rep.depth_S = depth_S_via_auslander_buchsbaum(rep.betti_S, rep.n);
  const StableInvariants closed = stable_invariants(i_shifted);
  checks.push_back({"depth_S: Auslander-Buchsbaum = stable formula", rep.depth_S == *closed.depth_S,
                    pair_detail("Auslander-Buchsbaum", rep.depth_S, "formula", *closed.depth_S)});
  checks.push_back({"reg_S: Betti table = stable formula", rep.reg_S == *closed.reg_S,
                    pair_detail("table", rep.reg_S, "formula", *closed.reg_S)});

  if (koszul && rep.n <= kMaxKoszulVariables) {
    const BettiTable direct =
        koszul_betti_oracle(face_ideal(delta, Ring::SymmetricSquarefree), ctx.field, rep.n, rep.n);
    rep.koszul_checked = true;
    checks.push_back({"projdim_S: shifted = Koszul on the complex", direct.projdim() == rep.projdim_S,
                      pair_detail("shifted", rep.projdim_S, "Koszul", direct.projdim())});
    checks.push_back({"reg_S: shifted = Koszul on the complex", direct.regularity() == rep.reg_S,
                      pair_detail("shifted", rep.reg_S, "Koszul", direct.regularity())});
  }

  rep.cx_E = complexity_E(rep.depth_E, rep.n);
  rep.cx_E_betti = rep.betti_S.max_degree();
  checks.push_back({"cx_E: n - depth_E = top degree of beta^S", rep.cx_E == rep.cx_E_betti,
                    pair_detail("n - depth_E", rep.cx_E, "top degree", rep.cx_E_betti)});

  const int gap = rep.depth_S - rep.depth_E;
  checks.push_back({"depth chain: depth_S - depth_E >= 0", gap >= 0,
                    pair_detail("depth_S", rep.depth_S, "depth_E", rep.depth_E)});
  checks.push_back({"depth chain: depth_S - depth_E = cx_E - projdim_S",
                    gap == rep.cx_E - rep.projdim_S,
                    pair_detail("gap", gap, "cx_E - projdim_S", rep.cx_E - rep.projdim_S)});
  checks.push_back({"depth chain: depth_S - depth_E <= reg_S", gap <= rep.reg_S,
                    pair_detail("gap", gap, "reg_S", rep.reg_S)});

  rep.cohen_macaulay = rep.depth_S == rep.dim + 1;
  if (i_shifted.is_zero()) {
    rep.linear_resolution = true;
  } else {
    const int d = i_shifted.min_degree();
    rep.linear_resolution = d == i_shifted.max_degree() && rep.reg_S == d - 1;
  }
  if (rep.cohen_macaulay || rep.linear_resolution) {
    checks.push_back({"Cohen-Macaulay or linear: depth_S - depth_E = reg_S", gap == rep.reg_S,
                      pair_detail("gap", gap, "reg_S", rep.reg_S)});
  }
  return rep;
}

DepthChainReport verify_depth_chain(const SimplicialComplex& delta, const GenericContext& ctx,
                                    bool koszul) {
  DepthChainReport rep = depth_chain(delta, ctx, koszul);
  require_all(rep.checks);
  return rep;
}

std::vector<Mask> str_nonfaces(int s, int t, int r) {
  const std::string params =
      " (s=" + std::to_string(s) + ", t=" + std::to_string(t) + ", r=" + std::to_string(r) + ")";
  require(t >= 0 && r >= 1, ErrorKind::ParameterInfeasible, "need t >= 0 and r >= 1" + params);
  require(s - t <= r && s - t >= 0, ErrorKind::ParameterInfeasible,
          "need 0 <= s - t <= r" + params);
  require(s - t >= 1, ErrorKind::ParameterInfeasible,
          "s = t makes the vertices t+1..n non-faces" + params);
  const int n = t + r + 3;
  require(n <= kMaxComplexVertices, ErrorKind::SizeLimit, "complex too large" + params);
  const int gap = s - t;
  std::vector<Mask> out;
  Mask top = 0;
  for (int v = n - gap + 1; v <= n; ++v) top |= bit(v);
  for (int i = n - gap; i >= t + 1; --i) out.push_back(top | bit(i));
  Mask block = 0;
  for (int v = n - r - 1; v <= n - 1; ++v) block |= bit(v);
  out.push_back(block);
  const Mask wide = block | bit(n);
  for (int j = n - gap + 1; j <= n - 1; ++j) out.push_back(wide & ~bit(j));
  return out;
}

StrComplexReport str_complex(int s, int t, int r, const GenericContext& ctx) {
  StrComplexReport rep;
  rep.s = s;
  rep.t = t;
  rep.r = r;
  rep.nonfaces = str_nonfaces(s, t, r);
  rep.n = t + r + 3;
  rep.delta = complex_from_nonfaces(rep.n, rep.nonfaces);
  auto& checks = rep.checks;

  std::vector<Mask> expected = rep.nonfaces;
  std::vector<Mask> actual = minimal_nonfaces(rep.delta);
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  checks.push_back({"construction: minimal non-faces as listed", expected == actual, ""});
  checks.push_back({"construction: every vertex is a face", rep.delta.full_support(), ""});

  const StableInvariants e = stable_invariants(face_ideal(rep.delta, Ring::Exterior));
  const StableInvariants sq = stable_invariants(face_ideal(rep.delta, Ring::SymmetricSquarefree));
  rep.depth_E_formula = *e.depth_E;
  rep.depth_S_formula = *sq.depth_S;
  rep.reg_S_formula = *sq.reg_S;

  const ShiftResult sr = exterior_shift_with_gin(rep.delta, ctx);
  rep.depth_E_generic = *stable_invariants(sr.gin).depth_E;
  const BettiTable b = betti_S_eliahou_kervaire(face_ideal(sr.shifted, Ring::SymmetricSquarefree));
  rep.depth_S_generic = depth_S_via_auslander_buchsbaum(b, rep.n);
  rep.reg_S_generic = b.regularity();

  checks.push_back({"depth_E = t (formula)", rep.depth_E_formula == t,
                    pair_detail("depth_E", rep.depth_E_formula, "t", t)});
  checks.push_back({"depth_S = s (formula)", rep.depth_S_formula == s,
                    pair_detail("depth_S", rep.depth_S_formula, "s", s)});
  checks.push_back({"reg_S = r (formula)", rep.reg_S_formula == r,
                    pair_detail("reg_S", rep.reg_S_formula, "r", r)});
  checks.push_back({"depth_E = t (shifting)", rep.depth_E_generic == t,
                    pair_detail("depth_E", rep.depth_E_generic, "t", t)});
  checks.push_back({"depth_S = s (shifting)", rep.depth_S_generic == s,
                    pair_detail("depth_S", rep.depth_S_generic, "s", s)});
  checks.push_back({"reg_S = r (shifting)", rep.reg_S_generic == r,
                    pair_detail("reg_S", rep.reg_S_generic, "r", r)});
  return rep;
}

}  // namespace shiftkit
