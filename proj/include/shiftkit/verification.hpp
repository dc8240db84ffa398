#ifndef SHIFTKIT_VERIFICATION_HPP
#define SHIFTKIT_VERIFICATION_HPP

// End-to-end checks on complexes: the depth inequality chain, the cone
// decomposition of the shifted complex, and the (s, t, r) family.

#include <optional>
#include <string>
#include <vector>

#include "shiftkit/annihilators.hpp"
#include "shiftkit/generic.hpp"
#include "shiftkit/ideals.hpp"
#include "shiftkit/simplicial.hpp"

namespace shiftkit {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<Check>& checks);
/// Throws VerificationFailure naming the first failed check.
void require_all(const std::vector<Check>& checks);

struct DepthChainReport {
  int n = 0;
  int dim = 0;
  SimplicialComplex shifted;
  MonomialIdeal gin;
  AnnihilatorTable alpha;
  BettiTable betti_S;  // Eliahou-Kervaire on the shifted Stanley-Reisner ideal

  int depth_E = 0;        // stable formula on gin
  int depth_E_alpha = 0;  // first nonzero annihilator row
  int depth_E_cone = 0;   // cone part of the shifted complex
  int depth_S = 0;
  int reg_S = 0;
  int projdim_S = 0;
  int cx_E = 0;
  int cx_E_betti = 0;  // top internal degree of beta^S
  int gamma_dim = 0;
  bool gamma_nonacyclic = false;
  bool koszul_checked = false;

  bool cohen_macaulay = false;
  bool linear_resolution = false;

  std::vector<Check> checks;
};

/// Computes everything and records each assertion; never throws on a
/// failed assertion. `koszul` adds the Koszul oracle on I_delta (n <= 6).
DepthChainReport depth_chain(const SimplicialComplex& delta, const GenericContext& ctx,
                             bool koszul = true);
/// depth_chain, then require_all. Throws VerificationFailure.
DepthChainReport verify_depth_chain(const SimplicialComplex& delta, const GenericContext& ctx,
                                    bool koszul = true);

/// Minimal non-faces of the (s, t, r) complex on [t + r + 3], in the order
/// of the three families. Throws ParameterInfeasible unless
/// r >= s - t >= 1, r >= 1 and t >= 0; s = t would make vertices non-faces.
std::vector<Mask> str_nonfaces(int s, int t, int r);

struct StrComplexReport {
  int s = 0;
  int t = 0;
  int r = 0;
  int n = 0;
  SimplicialComplex delta;
  std::vector<Mask> nonfaces;
  // Closed forms on J_delta / I_delta themselves.
  int depth_E_formula = 0;
  int depth_S_formula = 0;
  int reg_S_formula = 0;
  // Shifting, gin and Eliahou-Kervaire on the shifted complex.
  int depth_E_generic = 0;
  int depth_S_generic = 0;
  int reg_S_generic = 0;
  std::vector<Check> checks;
};

StrComplexReport str_complex(int s, int t, int r, const GenericContext& ctx);

}  // namespace shiftkit

#endif
