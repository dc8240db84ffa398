#ifndef SHIFTKIT_ANNIHILATORS_HPP
#define SHIFTKIT_ANNIHILATORS_HPP

// Annihilator numbers over E and S.
//
// Exterior: alpha_{i,j}(v; E/J) = dim H^j(E/(J + (v_1..v_{i-1})), v_i).
// Symmetric: alpha_{i,j}(v; S/I) = dim (0 :_M v_i)_j with
// M = S/(I + (v_1..v_{i-1})), plus row n+1 holding beta_{0,j}(S/I).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shiftkit/cartan.hpp"
#include "shiftkit/generic.hpp"
#include "shiftkit/ideals.hpp"
#include "shiftkit/simplicial.hpp"

namespace shiftkit {

class AnnihilatorTable {
 public:
  AnnihilatorTable() = default;
  AnnihilatorTable(Ring ring, int n) : ring_(ring), n_(n) {}

  Ring ring() const { return ring_; }
  int n() const { return n_; }
  std::uint64_t at(int i, int j) const;
  void set(int i, int j, std::uint64_t value);
  bool row_zero(int i) const;
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  bool operator==(const AnnihilatorTable& other) const = default;

 private:
  Ring ring_ = Ring::Exterior;
  int n_ = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// v_k = gamma(e_{sigma(k)}), gamma the identity when absent.
struct SequenceSpec {
  std::vector<int> sigma;  // 1-based
  std::optional<MatrixFp> gamma;

  static SequenceSpec standard(int n);
  static SequenceSpec permutation(std::vector<int> sigma);
  static SequenceSpec transform(MatrixFp gamma);

  int n() const { return static_cast<int>(sigma.size()); }
  /// Throws InvalidArgument unless sigma is a bijection and gamma invertible.
  void validate(const PrimeField& field) const;
};

/// Quotients of E/J by sets of sequence elements, in coordinates where the
/// sequence elements are variables: phi = gamma^{-1} sends v_k to
/// e_{sigma(k)}, so killing v_k means dropping monomials that contain it.
class SequenceQuotients {
 public:
  SequenceQuotients(const MonomialIdeal& ideal, const SequenceSpec& seq, const PrimeField& field);

  int n() const { return n_; }
  /// dim (E/(J + (killed variables)))_d
  std::uint64_t dim(Mask killed, int d);
  /// Rank of multiplication by a variable from degree d to d + 1.
  std::uint64_t multiplication_rank(Mask killed, int var, int d);
  /// Kernel modulo image of the multiplication complex at degree d.
  std::uint64_t homology(Mask killed, int var, int d);

  /// alpha_{i,j} for the sequence whose k-th element is variable order[k-1];
  /// the dimension formula is cross-checked against homology. Throws
  /// ConsistencyFailure.
  std::uint64_t alpha(const std::vector<int>& order, int i, int j);
  AnnihilatorTable table(const std::vector<int>& order);
  AnnihilatorTable table() { return table(order_); }

 private:
  // Degree-d monomials avoiding the killed variables, and the rref of the
  // working ideal projected onto them.
  struct Restricted {
    std::vector<Mask> columns;
    std::map<Mask, std::size_t> position;
    RrefResult red;
    std::vector<std::size_t> standard;  // non-pivot column positions
  };
  const Restricted& restricted(Mask killed, int d);

  int n_;
  const PrimeField* field_;
  MonomialIdeal ideal_;
  bool monomial_;
  std::vector<int> order_;
  std::vector<MatrixFp> span_;  // working ideal in degree d, monomial_index columns
  std::map<std::pair<Mask, int>, Restricted> restricted_;
  std::map<std::tuple<Mask, int, int>, std::uint64_t> mult_;
};

std::uint64_t alpha_E_sequence(const MonomialIdeal& ideal, const SequenceSpec& seq, int i, int j,
                               const PrimeField& field);
AnnihilatorTable alpha_E_table(const MonomialIdeal& ideal, const SequenceSpec& seq,
                               const PrimeField& field);

/// Table on gin(J) with the standard sequence, re-derived on J with
/// ctx.trials random transforms. Throws GenericityFailure.
AnnihilatorTable alpha_E_generic(const MonomialIdeal& ideal, const GenericContext& ctx);
/// Same with a precomputed gin.
AnnihilatorTable alpha_E_generic_with_gin(const MonomialIdeal& ideal, const MonomialIdeal& gin,
                                          const GenericContext& ctx);

/// #{F : |F| = j, min F > i, e_F not in gin, e_i e_F in gin}. Throws
/// StabilityViolation unless gin is strongly stable.
std::uint64_t alpha_from_standard_monomials(const MonomialIdeal& gin, int i, int j);
AnnihilatorTable alpha_from_standard_monomials_table(const MonomialIdeal& gin);

/// Face count on the shifted complex.
AnnihilatorTable alpha_complex(const SimplicialComplex& delta, const GenericContext& ctx);
AnnihilatorTable alpha_complex_shifted(const SimplicialComplex& shifted);

/// Largest r with rows 1..r zero.
int depth_from_alpha(const AnnihilatorTable& table, int n);

/// beta^S_{i,i+j} = sum_l C(n-l-j, i-1) alpha_{l,j}, beta_{0,0} = 1.
BettiTable betti_S_from_alpha_table(const AnnihilatorTable& alpha, int n);
/// The same from a complex, checked against Eliahou-Kervaire on the shifted
/// face ideal. Throws ConsistencyFailure.
BettiTable betti_S_from_alpha(const SimplicialComplex& delta, const GenericContext& ctx);

struct BoundEntry {
  int i = 0;
  int j = 0;
  int r = 0;
  std::uint64_t h = 0;
  std::uint64_t bound = 0;
  bool equal = false;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  AnnihilatorTable alpha;
  bool equality_everywhere = true;
};

/// h_{i,i+j}(r) of generic partial sequences against the annihilator
/// bound, for 1 <= i <= i_max, 0 <= j <= j_max, 1 <= r <= r_max (0 means
/// n). Throws VerificationFailure on a violation.
BoundReport cartan_betti_bound_check(const MonomialIdeal& ideal, const GenericContext& ctx, int i_max,
                                     int j_max, int r_max = 0, const CartanLimits& limits = {});

std::uint64_t alpha_S_sequence(const MonomialIdeal& ideal, const SequenceSpec& seq, int i, int j,
                               int degree_cap, const PrimeField& field = PrimeField{});
AnnihilatorTable alpha_S_table(const MonomialIdeal& ideal, const SequenceSpec& seq, int degree_cap,
                               const PrimeField& field = PrimeField{});
/// Table on gin_S(I) with the standard sequence, j < degree_cap (0 means
/// max generator degree + 1).
AnnihilatorTable alpha_S_generic(const MonomialIdeal& ideal, const GenericContext& ctx,
                                 int degree_cap = 0);

struct CounterexampleReport {
  Ring ring = Ring::Exterior;
  int n = 0;
  int i = 0;
  int j = 0;
  MonomialIdeal ideal;
  bool gin_fixed = false;  // gin(ideal) == ideal
  std::uint64_t generic_i = 0;
  std::uint64_t swapped_i = 0;
  std::uint64_t generic_prev = 0;  // row i - 1
  std::uint64_t swapped_prev = 0;
};

/// The ideal of all (j+1)-subsets of {i..n}; needs i >= 2, j >= 1,
/// i + j <= n. Throws ParameterInfeasible or VerificationFailure.
CounterexampleReport counterexample_E(int n, int i, int j, const GenericContext& ctx);
/// All degree-(j+1) monomials in x_i..x_n; needs 2 <= i <= n, 1 <= j <= n.
CounterexampleReport counterexample_S(int n, int i, int j, const GenericContext& ctx);

std::vector<int> swapped_order(int n, int i);

struct PermutationReport {
  int permutations = 0;
  AnnihilatorTable reference;
};

/// One generic gamma, every ordering of its columns; all tables must match
/// the generic one. Throws SizeLimit above n_cap, VerificationFailure.
PermutationReport permutation_invariance_check(const MonomialIdeal& ideal, const GenericContext& ctx,
                                               int n_cap = 5);
PermutationReport permutation_invariance_check(const MonomialIdeal& ideal,
                                               const AnnihilatorTable& reference,
                                               const GenericContext& ctx, int n_cap = 5);

}  // namespace shiftkit

#endif
