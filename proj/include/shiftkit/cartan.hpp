#ifndef SHIFTKIT_CARTAN_HPP
#define SHIFTKIT_CARTAN_HPP

// Cartan complexes C(v_1..v_r; E/J) and exterior Betti numbers.
//
// C_i has basis x^(a) (x) m with a in N^r, |a| = i, and m running over a
// basis of E/J. The internal degree of x^(a) (x) m is |a| + deg m. The
// differential is d(x^(a) (x) m) = sum_{a_k > 0} x^(a - eps_k) (x) v_k m.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "shiftkit/generic.hpp"
#include "shiftkit/ideals.hpp"
#include "shiftkit/linalg.hpp"

namespace shiftkit {

/// Degree-d part of E/J: standard monomials and a normal form.
class QuotientBasis {
 public:
  /// `span` has columns monomials_of_degree(n, d); its rows span J_d.
  QuotientBasis(int n, int d, const MatrixFp& span, const PrimeField& field);

  int degree() const { return d_; }
  std::size_t size() const { return standard_.size(); }
  const std::vector<Mask>& standard() const { return standard_; }
  /// Quotient coordinates of a degree-d coefficient vector.
  std::vector<std::uint64_t> normal_form(std::span<const std::uint64_t> v) const;

 private:
  int n_;
  int d_;
  const PrimeField* field_;
  RrefResult red_;
  std::vector<std::size_t> standard_cols_;
  std::vector<Mask> standard_;
};

QuotientBasis quotient_basis(const MonomialIdeal& ideal, int d, const PrimeField& field);

class CartanComplex {
 public:
  /// v is n x r; column k holds v_{k+1} in the basis e_1..e_n. Throws
  /// DependentSequence if the columns are linearly dependent.
  CartanComplex(const MonomialIdeal& ideal, const MatrixFp& v, const PrimeField& field);

  int r() const { return r_; }
  /// dim C_i(v; E/J)_j
  std::size_t dim(int i, int j) const;
  /// Matrix of d_i : C_i,j -> C_{i-1},j.
  MatrixFp differential(int i, int j) const;
  std::size_t differential_rank(int i, int j);
  /// h_{i,j} = dim H_i(v; E/J)_j
  std::uint64_t homology(int i, int j);

 private:
  const std::vector<std::vector<int>>& multi_indices(int i) const;
  std::size_t multi_index_position(int i, const std::vector<int>& a) const;
  const MatrixFp& multiplication(int k, int d) const;  // M_d -> M_{d+1}

  int n_;
  int r_;
  const PrimeField* field_;
  std::vector<QuotientBasis> bases_;
  std::vector<std::vector<MatrixFp>> mult_;  // [k][d]
  mutable std::map<int, std::vector<std::vector<int>>> indices_;
  mutable std::map<int, std::map<std::vector<int>, std::size_t>> positions_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
};

MatrixFp cartan_differential(const MonomialIdeal& ideal, const MatrixFp& v, int i, int j,
                             const PrimeField& field);
std::uint64_t cartan_homology_dim(const MonomialIdeal& ideal, const MatrixFp& v, int i, int j,
                                  const PrimeField& field);

struct CartanLimits {
  int max_n = 6;
  int max_i = 6;
  std::uint64_t max_cells = 200000;  // C(i+n-1, i) * dim (E/J)_{j-i}
};

/// beta^E_{i,j}(E/J) as h_{i,j}(n) of a generic full sequence, under the
/// trials protocol. Throws GenericityFailure or SizeLimit.
std::uint64_t betti_E(const MonomialIdeal& ideal, const GenericContext& ctx, int i, int j,
                      const CartanLimits& limits = {});

/// beta^E_{i, i+j} for i <= i_max, j <= j_max, one Cartan complex per trial.
BettiTable betti_E_table(const MonomialIdeal& ideal, const GenericContext& ctx, int i_max, int j_max,
                         const CartanLimits& limits = {});

/// Same window from the Cartan complex of the standard basis e_1..e_n,
/// split by multidegree. For squarefree J the complex in multidegree b
/// depends on supp(b) only, so each support is reduced once and weighted
/// by the number of b with that support.
BettiTable betti_E_multigraded(const MonomialIdeal& ideal, int i_max, int j_max,
                               const PrimeField& field);

/// sum_{k=0..i} C(i+j-1, j+k-1) beta^S_{k,k+j}; (0, 0) gives beta^S_{0,0}.
std::uint64_t betti_E_from_betti_S(const BettiTable& table_S, int i, int j);

/// n - depth_E. Throws InvalidArgument outside [0, n].
int complexity_E(int depth_E, int n);

}  // namespace shiftkit

#endif
