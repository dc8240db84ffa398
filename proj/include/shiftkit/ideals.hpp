#ifndef SHIFTKIT_IDEALS_HPP
#define SHIFTKIT_IDEALS_HPP

// Monomial ideals in E and S, stability predicates, and Betti tables.
//
// Stability always uses the min-based convention: a stable ideal is closed
// under trading its smallest index for a larger one, so the "generic" end
// of [n] is e_n, not e_1.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftkit/exterior.hpp"
#include "shiftkit/linalg.hpp"
#include "shiftkit/simplicial.hpp"
#include "shiftkit/symmetric.hpp"

namespace shiftkit {

enum class Ring { Exterior, SymmetricSquarefree, SymmetricGeneral };

const char* to_string(Ring ring);

/// Minimal monomial generators plus ring flavor. Squarefree flavors keep
/// supports as masks; the general symmetric flavor keeps exponent vectors.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// The zero ideal.
  MonomialIdeal(Ring ring, int n) : ring_(ring), n_(n) {}

  Ring ring() const { return ring_; }
  int n() const { return n_; }
  bool squarefree() const { return ring_ != Ring::SymmetricGeneral; }
  bool is_zero() const { return masks_.empty() && exponents_.empty(); }
  std::size_t size() const { return squarefree() ? masks_.size() : exponents_.size(); }

  /// Generators, by degree and then lex; squarefree flavors only.
  const std::vector<Mask>& masks() const;
  /// Generators as exponent vectors (any flavor).
  std::vector<Exponents> exponents() const;

  int min_degree() const;
  int max_degree() const;

  bool contains(Mask m) const;
  bool contains(const Exponents& a) const;

  /// Squarefree monomials of degree d lying in the ideal, in monomial_index order.
  std::vector<Mask> squarefree_members(int d) const;

  /// Same generators viewed in another squarefree ring.
  MonomialIdeal as_ring(Ring ring) const;

  std::string render() const;

  bool operator==(const MonomialIdeal& other) const = default;

  friend MonomialIdeal minimalize(Ring ring, int n, std::vector<Mask> generators);
  friend MonomialIdeal minimalize(int n, std::vector<Exponents> generators);

 private:
  Ring ring_ = Ring::Exterior;
  int n_ = 0;
  std::vector<Mask> masks_;
  std::vector<Exponents> exponents_;
};

/// Divisibility-minimal subset. Throws InvalidArgument on a unit generator
/// or a generator outside [n]. Ring must be squarefree.
MonomialIdeal minimalize(Ring ring, int n, std::vector<Mask> generators);
/// General symmetric flavor.
MonomialIdeal minimalize(int n, std::vector<Exponents> generators);

/// J_delta (Exterior) or I_delta (SymmetricSquarefree).
MonomialIdeal face_ideal(const SimplicialComplex& delta, Ring ring);
/// Complex of squarefree monomials outside a squarefree ideal.
SimplicialComplex complex_of(const MonomialIdeal& ideal);

struct StabilityFlags {
  bool stable = false;
  bool strongly_stable = false;
  bool squarefree_stable = false;
};

/// Exterior: stable / strongly stable in E, squarefree_stable is the same
/// exchange on supports. Symmetric: stable / strongly stable in S, and
/// squarefree stability over the squarefree monomials of the ideal.
StabilityFlags stability_flags(const MonomialIdeal& ideal);

struct StableInvariants {
  std::optional<int> depth_E;
  std::optional<int> depth_S;
  std::optional<int> reg_S;
};

/// Closed forms for stable ideals: depth_E from an exterior ideal,
/// depth_S and reg_S from a symmetric one. Throws StabilityViolation.
StableInvariants stable_invariants(const MonomialIdeal& ideal);

/// Sparse graded Betti numbers keyed by (homological degree, internal
/// degree). Zero entries are never stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  std::uint64_t at(int i, int degree) const;
  /// beta_{i, i + j}
  std::uint64_t strand(int i, int j) const { return at(i, i + j); }
  void set(int i, int degree, std::uint64_t value);
  void add(int i, int degree, std::uint64_t value) { set(i, degree, at(i, degree) + value); }

  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int projdim() const;
  int regularity() const;
  int max_degree() const;

  bool operator==(const BettiTable& other) const = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

/// Betti numbers of S/I for squarefree stable I, for i in [0, n].
/// Throws StabilityViolation.
BettiTable betti_S_eliahou_kervaire(const MonomialIdeal& ideal);

/// n - projdim. Throws InvalidArgument on an empty table.
int depth_S_via_auslander_buchsbaum(const BettiTable& table, int n);

constexpr int kMaxKoszulVariables = 6;

/// Tor_i(S/I, K) by ranks of the Koszul complex, one multidegree at a
/// time, for i <= i_max and internal degree <= d_max. Throws SizeLimit
/// for n > 6.
BettiTable koszul_betti_oracle(const MonomialIdeal& ideal, const PrimeField& field, int i_max,
                               int d_max);

/// Degree-d monomials outside the ideal avoiding every prefix variable:
/// squarefree for the exterior flavor, all monomials for S.
std::uint64_t quotient_dim_degree(const MonomialIdeal& ideal, const std::vector<int>& prefix, int d);

}  // namespace shiftkit

#endif
