#ifndef SHIFTKIT_EXTERIOR_HPP
#define SHIFTKIT_EXTERIOR_HPP

// Squarefree monomials of the exterior algebra on e_1..e_n.
//
// A monomial e_F is stored as the bitmask of F, vertex k in bit k-1, and is
// always normalized to ascending indices. Signs only appear as the result
// of a wedge.

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace shiftkit {

using Mask = std::uint64_t;

constexpr int kMaxVariables = 63;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int vertex) { return Mask{1} << (vertex - 1); }  // 1-based vertex
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
/// Smallest vertex of a nonempty mask (1-based).
inline int min_vertex(Mask m) { return std::countr_zero(m) + 1; }
inline int max_vertex(Mask m) { return 64 - std::countl_zero(m); }

/// Vertices of m in ascending order (1-based).
std::vector<int> vertices(Mask m);
Mask mask_of(const std::vector<int>& vertices);

/// (-1)^{#{(x, y) in a x b : x > y}}; the sign of e_a ^ e_b for disjoint
/// supports.
int wedge_sign(Mask a, Mask b);

struct ExtMonomial {
  int n = 0;
  Mask support = 0;

  int degree() const { return popcount(support); }
  bool operator==(const ExtMonomial&) const = default;
};

struct SignedMonomial {
  int sign = 0;  // +1, -1, or 0 when the wedge vanished
  ExtMonomial monomial;
};

ExtMonomial make_monomial(int n, const std::vector<int>& vertices);

/// Throws InvalidArgument on ambient size mismatch.
SignedMonomial wedge(const ExtMonomial& a, const ExtMonomial& b);

/// Graded reverse lexicographic order with e_1 < ... < e_n: for A != B of
/// equal size, e_A > e_B iff min(A symmetric-difference B) lies in B.
/// Throws InvalidArgument on degree or ambient mismatch.
std::strong_ordering cmp_rlex(const ExtMonomial& a, const ExtMonomial& b);
std::strong_ordering cmp_rlex_masks(Mask a, Mask b);

/// Lexicographic order on equal-size sets: A < B iff
/// min(A symmetric-difference B) lies in A. Throws on size mismatch.
std::strong_ordering cmp_lex_sets(Mask a, Mask b);

/// All degree-d monomials of E, strictly descending in cmp_rlex.
/// Throws InvalidArgument unless 0 <= d <= n.
std::vector<ExtMonomial> monomials_of_degree(int n, int d);

/// Degree-d masks in descending rlex order together with the inverse map.
/// On sets of one size rlex and lex agree, so this is descending lex too.
class MonomialIndex {
 public:
  explicit MonomialIndex(int n);

  int n() const { return n_; }
  const std::vector<Mask>& of_degree(int d) const { return by_degree_[d]; }
  std::size_t count(int d) const { return by_degree_[d].size(); }
  /// Position of mask within its degree.
  std::uint32_t position(Mask m) const { return position_[m]; }

 private:
  int n_;
  std::vector<std::vector<Mask>> by_degree_;
  std::vector<std::uint32_t> position_;
};

/// Shared, lazily built index for n <= 20.
const MonomialIndex& monomial_index(int n);

/// "e1e3e4"; the unit renders as "1".
std::string render_monomial(Mask m);
/// "{1,3,4}"; the empty set renders as "{}".
std::string render_set(Mask m);

std::uint64_t binomial(int n, int k);

}  // namespace shiftkit

#endif
