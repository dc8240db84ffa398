#ifndef SHIFTKIT_SYMMETRIC_HPP
#define SHIFTKIT_SYMMETRIC_HPP

// Monomials of the polynomial ring S = K[x_1..x_n] as exponent vectors.
// Only small n is supported; every use is a desk-scale check.

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "shiftkit/exterior.hpp"

namespace shiftkit {

using Exponents = std::vector<int>;

constexpr int kMaxSymmetricVariables = 8;
constexpr int kMaxSymmetricDegree = 255;

int total_degree(const Exponents& a);
/// a divides b.
bool divides(const Exponents& a, const Exponents& b);
Exponents exponents_of_mask(int n, Mask m);
Mask support_of(const Exponents& a);
/// Smallest variable index dividing a (1-based); a must not be the unit.
int min_variable(const Exponents& a);

/// Revlex on S with x_1 < ... < x_n, equal degrees: a > b iff the first
/// nonzero entry of a - b is negative. Agrees with cmp_rlex_masks on
/// squarefree monomials.
std::strong_ordering cmp_revlex_sym(const Exponents& a, const Exponents& b);

/// Degree-d monomials of S in descending revlex, with the inverse map.
class SymIndex {
 public:
  SymIndex(int n, int d);

  int n() const { return n_; }
  int degree() const { return d_; }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  std::size_t count() const { return monomials_.size(); }
  std::size_t position(const Exponents& a) const;

 private:
  static std::uint64_t key(const Exponents& a);

  int n_;
  int d_;
  std::vector<Exponents> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> position_;
};

/// Shared index; n <= 8, throws SizeLimit otherwise.
const SymIndex& sym_index(int n, int d);

/// "x1^2x3"; the unit renders as "1".
std::string render_sym_monomial(const Exponents& a);

}  // namespace shiftkit

#endif
