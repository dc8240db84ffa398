#ifndef SHIFTKIT_GENERIC_HPP
#define SHIFTKIT_GENERIC_HPP

// Generic coordinate changes, initial ideals, gin and exterior shifting.
//
// A "generic" quantity is computed under ctx.trials independent random
// transforms over F_p; the results must agree or GenericityFailure is
// raised. A transform gamma maps e_k to column k: gamma(e_k) =
// sum_l gamma(l, k) e_l.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "shiftkit/exterior.hpp"
#include "shiftkit/ideals.hpp"
#include "shiftkit/linalg.hpp"
#include "shiftkit/simplicial.hpp"

namespace shiftkit {

struct GenericContext {
  PrimeField field{};
  std::uint64_t seed = 0;
  int trials = 2;

  /// Throws InvalidArgument unless trials >= 2.
  void validate() const;
  /// Generator for one trial of one kind of draw; `purpose` keeps
  /// unrelated draws on separate streams.
  Rng rng(std::uint64_t purpose, int trial) const;
};

/// Stream labels for GenericContext::rng.
namespace purpose {
constexpr std::uint64_t kGin = 1;
constexpr std::uint64_t kShiftSpans = 2;
constexpr std::uint64_t kAlphaTransform = 3;
constexpr std::uint64_t kCartan = 4;
constexpr std::uint64_t kCartanPartial = 5;
constexpr std::uint64_t kPermutation = 6;
constexpr std::uint64_t kGinSymmetric = 7;
}  // namespace purpose

/// Homogeneous element of E; coefficients follow monomial_index(n) order
/// of the given degree.
struct ExtVector {
  int n = 0;
  int degree = 0;
  std::vector<std::uint64_t> coeffs;

  bool is_zero() const;
};

ExtVector ext_monomial(int n, Mask m);
/// a ^ (sum_k form[k] e_{k+1}).
ExtVector wedge_linear(const ExtVector& a, std::span<const std::uint64_t> form,
                       const PrimeField& field);
/// e_b ^ g.
ExtVector wedge_monomial(Mask b, const ExtVector& g, const PrimeField& field);

/// Memoized gamma(e_F), built as a left fold gamma(e_{F - max}) ^ gamma(e_max).
class ExteriorImage {
 public:
  ExteriorImage(const MatrixFp& gamma, const PrimeField& field);

  const ExtVector& of(Mask f);
  int n() const { return n_; }

 private:
  int n_;
  const PrimeField* field_;
  std::vector<std::vector<std::uint64_t>> columns_;
  std::unordered_map<Mask, ExtVector> memo_;
};

/// gamma applied to each generator. Throws InvalidArgument if gamma is
/// singular or its size differs from n.
std::vector<ExtVector> apply_transform(const MatrixFp& gamma, const MonomialIdeal& ideal,
                                       const PrimeField& field);

struct DegreeSpan {
  int degree = 0;
  MatrixFp matrix;  // columns: monomials_of_degree(n, degree)
};

/// Rows e_B ^ g over generators g and monomials e_B of the complementary
/// degree.
DegreeSpan ideal_degree_span(int n, const std::vector<ExtVector>& generators, int d,
                             const PrimeField& field);

/// Leading monomials degree by degree (pivots of the rref with columns in
/// descending rlex), minimalized.
MonomialIdeal initial_ideal(const std::vector<ExtVector>& generators, int n, const PrimeField& field);

/// gin under revlex. Exterior input gives an exterior result. Symmetric
/// input is computed through degree_cap (0 means max generator degree + 1)
/// and returned in the general symmetric flavor. Throws GenericityFailure
/// if trials disagree or the result is not strongly stable.
MonomialIdeal gin_rlex(const MonomialIdeal& ideal, const GenericContext& ctx, int degree_cap = 0);

/// One trial of the exterior gin with an explicit transform.
MonomialIdeal gin_exterior_with(const MonomialIdeal& ideal, const MatrixFp& gamma,
                                const PrimeField& field);
/// One trial of the symmetric gin with an explicit transform.
MonomialIdeal gin_symmetric_with(const MonomialIdeal& ideal, const MatrixFp& gamma, int degree_cap,
                                 const PrimeField& field);

/// Rank-increment construction of the shifted complex from products of
/// generic linear forms in the face ring.
SimplicialComplex exterior_shift_spans(const SimplicialComplex& delta, const GenericContext& ctx);
SimplicialComplex exterior_shift_spans_with(const SimplicialComplex& delta, const MatrixFp& gamma,
                                            const PrimeField& field);

/// Both routes, cross-checked. Throws ShiftMismatch or GenericityFailure.
SimplicialComplex exterior_shift(const SimplicialComplex& delta, const GenericContext& ctx);

struct ShiftResult {
  SimplicialComplex shifted;
  MonomialIdeal gin;  // gin of J_delta, the face ideal of `shifted`
};

/// exterior_shift that also hands back the gin it checked against.
ShiftResult exterior_shift_with_gin(const SimplicialComplex& delta, const GenericContext& ctx);

}  // namespace shiftkit

#endif
