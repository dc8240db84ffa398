#ifndef SHIFTKIT_SIMPLICIAL_HPP
#define SHIFTKIT_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "shiftkit/exterior.hpp"
#include "shiftkit/linalg.hpp"

namespace shiftkit {

constexpr int kMaxComplexVertices = 20;

/// Face counts f_{-1}, f_0, ..., f_dim; counts[k] is the number of faces
/// with k elements.
struct FVector {
  std::vector<std::uint64_t> counts;

  std::uint64_t f(int dim) const { return counts[static_cast<std::size_t>(dim + 1)]; }
  bool operator==(const FVector&) const = default;
};

/// Downward closed family of subsets of [n] containing the empty set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int n() const { return n_; }
  int dim() const { return static_cast<int>(by_size_.size()) - 2; }
  bool full_support() const { return full_support_; }
  bool contains(Mask face) const { return faces_.count(face) != 0; }
  std::size_t size() const { return faces_.size(); }

  /// Faces with exactly k elements, ascending in lex order.
  const std::vector<Mask>& faces_of_size(int k) const;
  /// All faces, by size and then lex order.
  std::vector<Mask> faces() const;
  /// Inclusion-maximal faces, by size and then lex order.
  std::vector<Mask> facets() const;

  bool operator==(const SimplicialComplex& other) const;

  friend SimplicialComplex closure_from_faces(int n, const std::vector<Mask>& generators);

 private:
  int n_ = 0;
  bool full_support_ = false;
  std::unordered_set<Mask> faces_;
  std::vector<std::vector<Mask>> by_size_;
};

/// Smallest complex on [n] containing the generators and the empty set.
/// Throws InvalidArgument if a generator leaves [n].
SimplicialComplex closure_from_faces(int n, const std::vector<Mask>& generators);

/// The complex on [n] whose faces are the sets containing none of the given
/// non-faces.
SimplicialComplex complex_from_nonfaces(int n, const std::vector<Mask>& nonfaces);

SimplicialComplex full_simplex(int n);

std::vector<Mask> minimal_nonfaces(const SimplicialComplex& delta);

FVector f_vector(const SimplicialComplex& delta);

/// Exchange condition with smaller vertices: F in delta, i in F, j < i
/// imply (F \ {i}) + {j} in delta.
bool is_shifted(const SimplicialComplex& delta);

/// dim H~_k(delta; F_p) for k = -1 .. dim delta; entry k+1 holds degree k.
std::vector<std::uint64_t> reduced_homology_dims(const SimplicialComplex& delta,
                                                 const PrimeField& field);

/// Some reduced homology group, degree -1 included, is nonzero.
bool is_nonacyclic(const SimplicialComplex& delta, const PrimeField& field);

struct ConeSplit {
  int r = 0;
  SimplicialComplex gamma;  // on [n - r], vertex v renamed to v - r
};

/// Largest r with delta = 2^[r] * gamma. Throws NotShifted.
ConeSplit split_cone_part(const SimplicialComplex& delta);

/// 2^[r] * gamma on [r + gamma.n()], gamma shifted up by r.
SimplicialComplex join_with_simplex(int r, const SimplicialComplex& gamma);

/// Relabels vertices by a permutation: vertex v goes to perm[v - 1].
SimplicialComplex relabel(const SimplicialComplex& delta, const std::vector<int>& perm);

}  // namespace shiftkit

#endif
