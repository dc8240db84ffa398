#include "shiftkit/simplicial.hpp"

#include <algorithm>

#include "shiftkit/error.hpp"

namespace shiftkit {

namespace {

bool lex_less(Mask a, Mask b) { return cmp_lex_sets(a, b) < 0; }

bool size_then_lex(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  for (;;) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

const std::vector<Mask> kNoFaces;

}  // namespace

const std::vector<Mask>& SimplicialComplex::faces_of_size(int k) const {
  if (k < 0 || k >= static_cast<int>(by_size_.size())) return kNoFaces;
  return by_size_[static_cast<std::size_t>(k)];
}

std::vector<Mask> SimplicialComplex::faces() const {
  std::vector<Mask> out;
  out.reserve(faces_.size());
  for (const auto& bucket : by_size_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<Mask> SimplicialComplex::facets() const {
  std::vector<Mask> out;
  for (const auto& bucket : by_size_) {
    for (Mask f : bucket) {
      bool maximal = true;
      for (int v = 1; v <= n_ && maximal; ++v)
        if (!(f & bit(v)) && contains(f | bit(v))) maximal = false;
      if (maximal) out.push_back(f);
    }
  }
  return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return n_ == other.n_ && by_size_ == other.by_size_;
}

SimplicialComplex closure_from_faces(int n, const std::vector<Mask>& generators) {
  require(n >= 0 && n <= kMaxComplexVertices, ErrorKind::SizeLimit,
          "complexes support n <= 20, got " + std::to_string(n));
  SimplicialComplex c;
  c.n_ = n;
  c.faces_.insert(0);
  for (Mask g : generators) {
    require((g & ~full_mask(n)) == 0, ErrorKind::InvalidArgument,
            "face " + render_set(g) + " is not a subset of [" + std::to_string(n) + "]");
    if (c.faces_.count(g)) continue;
    for_each_submask(g, [&](Mask s) { c.faces_.insert(s); });
  }
  int max_size = 0;
  for (Mask f : c.faces_) max_size = std::max(max_size, popcount(f));
  c.by_size_.assign(static_cast<std::size_t>(max_size + 1), {});
  for (Mask f : c.faces_) c.by_size_[static_cast<std::size_t>(popcount(f))].push_back(f);
  for (auto& bucket : c.by_size_) std::sort(bucket.begin(), bucket.end(), lex_less);
  c.full_support_ = true;
  for (int v = 1; v <= n; ++v) c.full_support_ = c.full_support_ && c.contains(bit(v));
  return c;
}

SimplicialComplex complex_from_nonfaces(int n, const std::vector<Mask>& nonfaces) {
  require(n >= 0 && n <= kMaxComplexVertices, ErrorKind::SizeLimit,
          "complexes support n <= 20, got " + std::to_string(n));
  std::vector<Mask> faces;
  const Mask top = full_mask(n);
  for (Mask s = 0;; ++s) {
    bool ok = true;
    for (Mask g : nonfaces)
      if ((s & g) == g) {
        ok = false;
        break;
      }
    if (ok) faces.push_back(s);
    if (s == top) break;
  }
  return closure_from_faces(n, faces);
}

SimplicialComplex full_simplex(int n) { return closure_from_faces(n, {full_mask(n)}); }

std::vector<Mask> minimal_nonfaces(const SimplicialComplex& delta) {
  std::vector<Mask> out;
  std::unordered_set<Mask> seen;
  const int n = delta.n();
  auto consider = [&](Mask cand) {
    if (delta.contains(cand) || !seen.insert(cand).second) return;
    for (Mask rest = cand; rest; rest &= rest - 1) {
      const Mask low = rest & (~rest + 1);
      if (!delta.contains(cand & ~low)) return;
    }
    out.push_back(cand);
  };
  // Every minimal non-face is a face plus one vertex.
  for (Mask f : delta.faces())
    for (int v = 1; v <= n; ++v)
      if (!(f & bit(v))) consider(f | bit(v));
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

FVector f_vector(const SimplicialComplex& delta) {
  FVector fv;
  for (int k = 0; k <= delta.dim() + 1; ++k) fv.counts.push_back(delta.faces_of_size(k).size());
  return fv;
}

bool is_shifted(const SimplicialComplex& delta) {
  for (Mask f : delta.faces()) {
    for (Mask rest = f; rest; rest &= rest - 1) {
      const int i = min_vertex(rest);
      for (int j = 1; j < i; ++j) {
        if (f & bit(j)) continue;
        if (!delta.contains((f & ~bit(i)) | bit(j))) return false;
      }
    }
  }
  return true;
}

namespace {

// Boundary map from faces of size k+1 to faces of size k.
MatrixFp boundary_matrix(const SimplicialComplex& delta, int k, const PrimeField& field) {
  const auto& cols = delta.faces_of_size(k + 1);
  const auto& rows = delta.faces_of_size(k);
  MatrixFp m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int position = 0;
    for (int v : vertices(cols[c])) {
      const Mask face = cols[c] & ~bit(v);
      const auto it = std::lower_bound(rows.begin(), rows.end(), face, lex_less);
      m.at(static_cast<std::size_t>(it - rows.begin()), c) = (position % 2 == 0) ? 1 : field.neg(1);
      ++position;
    }
  }
  return m;
}

}  // namespace

std::vector<std::uint64_t> reduced_homology_dims(const SimplicialComplex& delta,
                                                 const PrimeField& field) {
  const int dim = delta.dim();
  // ranks[k + 1] = rank of the boundary map leaving faces of dimension k.
  std::vector<std::uint64_t> ranks(static_cast<std::size_t>(dim + 3), 0);
  for (int k = 0; k <= dim; ++k)
    ranks[static_cast<std::size_t>(k + 1)] = rank(boundary_matrix(delta, k, field), field);
  std::vector<std::uint64_t> out;
  for (int k = -1; k <= dim; ++k) {
    const std::uint64_t chains = delta.faces_of_size(k + 1).size();
    out.push_back(chains - ranks[static_cast<std::size_t>(k + 1)] -
                  ranks[static_cast<std::size_t>(k + 2)]);
  }
  return out;
}

bool is_nonacyclic(const SimplicialComplex& delta, const PrimeField& field) {
  for (std::uint64_t h : reduced_homology_dims(delta, field))
    if (h != 0) return true;
  return false;
}

ConeSplit split_cone_part(const SimplicialComplex& delta) {
  require(is_shifted(delta), ErrorKind::NotShifted, "split_cone_part needs a shifted complex");
  const int n = delta.n();
  const auto faces = delta.faces();
  int r = 0;
  while (r < n) {
    const Mask cone = full_mask(r + 1);
    bool ok = std::all_of(faces.begin(), faces.end(), [&](Mask f) { return delta.contains(f | cone); });
    if (!ok) break;
    ++r;
  }
  std::vector<Mask> rest;
  const Mask cone = full_mask(r);
  for (Mask f : faces)
    if (!(f & cone)) rest.push_back(f >> r);
  return {r, closure_from_faces(n - r, rest)};
}

SimplicialComplex join_with_simplex(int r, const SimplicialComplex& gamma) {
  std::vector<Mask> gens;
  for (Mask g : gamma.facets()) gens.push_back(full_mask(r) | (g << r));
  return closure_from_faces(r + gamma.n(), gens);
}

SimplicialComplex relabel(const SimplicialComplex& delta, const std::vector<int>& perm) {
  require(static_cast<int>(perm.size()) == delta.n(), ErrorKind::InvalidArgument,
          "relabel permutation size mismatch");
  std::vector<Mask> gens;
  for (Mask f : delta.facets()) {
    Mask g = 0;
    for (int v : vertices(f)) g |= bit(perm[static_cast<std::size_t>(v - 1)]);
    gens.push_back(g);
  }
  return closure_from_faces(delta.n(), gens);
}

}  // namespace shiftkit
