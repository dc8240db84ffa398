#include "shiftkit/generic.hpp"

#include <algorithm>
#include <map>

#include "shiftkit/error.hpp"

namespace shiftkit {

void GenericContext::validate() const {
  require(trials >= 2, ErrorKind::InvalidArgument,
          "generic computations need at least 2 trials, got " + std::to_string(trials));
}

Rng GenericContext::rng(std::uint64_t purpose, int trial) const {
  return derive_rng(seed, (purpose << 32) | static_cast<std::uint32_t>(trial));
}

bool ExtVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

ExtVector ext_monomial(int n, Mask m) {
  const auto& idx = monomial_index(n);
  ExtVector v{n, popcount(m), std::vector<std::uint64_t>(idx.count(popcount(m)), 0)};
  v.coeffs[idx.position(m)] = 1;
  return v;
}

ExtVector wedge_linear(const ExtVector& a, std::span<const std::uint64_t> form, const PrimeField& field) {
  const int n = a.n;
  const auto& idx = monomial_index(n);
  ExtVector out{n, a.degree + 1, {}};
  if (a.degree + 1 > n) return out;
  out.coeffs.assign(idx.count(a.degree + 1), 0);
  const auto& src = idx.of_degree(a.degree);
  for (std::size_t p = 0; p < src.size(); ++p) {
    const std::uint64_t c = a.coeffs[p];
    if (c == 0) continue;
    const Mask g = src[p];
    for (int k = 1; k <= n; ++k) {
      if ((g & bit(k)) || form[static_cast<std::size_t>(k - 1)] == 0) continue;
      std::uint64_t term = field.mul(c, form[static_cast<std::size_t>(k - 1)]);
      if (wedge_sign(g, bit(k)) < 0) term = field.neg(term);
      auto& slot = out.coeffs[idx.position(g | bit(k))];
      slot = field.add(slot, term);
    }
  }
  return out;
}

ExtVector wedge_monomial(Mask b, const ExtVector& g, const PrimeField& field) {
  const int n = g.n;
  const auto& idx = monomial_index(n);
  const int d = g.degree + popcount(b);
  ExtVector out{n, d, {}};
  if (d > n) return out;
  out.coeffs.assign(idx.count(d), 0);
  const auto& src = idx.of_degree(g.degree);
  for (std::size_t p = 0; p < src.size(); ++p) {
    const std::uint64_t c = g.coeffs[p];
    if (c == 0 || (src[p] & b)) continue;
    auto& slot = out.coeffs[idx.position(src[p] | b)];
    slot = field.add(slot, wedge_sign(b, src[p]) < 0 ? field.neg(c) : c);
  }
  return out;
}

ExteriorImage::ExteriorImage(const MatrixFp& gamma, const PrimeField& field)
    : n_(static_cast<int>(gamma.rows())), field_(&field) {
  require(gamma.rows() == gamma.cols(), ErrorKind::InvalidArgument, "transform must be square");
  for (std::size_t k = 0; k < gamma.cols(); ++k) {
    std::vector<std::uint64_t> col(gamma.rows());
    for (std::size_t l = 0; l < gamma.rows(); ++l) col[l] = gamma.at(l, k);
    columns_.push_back(std::move(col));
  }
}

const ExtVector& ExteriorImage::of(Mask f) {
  auto it = memo_.find(f);
  if (it != memo_.end()) return it->second;
  ExtVector v;
  if (f == 0) {
    v = ext_monomial(n_, 0);
  } else {
    const int top = max_vertex(f);
    const ExtVector& rest = of(f & ~bit(top));
    v = wedge_linear(rest, columns_[static_cast<std::size_t>(top - 1)], *field_);
  }
  return memo_.emplace(f, std::move(v)).first->second;
}

namespace {

void require_transform(const MatrixFp& gamma, int n, const PrimeField& field) {
  require(static_cast<int>(gamma.rows()) == n && gamma.rows() == gamma.cols(),
          ErrorKind::InvalidArgument, "transform size differs from n");
  require(determinant(gamma, field) != 0, ErrorKind::InvalidArgument, "transform is singular");
}

std::string trial_mismatch(const std::string& what, int trial) {
  return what + " differs between trial 0 and trial " + std::to_string(trial) +
         "; raise --trials or change --prime";
}

}  // namespace

std::vector<ExtVector> apply_transform(const MatrixFp& gamma, const MonomialIdeal& ideal,
                                       const PrimeField& field) {
  require(ideal.ring() == Ring::Exterior, ErrorKind::InvalidArgument,
          "apply_transform expects an exterior ideal");
  require_transform(gamma, ideal.n(), field);
  ExteriorImage img(gamma, field);
  std::vector<ExtVector> out;
  for (Mask g : ideal.masks()) out.push_back(img.of(g));
  return out;
}

DegreeSpan ideal_degree_span(int n, const std::vector<ExtVector>& generators, int d,
                             const PrimeField& field) {
  DegreeSpan span{d, MatrixFp(0, static_cast<std::size_t>(binomial(n, d)))};
  if (d < 0 || d > n) return span;
  const auto& idx = monomial_index(n);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : generators) {
    if (g.degree > d) continue;
    for (Mask b : idx.of_degree(d - g.degree)) {
      ExtVector r = wedge_monomial(b, g, field);
      if (!r.is_zero()) rows.push_back(std::move(r.coeffs));
    }
  }
  span.matrix = MatrixFp::from_rows(rows, idx.count(d));
  return span;
}

MonomialIdeal initial_ideal(const std::vector<ExtVector>& generators, int n, const PrimeField& field) {
  std::vector<Mask> leading;
  if (!generators.empty()) {
    int lo = n;
    for (const auto& g : generators) lo = std::min(lo, g.degree);
    const auto& idx = monomial_index(n);
    for (int d = lo; d <= n; ++d) {
      const RrefResult red = rref(ideal_degree_span(n, generators, d, field).matrix, field);
      for (std::size_t c : red.pivots) leading.push_back(idx.of_degree(d)[c]);
    }
  }
  return minimalize(Ring::Exterior, n, std::move(leading));
}

MonomialIdeal gin_exterior_with(const MonomialIdeal& ideal, const MatrixFp& gamma,
                                const PrimeField& field) {
  const int n = ideal.n();
  require_transform(gamma, n, field);
  if (ideal.is_zero()) return ideal;
  ExteriorImage img(gamma, field);
  const auto& idx = monomial_index(n);
  std::vector<Mask> leading;
  for (int d = ideal.min_degree(); d <= n; ++d) {
    const auto members = ideal.squarefree_members(d);
    if (members.size() == idx.count(d)) {
      // The whole degree lies in the ideal, and so does everything above.
      leading.insert(leading.end(), members.begin(), members.end());
      break;
    }
    if (members.empty()) continue;
    MatrixFp m(members.size(), idx.count(d));
    for (std::size_t r = 0; r < members.size(); ++r) {
      const auto& v = img.of(members[r]).coeffs;
      std::copy(v.begin(), v.end(), m.row(r).begin());
    }
    const RrefResult red = rref(m, field);
    for (std::size_t c : red.pivots) leading.push_back(idx.of_degree(d)[c]);
  }
  return minimalize(Ring::Exterior, n, std::move(leading));
}

namespace {

using SymPoly = std::vector<std::uint64_t>;  // coefficients in sym_index(n, d) order

class SymmetricImage {
 public:
  SymmetricImage(const MatrixFp& gamma, const PrimeField& field)
      : n_(static_cast<int>(gamma.rows())), gamma_(&gamma), field_(&field) {}

  const SymPoly& of(const Exponents& a) {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    const int d = total_degree(a);
    SymPoly out(sym_index(n_, d).count(), 0);
    if (d == 0) {
      out[0] = 1;
    } else {
      int top = n_;
      while (a[static_cast<std::size_t>(top - 1)] == 0) --top;
      Exponents rest = a;
      --rest[static_cast<std::size_t>(top - 1)];
      const SymPoly& prev = of(rest);
      const auto& src = sym_index(n_, d - 1);
      const auto& dst = sym_index(n_, d);
      for (std::size_t p = 0; p < src.count(); ++p) {
        if (prev[p] == 0) continue;
        Exponents m = src.monomials()[p];
        for (int k = 0; k < n_; ++k) {
          const std::uint64_t g = gamma_->at(static_cast<std::size_t>(k), static_cast<std::size_t>(top - 1));
          if (g == 0) continue;
          ++m[static_cast<std::size_t>(k)];
          auto& slot = out[dst.position(m)];
          slot = field_->add(slot, field_->mul(prev[p], g));
          --m[static_cast<std::size_t>(k)];
        }
      }
    }
    return memo_.emplace(a, std::move(out)).first->second;
  }

 private:
  int n_;
  const MatrixFp* gamma_;
  const PrimeField* field_;
  std::map<Exponents, SymPoly> memo_;
};

}  // namespace

MonomialIdeal gin_symmetric_with(const MonomialIdeal& ideal, const MatrixFp& gamma, int degree_cap,
                                 const PrimeField& field) {
  const int n = ideal.n();
  require_transform(gamma, n, field);
  if (ideal.is_zero()) return MonomialIdeal(Ring::SymmetricGeneral, n);
  SymmetricImage img(gamma, field);
  std::vector<Exponents> leading;
  for (int d = ideal.min_degree(); d <= degree_cap; ++d) {
    const auto& idx = sym_index(n, d);
    std::vector<const Exponents*> members;
    for (const auto& a : idx.monomials())
      if (ideal.contains(a)) members.push_back(&a);
    if (members.size() == idx.count()) {
      for (const auto* a : members) leading.push_back(*a);
      break;
    }
    if (members.empty()) continue;
    MatrixFp m(members.size(), idx.count());
    for (std::size_t r = 0; r < members.size(); ++r) {
      const auto& v = img.of(*members[r]);
      std::copy(v.begin(), v.end(), m.row(r).begin());
    }
    const RrefResult red = rref(m, field);
    for (std::size_t c : red.pivots) leading.push_back(idx.monomials()[c]);
  }
  return minimalize(n, std::move(leading));
}

MonomialIdeal gin_rlex(const MonomialIdeal& ideal, const GenericContext& ctx, int degree_cap) {
  ctx.validate();
  const int n = ideal.n();
  const bool exterior = ideal.ring() == Ring::Exterior;
  if (ideal.is_zero()) return exterior ? ideal : MonomialIdeal(Ring::SymmetricGeneral, n);
  ctx.field.require_exceeds(static_cast<std::uint64_t>(n));
  if (!exterior) {
    if (degree_cap == 0) degree_cap = ideal.max_degree() + 1;
    require(degree_cap >= ideal.max_degree(), ErrorKind::InvalidArgument,
            "degree cap below the largest generator degree");
  }
  MonomialIdeal first;
  for (int t = 0; t < ctx.trials; ++t) {
    const MatrixFp gamma = random_invertible(static_cast<std::size_t>(n), ctx.field,
                                             ctx.rng(exterior ? purpose::kGin : purpose::kGinSymmetric, t));
    MonomialIdeal g = exterior ? gin_exterior_with(ideal, gamma, ctx.field)
                               : gin_symmetric_with(ideal, gamma, degree_cap, ctx.field);
    if (t == 0)
      first = std::move(g);
    else if (!(g == first))
      fail(ErrorKind::GenericityFailure, trial_mismatch("gin of " + ideal.render(), t));
  }
  require(stability_flags(first).strongly_stable, ErrorKind::GenericityFailure,
          "gin " + first.render() + " is not strongly stable; the transforms were not generic");
  return first;
}

SimplicialComplex exterior_shift_spans_with(const SimplicialComplex& delta, const MatrixFp& gamma,
                                            const PrimeField& field) {
  const int n = delta.n();
  require(delta.full_support(), ErrorKind::InvalidArgument,
          "shifting needs every vertex to be a face");
  require_transform(gamma, n, field);
  ExteriorImage img(gamma, field);
  const auto& idx = monomial_index(n);
  std::vector<Mask> chosen;
  for (int i = 0; i <= delta.dim() + 1; ++i) {
    const auto& faces = delta.faces_of_size(i);
    std::vector<std::size_t> cols;
    for (Mask f : faces) cols.push_back(idx.position(f));
    EchelonBasis basis(faces.size(), field);
    std::vector<std::uint64_t> row(faces.size());
    // Smallest candidates first: of_degree runs from the top of the order.
    const auto& candidates = idx.of_degree(i);
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      const Mask a = *it;
      if (basis.full()) break;
      const auto& image = img.of(a).coeffs;
      for (std::size_t c = 0; c < cols.size(); ++c) row[c] = image[cols[c]];
      if (basis.insert(row)) chosen.push_back(a);
    }
  }
  return closure_from_faces(n, chosen);
}

SimplicialComplex exterior_shift_spans(const SimplicialComplex& delta, const GenericContext& ctx) {
  ctx.validate();
  ctx.field.require_exceeds(static_cast<std::uint64_t>(delta.n()));
  SimplicialComplex first;
  for (int t = 0; t < ctx.trials; ++t) {
    const MatrixFp gamma = random_invertible(static_cast<std::size_t>(std::max(delta.n(), 1)), ctx.field,
                                             ctx.rng(purpose::kShiftSpans, t));
    if (delta.n() == 0) return delta;
    SimplicialComplex s = exterior_shift_spans_with(delta, gamma, ctx.field);
    if (t == 0)
      first = std::move(s);
    else if (!(s == first))
      fail(ErrorKind::GenericityFailure, trial_mismatch("shifted complex", t));
  }
  return first;
}

ShiftResult exterior_shift_with_gin(const SimplicialComplex& delta, const GenericContext& ctx) {
  SimplicialComplex by_spans = exterior_shift_spans(delta, ctx);
  MonomialIdeal gin = gin_rlex(face_ideal(delta, Ring::Exterior), ctx);
  SimplicialComplex by_gin = complex_of(gin);
  require(by_spans == by_gin, ErrorKind::ShiftMismatch,
          "span construction and gin complement disagree on the shifted complex");
  require(is_shifted(by_spans), ErrorKind::GenericityFailure, "shifted complex fails the exchange test");
  require(f_vector(by_spans) == f_vector(delta), ErrorKind::GenericityFailure,
          "shifting changed the f-vector");
  return {std::move(by_spans), std::move(gin)};
}

SimplicialComplex exterior_shift(const SimplicialComplex& delta, const GenericContext& ctx) {
  return exterior_shift_with_gin(delta, ctx).shifted;
}

}  // namespace shiftkit
