#include "shiftkit/cartan.hpp"

#include <algorithm>

#include "shiftkit/error.hpp"

namespace shiftkit {

QuotientBasis::QuotientBasis(int n, int d, const MatrixFp& span, const PrimeField& field)
    : n_(n), d_(d), field_(&field), red_(rref(span, field)) {
  if (d < 0 || d > n) return;
  const auto& monos = monomial_index(n).of_degree(d);
  std::size_t p = 0;
  for (std::size_t c = 0; c < monos.size(); ++c) {
    if (p < red_.pivots.size() && red_.pivots[p] == c) {
      ++p;
      continue;
    }
    standard_cols_.push_back(c);
    standard_.push_back(monos[c]);
  }
}

std::vector<std::uint64_t> QuotientBasis::normal_form(std::span<const std::uint64_t> v) const {
  std::vector<std::uint64_t> w(v.begin(), v.end());
  // Rows of a reduced echelon form vanish on the other pivots, so one pass
  // clears every pivot column.
  for (std::size_t k = 0; k < red_.pivots.size(); ++k) {
    const std::uint64_t f = w[red_.pivots[k]];
    if (f == 0) continue;
    const auto row = red_.reduced.row(k);
    for (std::size_t c = 0; c < w.size(); ++c)
      if (row[c] != 0) w[c] = field_->sub(w[c], field_->mul(f, row[c]));
  }
  std::vector<std::uint64_t> out(standard_cols_.size());
  for (std::size_t q = 0; q < standard_cols_.size(); ++q) out[q] = w[standard_cols_[q]];
  return out;
}

QuotientBasis quotient_basis(const MonomialIdeal& ideal, int d, const PrimeField& field) {
  require(ideal.ring() == Ring::Exterior, ErrorKind::InvalidArgument, "quotient bases are over E");
  const int n = ideal.n();
  if (d < 0 || d > n) return QuotientBasis(n, d, MatrixFp(), field);
  const auto& idx = monomial_index(n);
  const auto members = ideal.squarefree_members(d);
  MatrixFp span(members.size(), idx.count(d));
  for (std::size_t r = 0; r < members.size(); ++r) span.at(r, idx.position(members[r])) = 1;
  return QuotientBasis(n, d, span, field);
}

CartanComplex::CartanComplex(const MonomialIdeal& ideal, const MatrixFp& v, const PrimeField& field)
    : n_(ideal.n()), r_(static_cast<int>(v.cols())), field_(&field) {
  require(ideal.ring() == Ring::Exterior, ErrorKind::InvalidArgument, "Cartan complexes are over E");
  require(static_cast<int>(v.rows()) == n_, ErrorKind::InvalidArgument,
          "sequence vectors must have n coordinates");
  require(r_ >= 1 && r_ <= n_, ErrorKind::InvalidArgument, "sequence length must lie in [1, n]");
  require(rank(v, field) == static_cast<std::size_t>(r_), ErrorKind::DependentSequence,
          "sequence elements are linearly dependent");
  for (int d = 0; d <= n_; ++d) bases_.push_back(quotient_basis(ideal, d, field));
  mult_.resize(static_cast<std::size_t>(r_));
  for (int k = 0; k < r_; ++k) {
    std::vector<std::uint64_t> form(static_cast<std::size_t>(n_));
    for (int l = 0; l < n_; ++l) form[static_cast<std::size_t>(l)] = v.at(static_cast<std::size_t>(l), static_cast<std::size_t>(k));
    for (int d = 0; d < n_; ++d) {
      const auto& src = bases_[static_cast<std::size_t>(d)];
      const auto& dst = bases_[static_cast<std::size_t>(d + 1)];
      MatrixFp m(dst.size(), src.size());
      for (std::size_t q = 0; q < src.size(); ++q) {
        // v ^ m = (-1)^{deg m} m ^ v
        ExtVector prod = wedge_linear(ext_monomial(n_, src.standard()[q]), form, field);
        if (d % 2 == 1)
          for (auto& c : prod.coeffs) c = field.neg(c);
        const auto nf = dst.normal_form(prod.coeffs);
        for (std::size_t p = 0; p < nf.size(); ++p) m.at(p, q) = nf[p];
      }
      mult_[static_cast<std::size_t>(k)].push_back(std::move(m));
    }
  }
}

const std::vector<std::vector<int>>& CartanComplex::multi_indices(int i) const {
  auto it = indices_.find(i);
  if (it != indices_.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(r_), 0);
  // Compositions of i into r parts, lexicographic.
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == r_ - 1) {
      a[static_cast<std::size_t>(k)] = left;
      out.push_back(a);
      return;
    }
    for (int e = left; e >= 0; --e) {
      a[static_cast<std::size_t>(k)] = e;
      self(self, k + 1, left - e);
    }
  };
  if (i >= 0) rec(rec, 0, i);
  auto& pos = positions_[i];
  for (std::size_t p = 0; p < out.size(); ++p) pos.emplace(out[p], p);
  return indices_.emplace(i, std::move(out)).first->second;
}

std::size_t CartanComplex::multi_index_position(int i, const std::vector<int>& a) const {
  multi_indices(i);
  return positions_.at(i).at(a);
}

const MatrixFp& CartanComplex::multiplication(int k, int d) const {
  return mult_[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
}

std::size_t CartanComplex::dim(int i, int j) const {
  const int d = j - i;
  if (i < 0 || d < 0 || d > n_) return 0;
  return static_cast<std::size_t>(binomial(i + r_ - 1, i)) * bases_[static_cast<std::size_t>(d)].size();
}

MatrixFp CartanComplex::differential(int i, int j) const {
  const std::size_t cols = dim(i, j);
  const std::size_t rows = dim(i - 1, j);
  MatrixFp m(rows, cols);
  if (i <= 0 || rows == 0 || cols == 0) return m;
  const int d = j - i;
  const std::size_t src_size = bases_[static_cast<std::size_t>(d)].size();
  const std::size_t dst_size = bases_[static_cast<std::size_t>(d + 1)].size();
  const auto& as = multi_indices(i);
  for (std::size_t ai = 0; ai < as.size(); ++ai) {
    std::vector<int> a = as[ai];
    for (int k = 0; k < r_; ++k) {
      if (a[static_cast<std::size_t>(k)] == 0) continue;
      --a[static_cast<std::size_t>(k)];
      const std::size_t bi = multi_index_position(i - 1, a);
      ++a[static_cast<std::size_t>(k)];
      const MatrixFp& mu = multiplication(k, d);
      for (std::size_t p = 0; p < dst_size; ++p)
        for (std::size_t q = 0; q < src_size; ++q) {
          const std::uint64_t x = mu.at(p, q);
          if (x == 0) continue;
          auto& slot = m.at(bi * dst_size + p, ai * src_size + q);
          slot = field_->add(slot, x);
        }
    }
  }
  return m;
}

std::size_t CartanComplex::differential_rank(int i, int j) {
  if (i <= 0) return 0;
  auto it = ranks_.find({i, j});
  if (it != ranks_.end()) return it->second;
  const std::size_t r = rank(differential(i, j), *field_);
  ranks_.emplace(std::make_pair(i, j), r);
  return r;
}

std::uint64_t CartanComplex::homology(int i, int j) {
  const std::size_t c = dim(i, j);
  if (c == 0) return 0;
  return c - differential_rank(i, j) - differential_rank(i + 1, j);
}

MatrixFp cartan_differential(const MonomialIdeal& ideal, const MatrixFp& v, int i, int j,
                             const PrimeField& field) {
  return CartanComplex(ideal, v, field).differential(i, j);
}

std::uint64_t cartan_homology_dim(const MonomialIdeal& ideal, const MatrixFp& v, int i, int j,
                                  const PrimeField& field) {
  CartanComplex c(ideal, v, field);
  return c.homology(i, j);
}

namespace {

// The neighbouring chain group i + 1 is sized but not index-limited.
void check_limits(const MonomialIdeal& ideal, int i, int j, const CartanLimits& limits,
                  const PrimeField& field, bool neighbour = false) {
  const int n = ideal.n();
  require(n <= limits.max_n, ErrorKind::SizeLimit,
          "Cartan homology limited to n <= " + std::to_string(limits.max_n));
  require(neighbour || i <= limits.max_i, ErrorKind::SizeLimit,
          "Cartan homology limited to i <= " + std::to_string(limits.max_i));
  const int d = j - i;
  if (d < 0 || d > n) return;
  const std::uint64_t cells = binomial(i + n - 1, i) * quotient_basis(ideal, d, field).size();
  require(cells <= limits.max_cells, ErrorKind::SizeLimit,
          "Cartan chain group too large (" + std::to_string(cells) + " cells)");
}

}  // namespace

BettiTable betti_E_table(const MonomialIdeal& ideal, const GenericContext& ctx, int i_max, int j_max,
                         const CartanLimits& limits) {
  ctx.validate();
  const int n = ideal.n();
  require(ideal.ring() == Ring::Exterior, ErrorKind::InvalidArgument, "betti_E expects an exterior ideal");
  require(n >= 1, ErrorKind::InvalidArgument, "betti_E needs n >= 1");
  ctx.field.require_exceeds(static_cast<std::uint64_t>(n));
  for (int i = 0; i <= i_max; ++i)
    for (int j = 0; j <= j_max; ++j) {
      check_limits(ideal, i, i + j, limits, ctx.field);
      check_limits(ideal, i + 1, i + j, limits, ctx.field, true);
    }
  BettiTable first;
  for (int t = 0; t < ctx.trials; ++t) {
    const MatrixFp v = random_invertible(static_cast<std::size_t>(n), ctx.field, ctx.rng(purpose::kCartan, t));
    CartanComplex complex(ideal, v, ctx.field);
    BettiTable table;
    for (int i = 0; i <= i_max; ++i)
      for (int j = 0; j <= j_max; ++j) table.set(i, i + j, complex.homology(i, i + j));
    if (t == 0)
      first = std::move(table);
    else if (!(table == first))
      fail(ErrorKind::GenericityFailure, "exterior Betti numbers differ between trials");
  }
  return first;
}

std::uint64_t betti_E(const MonomialIdeal& ideal, const GenericContext& ctx, int i, int j,
                      const CartanLimits& limits) {
  ctx.validate();
  const int n = ideal.n();
  require(ideal.ring() == Ring::Exterior, ErrorKind::InvalidArgument, "betti_E expects an exterior ideal");
  require(n >= 1, ErrorKind::InvalidArgument, "betti_E needs n >= 1");
  require(i >= 0, ErrorKind::IndexOutOfRange, "negative homological degree");
  check_limits(ideal, i, j, limits, ctx.field);
  check_limits(ideal, i + 1, j, limits, ctx.field, true);
  std::uint64_t first = 0;
  for (int t = 0; t < ctx.trials; ++t) {
    const MatrixFp v = random_invertible(static_cast<std::size_t>(n), ctx.field, ctx.rng(purpose::kCartan, t));
    const std::uint64_t h = cartan_homology_dim(ideal, v, i, j, ctx.field);
    if (t == 0)
      first = h;
    else if (h != first)
      fail(ErrorKind::GenericityFailure, "exterior Betti number differs between trials");
  }
  return first;
}

BettiTable betti_E_multigraded(const MonomialIdeal& ideal, int i_max, int j_max, const PrimeField& field) {
  require(ideal.ring() == Ring::Exterior, ErrorKind::InvalidArgument, "betti_E expects an exterior ideal");
  const int n = ideal.n();
  require(n <= kMaxComplexVertices, ErrorKind::SizeLimit, "multigraded Betti numbers need n <= 20");
  BettiTable table;
  const Mask top = full_mask(n);
  for (Mask u = 0;; ++u) {
    // Chain groups indexed by |F| for faces F of the restriction to u.
    std::vector<std::vector<Mask>> chains(static_cast<std::size_t>(popcount(u) + 2));
    Mask f = u;
    for (;;) {
      if (!ideal.contains(f)) chains[static_cast<std::size_t>(popcount(f))].push_back(f);
      if (f == 0) break;
      f = (f - 1) & u;
    }
    const int size = popcount(u);
    // up[s]: rank of the map from size-s to size-(s+1) chains.
    std::vector<std::size_t> up(static_cast<std::size_t>(size + 2), 0);
    for (int s = 0; s < size; ++s) {
      const auto& src = chains[static_cast<std::size_t>(s)];
      const auto& dst = chains[static_cast<std::size_t>(s + 1)];
      if (src.empty() || dst.empty()) continue;
      MatrixFp m(dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c)
        for (int k : vertices(u & ~src[c])) {
          const auto it = std::find(dst.begin(), dst.end(), src[c] | bit(k));
          if (it == dst.end()) continue;
          m.at(static_cast<std::size_t>(it - dst.begin()), c) =
              wedge_sign(bit(k), src[c]) > 0 ? 1 : field.neg(1);
        }
      up[static_cast<std::size_t>(s)] = rank(m, field);
    }
    for (int j = 0; j <= std::min(j_max, size); ++j) {
      const std::size_t c = chains[static_cast<std::size_t>(j)].size();
      const std::size_t below = j > 0 ? up[static_cast<std::size_t>(j - 1)] : 0;
      const std::uint64_t h = c - up[static_cast<std::size_t>(j)] - below;
      if (h == 0) continue;
      // Homological degree i sits in internal degree |b| = i + j.
      for (int i = 0; i <= i_max; ++i) {
        const int deg = i + j;
        const std::uint64_t count = size == 0 ? (deg == 0 ? 1 : 0) : binomial(deg - 1, size - 1);
        table.add(i, deg, h * count);
      }
    }
    if (u == top) break;
  }
  return table;
}

std::uint64_t betti_E_from_betti_S(const BettiTable& table_S, int i, int j) {
  if (i == 0 && j == 0) return table_S.at(0, 0);
  std::uint64_t sum = 0;
  for (int k = 0; k <= i; ++k) sum += binomial(i + j - 1, j + k - 1) * table_S.strand(k, j);
  return sum;
}

int complexity_E(int depth_E, int n) {
  require(depth_E >= 0 && depth_E <= n, ErrorKind::InvalidArgument, "depth outside [0, n]");
  return n - depth_E;
}

}  // namespace shiftkit
