#include "shiftkit/linalg.hpp"

#include <algorithm>
#include <utility>

#include "shiftkit/error.hpp"

#ifdef SHIFTKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace shiftkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Subtracts f * src from dst on [from, end).
inline void axpy_sub(std::span<u64> dst, std::span<const u64> src, u64 f, std::size_t from,
                     const PrimeField& field) {
  for (std::size_t t = from; t < dst.size(); ++t) {
    if (src[t] != 0) dst[t] = field.sub(dst[t], field.mul(f, src[t]));
  }
}

inline void scale(std::span<u64> row, u64 f, std::size_t from, const PrimeField& field) {
  for (std::size_t t = from; t < row.size(); ++t) row[t] = field.mul(row[t], f);
}

void swap_rows(MatrixFp& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  auto ri = a.row(i);
  auto rj = a.row(j);
  std::swap_ranges(ri.begin(), ri.end(), rj.begin());
}

// Threshold below which threading costs more than it saves.
constexpr std::size_t kParallelCells = 1u << 15;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), small_(p < (1ULL << 32)) {
  require(is_prime(p), ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
}

void PrimeField::require_exceeds(std::uint64_t n) const {
  require(p_ > n, ErrorKind::InvalidArgument,
          "prime " + std::to_string(p_) + " must exceed the variable count " + std::to_string(n));
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  require(a % p_ != 0, ErrorKind::InvalidArgument, "inverse of zero");
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a % p_;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<u64>(t);
}

std::uint64_t PrimeField::from_signed(std::int64_t v) const {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p_);
  if (r < 0) r += p_;
  return static_cast<u64>(r);
}

std::uint64_t PrimeField::random(Rng& rng) const {
  const u64 limit = (~0ULL / p_) * p_;
  for (;;) {
    u64 x = rng();
    if (x < limit) return x % p_;
  }
}

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, std::vector<std::uint64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows * cols, ErrorKind::InvalidArgument, "matrix data size mismatch");
}

MatrixFp MatrixFp::identity(std::size_t n) {
  MatrixFp m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixFp MatrixFp::from_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                             std::size_t cols) {
  MatrixFp m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, ErrorKind::InvalidArgument, "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

MatrixFp MatrixFp::multiply(const MatrixFp& other, const PrimeField& field) const {
  require(cols_ == other.rows_, ErrorKind::InvalidArgument, "matrix product shape mismatch");
  MatrixFp out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      u64 a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out.at(r, c) = field.add(out.at(r, c), field.mul(a, other.at(k, c)));
    }
  return out;
}

MatrixFp MatrixFp::select_columns(std::span<const std::size_t> columns) const {
  MatrixFp out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < columns.size(); ++k) out.at(r, k) = at(r, columns[k]);
  return out;
}

void MatrixFp::truncate_rows(std::size_t rows) {
  if (rows >= rows_) return;
  rows_ = rows;
  data_.resize(rows_ * cols_);
}

RrefResult rref_serial(const MatrixFp& m, const PrimeField& field) {
  RrefResult out{m, {}};
  MatrixFp& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t k = r;
    while (k < a.rows() && a.at(k, c) == 0) ++k;
    if (k == a.rows()) continue;
    swap_rows(a, k, r);
    scale(a.row(r), field.inv(a.at(r, c)), c, field);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      u64 f = a.at(i, c);
      if (f != 0) axpy_sub(a.row(i), a.row(r), f, c, field);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

RrefResult rref_parallel(const MatrixFp& m, const PrimeField& field) {
  RrefResult out{m, {}};
  MatrixFp& a = out.reduced;
  const std::size_t rows = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && a.at(k, c) == 0) ++k;
    if (k == rows) continue;
    swap_rows(a, k, r);
    scale(a.row(r), field.inv(a.at(r, c)), c, field);
    const auto pivot_row = std::as_const(a).row(r);
    const long long n_rows = static_cast<long long>(rows);
#ifdef SHIFTKIT_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (rows * (a.cols() - c) >= kParallelCells)
#endif
    for (long long i = 0; i < n_rows; ++i) {
      const auto row = static_cast<std::size_t>(i);
      if (row == r) continue;
      u64 f = a.at(row, c);
      if (f != 0) axpy_sub(a.row(row), pivot_row, f, c, field);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

RrefResult rref(const MatrixFp& m, const PrimeField& field) {
#ifdef SHIFTKIT_HAVE_OPENMP
  if (m.rows() * m.cols() >= kParallelCells && omp_get_max_threads() > 1)
    return rref_parallel(m, field);
#endif
  return rref_serial(m, field);
}

std::size_t rank(const MatrixFp& m, const PrimeField& field) {
  // Forward elimination only.
  MatrixFp a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t k = r;
    while (k < a.rows() && a.at(k, c) == 0) ++k;
    if (k == a.rows()) continue;
    swap_rows(a, k, r);
    scale(a.row(r), field.inv(a.at(r, c)), c, field);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      u64 f = a.at(i, c);
      if (f != 0) axpy_sub(a.row(i), a.row(r), f, c, field);
    }
    ++r;
  }
  return r;
}

RankKernel rank_and_kernel_dim(const MatrixFp& m, const PrimeField& field) {
  std::size_t r = rank(m, field);
  return {r, m.cols() - r};
}

std::uint64_t determinant(const MatrixFp& m, const PrimeField& field) {
  require(m.rows() == m.cols(), ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  MatrixFp a = m;
  u64 det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t k = c;
    while (k < n && a.at(k, c) == 0) ++k;
    if (k == n) return 0;
    if (k != c) {
      swap_rows(a, k, c);
      det = field.neg(det);
    }
    det = field.mul(det, a.at(c, c));
    u64 pivot_inv = field.inv(a.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      u64 f = field.mul(a.at(i, c), pivot_inv);
      if (f != 0) axpy_sub(a.row(i), a.row(c), f, c, field);
    }
  }
  return det;
}

MatrixFp inverse(const MatrixFp& m, const PrimeField& field) {
  require(m.rows() == m.cols(), ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  MatrixFp aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RrefResult red = rref(aug, field);
  require(red.rank() >= n && red.pivots[n - 1] == n - 1, ErrorKind::InvalidArgument,
          "matrix is singular");
  MatrixFp inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.reduced.at(r, n + c);
  return inv;
}

MatrixFp random_invertible(std::size_t n, const PrimeField& field, Rng rng) {
  require(n >= 1, ErrorKind::InvalidArgument, "random_invertible needs n >= 1");
  for (;;) {
    MatrixFp m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = field.random(rng);
    if (rank(m, field) == n) return m;
  }
}

void EchelonBasis::reduce(std::span<std::uint64_t> v) const {
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    u64 f = v[pivots_[k]];
    if (f != 0) axpy_sub(v, row(k), f, 0, *field_);
  }
}

bool EchelonBasis::insert(std::span<const std::uint64_t> v) {
  if (full()) return false;
  std::vector<u64> w(v.begin(), v.end());
  reduce(w);
  auto it = std::find_if(w.begin(), w.end(), [](u64 x) { return x != 0; });
  if (it == w.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - w.begin());
  scale(w, field_->inv(w[pivot]), pivot, *field_);
  rows_.insert(rows_.end(), w.begin(), w.end());
  pivots_.push_back(pivot);
  return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x5DEECE66DULL)));
}

}  // namespace shiftkit
