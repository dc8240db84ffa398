#ifndef SHIFTKIT_LINALG_HPP
#define SHIFTKIT_LINALG_HPP

// Dense exact linear algebra over a prime field F_p.
//
// Every "generic" computation in the library reduces to ranks and pivot
// columns of dense matrices over F_p. Two elimination kernels are kept:
// rref_serial() is the reference implementation, rref_parallel() splits
// the row updates of each pivot step across OpenMP threads. rref() picks
// one by problem size. Both must produce identical output.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace shiftkit {

using Rng = std::mt19937_64;

class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

  /// Throws InvalidArgument unless p is prime.
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }

  /// Throws InvalidArgument unless p > n (genericity needs more field
  /// elements than variables).
  void require_exceeds(std::uint64_t n) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (small_) return (a * b) % p_;
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_signed(std::int64_t v) const;

  /// Uniform element of [0, p).
  std::uint64_t random(Rng& rng) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint64_t p_;
  bool small_;
};

bool is_prime(std::uint64_t n);

/// Row-major dense matrix with entries in [0, p).
class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  MatrixFp(std::size_t rows, std::size_t cols, std::vector<std::uint64_t> data);

  static MatrixFp identity(std::size_t n);
  static MatrixFp from_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                            std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  const std::vector<std::uint64_t>& data() const { return data_; }

  MatrixFp transpose() const;
  MatrixFp multiply(const MatrixFp& other, const PrimeField& field) const;
  /// Keeps the given columns, in the given order.
  MatrixFp select_columns(std::span<const std::size_t> columns) const;
  /// Drops trailing rows.
  void truncate_rows(std::size_t rows);

  bool operator==(const MatrixFp& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  MatrixFp reduced;
  std::vector<std::size_t> pivots;  // ascending
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref_serial(const MatrixFp& m, const PrimeField& field);
RrefResult rref_parallel(const MatrixFp& m, const PrimeField& field);
RrefResult rref(const MatrixFp& m, const PrimeField& field);

struct RankKernel {
  std::size_t rank;
  std::size_t kernel_dim;
};

RankKernel rank_and_kernel_dim(const MatrixFp& m, const PrimeField& field);
std::size_t rank(const MatrixFp& m, const PrimeField& field);

std::uint64_t determinant(const MatrixFp& m, const PrimeField& field);

/// Inverse via RREF of [m | I]. Throws InvalidArgument on singular input.
MatrixFp inverse(const MatrixFp& m, const PrimeField& field);

/// Uniform n x n matrix conditioned on det != 0 (rejection sampling).
/// The generator is taken by value: equal generators give equal matrices.
MatrixFp random_invertible(std::size_t n, const PrimeField& field, Rng rng);

/// Incrementally built row echelon basis; reports whether each inserted
/// vector enlarges the span.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t cols, const PrimeField& field) : cols_(cols), field_(&field) {}

  bool insert(std::span<const std::uint64_t> v);
  /// Reduces v against the stored rows in place.
  void reduce(std::span<std::uint64_t> v) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return pivots_.size() == cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::span<const std::uint64_t> row(std::size_t k) const {
    return {rows_.data() + k * cols_, cols_};
  }

 private:
  std::size_t cols_;
  const PrimeField* field_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> pivots_;
};

/// SplitMix64 step; used to derive independent generator streams.
std::uint64_t splitmix64(std::uint64_t x);

/// Generator for stream `stream` of `seed`; distinct streams are independent
/// for practical purposes and fully reproducible.
Rng derive_rng(std::uint64_t seed, std::uint64_t stream);

}  // namespace shiftkit

#endif
