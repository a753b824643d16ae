#pragma once

// Exact dense linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctw {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trial division; p must satisfy 2 <= p < 2^31.
bool is_prime(std::uint64_t p);

/// Throws FieldError unless p is a prime in [2, 2^31).
std::uint32_t checked_prime(std::int64_t p);

/// Canonical residue of an arbitrary signed integer.
std::uint32_t reduce_mod(std::int64_t value, std::uint32_t p);

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// A coordinate vector over F_p. The modulus lives with the owning matrix.
using Vec = std::vector<std::uint32_t>;

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  static FpMatrix zero(std::size_t rows, std::size_t cols, std::uint32_t p) { return {rows, cols, p}; }
  static FpMatrix identity(std::size_t n, std::uint32_t p);
  /// Entries are reduced mod p; every row must have the same length.
  static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p,
                            std::size_t cols_if_empty = 0);
  static FpMatrix column_vector(const Vec& v, std::uint32_t p);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static FpMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = reduce_mod(v, p_); }

  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  const std::vector<std::uint32_t>& entries() const { return data_; }

  FpMatrix transpose() const;
  FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  FpMatrix select_columns(std::span<const std::size_t> cols) const;
  FpMatrix select_rows(std::span<const std::size_t> rows) const;
  void set_block(std::size_t r0, std::size_t c0, const FpMatrix& m);

  bool is_zero() const;
  bool is_identity() const;

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator-() const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix scaled(std::uint32_t s) const;
  Vec apply(const Vec& v) const;

  bool operator==(const FpMatrix& o) const = default;

  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::string to_string() const;

 private:
  void require_same_field(const FpMatrix& o, const char* op) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> data_;
};

/// [a | b], [a ; b] and block diagonal.
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b);
/// Kronecker product a ⊗ b.
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);

struct RowEchelon {
  FpMatrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

RowEchelon rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// A subspace given by a canonical basis (columns) together with the coordinate
/// rows: any vector v in the span has coordinates v[coord_index[j]].
struct Subspace {
  FpMatrix basis;
  std::vector<std::size_t> coord_index;

  std::size_t dim() const { return basis.cols(); }
  std::size_t ambient() const { return basis.rows(); }
  /// Coordinates of the columns of `vectors`, which must lie in the span.
  FpMatrix coordinates(const FpMatrix& vectors) const;
};

/// Null space of m; columns are the canonical RREF-derived basis.
FpMatrix kernel(const FpMatrix& m);
Subspace kernel_subspace(const FpMatrix& m);
/// Canonical basis of the column space of m.
FpMatrix image_basis(const FpMatrix& m);
Subspace image_subspace(const FpMatrix& m);

/// x with m*x = b, or nullopt when some column of b is outside the column space.
std::optional<FpMatrix> solve(const FpMatrix& m, const FpMatrix& b);
std::optional<FpMatrix> inverse(const FpMatrix& m);

struct QuotientMap {
  FpMatrix projection;  // (ambient - dim U) x ambient
  FpMatrix section;     // ambient x (ambient - dim U), standard basis vectors
  std::vector<std::size_t> complement;  // ambient coordinates spanning the complement
};

/// Canonical complement of the column span of `subspace` in F_p^ambient.
QuotientMap quotient_basis(std::size_t ambient, const FpMatrix& subspace);

/// True iff every column of `vectors` lies in the column span of `space`.
bool in_span(const FpMatrix& space, const FpMatrix& vectors);

/// Incrementally grown span kept in semi-echelon form (each stored row has a
/// unit pivot that is zero in every later row).
class EchelonSpan {
 public:
  EchelonSpan(std::size_t ambient, std::uint32_t p) : n_(ambient), p_(p) {}

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  /// v minus its projection along the stored rows.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v; false when it was already in the span.
  bool add(const Vec& v);

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ctw
