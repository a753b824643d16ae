#include "ctw/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ctw {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t checked_prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw FieldError("modulus " + std::to_string(p) + " is not a prime in [2, 2^31)");
  }
  return static_cast<std::uint32_t>(p);
}

std::uint32_t reduce_mod(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) + p - b);
}

std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw FieldError("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce_mod(t, p);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2) throw FieldError("matrix constructed without a modulus");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p,
                             std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw FieldError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::column_vector(const Vec& v, std::uint32_t p) {
  FpMatrix m(v.size(), 1, p);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
  return m;
}

FpMatrix FpMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, std::uint32_t p) {
  FpMatrix m(rows, cols.size(), p);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw FieldError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r] % p;
  }
  return m;
}

Vec FpMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw FieldError("block out of range");
  FpMatrix b(nr, nc, p_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> cols) const {
  FpMatrix b(rows_, cols.size(), p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) b(r, j) = (*this)(r, cols[j]);
  return b;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> rows) const {
  FpMatrix b(rows.size(), cols_, p_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[i] * cols_), cols_,
                b.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  return b;
}

void FpMatrix::set_block(std::size_t r0, std::size_t c0, const FpMatrix& m) {
  require_same_field(m, "set_block");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw FieldError("set_block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

void FpMatrix::require_same_field(const FpMatrix& o, const char* op) const {
  if (p_ != o.p_) {
    throw FieldError(std::string("mixed moduli in ") + op + ": " + std::to_string(p_) + " vs " +
                     std::to_string(o.p_));
  }
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  require_same_field(o, "+");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw FieldError("shape mismatch in +");
  FpMatrix s(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = add_mod(data_[i], o.data_[i], p_);
  return s;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  require_same_field(o, "-");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw FieldError("shape mismatch in -");
  FpMatrix s(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = sub_mod(data_[i], o.data_[i], p_);
  return s;
}

FpMatrix FpMatrix::operator-() const {
  FpMatrix s(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = neg_mod(data_[i], p_);
  return s;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  require_same_field(o, "*");
  if (cols_ != o.rows_) {
    throw FieldError("shape mismatch in *: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                     std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  FpMatrix prod(rows_, o.cols_, p_);
  std::vector<std::uint64_t> acc(o.cols_);
  // Accumulate in 64 bits and reduce only when another term could overflow.
  const std::uint64_t sq = static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
  const std::uint64_t budget = std::min<std::uint64_t>((~std::uint64_t{0} - p_) / sq, 1u << 20);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint64_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      const std::uint32_t* orow = o.data_.data() + k * o.cols_;
      for (std::size_t c = 0; c < o.cols_; ++c) acc[c] += a * orow[c];
      if (++pending == budget) {
        for (auto& x : acc) x %= p_;
        pending = 0;
      }
    }
    for (std::size_t c = 0; c < o.cols_; ++c) prod(r, c) = static_cast<std::uint32_t>(acc[c] % p_);
  }
  return prod;
}

FpMatrix FpMatrix::scaled(std::uint32_t s) const {
  FpMatrix m(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = mul_mod(data_[i], s % p_, p_);
  return m;
}

Vec FpMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw FieldError("shape mismatch in apply");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>((*this)(r, c)) * v[c];
      if (c % 3 == 2) acc %= p_;
    }
    out[r] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> FpMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "] (mod " << p_ << ")";
  return os.str();
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows()) throw FieldError("hstack row mismatch");
  FpMatrix m(a.rows(), a.cols() + b.cols(), a.modulus());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.cols()) throw FieldError("vstack column mismatch");
  FpMatrix m(a.rows() + b.rows(), a.cols(), a.modulus());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
  const std::uint32_t p = a.modulus();
  FpMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), p);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::uint32_t s = a(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = mul_mod(s, b(k, l), p);
    }
  return m;
}

namespace {

// In-place reduction to RREF restricted to the first `pivot_cols` columns.
std::vector<std::size_t> reduce_in_place(FpMatrix& m, std::size_t pivot_cols) {
  const std::uint32_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t found = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        found = i;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != r) {
      auto a = m.row(found);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(r);
    std::uint32_t inv = inv_mod(prow[c], p);
    if (inv != 1) {
      for (std::size_t j = c; j < m.cols(); ++j) prow[j] = mul_mod(prow[j], inv, p);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.row(i);
      std::uint32_t f = row[c];
      if (f == 0) continue;
      std::uint64_t nf = p - f;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (prow[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + nf * prow[j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(const FpMatrix& m) {
  RowEchelon out{m, {}};
  out.pivots = reduce_in_place(out.reduced, m.cols());
  return out;
}

std::size_t rank(const FpMatrix& m) {
  if (m.empty()) return 0;
  FpMatrix copy = m.rows() <= m.cols() ? m : m.transpose();
  return reduce_in_place(copy, copy.cols()).size();
}

FpMatrix Subspace::coordinates(const FpMatrix& vectors) const { return vectors.select_rows(coord_index); }

Subspace kernel_subspace(const FpMatrix& m) {
  const std::uint32_t p = m.modulus();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  FpMatrix k(m.cols(), free.size(), p);
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t t = 0; t < e.pivots.size(); ++t) k(e.pivots[t], j) = neg_mod(e.reduced(t, free[j]), p);
  }
  return {std::move(k), std::move(free)};
}

FpMatrix kernel(const FpMatrix& m) { return kernel_subspace(m).basis; }

Subspace image_subspace(const FpMatrix& m) {
  RowEchelon e = rref(m.transpose());
  std::vector<std::size_t> rows(e.pivots.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return {e.reduced.select_rows(rows).transpose(), e.pivots};
}

FpMatrix image_basis(const FpMatrix& m) { return image_subspace(m).basis; }

std::optional<FpMatrix> solve(const FpMatrix& m, const FpMatrix& b) {
  if (m.rows() != b.rows()) throw FieldError("solve: row counts differ");
  FpMatrix aug = hstack(m, b);
  std::vector<std::size_t> pivots = reduce_in_place(aug, m.cols());
  // Inconsistent iff a zero row of the coefficient part has a nonzero right side.
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (aug(r, m.cols() + j) != 0) return std::nullopt;
  FpMatrix x(m.cols(), b.cols(), m.modulus());
  for (std::size_t t = 0; t < pivots.size(); ++t)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[t], j) = aug(t, m.cols() + j);
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, FpMatrix::identity(m.rows(), m.modulus()));
}

QuotientMap quotient_basis(std::size_t ambient, const FpMatrix& subspace) {
  const std::uint32_t p = subspace.modulus();
  if (subspace.rows() != ambient) throw FieldError("quotient_basis: subspace not in ambient space");
  RowEchelon e = rref(subspace.transpose());
  std::vector<bool> is_pivot(ambient, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  QuotientMap q;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) q.complement.push_back(c);
  const std::size_t qd = q.complement.size();
  q.projection = FpMatrix(qd, ambient, p);
  q.section = FpMatrix(ambient, qd, p);
  std::vector<std::size_t> slot(ambient, qd);
  for (std::size_t j = 0; j < qd; ++j) {
    slot[q.complement[j]] = j;
    q.section(q.complement[j], j) = 1;
    q.projection(j, q.complement[j]) = 1;
  }
  // v - sum_t v[c_t] r_t vanishes on pivots; read the complement coordinates.
  for (std::size_t t = 0; t < e.pivots.size(); ++t) {
    for (std::size_t j = 0; j < qd; ++j) q.projection(j, e.pivots[t]) = neg_mod(e.reduced(t, q.complement[j]), p);
  }
  return q;
}

bool in_span(const FpMatrix& space, const FpMatrix& vectors) {
  if (vectors.cols() == 0) return true;
  return solve(space, vectors).has_value();
}

Vec EchelonSpan::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    const std::uint32_t f = p_ - c;
    const Vec& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < n_; ++j)
      if (row[j] != 0) v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(f) * row[j]) % p_);
  }
  return v;
}

bool EchelonSpan::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool EchelonSpan::add(const Vec& v) {
  if (v.size() != n_) throw FieldError("EchelonSpan: vector has wrong length");
  Vec r = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && r[piv] == 0) ++piv;
  if (piv == n_) return false;
  const std::uint32_t inv = inv_mod(r[piv], p_);
  for (auto& x : r) x = mul_mod(x, inv, p_);
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

}  // namespace ctw
