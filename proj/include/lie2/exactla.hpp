#pragma once

// Exact rational linear algebra: scalars, vectors, dense matrices, dense
// multi-index tensors, and subspace computations (kernel, image, membership,
// quotient). Every other module is written on top of this one.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lie2 {

using Rat = mpq_class;
using Vector = std::vector<Rat>;

/// Thrown when operands have incompatible dimensions or shapes.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a mathematical precondition fails (non-cocycle, non-MC, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// n/d in canonical form. d must be nonzero.
inline Rat frac(long n, long d = 1) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p", "+p" or "p/q" with decimal digits. Rejects q = 0.
inline Rat parse_rat(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) { return r.get_str(10); }

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

inline void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
}

inline Vector& operator+=(Vector& a, const Vector& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector& operator-=(Vector& a, const Vector& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator+(Vector a, const Vector& b) { return a += b; }
inline Vector operator-(Vector a, const Vector& b) { return a -= b; }

inline Vector operator-(Vector a) {
  for (auto& x : a) x = -x;
  return a;
}

inline Vector operator*(const Rat& s, Vector a) {
  for (auto& x : a) x *= s;
  return a;
}

/// y += s * x
inline void axpy(Vector& y, const Rat& s, const Vector& x) {
  require_same_size(y, x);
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += s * x[i];
}

inline Vector concat(const Vector& a, const Vector& b) {
  Vector out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense row-major matrix. Zero rows or columns are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("matrix entry count does not match rows*cols");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
    std::vector<Vector> rs;
    for (const auto& r : rows) rs.emplace_back(r);
    return from_rows(rs, rs.empty() ? 0 : rs.front().size());
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw ShapeError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw ShapeError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> entries() const { return data_; }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::vector<Vector> columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const { return lie2::is_zero(data_); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
  }
  return out;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

inline Matrix operator-(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

inline Matrix operator*(const Rat& s, const Matrix& a) {
  Matrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

inline Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  Matrix out(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, cols[j]);
  return out;
}

inline Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows) {
  Matrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], j);
  return out;
}

// ---------------------------------------------------------------------------
// Row reduction and subspaces
// ---------------------------------------------------------------------------

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row, so the result is deterministic.
inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rat inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rat factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (sgn(m(row, j)) != 0) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Finite-dimensional subspace of Q^n given by linearly independent columns.
class Subspace {
 public:
  Subspace() = default;

  Subspace(std::size_t ambient_dim, Matrix basis) : ambient_(ambient_dim), basis_(std::move(basis)) {
    if (basis_.rows() != ambient_) throw ShapeError("subspace basis rows differ from ambient dimension");
    if (rank(basis_) != basis_.cols()) throw MathError("subspace basis columns are linearly dependent");
  }

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }
  static Subspace full(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Vector vector(std::size_t k) const { return basis_.column(k); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// Basis of {v : m v = 0}, one vector per free column in increasing order,
/// with a 1 in its free coordinate.
inline Subspace kernel_basis(const Matrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> cols;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
    cols.push_back(std::move(v));
  }
  return Subspace(m.cols(), Matrix::from_columns(cols, m.cols()));
}

/// Column space, spanned by the pivot columns of the input.
inline Subspace image_basis(const Matrix& m) {
  const auto pivots = rref(m).pivots;
  return Subspace(m.rows(), select_columns(m, pivots));
}

/// Subspace spanned by arbitrary generators (pivot columns kept).
inline Subspace span_of(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return image_basis(Matrix::from_columns(generators, ambient_dim));
}

/// Some x with a x = b (free variables zero), or nothing when inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw ShapeError("solve: right-hand side length mismatch");
  Matrix aug = hstack(a, Matrix::from_columns({b}, a.rows()));
  const auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, a.cols());
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  const auto [r, pivots] = rref(hstack(a, Matrix::identity(n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

struct Membership {
  bool member = false;
  Vector coordinates;  // valid only when member
};

inline Membership membership(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim()) throw ShapeError("membership: vector length differs from ambient dimension");
  auto x = solve(s.basis(), v);
  if (!x) return {false, {}};
  return {true, std::move(*x)};
}

inline bool contains(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim()) throw ShapeError("subspaces live in different ambient spaces");
  for (std::size_t k = 0; k < small.dim(); ++k)
    if (!membership(big, small.vector(k)).member) return false;
  return true;
}

inline bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && contains(a, b);
}

/// Sum of two subspaces of the same ambient space.
inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("subspaces live in different ambient spaces");
  return image_basis(hstack(a.basis(), b.basis()));
}

struct Quotient {
  std::size_t dim = 0;
  std::vector<Vector> representatives;
};

/// z / b for b contained in z. Representatives extend the basis of b to one
/// of z by scanning the basis columns of z in order (pivot extension).
inline Quotient quotient(const Subspace& z, const Subspace& b) {
  if (!contains(z, b)) throw MathError("quotient: subspace is not contained in the ambient subspace");
  const auto pivots = rref(hstack(b.basis(), z.basis())).pivots;
  Quotient q;
  for (auto p : pivots)
    if (p >= b.dim()) q.representatives.push_back(z.vector(p - b.dim()));
  q.dim = q.representatives.size();
  return q;
}

// ---------------------------------------------------------------------------
// Dense tensors
// ---------------------------------------------------------------------------

/// Dense multi-index array in lexicographic (row-major) order. Multilinear
/// maps are stored output index first: t(k, i, j) is the k-th coordinate of
/// the map evaluated on the i-th and j-th basis vectors.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)), data_(product(shape_)) {}
  Tensor(std::vector<std::size_t> shape, std::vector<Rat> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != product(shape_)) throw ShapeError("tensor data length does not match shape");
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t dim(std::size_t slot) const { return shape_.at(slot); }

  std::span<const Rat> data() const { return data_; }
  std::span<Rat> data() { return data_; }

  std::size_t offset(std::span<const std::size_t> idx) const {
    if (idx.size() != shape_.size()) throw ShapeError("tensor index rank mismatch");
    std::size_t off = 0;
    for (std::size_t s = 0; s < shape_.size(); ++s) {
      if (idx[s] >= shape_[s]) throw ShapeError("tensor index out of range");
      off = off * shape_[s] + idx[s];
    }
    return off;
  }

  template <class... I>
  Rat& operator()(I... idx) {
    const std::size_t ix[] = {static_cast<std::size_t>(idx)...};
    return data_[offset(ix)];
  }
  template <class... I>
  const Rat& operator()(I... idx) const {
    const std::size_t ix[] = {static_cast<std::size_t>(idx)...};
    return data_[offset(ix)];
  }

  Rat& at(std::span<const std::size_t> idx) { return data_[offset(idx)]; }
  const Rat& at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }

  bool is_zero() const { return lie2::is_zero(data_); }

  /// Visits every multi-index in lexicographic order.
  void for_each_index(const std::function<void(std::span<const std::size_t>)>& fn) const {
    if (data_.empty()) return;
    std::vector<std::size_t> idx(shape_.size(), 0);
    for (std::size_t n = 0; n < data_.size(); ++n) {
      fn(idx);
      for (std::size_t s = shape_.size(); s-- > 0;) {
        if (++idx[s] < shape_[s]) break;
        idx[s] = 0;
      }
    }
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

  friend Tensor operator+(Tensor a, const Tensor& b) {
    if (a.shape_ != b.shape_) throw ShapeError("tensor sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Tensor operator-(Tensor a, const Tensor& b) {
    if (a.shape_ != b.shape_) throw ShapeError("tensor difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Tensor operator*(const Rat& s, Tensor a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

 private:
  static std::size_t product(const std::vector<std::size_t>& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
  }

  std::vector<std::size_t> shape_;
  std::vector<Rat> data_;
};

/// Evaluates a multilinear map (output slot first) on the given inputs.
/// Zero input coordinates are skipped, so basis-vector arguments are cheap.
inline Vector evaluate(const Tensor& t, std::span<const Vector* const> args) {
  if (t.rank() != args.size() + 1) throw ShapeError("evaluate: tensor rank does not match argument count");
  for (std::size_t s = 0; s < args.size(); ++s)
    if (args[s]->size() != t.dim(s + 1)) throw ShapeError("evaluate: argument length does not match tensor slot");
  const std::size_t out_dim = t.dim(0);
  Vector out(out_dim);
  if (out_dim == 0) return out;
  std::size_t block = 1;
  for (std::size_t s = 1; s < t.rank(); ++s) block *= t.dim(s);
  const auto data = t.data();

  // per slot: (offset contribution, coefficient) of each nonzero coordinate
  std::vector<std::vector<std::pair<std::size_t, const Rat*>>> nonzeros(args.size());
  for (std::size_t s = 0; s < args.size(); ++s) {
    std::size_t stride = 1;
    for (std::size_t r = s + 2; r < t.rank(); ++r) stride *= t.dim(r);
    for (std::size_t i = 0; i < args[s]->size(); ++i)
      if (sgn((*args[s])[i]) != 0) nonzeros[s].emplace_back(i * stride, &(*args[s])[i]);
    if (nonzeros[s].empty()) return out;
  }

  std::function<void(std::size_t, std::size_t, const Rat&)> rec = [&](std::size_t s, std::size_t off, const Rat& c) {
    if (s == args.size()) {
      for (std::size_t k = 0; k < out_dim; ++k) {
        const Rat& e = data[k * block + off];
        if (sgn(e) != 0) out[k] += c * e;
      }
      return;
    }
    for (const auto& [o, v] : nonzeros[s]) {
      Rat next = c * *v;
      rec(s + 1, off + o, next);
    }
  };
  rec(0, 0, Rat(1));
  return out;
}

inline Vector evaluate(const Tensor& t, const Vector& x) {
  const Vector* a[] = {&x};
  return evaluate(t, a);
}
inline Vector evaluate(const Tensor& t, const Vector& x, const Vector& y) {
  const Vector* a[] = {&x, &y};
  return evaluate(t, a);
}
inline Vector evaluate(const Tensor& t, const Vector& x, const Vector& y, const Vector& z) {
  const Vector* a[] = {&x, &y, &z};
  return evaluate(t, a);
}

/// Contracts slot `slot` of t with v; the slot disappears.
inline Tensor contract(const Tensor& t, std::size_t slot, const Vector& v) {
  if (slot >= t.rank()) throw ShapeError("contract: slot out of range");
  if (t.dim(slot) != v.size()) throw ShapeError("contract: vector length does not match slot dimension");
  std::vector<std::size_t> shape = t.shape();
  shape.erase(shape.begin() + static_cast<std::ptrdiff_t>(slot));
  Tensor out(shape);
  std::vector<std::size_t> dst;
  t.for_each_index([&](std::span<const std::size_t> idx) {
    const Rat& e = t.at(idx);
    if (sgn(e) == 0 || sgn(v[idx[slot]]) == 0) return;
    dst.assign(idx.begin(), idx.end());
    dst.erase(dst.begin() + static_cast<std::ptrdiff_t>(slot));
    out.at(dst) += e * v[idx[slot]];
  });
  return out;
}

/// Applies the linear map m (new_dim x old_dim) along slot `slot`.
inline Tensor contract(const Tensor& t, std::size_t slot, const Matrix& m) {
  if (slot >= t.rank()) throw ShapeError("contract: slot out of range");
  if (t.dim(slot) != m.cols()) throw ShapeError("contract: matrix columns do not match slot dimension");
  std::vector<std::size_t> shape = t.shape();
  shape[slot] = m.rows();
  Tensor out(shape);
  std::vector<std::size_t> dst;
  t.for_each_index([&](std::span<const std::size_t> idx) {
    const Rat& e = t.at(idx);
    if (sgn(e) == 0) return;
    dst.assign(idx.begin(), idx.end());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (sgn(m(r, idx[slot])) == 0) continue;
      dst[slot] = r;
      out.at(dst) += m(r, idx[slot]) * e;
    }
  });
  return out;
}

/// The tensor of a linear map given as a matrix (shape [rows, cols]).
inline Tensor as_tensor(const Matrix& m) {
  return Tensor({m.rows(), m.cols()}, std::vector<Rat>(m.entries().begin(), m.entries().end()));
}

/// Builds a multilinear-map tensor from a function on basis index tuples.
/// `in_dims` are the input slot dimensions; fn returns the output vector.
inline Tensor tabulate(std::size_t out_dim, const std::vector<std::size_t>& in_dims,
                       const std::function<Vector(std::span<const std::size_t>)>& fn) {
  std::vector<std::size_t> shape{out_dim};
  shape.insert(shape.end(), in_dims.begin(), in_dims.end());
  Tensor t(shape);
  Tensor index_space(in_dims);
  std::vector<std::size_t> full(shape.size());
  if (out_dim == 0) return t;
  index_space.for_each_index([&](std::span<const std::size_t> idx) {
    const Vector v = fn(idx);
    if (v.size() != out_dim) throw ShapeError("tabulate: function returned wrong length");
    std::copy(idx.begin(), idx.end(), full.begin() + 1);
    for (std::size_t k = 0; k < out_dim; ++k) {
      full[0] = k;
      t.at(full) = v[k];
    }
  });
  return t;
}

/// Calls fn on every tuple in [0,d0) x [0,d1) x ... in lexicographic order.
inline void for_each_tuple(const std::vector<std::size_t>& dims,
                           const std::function<void(std::span<const std::size_t>)>& fn) {
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (total == 0) return;
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    fn(idx);
    for (std::size_t s = dims.size(); s-- > 0;) {
      if (++idx[s] < dims[s]) break;
      idx[s] = 0;
    }
  }
}

}  // namespace lie2
