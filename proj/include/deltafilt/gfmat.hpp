#pragma once

// Exact dense linear algebra over a prime field GF(p).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "deltafilt/error.hpp"

namespace deltafilt {

using Elem = std::uint32_t;

/// Prime field GF(p); p is a runtime value checked by trial division.
class Field {
 public:
  explicit Field(std::uint64_t p = 2) : p_(static_cast<Elem>(p)) {
    if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw Error(Errc::NotPrime, "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  Elem p() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : static_cast<Elem>(a + (p_ - b)); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  // a must be nonzero
  Elem inv(Elem a) const noexcept { return pow(a, p_ - 2); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Elem p_;
};

/// Dense row-major matrix with entries in [0, p). 0xn and nx0 shapes are legal.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(Field f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  static Mat from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows,
                       std::size_t cols_if_empty = 0) {
    std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
    Mat m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) {
        throw Error(Errc::DimensionMismatch, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < c; ++j) m.data_[i * c + j] = f.reduce(rows[i][j]);
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `dim`).
  static Mat from_columns(Field f, std::size_t dim, const std::vector<std::vector<Elem>>& cols) {
    Mat m(f, dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != dim) throw Error(Errc::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i] % f.p();
    }
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { data_[i * cols_ + j] = field_.reduce(v); }
  const std::vector<Elem>& data() const noexcept { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
  }

  std::vector<Elem> column(std::size_t j) const {
    std::vector<Elem> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Mat columns(const std::vector<std::size_t>& idx) const {
    Mat m(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) m.at(i, k) = (*this)(i, idx[k]);
    return m;
  }

  Mat row_range(std::size_t begin, std::size_t end) const {
    Mat m(field_, end - begin, cols_);
    std::copy(data_.begin() + begin * cols_, data_.begin() + end * cols_, m.data_.begin());
    return m;
  }

  Mat col_range(std::size_t begin, std::size_t end) const {
    Mat m(field_, rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = begin; j < end; ++j) m.at(i, j - begin) = (*this)(i, j);
    return m;
  }

  Mat transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
    return t;
  }

  Mat scaled(Elem s) const {
    Mat r = *this;
    for (auto& e : r.data_) e = field_.mul(e, s);
    return r;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    check_same_shape(a, b);
    Mat r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    check_same_shape(a, b);
    Mat r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) {
      throw Error(Errc::DimensionMismatch, "product of " + a.shape() + " and " + b.shape());
    }
    const std::uint64_t p = a.field_.p();
    Mat r(a.field_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k);
        if (aik == 0) continue;
        const Elem* brow = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) r.data_[i * r.cols_ + j] = static_cast<Elem>(acc[j]);
    }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  static void check_same_shape(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw Error(Errc::DimensionMismatch, a.shape() + " vs " + b.shape());
    }
  }

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

inline Mat hconcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error(Errc::DimensionMismatch, "hconcat " + a.shape() + " | " + b.shape());
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b(i, j);
  }
  return r;
}

inline Mat vconcat(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw Error(Errc::DimensionMismatch, "vconcat " + a.shape() + " / " + b.shape());
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b(i, j);
  return r;
}

/// Block-diagonal matrix diag(a, b).
inline Mat block_diag(const Mat& a, const Mat& b) {
  Mat r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

inline Mat mat_pow(const Mat& m, std::size_t e) {
  Mat r = Mat::identity(m.field(), m.rows());
  Mat base = m;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form; pivots chosen as the first nonzero entry so the
/// result is reproducible.
inline Rref rref(const Mat& m) {
  Rref out{m, {}};
  Mat& a = out.reduced;
  const Field& f = m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    }
    const Elem inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = f.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const Elem factor = a(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) {
        a.at(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

inline std::size_t rank(const Mat& m) { return rref(m).rank(); }

/// Subspace of GF(p)^n stored by a canonical basis: the columns are the
/// transposed nonzero rows of the RREF of the spanning set, so two equal
/// subspaces always carry identical bases.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the columns of `vectors` (need not be independent).
  static Subspace span(const Mat& vectors) {
    Subspace s;
    s.ambient_ = vectors.rows();
    Rref r = rref(vectors.transpose());
    s.basis_ = r.reduced.row_range(0, r.rank()).transpose();
    if (s.basis_.rows() != s.ambient_) s.basis_ = Mat(vectors.field(), s.ambient_, 0);
    return s;
  }

  static Subspace zero(Field f, std::size_t n) { return span(Mat(f, n, 0)); }
  static Subspace full(Field f, std::size_t n) { return span(Mat::identity(f, n)); }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Mat& basis() const noexcept { return basis_; }
  const Field& field() const noexcept { return basis_.field(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
};

inline Subspace kernel_basis(const Mat& m) {
  const Field& f = m.field();
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(f, m.cols(), free_cols.size());
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    const std::size_t fc = free_cols[idx];
    k.at(fc, idx) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      k.at(r.pivots[i], idx) = f.neg(r.reduced(i, fc));
    }
  }
  return Subspace::span(k);
}

/// Some X with a*X = b, or nullopt when the system is inconsistent.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "solve: " + a.shape() + " against " + b.shape());
  }
  const Field& f = a.field();
  Rref r = rref(hconcat(a, b));
  Mat x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Mat::identity(m.field(), m.rows()));
}

inline void check_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw Error(Errc::DimensionMismatch, "subspaces of GF(p)^" + std::to_string(u.ambient_dim()) +
                                             " and GF(p)^" + std::to_string(v.ambient_dim()));
  }
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  return Subspace::span(hconcat(u.basis(), v.basis()));
}

inline Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  // x = U a = V b  <=>  (a, b) in ker [U | -V]
  Mat neg_v = v.basis().scaled(u.field().neg(1 % u.field().p()));
  Subspace k = kernel_basis(hconcat(u.basis(), neg_v));
  Mat coeff_a = k.basis().row_range(0, u.dim());
  return Subspace::span(u.basis() * coeff_a);
}

inline bool is_contained(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  if (u.dim() > v.dim()) return false;
  return rank(hconcat(v.basis(), u.basis())) == v.dim();
}

/// Image of a subspace under a linear map.
inline Subspace image_of(const Mat& map, const Subspace& u) { return Subspace::span(map * u.basis()); }

/// Preimage {x : map*x in target}.
inline Subspace preimage_of(const Mat& map, const Subspace& target) {
  // x with map x = T c  <=>  (x, c) in ker [map | -T]
  const Field& f = map.field();
  Mat neg_t = target.basis().scaled(f.neg(1 % f.p()));
  Subspace k = kernel_basis(hconcat(map, neg_t));
  return Subspace::span(k.basis().row_range(0, map.cols()));
}

struct QuotientCoords {
  Mat projection;  // (n - dim u) x n, kernel exactly u
  Mat section;     // n x (n - dim u), projection * section = I
};

inline QuotientCoords quotient_coords(std::size_t ambient_dim, const Subspace& u) {
  if (u.ambient_dim() != ambient_dim) {
    throw Error(Errc::DimensionMismatch, "quotient_coords: subspace ambient dim mismatch");
  }
  const Field& f = u.field();
  // Extend u's basis by the standard vectors that are not pivots of [u | I].
  Rref r = rref(hconcat(u.basis(), Mat::identity(f, ambient_dim)));
  std::vector<std::size_t> extra;
  for (auto c : r.pivots)
    if (c >= u.dim()) extra.push_back(c - u.dim());
  Mat section = Mat::identity(f, ambient_dim).columns(extra);
  Mat full = hconcat(u.basis(), section);
  Mat inv = *inverse(full);
  return {inv.row_range(u.dim(), ambient_dim), section};
}

/// Coordinates of the columns of `vectors` in the (independent) columns of `basis`.
inline Mat coordinates_in(const Mat& basis, const Mat& vectors) {
  auto x = solve(basis, vectors);
  if (!x) throw Error(Errc::DimensionMismatch, "vectors do not lie in the given span");
  return *x;
}

using Rng = std::mt19937_64;

inline Mat random_mat(Field f, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(f, rows, cols);
  std::uniform_int_distribution<Elem> dist(0, f.p() - 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

inline Mat random_invertible(Field f, std::size_t n, Rng& rng) {
  for (;;) {
    Mat m = random_mat(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace deltafilt
