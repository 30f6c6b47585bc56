#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plesken/error.hpp"
#include "plesken/rational.hpp"

namespace plesken {

/// Dense matrix over exact rationals, row-major.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat column(std::vector<Rat> v) {
    Mat m;
    m.rows_ = v.size();
    m.cols_ = 1;
    m.a_ = std::move(v);
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<Rat>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat&) const = default;

  const std::vector<Rat>& data() const noexcept { return a_; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rat trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    Rat t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const Rat& x : a_)
      if (x != 0) return false;
    return true;
  }

  /// The scalar lambda with *this == lambda * I, if any.
  std::optional<Rat> scalar_value() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    const Rat lambda = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j && (*this)(i, j) != lambda) return std::nullopt;
        if (i != j && (*this)(i, j) != 0) return std::nullopt;
      }
    return lambda;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }

  Mat col(std::size_t j) const {
    Mat v(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
    return v;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

inline Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix addition: shape mismatch");
  Mat r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

inline Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  Mat r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

inline Mat operator-(const Mat& x) {
  Mat r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = -x(i, j);
  return r;
}

inline Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Mat r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Rat& xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

inline Mat operator*(const Rat& c, const Mat& x) {
  Mat r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = c * x(i, j);
  return r;
}

inline Mat hcat(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows()) throw std::invalid_argument("hcat: row mismatch");
  Mat r(x.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols(); ++j) r(i, x.cols() + j) = y(i, j);
  }
  return r;
}

inline Mat vcat(const Mat& x, const Mat& y) {
  if (x.cols() != y.cols()) throw std::invalid_argument("vcat: column mismatch");
  Mat r(x.rows() + y.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) r(x.rows() + i, j) = y(i, j);
  return r;
}

inline Mat columns_at(const Mat& m, const std::vector<std::size_t>& idx) {
  Mat r(m.rows(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, j) = m(i, idx[j]);
  return r;
}

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots; // strictly increasing column indices
};

/// Reduced row echelon form. Pivot choice: first nonzero entry in column
/// order, so the output is deterministic.
inline RrefResult rref(Mat m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(lead, piv);
    const Rat d = m(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) /= d;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Rat factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

/// Basis of {v : m v = 0}, one column vector per free column of rref(m).
inline std::vector<Mat> nullspace(const Mat& m) {
  const auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<Mat> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Mat v(m.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Same basis as nullspace(), packed as columns (cols() may be 0).
inline Mat nullspace_matrix(const Mat& m) {
  const std::vector<Mat> basis = nullspace(m);
  Mat r(m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) r(i, j) = basis[j](i, 0);
  return r;
}

/// Some x with a x = b (free variables set to 0), or nullopt when the
/// system is inconsistent. b may have several columns.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const auto [red, pivots] = rref(hcat(a, b));
  for (std::size_t p : pivots) {
    if (p >= a.cols()) return std::nullopt; // pivot in the RHS block
  }
  Mat x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = red(r, a.cols() + j);
  return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  auto x = solve(m, Mat::identity(m.rows()));
  if (!x) return std::nullopt;
  if (m * *x != Mat::identity(m.rows())) return std::nullopt; // rank-deficient
  return x;
}

inline bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Rank by fraction-free (Bareiss) elimination on the row-wise integerized
/// matrix. Intermediate entries stay integral, bounding bit growth.
inline std::size_t rank_bareiss(const Mat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Int scale = 1;
    for (std::size_t j = 0; j < cols; ++j) scale = boost::multiprecision::lcm(scale, den(m(i, j)));
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = num(m(i, j)) * (scale / den(m(i, j)));
  }

  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[row], a[piv]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        Int t = a[row][col] * a[r][c] - a[r][col] * a[row][c];
        Int q, rem;
        boost::multiprecision::divide_qr(t, prev, q, rem);
        if (rem != 0) throw std::logic_error("rank_bareiss: exact division failed");
        a[r][c] = q;
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

/// Columns of m at the rref pivot positions: a deterministic basis of the
/// column span drawn from the original columns.
inline Mat column_space(const Mat& m) { return columns_at(m, rref(m).pivots); }

/// span(vectors) subset of span(space)?
inline bool subspace_contains(const Mat& space, const Mat& vectors) {
  if (space.rows() != vectors.rows()) throw std::invalid_argument("subspace_contains: row mismatch");
  return rank(space) == rank(hcat(space, vectors));
}

inline bool subspace_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("subspace_equal: row mismatch");
  const std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(hcat(a, b)) == ra;
}

inline std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << format_rational(m(i, j));
    }
    os << "]";
    if (i + 1 < m.rows()) os << "\n";
  }
  os << "]";
  return os.str();
}

} // namespace plesken
