#pragma once

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plesken/error.hpp"
#include "plesken/matrix.hpp"
#include "plesken/rational.hpp"

namespace plesken {

/// Finite-dimensional Lie algebra given by an exact structure-constant
/// tensor: c(i, j, k) is the coefficient of basis k in [b_i, b_j].
/// Construction validates antisymmetry and the Jacobi identity.
class LieAlgebra {
public:
  static LieAlgebra from_structure(std::vector<std::string> labels, std::vector<Rat> tensor) {
    LieAlgebra l;
    l.dim_ = labels.size();
    l.labels_ = std::move(labels);
    if (tensor.size() != l.dim_ * l.dim_ * l.dim_)
      throw validation_error("lie algebra: tensor size does not match dimension");
    l.c_ = std::move(tensor);
    l.validate();
    return l;
  }

  static LieAlgebra abelian(std::size_t dim) {
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i) labels[i] = "e" + std::to_string(i);
    return from_structure(std::move(labels), std::vector<Rat>(dim * dim * dim));
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Bracket of coordinate vectors (dim x 1 matrices).
  Mat bracket(const Mat& x, const Mat& y) const {
    if (x.rows() != dim_ || y.rows() != dim_ || x.cols() != 1 || y.cols() != 1)
      throw std::invalid_argument("bracket: expected dim x 1 coordinate vectors");
    Mat z(dim_, 1);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x(i, 0) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y(j, 0) == 0) continue;
        const Rat f = x(i, 0) * y(j, 0);
        for (std::size_t k = 0; k < dim_; ++k) {
          if (c(i, j, k) != 0) z(k, 0) += f * c(i, j, k);
        }
      }
    }
    return z;
  }

  Mat basis_vector(std::size_t i) const {
    Mat v(dim_, 1);
    v(i, 0) = 1;
    return v;
  }

  /// Matrix of ad b_i: column j holds [b_i, b_j].
  Mat ad(std::size_t i) const {
    Mat m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
    return m;
  }

  Mat ad(const Mat& x) const {
    Mat m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x(i, 0) == 0) continue;
      m = m + x(i, 0) * ad(i);
    }
    return m;
  }

  bool is_abelian() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }

  /// Re-runs the antisymmetry and Jacobi checks (also run at construction).
  void validate() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (c(i, j, k) != -c(j, i, k))
            throw validation_error("lie algebra: antisymmetry fails at (" + std::to_string(i) +
                                   ", " + std::to_string(j) + ")");
    // With antisymmetry established, checking ordered triples suffices.
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k)
          for (std::size_t m = 0; m < dim_; ++m) {
            Rat sum = 0;
            for (std::size_t l = 0; l < dim_; ++l)
              sum += c(i, j, l) * c(l, k, m) + c(j, k, l) * c(l, i, m) + c(k, i, l) * c(l, j, m);
            if (sum != 0)
              throw validation_error("lie algebra: Jacobi fails at triple (" + std::to_string(i) +
                                     ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
          }
  }

private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rat> c_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

inline AlgebraPtr make_algebra(LieAlgebra algebra) {
  return std::make_shared<const LieAlgebra>(std::move(algebra));
}

inline bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.c(i, j, k) != b.c(i, j, k)) return false;
  return true;
}

/// Basis of the center {x : [x, b_j] = 0 for all j}, as nullspace columns.
inline Mat center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Mat system(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) system(j * n + k, i) = l.c(i, j, k);
  return nullspace_matrix(system);
}

/// Deterministic basis of span{[b_i, b_j]}: the pivot columns among the
/// brackets taken in lexicographic pair order.
inline Mat derived_subalgebra(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Mat brackets(n, n * (n - 1) / 2);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++col)
      for (std::size_t k = 0; k < n; ++k) brackets(k, col) = l.c(i, j, k);
  return column_space(brackets);
}

/// K(i, j) = trace(ad b_i . ad b_j).
inline Mat killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(i));
  Mat k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

struct QuotientResult {
  AlgebraPtr algebra;
  Mat projection;                      // dim(L/I) x dim(L)
  Mat section;                         // dim(L) x dim(L/I), unit columns
  std::vector<std::size_t> complement; // retained coordinate indices
};

/// Quotient by an ideal (columns of `ideal`). The complement basis is the
/// set of coordinates away from the rref pivots of the ideal, giving a
/// deterministic section.
inline QuotientResult quotient(const AlgebraPtr& l, const Mat& ideal) {
  const std::size_t n = l->dim();
  if (ideal.rows() != n) throw std::invalid_argument("quotient: ideal has wrong row count");

  // ideal check: [L, I] contained in span(I)
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t v = 0; v < ideal.cols(); ++v) {
      const Mat w = l->bracket(l->basis_vector(j), ideal.col(v));
      if (!subspace_contains(ideal, w))
        throw validation_error("quotient: subspace is not an ideal (bracket with basis " +
                               std::to_string(j) + " escapes)");
    }

  const auto ideal_echelon = rref(ideal.transpose());
  const std::vector<std::size_t>& pivots = ideal_echelon.pivots; // coordinates spanned by I
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) complement.push_back(i);
  const std::size_t q = complement.size();

  Mat section(n, q);
  for (std::size_t j = 0; j < q; ++j) section(complement[j], j) = 1;

  // projection: solve [I-basis | section] * (a, y) = x and keep y
  const Mat ibasis = column_space(ideal);
  const auto full = solve(hcat(ibasis, section), Mat::identity(n));
  if (!full) throw validation_error("quotient: ideal plus complement does not span");
  Mat projection(q, n);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t x = 0; x < n; ++x) projection(j, x) = (*full)(ibasis.cols() + j, x);

  std::vector<Rat> tensor(q * q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const Mat w = projection * l->bracket(section.col(i), section.col(j));
      for (std::size_t k = 0; k < q; ++k) tensor[(i * q + j) * q + k] = w(k, 0);
    }
  std::vector<std::string> labels(q);
  for (std::size_t j = 0; j < q; ++j) labels[j] = l->labels()[complement[j]];

  QuotientResult result;
  result.algebra = make_algebra(LieAlgebra::from_structure(std::move(labels), std::move(tensor)));
  result.projection = std::move(projection);
  result.section = std::move(section);
  result.complement = std::move(complement);
  return result;
}

/// Structure constants in the basis given by the columns of t (invertible).
inline LieAlgebra change_of_basis(const LieAlgebra& l, const Mat& t) {
  const std::size_t n = l.dim();
  if (t.rows() != n || t.cols() != n || !is_invertible(t))
    throw std::invalid_argument("change_of_basis: matrix must be invertible dim x dim");
  const Mat tinv = *inverse(t);
  std::vector<Rat> tensor(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat w = tinv * l.bracket(t.col(i), t.col(j));
      for (std::size_t k = 0; k < n; ++k) tensor[(i * n + j) * n + k] = w(k, 0);
    }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "f" + std::to_string(i);
  return LieAlgebra::from_structure(std::move(labels), std::move(tensor));
}

// ---- "liealg v1" file format ----
//
//   liealg 1
//   <dim>
//   <i j k p/q>   one line per nonzero c(i,j,k), lexicographic

inline std::string render_liealg(const LieAlgebra& l) {
  std::ostringstream os;
  os << "liealg 1\n" << l.dim() << "\n";
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      for (std::size_t k = 0; k < l.dim(); ++k)
        if (l.c(i, j, k) != 0)
          os << i << ' ' << j << ' ' << k << ' ' << format_rational(l.c(i, j, k)) << '\n';
  return os.str();
}

inline LieAlgebra parse_liealg(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  int version = -1;
  if (!(is >> word >> version) || word != "liealg" || version != 1)
    throw parse_error("liealg: expected header 'liealg 1'");
  long long dim = -1;
  if (!(is >> dim) || dim < 0) throw parse_error("liealg: invalid dimension");
  const std::size_t n = static_cast<std::size_t>(dim);
  std::vector<Rat> tensor(n * n * n);
  long long i, j, k;
  while (is >> i) {
    if (!(is >> j >> k >> word)) throw parse_error("liealg: truncated entry line");
    if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
      throw parse_error("liealg: index out of range");
    tensor[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
           static_cast<std::size_t>(k)] = parse_rational(word);
  }
  if (!is.eof()) throw parse_error("liealg: malformed entry line");
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = "e" + std::to_string(x);
  return LieAlgebra::from_structure(std::move(labels), std::move(tensor));
}

} // namespace plesken
