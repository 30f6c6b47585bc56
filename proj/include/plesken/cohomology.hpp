#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plesken/error.hpp"
#include "plesken/lie_algebra.hpp"
#include "plesken/matrix.hpp"

namespace plesken {

// Coordinates for alternating 2-forms: the strict upper triangle in
// lexicographic pair order.
inline std::size_t pair_count(std::size_t dim) { return dim * (dim - 1) / 2; }

inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t dim) {
  // requires i < j < dim
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

/// Linear functional on a Lie algebra (1-cochain with trivial coefficients).
class Cochain1 {
public:
  Cochain1(AlgebraPtr algebra, std::vector<Rat> values)
      : algebra_(std::move(algebra)), values_(std::move(values)) {
    if (!algebra_ || values_.size() != algebra_->dim())
      throw std::invalid_argument("cochain: value count must equal the algebra dimension");
  }

  static Cochain1 zero(AlgebraPtr algebra) {
    const std::size_t n = algebra->dim();
    return Cochain1(std::move(algebra), std::vector<Rat>(n));
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& operator[](std::size_t i) const { return values_[i]; }

  Rat operator()(const Mat& x) const {
    Rat s = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * x(i, 0);
    return s;
  }

  /// sigma([b_i, b_j]) through the structure constants.
  Rat on_bracket(std::size_t i, std::size_t j) const {
    Rat s = 0;
    for (std::size_t l = 0; l < algebra_->dim(); ++l) s += algebra_->c(i, j, l) * values_[l];
    return s;
  }

  Cochain1 operator-() const {
    std::vector<Rat> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -values_[i];
    return Cochain1(algebra_, std::move(v));
  }

  bool operator==(const Cochain1& other) const { return values_ == other.values_; }

private:
  AlgebraPtr algebra_;
  std::vector<Rat> values_;
};

/// A 1-cochain is a Lie homomorphism into the one-dimensional abelian
/// algebra exactly when it kills every bracket.
inline bool is_hom(const Cochain1& sigma) {
  const std::size_t n = sigma.algebra()->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sigma.on_bracket(i, j) != 0) return false;
  return true;
}

/// Alternating 2-cocycle with trivial coefficients: antisymmetric values
/// matrix satisfying f([x,y],z) + f([y,z],x) + f([z,x],y) = 0 on all basis
/// triples. Both conditions are validated at construction.
class Cocycle2 {
public:
  static Cocycle2 from_matrix(AlgebraPtr algebra, Mat values) {
    Cocycle2 f(std::move(algebra), std::move(values));
    f.validate_alternating();
    f.validate_identity();
    return f;
  }

  static Cocycle2 zero(AlgebraPtr algebra) {
    const std::size_t n = algebra->dim();
    return Cocycle2(std::move(algebra), Mat(n, n));
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const Mat& values() const { return values_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

  Rat apply(const Mat& x, const Mat& y) const {
    Rat s = 0;
    const std::size_t n = algebra_->dim();
    for (std::size_t i = 0; i < n; ++i) {
      if (x(i, 0) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) s += x(i, 0) * y(j, 0) * values_(i, j);
    }
    return s;
  }

  bool is_zero() const { return values_.is_zero(); }

  /// Coordinates in the strict-upper-triangle basis.
  std::vector<Rat> to_vector() const {
    const std::size_t n = algebra_->dim();
    std::vector<Rat> v(pair_count(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) v[pair_index(i, j, n)] = values_(i, j);
    return v;
  }

  static Cocycle2 from_vector(AlgebraPtr algebra, const std::vector<Rat>& v) {
    const std::size_t n = algebra->dim();
    if (v.size() != pair_count(n))
      throw std::invalid_argument("cocycle: coordinate vector has wrong length");
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = v[pair_index(i, j, n)];
        m(j, i) = -m(i, j);
      }
    return from_matrix(std::move(algebra), std::move(m));
  }

  Cocycle2 operator+(const Cocycle2& other) const {
    return Cocycle2(algebra_, values_ + other.values_);
  }
  Cocycle2 operator-(const Cocycle2& other) const {
    return Cocycle2(algebra_, values_ - other.values_);
  }
  friend Cocycle2 operator*(const Rat& c, const Cocycle2& f) {
    return Cocycle2(f.algebra_, c * f.values_);
  }
  bool operator==(const Cocycle2& other) const { return values_ == other.values_; }

  void validate_alternating() const {
    const std::size_t n = algebra_->dim();
    if (values_.rows() != n || values_.cols() != n)
      throw validation_error("cocycle: values must be dim x dim");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (values_(i, j) != -values_(j, i))
          throw validation_error("cocycle: not alternating at (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
  }

  void validate_identity() const {
    const std::size_t n = algebra_->dim();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = y + 1; z < n; ++z) {
          Rat sum = 0;
          for (std::size_t l = 0; l < n; ++l)
            sum += algebra_->c(x, y, l) * values_(l, z) + algebra_->c(y, z, l) * values_(l, x) +
                   algebra_->c(z, x, l) * values_(l, y);
          if (sum != 0)
            throw validation_error("cocycle: identity fails at triple (" + std::to_string(x) +
                                   ", " + std::to_string(y) + ", " + std::to_string(z) + ")");
        }
  }

private:
  Cocycle2(AlgebraPtr algebra, Mat values)
      : algebra_(std::move(algebra)), values_(std::move(values)) {}

  AlgebraPtr algebra_;
  Mat values_;
};

/// f(x, y) = -sigma([x, y]).
inline Cocycle2 coboundary(const Cochain1& sigma) {
  const std::size_t n = sigma.algebra()->dim();
  Mat values(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      values(i, j) = -sigma.on_bracket(i, j);
      values(j, i) = -values(i, j);
    }
  return Cocycle2::from_matrix(sigma.algebra(), std::move(values));
}

namespace detail {

/// Columns: coboundaries of the dual-basis functionals, in pair coordinates.
inline Mat coboundary_map(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Mat d(pair_count(n), n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d(pair_index(i, j, n), col) = -l.c(i, j, col);
  return d;
}

/// Rows: the cocycle identity on each basis triple, in pair coordinates.
inline Mat cocycle_identity_system(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const std::size_t triples = n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
  Mat m(triples, pair_count(n));
  std::size_t row = 0;
  const auto add = [&](std::size_t r, std::size_t a, std::size_t b, const Rat& coef) {
    // contribution coef * f(a, b) with arbitrary a != b
    if (a < b)
      m(r, pair_index(a, b, n)) += coef;
    else if (b < a)
      m(r, pair_index(b, a, n)) -= coef;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z, ++row)
        for (std::size_t l2 = 0; l2 < n; ++l2) {
          if (l.c(x, y, l2) != 0) add(row, l2, z, l.c(x, y, l2));
          if (l.c(y, z, l2) != 0) add(row, l2, x, l.c(y, z, l2));
          if (l.c(z, x, l2) != 0) add(row, l2, y, l.c(z, x, l2));
        }
  return m;
}

} // namespace detail

/// Z^2, B^2 and a representative basis of H^2 = Z^2 / B^2. Representatives
/// are the lexicographically first nullspace vectors completing B^2 to Z^2.
struct CohomologyBasis {
  AlgebraPtr algebra;
  std::size_t z2_dim = 0;
  std::size_t b2_dim = 0;
  std::size_t h2_dim = 0;
  std::vector<Cocycle2> representatives;
};

inline CohomologyBasis h2(const AlgebraPtr& l) {
  CohomologyBasis basis;
  basis.algebra = l;

  const Mat z_system = detail::cocycle_identity_system(*l);
  const Mat z_basis = nullspace_matrix(z_system);
  basis.z2_dim = z_basis.cols();

  const Mat d = detail::coboundary_map(*l);
  const Mat b_basis = column_space(d);
  basis.b2_dim = b_basis.cols();
  basis.h2_dim = basis.z2_dim - basis.b2_dim;

  const auto combined = rref(hcat(b_basis, z_basis));
  for (std::size_t p : combined.pivots) {
    if (p < b_basis.cols()) continue;
    std::vector<Rat> coords(z_basis.rows());
    for (std::size_t i = 0; i < z_basis.rows(); ++i) coords[i] = z_basis(i, p - b_basis.cols());
    basis.representatives.push_back(Cocycle2::from_vector(l, coords));
  }
  if (basis.representatives.size() != basis.h2_dim)
    throw std::logic_error("h2: representative count mismatch");
  return basis;
}

/// Witness sigma with coboundary(sigma) = mu2 - mu1, when one exists.
inline std::optional<Cochain1> is_cohomologous(const Cocycle2& mu1, const Cocycle2& mu2) {
  if (!same_structure(*mu1.algebra(), *mu2.algebra()))
    throw std::invalid_argument("is_cohomologous: cocycles live on different algebras");
  const Mat d = detail::coboundary_map(*mu1.algebra());
  const auto diff = (mu2 - mu1).to_vector();
  const auto sigma = solve(d, Mat::column(diff));
  if (!sigma) return std::nullopt;
  std::vector<Rat> values(mu1.algebra()->dim());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = (*sigma)(i, 0);
  return Cochain1(mu1.algebra(), std::move(values));
}

/// Coordinates of [mu] in the representative basis: the unique t with
/// mu - sum_i t_i rep_i a coboundary.
inline std::vector<Rat> class_coordinates(const Cocycle2& mu, const CohomologyBasis& basis) {
  if (!same_structure(*mu.algebra(), *basis.algebra))
    throw std::invalid_argument("class_coordinates: algebra mismatch");
  const std::size_t n = basis.algebra->dim();
  Mat reps(pair_count(n), basis.h2_dim);
  for (std::size_t t = 0; t < basis.h2_dim; ++t) {
    const auto v = basis.representatives[t].to_vector();
    for (std::size_t i = 0; i < v.size(); ++i) reps(i, t) = v[i];
  }
  const Mat d = detail::coboundary_map(*basis.algebra);
  const auto w = solve(hcat(reps, d), Mat::column(mu.to_vector()));
  if (!w) throw std::logic_error("class_coordinates: valid cocycle outside Z^2");
  std::vector<Rat> coords(basis.h2_dim);
  for (std::size_t t = 0; t < basis.h2_dim; ++t) coords[t] = (*w)(t, 0);
  return coords;
}

// ---- "cocycle v1" file format ----
//
//   cocycle 1
//   <dim>
//   <i j p/q>   strict upper triangle, zeros omitted

inline std::string render_cocycle(const Cocycle2& f) {
  const std::size_t n = f.algebra()->dim();
  std::ostringstream os;
  os << "cocycle 1\n" << n << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f(i, j) != 0) os << i << ' ' << j << ' ' << format_rational(f(i, j)) << '\n';
  return os.str();
}

inline Cocycle2 parse_cocycle(const std::string& text, AlgebraPtr algebra) {
  std::istringstream is(text);
  std::string word;
  int version = -1;
  if (!(is >> word >> version) || word != "cocycle" || version != 1)
    throw parse_error("cocycle: expected header 'cocycle 1'");
  long long dim = -1;
  if (!(is >> dim) || dim < 0) throw parse_error("cocycle: invalid dimension");
  if (static_cast<std::size_t>(dim) != algebra->dim())
    throw validation_error("cocycle: dimension does not match the algebra");
  Mat values(algebra->dim(), algebra->dim());
  long long i, j;
  while (is >> i) {
    if (!(is >> j >> word)) throw parse_error("cocycle: truncated entry line");
    if (i < 0 || j <= i || j >= dim) throw parse_error("cocycle: bad index pair");
    const Rat v = parse_rational(word);
    values(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
    values(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -v;
  }
  if (!is.eof()) throw parse_error("cocycle: malformed entry line");
  return Cocycle2::from_matrix(std::move(algebra), std::move(values));
}

} // namespace plesken
