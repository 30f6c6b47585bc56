#pragma once

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plesken/error.hpp"
#include "plesken/group.hpp"
#include "plesken/matrix.hpp"

namespace plesken {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Matrix realization of a finite group: one invertible d x d rational
/// matrix per element. When `modulus` is nonzero the group law is matrix
/// multiplication followed by entry-wise reduction mod `modulus` (the
/// images then use the representative entries 0..modulus-1); with modulus
/// zero the homomorphism property holds exactly.
struct MatrixRepresentation {
  GroupPtr group;
  std::size_t degree = 0;
  std::vector<Mat> images;
  std::size_t modulus = 0;

  static MatrixRepresentation make(GroupPtr group, std::vector<Mat> images,
                                   std::size_t modulus = 0) {
    MatrixRepresentation rep;
    rep.group = std::move(group);
    rep.images = std::move(images);
    rep.modulus = modulus;
    if (rep.images.empty() || !rep.group || rep.images.size() != rep.group->order())
      throw validation_error("matrix representation: one image per group element required");
    rep.degree = rep.images.front().rows();
    for (const Mat& m : rep.images)
      if (m.rows() != rep.degree || m.cols() != rep.degree)
        throw validation_error("matrix representation: images must be square of equal degree");
    rep.validate();
    return rep;
  }

  Mat reduce(Mat m) const {
    if (modulus == 0) return m;
    const Int p = modulus;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rat& x = m(i, j);
        if (den(x) != 1)
          throw validation_error("matrix representation: non-integer entry under modular reduction");
        Int r = num(x) % p;
        if (r < 0) r += p;
        m(i, j) = Rat(r);
      }
    return m;
  }

  void validate() const {
    const FiniteGroup& g = *group;
    if (images[g.identity()] != Mat::identity(degree))
      throw validation_error("matrix representation: identity image is not the identity matrix");
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (reduce(images[a] * images[g.inv(a)]) != Mat::identity(degree))
        throw validation_error("matrix representation: image of element " + std::to_string(a) +
                               " is not inverted by the image of its inverse");
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (reduce(images[a] * images[b]) != images[g.mul(a, b)])
          throw validation_error("matrix representation: homomorphism fails at pair (" +
                                 std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
};

/// The two subgroups of the Heisenberg group over Z_p used throughout:
/// `full` is the whole group of order p^3 by unitriangular 3 x 3 matrices,
/// `G` fixes the (1,2) entry to zero (order p^2), `H` keeps only the (1,3)
/// entry free (order p).
struct HeisenbergSubgroups {
  MatrixRepresentation G;
  MatrixRepresentation H;
  MatrixRepresentation full;
};

inline HeisenbergSubgroups heisenberg_subgroups(std::size_t p) {
  if (!FiniteGroup::is_prime(p)) throw validation_error("heisenberg_subgroups: p must be prime");

  const auto unitriangular = [](std::size_t x, std::size_t y, std::size_t z) {
    Mat m = Mat::identity(3);
    m(0, 1) = Rat(x);
    m(0, 2) = Rat(y);
    m(1, 2) = Rat(z);
    return m;
  };

  HeisenbergSubgroups result;

  { // full group, order p^3, indices (a p + b) p + c as in FiniteGroup::heisenberg
    auto group = std::make_shared<const FiniteGroup>(FiniteGroup::heisenberg(p));
    std::vector<Mat> images;
    images.reserve(group->order());
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b)
        for (std::size_t c = 0; c < p; ++c) images.push_back(unitriangular(a, b, c));
    result.full = MatrixRepresentation::make(std::move(group), std::move(images), p);
  }

  { // G = {(1,2) entry zero}, order p^2, index y p + z
    std::vector<std::vector<std::size_t>> t(p * p, std::vector<std::size_t>(p * p));
    for (std::size_t y = 0; y < p; ++y)
      for (std::size_t z = 0; z < p; ++z)
        for (std::size_t y2 = 0; y2 < p; ++y2)
          for (std::size_t z2 = 0; z2 < p; ++z2)
            t[y * p + z][y2 * p + z2] = ((y + y2) % p) * p + (z + z2) % p;
    auto group = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_table(std::move(t), "heisenberg" + std::to_string(p) + "_G"));
    std::vector<Mat> images;
    images.reserve(p * p);
    for (std::size_t y = 0; y < p; ++y)
      for (std::size_t z = 0; z < p; ++z) images.push_back(unitriangular(0, y, z));
    result.G = MatrixRepresentation::make(std::move(group), std::move(images), p);
  }

  { // H = {only (1,3) entry free}, order p
    auto group = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(p));
    std::vector<Mat> images;
    images.reserve(p);
    for (std::size_t y = 0; y < p; ++y) images.push_back(unitriangular(0, y, 0));
    result.H = MatrixRepresentation::make(std::move(group), std::move(images), p);
  }

  return result;
}

// ---- "matrep v1" file format ----
//
//   matrep 1
//   <n> <d>
//   n blocks of d lines with d rationals each, blocks separated by a blank
//   line; block k is the image of element k.
//
// The group table is reconstructed by matching exact products against the
// images, so the file must describe a faithful exact representation.

inline std::string render_matrep(const MatrixRepresentation& rep) {
  std::ostringstream os;
  os << "matrep 1\n" << rep.group->order() << ' ' << rep.degree << '\n';
  for (std::size_t k = 0; k < rep.images.size(); ++k) {
    if (k) os << '\n';
    for (std::size_t i = 0; i < rep.degree; ++i) {
      for (std::size_t j = 0; j < rep.degree; ++j) {
        if (j) os << ' ';
        os << format_rational(rep.images[k](i, j));
      }
      os << '\n';
    }
  }
  return os.str();
}

inline MatrixRepresentation parse_matrep(const std::string& text, std::string name = "group") {
  std::istringstream is(text);
  std::string word;
  int version = -1;
  if (!(is >> word >> version) || word != "matrep" || version != 1)
    throw parse_error("matrep: expected header 'matrep 1'");
  long long n = 0, d = 0;
  if (!(is >> n >> d) || n <= 0 || d <= 0) throw parse_error("matrep: invalid dimensions");

  std::vector<Mat> images;
  images.reserve(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) {
    Mat m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) {
        if (!(is >> word)) throw parse_error("matrep: block " + std::to_string(k) + " truncated");
        m(i, j) = parse_rational(word);
      }
    images.push_back(std::move(m));
  }
  if (is >> word) throw parse_error("matrep: unexpected trailing token '" + word + "'");

  // Reconstruct the multiplication table from exact products.
  const std::size_t order = images.size();
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const Mat prod = images[a] * images[b];
      std::size_t found = order;
      for (std::size_t k = 0; k < order; ++k)
        if (images[k] == prod) {
          found = k;
          break;
        }
      if (found == order)
        throw validation_error("matrep: product of blocks " + std::to_string(a) + " and " +
                               std::to_string(b) + " is not among the images (not closed)");
      table[a][b] = found;
    }
  auto group =
      std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(table), std::move(name)));
  return MatrixRepresentation::make(std::move(group), std::move(images));
}

} // namespace plesken
