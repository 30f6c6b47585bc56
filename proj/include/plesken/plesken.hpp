#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "plesken/error.hpp"
#include "plesken/group.hpp"
#include "plesken/group_algebra.hpp"
#include "plesken/lie_algebra.hpp"
#include "plesken/matrix.hpp"
#include "plesken/matrix_rep.hpp"

namespace plesken {

/// Spanning data for the hat elements g - g^{-1}: one representative per
/// inverse pair {g, g^{-1}} with g != g^{-1} (the smaller index), plus the
/// expansion of every hat in that basis.
struct HatBasis {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Expansion {
    std::size_t index = npos; // position in representatives; npos when sign == 0
    int sign = 0;             // +1, -1, or 0 (hat of an involution or identity)
  };

  std::vector<std::size_t> representatives; // ascending group-element indices
  std::vector<Expansion> expand;            // one per group element

  static HatBasis of(const FiniteGroup& g) {
    HatBasis basis;
    basis.expand.resize(g.order());
    std::vector<std::size_t> position(g.order(), npos);
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t xi = g.inv(x);
      if (x == xi) continue; // hat is zero
      if (x < xi) {
        position[x] = basis.representatives.size();
        basis.representatives.push_back(x);
      }
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t xi = g.inv(x);
      if (x == xi) continue;
      if (x < xi)
        basis.expand[x] = {position[x], +1};
      else
        basis.expand[x] = {position[xi], -1};
    }
    return basis;
  }
};

struct PleskenAlgebra {
  AlgebraPtr algebra;
  HatBasis hats;
};

/// The Plesken Lie algebra inside the rational group algebra: span of the
/// hats with the commutator bracket. Structure constants come from
/// convolving representative hats and projecting back onto the hat basis;
/// the projection is verified exact.
inline PleskenAlgebra plesken_from_group(const FiniteGroup& g) {
  const HatBasis hats = HatBasis::of(g);
  const std::size_t m = hats.representatives.size();

  std::vector<GroupAlgebraElement> basis_hats;
  basis_hats.reserve(m);
  for (std::size_t r : hats.representatives) basis_hats.push_back(hat(r, g));

  // project a group-algebra element onto the hat span, verifying membership
  const auto project = [&](const GroupAlgebraElement& v) {
    std::vector<Rat> coords(m);
    GroupAlgebraElement remainder = v;
    for (std::size_t t = 0; t < m; ++t) {
      coords[t] = v[hats.representatives[t]];
      if (coords[t] != 0) remainder = remainder - coords[t] * basis_hats[t];
    }
    if (!remainder.is_zero())
      throw validation_error("plesken: bracket escapes the hat span (closure failure)");
    return coords;
  };

  std::vector<Rat> tensor(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto coords = project(bracket(basis_hats[i], basis_hats[j]));
      for (std::size_t k = 0; k < m; ++k) {
        tensor[(i * m + j) * m + k] = coords[k];
        tensor[(j * m + i) * m + k] = -coords[k];
      }
    }

  std::vector<std::string> labels(m);
  for (std::size_t t = 0; t < m; ++t)
    labels[t] = "hat(g" + std::to_string(hats.representatives[t]) + ")";

  PleskenAlgebra result;
  result.algebra = make_algebra(LieAlgebra::from_structure(std::move(labels), std::move(tensor)));
  result.hats = hats;
  return result;
}

struct MatrixPlesken {
  AlgebraPtr algebra;
  std::vector<std::size_t> pivot_elements; // group elements whose hats form the basis
  std::vector<Mat> basis_matrices;         // the hat matrices of those elements
};

/// The Plesken Lie algebra of a matrix realization: the rational span of
/// image(g) - image(g^{-1}) inside d x d matrices, with the commutator
/// bracket. A basis is selected by rref pivots over the flattened hat
/// matrices in element order.
inline MatrixPlesken plesken_from_matrices(const MatrixRepresentation& rep) {
  const FiniteGroup& g = *rep.group;
  const std::size_t d = rep.degree;
  const std::size_t d2 = d * d;

  std::vector<Mat> hat_matrices;
  hat_matrices.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    hat_matrices.push_back(rep.images[x] - rep.images[g.inv(x)]);

  Mat flat(d2, g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) flat(i * d + j, x) = hat_matrices[x](i, j);

  const std::vector<std::size_t> pivots = rref(flat).pivots;
  const std::size_t m = pivots.size();
  const Mat span = columns_at(flat, pivots);

  std::vector<Mat> basis;
  basis.reserve(m);
  for (std::size_t p : pivots) basis.push_back(hat_matrices[p]);

  std::vector<Rat> tensor(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Mat comm = basis[i] * basis[j] - basis[j] * basis[i];
      Mat rhs(d2, 1);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) rhs(a * d + b, 0) = comm(a, b);
      const auto coords = solve(span, rhs);
      if (!coords)
        throw validation_error("plesken: commutator escapes the matrix span (closure failure)");
      for (std::size_t k = 0; k < m; ++k) {
        tensor[(i * m + j) * m + k] = (*coords)(k, 0);
        tensor[(j * m + i) * m + k] = -(*coords)(k, 0);
      }
    }

  std::vector<std::string> labels(m);
  for (std::size_t t = 0; t < m; ++t) labels[t] = "hat(g" + std::to_string(pivots[t]) + ")";

  MatrixPlesken result;
  result.algebra = make_algebra(LieAlgebra::from_structure(std::move(labels), std::move(tensor)));
  result.pivot_elements = pivots;
  result.basis_matrices = std::move(basis);
  return result;
}

} // namespace plesken
