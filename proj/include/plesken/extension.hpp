#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plesken/cohomology.hpp"
#include "plesken/error.hpp"
#include "plesken/lie_algebra.hpp"
#include "plesken/matrix.hpp"

namespace plesken {

/// Central extension 0 -> A -> E -g-> L -> 0 with a chosen linear section
/// s of g. A is the abelian kernel, realized as ker(g) = im(f).
struct CentralExtension {
  AlgebraPtr base;  // L
  AlgebraPtr total; // E
  Mat f;            // dim(E) x k, injection of the kernel
  Mat g;            // dim(L) x dim(E), surjection onto the base
  Mat s;            // dim(E) x dim(L), section: g s = identity

  std::size_t kernel_dim() const { return f.cols(); }

  static CentralExtension make(AlgebraPtr base, AlgebraPtr total, Mat f, Mat g, Mat s) {
    CentralExtension e;
    e.base = std::move(base);
    e.total = std::move(total);
    e.f = std::move(f);
    e.g = std::move(g);
    e.s = std::move(s);
    e.validate();
    return e;
  }

  void validate() const {
    const std::size_t dl = base->dim(), de = total->dim(), k = f.cols();
    if (f.rows() != de || g.rows() != dl || g.cols() != de || s.rows() != de || s.cols() != dl)
      throw validation_error("extension: map shapes are inconsistent");
    if (de != dl + k) throw validation_error("extension: dim(E) != dim(L) + kernel dim");
    if (rank(f) != k) throw validation_error("extension: f is not injective");
    if (rank(g) != dl) throw validation_error("extension: g is not surjective");
    if (!subspace_equal(f, nullspace_matrix(g)))
      throw validation_error("extension: image(f) != kernel(g), sequence is not exact");
    if (g * s != Mat::identity(dl)) throw validation_error("extension: g s != identity");
    if (!subspace_contains(center(*total), f))
      throw validation_error("extension: kernel is not central in the total algebra");
    // g is a Lie homomorphism; f automatically is, the kernel being
    // abelian and central.
    for (std::size_t i = 0; i < de; ++i)
      for (std::size_t j = i + 1; j < de; ++j) {
        const Mat lhs = g * total->bracket(total->basis_vector(i), total->basis_vector(j));
        const Mat rhs = base->bracket(g.col(i), g.col(j));
        if (lhs != rhs)
          throw validation_error("extension: g fails to be a Lie homomorphism at pair (" +
                                 std::to_string(i) + ", " + std::to_string(j) + ")");
      }
  }
};

namespace detail {

/// Total algebra L + A with bracket [(x,a),(y,b)] = ([x,y], alpha(x,y)).
/// The forms are raw antisymmetric matrices; Jacobi for the result is
/// exactly the cocycle identity for each form.
inline LieAlgebra extension_total_from_forms(const LieAlgebra& l, const std::vector<Mat>& alphas) {
  const std::size_t m = l.dim(), k = alphas.size(), n = m + k;
  for (const Mat& a : alphas)
    if (a.rows() != m || a.cols() != m)
      throw std::invalid_argument("extension: form has wrong shape");
  std::vector<Rat> tensor(n * n * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t x = 0; x < m; ++x) tensor[(i * n + j) * n + x] = l.c(i, j, x);
      for (std::size_t t = 0; t < k; ++t) tensor[(i * n + j) * n + (m + t)] = alphas[t](i, j);
    }
  std::vector<std::string> labels = l.labels();
  for (std::size_t t = 0; t < k; ++t) labels.push_back("z" + std::to_string(t));
  return LieAlgebra::from_structure(std::move(labels), std::move(tensor));
}

} // namespace detail

/// Canonical central extension attached to a list of validated cocycles:
/// total = L + A, f and g the coordinate injection/projection, s the
/// coordinate section.
inline CentralExtension extension_from_cocycles(const AlgebraPtr& l,
                                                const std::vector<Cocycle2>& alphas) {
  const std::size_t m = l->dim(), k = alphas.size();
  std::vector<Mat> forms;
  forms.reserve(k);
  for (const auto& a : alphas) {
    if (!same_structure(*a.algebra(), *l))
      throw std::invalid_argument("extension_from_cocycles: cocycle on a different algebra");
    forms.push_back(a.values());
  }
  AlgebraPtr total = make_algebra(detail::extension_total_from_forms(*l, forms));

  Mat f(m + k, k), g(m, m + k), s(m + k, m);
  for (std::size_t t = 0; t < k; ++t) f(m + t, t) = 1;
  for (std::size_t i = 0; i < m; ++i) {
    g(i, i) = 1;
    s(i, i) = 1;
  }
  return CentralExtension::make(l, std::move(total), std::move(f), std::move(g), std::move(s));
}

/// Section defect beta(x, y) = [s(x), s(y)] - s([x, y]) expressed in kernel
/// coordinates; one validated cocycle per kernel dimension.
inline std::vector<Cocycle2> beta_from_section(const CentralExtension& e) {
  const std::size_t m = e.base->dim(), k = e.kernel_dim();
  std::vector<Mat> values(k, Mat(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Mat w = e.total->bracket(e.s.col(i), e.s.col(j)) -
                    e.s * e.base->bracket(e.base->basis_vector(i), e.base->basis_vector(j));
      const auto a = solve(e.f, w);
      if (!a)
        throw validation_error("beta_from_section: section defect escapes the kernel at pair (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
      for (std::size_t t = 0; t < k; ++t) {
        values[t](i, j) = (*a)(t, 0);
        values[t](j, i) = -(*a)(t, 0);
      }
    }
  std::vector<Cocycle2> betas;
  betas.reserve(k);
  for (std::size_t t = 0; t < k; ++t)
    betas.push_back(Cocycle2::from_matrix(e.base, std::move(values[t])));
  return betas;
}

/// Equivalence of two central extensions of the same base by the same
/// kernel: a Lie isomorphism phi with phi f1 = f2 and g2 phi = g1. Exists
/// exactly when the section cocycles agree class-wise, coordinate by
/// coordinate; phi is then assembled from the witnesses and verified.
inline std::optional<Mat> are_equivalent(const CentralExtension& e1, const CentralExtension& e2) {
  if (!same_structure(*e1.base, *e2.base))
    throw std::invalid_argument("are_equivalent: different base algebras");
  if (e1.kernel_dim() != e2.kernel_dim())
    throw std::invalid_argument("are_equivalent: different kernel dimensions");
  const std::size_t m = e1.base->dim(), k = e1.kernel_dim(), de = e1.total->dim();

  const auto beta1 = beta_from_section(e1);
  const auto beta2 = beta_from_section(e2);

  // tau: L -> A with beta2_t - beta1_t = tau_t([x, y]) for every t
  Mat tau(k, m);
  for (std::size_t t = 0; t < k; ++t) {
    const auto sigma = is_cohomologous(beta2[t], beta1[t]);
    if (!sigma) return std::nullopt;
    for (std::size_t x = 0; x < m; ++x) tau(t, x) = (*sigma)[x];
  }

  // phi(v) = s2(g1 v) + f2 (a(v) + tau(g1 v)) where a(v) are the kernel
  // coordinates of v - s1(g1 v)
  const auto a_of = solve(e1.f, Mat::identity(de) - e1.s * e1.g);
  if (!a_of) throw std::logic_error("are_equivalent: kernel coordinates unsolvable");
  const Mat phi = e2.s * e1.g + e2.f * (*a_of + tau * e1.g);

  // verify the diagram and the homomorphism property
  if (phi * e1.f != e2.f) throw std::logic_error("are_equivalent: phi f1 != f2");
  if (e2.g * phi != e1.g) throw std::logic_error("are_equivalent: g2 phi != g1");
  if (!is_invertible(phi)) throw std::logic_error("are_equivalent: phi is not invertible");
  for (std::size_t i = 0; i < de; ++i)
    for (std::size_t j = i + 1; j < de; ++j) {
      const Mat lhs = phi * e1.total->bracket(e1.total->basis_vector(i), e1.total->basis_vector(j));
      const Mat rhs = e2.total->bracket(phi.col(i), phi.col(j));
      if (lhs != rhs) throw std::logic_error("are_equivalent: phi is not a Lie homomorphism");
    }
  return phi;
}

/// Cover: central extension with Ker(g) inside [E, E], kernel isomorphic
/// to H^2(L) and dim(E) = dim(L) + h2 within the n(n+1)/2 bound.
struct Cover {
  CentralExtension extension;
  CohomologyBasis multiplier;
  Mat multiplier_iso; // kernel coordinates -> H^2 coordinates
};

/// Certifies an arbitrary central extension as a cover of its base. The
/// kernel-to-multiplier identification sends the t-th kernel coordinate to
/// the class of the t-th section cocycle.
inline Cover cover_from_extension(CentralExtension e, CohomologyBasis multiplier) {
  const std::size_t n = e.base->dim();
  if (e.kernel_dim() != multiplier.h2_dim)
    throw validation_error("cover: kernel dimension " + std::to_string(e.kernel_dim()) +
                           " differs from h2 = " + std::to_string(multiplier.h2_dim));
  const Mat derived = derived_subalgebra(*e.total);
  std::vector<std::size_t> missed;
  for (std::size_t t = 0; t < e.kernel_dim(); ++t)
    if (!subspace_contains(derived, e.f.col(t))) missed.push_back(t);
  if (!missed.empty()) {
    std::string which;
    for (std::size_t t : missed) which += (which.empty() ? "" : ", ") + std::to_string(t);
    throw validation_error("cover: kernel coordinates {" + which +
                           "} lie outside the derived subalgebra");
  }
  if (e.total->dim() > n * (n + 1) / 2)
    throw validation_error("cover: total dimension exceeds n(n+1)/2");

  Mat iso(multiplier.h2_dim, e.kernel_dim());
  const auto betas = beta_from_section(e);
  for (std::size_t t = 0; t < e.kernel_dim(); ++t) {
    const auto coords = class_coordinates(betas[t], multiplier);
    for (std::size_t r = 0; r < multiplier.h2_dim; ++r) iso(r, t) = coords[r];
  }
  if (!is_invertible(iso))
    throw validation_error("cover: kernel classes do not span the multiplier");

  Cover c;
  c.extension = std::move(e);
  c.multiplier = std::move(multiplier);
  c.multiplier_iso = std::move(iso);
  return c;
}

/// The canonical cover: extension by the chosen H^2 representatives. With
/// that choice multiplier_iso is the identity.
inline Cover build_cover(const AlgebraPtr& l) {
  CohomologyBasis basis = h2(l);
  CentralExtension e = extension_from_cocycles(l, basis.representatives);
  return cover_from_extension(std::move(e), std::move(basis));
}

struct TransgressionResult {
  Cocycle2 cocycle;
  std::vector<Rat> class_coords;
};

/// Tra(chi) = [chi . beta] for a functional chi on the kernel.
inline TransgressionResult transgression(const CentralExtension& e, const std::vector<Rat>& chi,
                                         const CohomologyBasis& basis) {
  if (chi.size() != e.kernel_dim())
    throw std::invalid_argument("transgression: chi has wrong length");
  const auto betas = beta_from_section(e);
  Cocycle2 composed = Cocycle2::zero(e.base);
  for (std::size_t t = 0; t < chi.size(); ++t)
    if (chi[t] != 0) composed = composed + chi[t] * betas[t];
  TransgressionResult r{composed, class_coordinates(composed, basis)};
  return r;
}

inline TransgressionResult transgression(const CentralExtension& e, const std::vector<Rat>& chi) {
  return transgression(e, chi, h2(e.base));
}

/// The low-degree exact sequence of a central extension,
///   Hom(L) -Inf1-> Hom(E) -Res-> Hom(A) -Tra-> H2(L) -Inf2-> H2(E),
/// with Hom spaces realized as functionals vanishing on the derived
/// subalgebra and maps written in the chosen bases.
struct HochschildSerreMaps {
  Mat hom_base_basis;  // dim(L) x p, basis of Hom(L, F)
  Mat hom_total_basis; // dim(E) x q, basis of Hom(E, F)
  Mat inf1;            // q x p
  Mat res;             // k x q
  Mat tra;             // h2(L) x k
  Mat inf2;            // h2(E) x h2(L)
  CohomologyBasis h2_base;
  CohomologyBasis h2_total;
};

namespace detail {

/// Functionals vanishing on [X, X], as nullspace columns of the bracket rows.
inline Mat hom_space(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Mat rows(pair_count(n), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t x = 0; x < n; ++x) rows(pair_index(i, j, n), x) = l.c(i, j, x);
  return nullspace_matrix(rows);
}

} // namespace detail

inline HochschildSerreMaps hochschild_serre_maps(const CentralExtension& e) {
  HochschildSerreMaps maps;
  maps.hom_base_basis = detail::hom_space(*e.base);
  maps.hom_total_basis = detail::hom_space(*e.total);
  maps.h2_base = h2(e.base);
  maps.h2_total = h2(e.total);
  const std::size_t k = e.kernel_dim();

  // Inf1: sigma -> sigma . g, in coordinates of the Hom bases
  {
    const Mat ambient = e.g.transpose() * maps.hom_base_basis;
    const auto coords = solve(maps.hom_total_basis, ambient);
    if (!coords) throw std::logic_error("hochschild_serre: inflated functional not in Hom(E)");
    maps.inf1 = *coords;
  }

  // Res: theta -> theta . f
  maps.res = e.f.transpose() * maps.hom_total_basis;

  // Tra: column t is the class of beta_t
  {
    const auto betas = beta_from_section(e);
    maps.tra = Mat(maps.h2_base.h2_dim, k);
    for (std::size_t t = 0; t < k; ++t) {
      const auto coords = class_coordinates(betas[t], maps.h2_base);
      for (std::size_t r = 0; r < maps.h2_base.h2_dim; ++r) maps.tra(r, t) = coords[r];
    }
  }

  // Inf2: pull back each H2(L) representative through g and take its class
  {
    const std::size_t de = e.total->dim();
    maps.inf2 = Mat(maps.h2_total.h2_dim, maps.h2_base.h2_dim);
    for (std::size_t c = 0; c < maps.h2_base.h2_dim; ++c) {
      const Cocycle2& alpha = maps.h2_base.representatives[c];
      Mat pulled(de, de);
      for (std::size_t u = 0; u < de; ++u)
        for (std::size_t v = u + 1; v < de; ++v) {
          pulled(u, v) = alpha.apply(e.g.col(u), e.g.col(v));
          pulled(v, u) = -pulled(u, v);
        }
      const auto coords =
          class_coordinates(Cocycle2::from_matrix(e.total, std::move(pulled)), maps.h2_total);
      for (std::size_t r = 0; r < maps.h2_total.h2_dim; ++r) maps.inf2(r, c) = coords[r];
    }
  }
  return maps;
}

// ---- extension dump format ----
//
// base "liealg v1" block, total "liealg v1" block, then
//
//   maps 1
//   f <rows> <cols>   (row-major rational entries, one row per line)
//   g <rows> <cols>
//   s <rows> <cols>

inline std::string render_extension(const CentralExtension& e) {
  std::ostringstream os;
  os << render_liealg(*e.base) << '\n' << render_liealg(*e.total) << '\n' << "maps 1\n";
  const auto emit = [&](const char* label, const Mat& m) {
    os << label << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) os << ' ';
        os << format_rational(m(i, j));
      }
      os << '\n';
    }
  };
  emit("f", e.f);
  emit("g", e.g);
  emit("s", e.s);
  return os.str();
}

inline CentralExtension parse_extension(const std::string& text) {
  // split off the two liealg blocks by locating the headers
  const auto second = text.find("liealg 1", text.find("liealg 1") + 1);
  const auto maps_at = text.find("maps 1");
  if (text.find("liealg 1") != 0 || second == std::string::npos || maps_at == std::string::npos)
    throw parse_error("extension: expected two liealg blocks followed by 'maps 1'");
  const LieAlgebra base = parse_liealg(text.substr(0, second));
  const LieAlgebra total = parse_liealg(text.substr(second, maps_at - second));

  std::istringstream is(text.substr(maps_at));
  std::string word;
  int version = -1;
  if (!(is >> word >> version) || word != "maps" || version != 1)
    throw parse_error("extension: expected 'maps 1'");
  const auto read_matrix = [&](const char* label) {
    long long r = -1, c = -1;
    if (!(is >> word) || word != label)
      throw parse_error(std::string("extension: expected matrix '") + label + "'");
    if (!(is >> r >> c) || r < 0 || c < 0) throw parse_error("extension: bad matrix header");
    Mat m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!(is >> word)) throw parse_error("extension: truncated matrix");
        m(i, j) = parse_rational(word);
      }
    return m;
  };
  Mat f = read_matrix("f");
  Mat g = read_matrix("g");
  Mat s = read_matrix("s");
  if (is >> word) throw parse_error("extension: unexpected trailing token '" + word + "'");
  return CentralExtension::make(make_algebra(base), make_algebra(total), std::move(f),
                                std::move(g), std::move(s));
}

} // namespace plesken
