#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "plesken/cohomology.hpp"
#include "plesken/error.hpp"
#include "plesken/extension.hpp"
#include "plesken/lie_algebra.hpp"
#include "plesken/matrix.hpp"

namespace plesken {

namespace detail {

inline Mat flatten(const Mat& m) {
  Mat v(m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
  return v;
}

inline Mat unflatten(const Mat& v, std::size_t d) {
  Mat m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = v(i * d + j, 0);
  return m;
}

/// Incremental row space in echelon form; add() reports independence.
class RowSpace {
public:
  bool add(std::vector<Rat> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat& lead = v[pivots_[r]];
      if (lead == 0) continue;
      const Rat factor = lead;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * rows_[r][c];
    }
    std::size_t pivot = v.size();
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) {
        pivot = c;
        break;
      }
    if (pivot == v.size()) return false;
    const Rat lead = v[pivot];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] /= lead;
    std::size_t at = rows_.size();
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (pivots_[r] > pivot) {
        at = r;
        break;
      }
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, pivot);
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

private:
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace detail

struct LinearCheck {
  bool ok = true;
  std::size_t i = 0, j = 0; // first failing basis pair when !ok
  Mat residual;
};

/// Exact bracket-preservation check of candidate images.
inline LinearCheck validate_linear(const LieAlgebra& algebra, const std::vector<Mat>& images) {
  const std::size_t m = algebra.dim();
  if (images.size() != m)
    throw std::invalid_argument("validate_linear: one image per basis element required");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Mat expected = images[i] * images[j] - images[j] * images[i];
      for (std::size_t l = 0; l < m; ++l)
        if (algebra.c(i, j, l) != 0) expected = expected - algebra.c(i, j, l) * images[l];
      if (!expected.is_zero()) return {false, i, j, std::move(expected)};
    }
  return {};
}

/// Lie algebra representation: Phi(b_i) = images[i], bracket-preserving.
struct LinearRep {
  AlgebraPtr algebra;
  std::size_t degree = 0;
  std::vector<Mat> images;

  static LinearRep make(AlgebraPtr algebra, std::vector<Mat> images) {
    LinearRep rep;
    rep.algebra = std::move(algebra);
    rep.images = std::move(images);
    rep.degree = rep.images.empty() ? 0 : rep.images.front().rows();
    if (rep.degree == 0) throw validation_error("representation: degree must be at least 1");
    for (const Mat& m : rep.images)
      if (m.rows() != rep.degree || m.cols() != rep.degree)
        throw validation_error("representation: images must be square of equal degree");
    const auto check = validate_linear(*rep.algebra, rep.images);
    if (!check.ok)
      throw validation_error("representation: bracket preservation fails at pair (" +
                             std::to_string(check.i) + ", " + std::to_string(check.j) + ")");
    return rep;
  }

  Mat of(const Mat& x) const {
    Mat r(degree, degree);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (x(i, 0) != 0) r = r + x(i, 0) * images[i];
    return r;
  }
};

/// mu-representation: [Phi(x), Phi(y)] = mu(x, y) I + Phi([x, y]).
struct ProjectiveRep {
  AlgebraPtr algebra;
  std::size_t degree = 0;
  std::vector<Mat> images;
  Cocycle2 mu;

  static ProjectiveRep make(AlgebraPtr algebra, std::vector<Mat> images, Cocycle2 mu) {
    ProjectiveRep rep{std::move(algebra), 0, std::move(images), std::move(mu)};
    rep.degree = rep.images.empty() ? 0 : rep.images.front().rows();
    if (rep.degree == 0) throw validation_error("representation: degree must be at least 1");
    if (!same_structure(*rep.mu.algebra(), *rep.algebra))
      throw std::invalid_argument("projective representation: mu lives on a different algebra");
    const std::size_t m = rep.algebra->dim();
    if (rep.images.size() != m)
      throw validation_error("representation: one image per basis element required");
    for (const Mat& mat : rep.images)
      if (mat.rows() != rep.degree || mat.cols() != rep.degree)
        throw validation_error("representation: images must be square of equal degree");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        Mat lhs = rep.images[i] * rep.images[j] - rep.images[j] * rep.images[i];
        Mat rhs = rep.mu(i, j) * Mat::identity(rep.degree);
        for (std::size_t l = 0; l < m; ++l)
          if (rep.algebra->c(i, j, l) != 0) rhs = rhs + rep.algebra->c(i, j, l) * rep.images[l];
        if (lhs != rhs)
          throw validation_error("projective representation: defining identity fails at pair (" +
                                 std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    return rep;
  }

  Mat of(const Mat& x) const {
    Mat r(degree, degree);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (x(i, 0) != 0) r = r + x(i, 0) * images[i];
    return r;
  }
};

inline ProjectiveRep as_projective(const LinearRep& rep) {
  return ProjectiveRep::make(rep.algebra, rep.images, Cocycle2::zero(rep.algebra));
}

/// Reads off mu from candidate images: the defect [Phi_i, Phi_j] -
/// Phi([b_i, b_j]) must be scalar on every pair.
inline ProjectiveRep extract_cocycle(const AlgebraPtr& algebra, const std::vector<Mat>& images) {
  const std::size_t m = algebra->dim();
  if (images.size() != m)
    throw std::invalid_argument("extract_cocycle: one image per basis element required");
  const std::size_t d = images.empty() ? 0 : images.front().rows();
  if (d == 0) throw validation_error("extract_cocycle: degree must be at least 1");
  Mat values(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Mat defect = images[i] * images[j] - images[j] * images[i];
      for (std::size_t l = 0; l < m; ++l)
        if (algebra->c(i, j, l) != 0) defect = defect - algebra->c(i, j, l) * images[l];
      const auto lambda = defect.scalar_value();
      if (!lambda)
        throw validation_error("extract_cocycle: defect at pair (" + std::to_string(i) + ", " +
                               std::to_string(j) + ") is not a scalar matrix");
      values(i, j) = *lambda;
      values(j, i) = -*lambda;
    }
  // Cocycle2 validation re-derives the identity of the extracted mu.
  return ProjectiveRep::make(algebra, images, Cocycle2::from_matrix(algebra, std::move(values)));
}

/// sigma = trace(Phi)/degree certifies mu = -coboundary witness: the trace
/// of the defining identity forces mu(x, y) = -sigma([x, y]) at finite
/// degree, so mu is always the coboundary of sigma.
inline Cochain1 trace_cocycle_class(const ProjectiveRep& rep) {
  const std::size_t m = rep.algebra->dim();
  std::vector<Rat> values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = rep.images[i].trace() / Rat(rep.degree);
  Cochain1 sigma(rep.algebra, std::move(values));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (rep.mu(i, j) != -sigma.on_bracket(i, j))
        throw validation_error("trace_cocycle_class: trace identity fails at pair (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
  return sigma;
}

/// Phi'(x) = Phi(x) + sigma(x) I; the cocycle moves to mu + coboundary(sigma).
inline ProjectiveRep shift_rep(const ProjectiveRep& rep, const Cochain1& sigma) {
  const std::size_t m = rep.algebra->dim();
  std::vector<Mat> images = rep.images;
  for (std::size_t i = 0; i < m; ++i)
    if (sigma[i] != 0) images[i] = images[i] + sigma[i] * Mat::identity(rep.degree);
  return ProjectiveRep::make(rep.algebra, std::move(images), rep.mu + coboundary(sigma));
}

/// mu'= 0 shift: subtract the trace witness.
inline LinearRep linearize(const ProjectiveRep& rep) {
  const ProjectiveRep shifted = shift_rep(rep, -trace_cocycle_class(rep));
  if (!shifted.mu.is_zero()) throw std::logic_error("linearize: residual cocycle after shift");
  return LinearRep::make(shifted.algebra, shifted.images);
}

namespace detail {

/// An invertible element of span{basis}, or nullopt when every element of
/// the span is singular. Tries the identity and the basis itself, then a
/// (d+1)-per-variable grid (complete for deciding singular spans); falls
/// back to seeded random sampling when the grid is too large.
inline std::optional<Mat> invertible_in_span(const std::vector<Mat>& basis, std::size_t d) {
  if (basis.empty()) return std::nullopt;
  const auto check = [&](const Mat& m) { return is_invertible(m); };

  Mat span_cols(d * d, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Mat f = flatten(basis[c]);
    for (std::size_t r = 0; r < f.rows(); ++r) span_cols(r, c) = f(r, 0);
  }
  if (const auto coords = solve(span_cols, flatten(Mat::identity(d)))) return Mat::identity(d);
  for (const Mat& b : basis)
    if (check(b)) return b;

  const std::size_t r = basis.size();
  double grid_points = 1;
  for (std::size_t i = 0; i < r; ++i) grid_points *= static_cast<double>(d + 1);
  if (grid_points <= 200000.0) {
    std::vector<std::size_t> digits(r, 0);
    for (;;) {
      Mat candidate(d, d);
      for (std::size_t i = 0; i < r; ++i)
        if (digits[i] != 0) candidate = candidate + Rat(digits[i]) * basis[i];
      if (check(candidate)) return candidate;
      std::size_t pos = 0;
      while (pos < r && ++digits[pos] == d + 1) digits[pos++] = 0;
      if (pos == r) break;
    }
    return std::nullopt; // complete grid: the span has no invertible element
  }

  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<int> coef(0, 997);
  for (int trial = 0; trial < 2000; ++trial) {
    Mat candidate(d, d);
    for (std::size_t i = 0; i < r; ++i) candidate = candidate + Rat(coef(rng)) * basis[i];
    if (check(candidate)) return candidate;
  }
  return std::nullopt;
}

} // namespace detail

struct ProjectiveEquivalence {
  Mat conjugator; // f
  Cochain1 delta; // scalar shift
};

/// Witness (f, delta) with Phi2(x) = f Phi1(x) f^{-1} + delta(x) I, if the
/// representations are projectively equivalent. delta is forced by traces;
/// f is an invertible solution of the intertwining system. A found witness
/// also certifies that the two cocycles are cohomologous.
inline std::optional<ProjectiveEquivalence> projectively_equivalent(const ProjectiveRep& r1,
                                                                    const ProjectiveRep& r2) {
  if (!same_structure(*r1.algebra, *r2.algebra))
    throw std::invalid_argument("projectively_equivalent: different algebras");
  if (r1.degree != r2.degree) return std::nullopt;
  const std::size_t m = r1.algebra->dim(), d = r1.degree;

  std::vector<Rat> delta_values(m);
  for (std::size_t i = 0; i < m; ++i)
    delta_values[i] = (r2.images[i].trace() - r1.images[i].trace()) / Rat(d);
  Cochain1 delta(r1.algebra, delta_values);

  // F Phi1_i = (Phi2_i - delta_i I) F, linear in the d^2 entries of F
  Mat system(m * d * d, d * d);
  for (std::size_t i = 0; i < m; ++i) {
    const Mat& p1 = r1.images[i];
    Mat p2 = r2.images[i];
    if (delta_values[i] != 0) p2 = p2 - delta_values[i] * Mat::identity(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t row = (i * d + r) * d + c;
        for (std::size_t b = 0; b < d; ++b) system(row, r * d + b) += p1(b, c);
        for (std::size_t a = 0; a < d; ++a) system(row, a * d + c) -= p2(r, a);
      }
  }

  std::vector<Mat> basis;
  for (const Mat& v : nullspace(system)) basis.push_back(detail::unflatten(v, d));
  const auto f = detail::invertible_in_span(basis, d);
  if (!f) return std::nullopt;

  const Mat finv = *inverse(*f);
  for (std::size_t i = 0; i < m; ++i) {
    const Mat expected = *f * r1.images[i] * finv + delta_values[i] * Mat::identity(d);
    if (expected != r2.images[i])
      throw std::logic_error("projectively_equivalent: witness verification failed");
  }
  if (!is_cohomologous(r1.mu, r2.mu).has_value())
    throw std::logic_error("projectively_equivalent: witness without cohomologous cocycles");
  return ProjectiveEquivalence{*f, std::move(delta)};
}

struct IrreducibilityCertificate {
  bool irreducible = false;
  std::size_t spin_dim = 0;      // dimension of the generated matrix algebra
  std::size_t commutant_dim = 0; // dim of {X : X Phi_i = Phi_i X}
};

/// Burnside criterion over exact rationals: the images act absolutely
/// irreducibly iff the unital algebra they generate has dimension d^2.
/// The commutant dimension is computed as a cross-check (1 is necessary).
inline IrreducibilityCertificate irreducible(const AlgebraPtr& algebra,
                                             const std::vector<Mat>& images, std::size_t d) {
  if (images.size() != algebra->dim())
    throw std::invalid_argument("irreducible: one image per basis element required");
  if (d == 0) throw validation_error("irreducible: degree must be at least 1");

  detail::RowSpace space;
  std::vector<Mat> worklist;
  const auto try_add = [&](const Mat& m) {
    if (space.add(detail::flatten(m).data())) worklist.push_back(m);
  };
  try_add(Mat::identity(d));
  for (const Mat& m : images) try_add(m);
  for (std::size_t next = 0; next < worklist.size(); ++next) {
    const Mat current = worklist[next];
    for (const Mat& gen : images) try_add(current * gen);
  }

  Mat commutant_system(images.size() * d * d, d * d);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t row = (i * d + r) * d + c;
        for (std::size_t b = 0; b < d; ++b) commutant_system(row, r * d + b) += images[i](b, c);
        for (std::size_t a = 0; a < d; ++a) commutant_system(row, a * d + c) -= images[i](r, a);
      }

  IrreducibilityCertificate cert;
  cert.spin_dim = space.dim();
  cert.commutant_dim = nullspace(commutant_system).size();
  cert.irreducible = cert.spin_dim == d * d;
  if (cert.irreducible && cert.commutant_dim != 1)
    throw std::logic_error("irreducible: Burnside span is full but the commutant is not scalar");
  return cert;
}

inline IrreducibilityCertificate irreducible(const LinearRep& rep) {
  return irreducible(rep.algebra, rep.images, rep.degree);
}

inline IrreducibilityCertificate irreducible(const ProjectiveRep& rep) {
  return irreducible(rep.algebra, rep.images, rep.degree);
}

struct LiftResult {
  LinearRep gamma;       // linear representation on the cover's total algebra
  std::vector<Rat> chi;  // kernel functional with chi . beta = shifted mu
  Cochain1 applied_shift; // sigma applied to the input before lifting
};

/// Lifts a mu-representation of the base through a cover: solves chi with
/// chi . beta = mu exactly, shifting the representation by a coboundary
/// witness first when only the class matches. Gamma is scalar on the
/// kernel and linear on a section copy of the base.
inline LiftResult lift_to_cover(const ProjectiveRep& rep, const Cover& cover) {
  const CentralExtension& e = cover.extension;
  if (!same_structure(*rep.algebra, *e.base))
    throw std::invalid_argument("lift_to_cover: representation is not over the cover's base");
  const std::size_t m = e.base->dim(), k = e.kernel_dim(), de = e.total->dim();

  const auto betas = beta_from_section(e);
  const std::size_t pairs = pair_count(m);
  Mat system(pairs, k + m);
  for (std::size_t t = 0; t < k; ++t) {
    const auto v = betas[t].to_vector();
    for (std::size_t p = 0; p < pairs; ++p) system(p, t) = v[p];
  }
  const Mat d_map = detail::coboundary_map(*e.base); // columns: -sigma([.,.])
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t p = 0; p < pairs; ++p) system(p, k + l) = -d_map(p, l);
  const auto sol = solve(system, Mat::column(rep.mu.to_vector()));
  if (!sol)
    throw validation_error(
        "lift_to_cover: the cocycle class is not in the image of the transgression");

  std::vector<Rat> chi(k);
  for (std::size_t t = 0; t < k; ++t) chi[t] = (*sol)(t, 0);
  std::vector<Rat> shift(m);
  for (std::size_t l = 0; l < m; ++l) shift[l] = (*sol)(k + l, 0);
  Cochain1 sigma(rep.algebra, shift);

  const ProjectiveRep aligned = shift_rep(rep, sigma);

  const auto kernel_coords = solve(e.f, Mat::identity(de) - e.s * e.g);
  if (!kernel_coords) throw std::logic_error("lift_to_cover: kernel coordinates unsolvable");
  std::vector<Mat> images(de);
  for (std::size_t u = 0; u < de; ++u) {
    Mat img(rep.degree, rep.degree);
    Rat scalar = 0;
    for (std::size_t t = 0; t < k; ++t) scalar += chi[t] * (*kernel_coords)(t, u);
    if (scalar != 0) img = scalar * Mat::identity(rep.degree);
    const Mat y = e.g.col(u);
    for (std::size_t i = 0; i < m; ++i)
      if (y(i, 0) != 0) img = img + y(i, 0) * aligned.images[i];
    images[u] = std::move(img);
  }
  LiftResult result{LinearRep::make(e.total, std::move(images)), std::move(chi),
                    std::move(sigma)};
  return result;
}

struct DescentResult {
  ProjectiveRep rep;     // projective representation of the base
  std::vector<Rat> chi;  // scalar character of gamma on the kernel
};

/// Restricts a linear representation of the total algebra to the base
/// through the section: Phi = Gamma . s, with mu extracted. The kernel
/// must act by scalars.
inline DescentResult descend_from_cover(const LinearRep& gamma, const CentralExtension& e) {
  if (!same_structure(*gamma.algebra, *e.total))
    throw std::invalid_argument("descend_from_cover: representation is not over the total algebra");
  const std::size_t m = e.base->dim(), k = e.kernel_dim();

  std::vector<Rat> chi(k);
  for (std::size_t t = 0; t < k; ++t) {
    const auto lambda = gamma.of(e.f.col(t)).scalar_value();
    if (!lambda)
      throw validation_error("descend_from_cover: kernel coordinate " + std::to_string(t) +
                             " does not act by a scalar");
    chi[t] = *lambda;
  }

  std::vector<Mat> images(m);
  for (std::size_t i = 0; i < m; ++i) images[i] = gamma.of(e.s.col(i));
  ProjectiveRep rep = extract_cocycle(e.base, images);

  const auto betas = beta_from_section(e);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Rat expected = 0;
      for (std::size_t t = 0; t < k; ++t) expected += chi[t] * betas[t](i, j);
      if (rep.mu(i, j) != expected)
        throw std::logic_error("descend_from_cover: extracted cocycle differs from chi . beta");
    }
  DescentResult result{std::move(rep), std::move(chi)};
  return result;
}

struct BijectionEntry {
  std::size_t index = 0;
  std::size_t degree = 0;
  std::vector<Rat> mu_class;     // class coordinates of the descended cocycle
  bool mu_is_coboundary = false;
  bool descended_irreducible = false;
  std::size_t matched_catalog_index = 0;
  bool lift_equivalent = false;
};

struct BijectionReport {
  std::vector<BijectionEntry> entries;
  std::vector<std::vector<std::size_t>> class_collisions;
  bool all_descents_coboundary = true;
  std::vector<std::string> notes;
};

/// Round-trips a catalog of irreducible linear representations of a cover
/// through descent and lift, verifying that irreducibility is preserved
/// and that the lift lands back on a catalog member up to projective
/// equivalence. Reports which cohomology classes are hit; fibers of
/// nonzero classes stay empty at finite degree (trace obstruction) and the
/// report says so rather than inventing members.
inline BijectionReport irr_bijection_check(const Cover& cover,
                                           const std::vector<LinearRep>& catalog,
                                           std::size_t jobs = 1) {
  const CentralExtension& e = cover.extension;
  for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
    if (!same_structure(*catalog[idx].algebra, *e.total))
      throw std::invalid_argument("irr_bijection_check: catalog entry " + std::to_string(idx) +
                                  " is not over the cover");
    if (!irreducible(catalog[idx]).irreducible)
      throw validation_error("irr_bijection_check: catalog entry " + std::to_string(idx) +
                             " is not irreducible");
  }

  BijectionReport report;
  report.entries.resize(catalog.size());

  const auto process = [&](std::size_t idx) {
    BijectionEntry entry;
    entry.index = idx;
    entry.degree = catalog[idx].degree;

    const DescentResult descent = descend_from_cover(catalog[idx], e);
    entry.mu_class = class_coordinates(descent.rep.mu, cover.multiplier);
    entry.mu_is_coboundary = true;
    for (const Rat& c : entry.mu_class)
      if (c != 0) entry.mu_is_coboundary = false;
    entry.descended_irreducible = irreducible(descent.rep).irreducible;

    const LiftResult lifted = lift_to_cover(descent.rep, cover);
    const ProjectiveRep lifted_proj = as_projective(lifted.gamma);
    entry.lift_equivalent = false;
    entry.matched_catalog_index = catalog.size();
    for (std::size_t probe = 0; probe < catalog.size(); ++probe) {
      const std::size_t j = (idx + probe) % catalog.size();
      if (projectively_equivalent(lifted_proj, as_projective(catalog[j])).has_value()) {
        entry.matched_catalog_index = j;
        entry.lift_equivalent = true;
        break;
      }
    }
    report.entries[idx] = std::move(entry);
  };

  if (jobs <= 1 || catalog.size() <= 1) {
    for (std::size_t idx = 0; idx < catalog.size(); ++idx) process(idx);
  } else {
    const std::size_t workers = std::min(jobs, catalog.size());
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        try {
          for (std::size_t idx = w; idx < catalog.size(); idx += workers) process(idx);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  for (const auto& entry : report.entries)
    if (!entry.mu_is_coboundary) report.all_descents_coboundary = false;

  // group catalog entries landing in the same cohomology class
  std::vector<bool> grouped(report.entries.size(), false);
  for (std::size_t a = 0; a < report.entries.size(); ++a) {
    if (grouped[a]) continue;
    std::vector<std::size_t> same{a};
    for (std::size_t b = a + 1; b < report.entries.size(); ++b)
      if (!grouped[b] && report.entries[b].mu_class == report.entries[a].mu_class) {
        same.push_back(b);
        grouped[b] = true;
      }
    if (same.size() > 1) report.class_collisions.push_back(std::move(same));
  }

  if (cover.multiplier.h2_dim > 0) {
    report.notes.push_back(
        "Irr^alpha is empty for every nonzero class alpha at finite degree: "
        "mu(x,y) * degree = -trace(Phi([x,y])) forces every cocycle of a "
        "finite-degree representation to be a coboundary. No members were "
        "fabricated for those fibers.");
    if (report.all_descents_coboundary)
      report.notes.push_back("All descended cocycle classes are zero, consistent with the trace "
                             "obstruction.");
  } else {
    report.notes.push_back("The multiplier vanishes: every projective representation of the base "
                           "is linearizable and the pairing stays inside Irr^0.");
  }
  return report;
}

// ---- "rep v1" file format ----
//
//   rep 1
//   <algebra dim m> <degree d>
//   m blocks of d x d rationals (blank line between blocks)
//   [optional]
//   mu
//   <"cocycle v1" block>

namespace detail {

inline void render_rep_body(std::ostringstream& os, std::size_t m, std::size_t d,
                            const std::vector<Mat>& images) {
  os << "rep 1\n" << m << ' ' << d << '\n';
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (k) os << '\n';
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (j) os << ' ';
        os << format_rational(images[k](i, j));
      }
      os << '\n';
    }
  }
}

} // namespace detail

inline std::string render_rep(const LinearRep& rep) {
  std::ostringstream os;
  detail::render_rep_body(os, rep.algebra->dim(), rep.degree, rep.images);
  return os.str();
}

inline std::string render_rep(const ProjectiveRep& rep) {
  std::ostringstream os;
  detail::render_rep_body(os, rep.algebra->dim(), rep.degree, rep.images);
  os << "mu\n" << render_cocycle(rep.mu);
  return os.str();
}

struct ParsedRep {
  std::vector<Mat> images;
  std::optional<Cocycle2> mu;
};

inline ParsedRep parse_rep(const std::string& text, const AlgebraPtr& algebra) {
  std::istringstream is(text);
  std::string word;
  int version = -1;
  if (!(is >> word >> version) || word != "rep" || version != 1)
    throw parse_error("rep: expected header 'rep 1'");
  long long m = -1, d = -1;
  if (!(is >> m >> d) || m < 0 || d <= 0) throw parse_error("rep: invalid dimensions");
  if (static_cast<std::size_t>(m) != algebra->dim())
    throw validation_error("rep: algebra dimension mismatch");

  ParsedRep parsed;
  for (long long k = 0; k < m; ++k) {
    Mat mat(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) {
        if (!(is >> word)) throw parse_error("rep: block " + std::to_string(k) + " truncated");
        mat(i, j) = parse_rational(word);
      }
    parsed.images.push_back(std::move(mat));
  }
  if (is >> word) {
    if (word != "mu") throw parse_error("rep: unexpected token '" + word + "'");
    std::string rest;
    std::getline(is, rest); // eat end of the 'mu' line
    std::ostringstream tail;
    tail << is.rdbuf();
    parsed.mu = parse_cocycle(tail.str(), algebra);
  }
  return parsed;
}

} // namespace plesken
