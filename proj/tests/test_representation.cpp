#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "plesken/plesken.hpp"
#include "plesken/representation.hpp"

using namespace plesken;
using plesken::testing::Rng;

namespace {

Mat unit(std::size_t d, std::size_t i, std::size_t j) {
  Mat m(d, d);
  m(i, j) = 1;
  return m;
}

/// Defining representation of the basis (x, y, z), [x, y] = z.
std::vector<Mat> heisenberg_images() {
  return {unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)};
}

/// e -> E01, f -> E10, h -> diag(1, -1).
std::vector<Mat> sl2_images() {
  Mat h(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  return {unit(2, 0, 1), unit(2, 1, 0), h};
}

/// Left-multiplication images of the quaternion group on the basis
/// {1, i, j, k}: exact signed permutation matrices.
MatrixRepresentation quaternion_regular() {
  const auto q = std::make_shared<const FiniteGroup>(FiniteGroup::quaternion8());
  std::vector<Mat> images;
  for (std::size_t a = 0; a < 8; ++a) {
    Mat m(4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t p = q->mul(a, 2 * c);
      m(p / 2, c) = (p % 2) ? -1 : 1;
    }
    images.push_back(std::move(m));
  }
  return MatrixRepresentation::make(q, std::move(images));
}

ProjectiveRep random_shifted(const AlgebraPtr& l, const std::vector<Mat>& linear_images,
                             Rng& rng) {
  const Cochain1 sigma(l, plesken::testing::random_vector(rng, l->dim()));
  return shift_rep(as_projective(LinearRep::make(l, linear_images)), sigma);
}

} // namespace

TEST_CASE("validate_linear accepts the zero and defining representations") {
  auto h = plesken::testing::heisenberg_algebra();
  CHECK(validate_linear(*h, {Mat(2, 2), Mat(2, 2), Mat(2, 2)}).ok);
  CHECK(validate_linear(*h, heisenberg_images()).ok);
  CHECK_NOTHROW(LinearRep::make(h, heisenberg_images()));
}

TEST_CASE("validate_linear reports the first failing pair") {
  auto h = plesken::testing::heisenberg_algebra();
  auto images = heisenberg_images();
  images[2](1, 1) = 7; // perturb Phi(z)
  const auto check = validate_linear(*h, images);
  REQUIRE_FALSE(check.ok);
  CHECK(check.i == 0);
  CHECK(check.j == 1);
  CHECK_FALSE(check.residual.is_zero());
  CHECK_THROWS_AS(LinearRep::make(h, images), validation_error);
}

TEST_CASE("extract_cocycle of a linear representation is zero") {
  auto h = plesken::testing::heisenberg_algebra();
  const auto rep = extract_cocycle(h, heisenberg_images());
  CHECK(rep.mu.is_zero());
}

TEST_CASE("extract_cocycle rejects non-scalar defects") {
  auto ab = make_algebra(LieAlgebra::abelian(2));
  CHECK_THROWS_AS(extract_cocycle(ab, {unit(2, 0, 1), unit(2, 1, 0)}), validation_error);
}

TEST_CASE("extract_cocycle with commuting images over an abelian algebra") {
  auto ab = make_algebra(LieAlgebra::abelian(2));
  const auto rep = extract_cocycle(ab, {unit(2, 0, 1), Mat::identity(2) + unit(2, 0, 1)});
  CHECK(rep.mu.is_zero());
}

TEST_CASE("trace witness of traceless linear representations is zero") {
  const auto rep = as_projective(LinearRep::make(plesken::testing::sl2_algebra(), sl2_images()));
  const auto sigma = trace_cocycle_class(rep);
  for (std::size_t i = 0; i < 3; ++i) CHECK(sigma[i] == 0);
}

TEST_CASE("every projective representation over an abelian algebra has zero cocycle") {
  Rng rng(51001);
  auto ab = make_algebra(LieAlgebra::abelian(3));
  for (int trial = 0; trial < 10; ++trial) {
    // commuting images: polynomials in one matrix plus scalar shifts
    const Mat base = plesken::testing::random_matrix(rng, 3, 3);
    std::vector<Mat> images{base, base * base + Rat(2) * Mat::identity(3),
                            Rat(5) * base - Mat::identity(3)};
    const auto rep = extract_cocycle(ab, images);
    CHECK(rep.mu.is_zero());
    CHECK_NOTHROW(trace_cocycle_class(rep));
  }
}

TEST_CASE("shift round trips and linearization") {
  Rng rng(51002);
  auto h = plesken::testing::heisenberg_algebra();
  const auto rep = as_projective(LinearRep::make(h, heisenberg_images()));

  const Cochain1 zero = Cochain1::zero(h);
  const auto unshifted = shift_rep(rep, zero);
  CHECK(unshifted.images == rep.images);
  CHECK(unshifted.mu == rep.mu);

  for (int trial = 0; trial < 10; ++trial) {
    const Cochain1 sigma(h, plesken::testing::random_vector(rng, 3));
    const auto shifted = shift_rep(rep, sigma);
    // shifting changes the cocycle by the coboundary
    CHECK(shifted.mu == rep.mu + coboundary(sigma));
    const auto back = shift_rep(shifted, -sigma);
    CHECK(back.images == rep.images);
    CHECK(back.mu == rep.mu);

    // trace witness certifies and linearize recovers a linear representation
    const auto sigma_witness = trace_cocycle_class(shifted);
    CHECK(coboundary(sigma_witness) == shifted.mu);
    const auto lin = linearize(shifted);
    CHECK(validate_linear(*h, lin.images).ok);
  }
}

TEST_CASE("a representation is projectively equivalent to itself") {
  const auto rep = as_projective(LinearRep::make(plesken::testing::sl2_algebra(), sl2_images()));
  const auto witness = projectively_equivalent(rep, rep);
  REQUIRE(witness.has_value());
  for (std::size_t i = 0; i < 3; ++i) CHECK(witness->delta[i] == 0);
}

TEST_CASE("conjugated and shifted representations are recovered as equivalent") {
  Rng rng(51003);
  auto sl2 = plesken::testing::sl2_algebra();
  const auto rep = as_projective(LinearRep::make(sl2, sl2_images()));
  for (int trial = 0; trial < 5; ++trial) {
    const Mat t = plesken::testing::random_invertible(rng, 2);
    const Mat tinv = *inverse(t);
    std::vector<Mat> conj;
    for (const Mat& m : rep.images) conj.push_back(t * m * tinv);
    const auto other = as_projective(LinearRep::make(sl2, conj));
    const auto witness = projectively_equivalent(rep, other);
    REQUIRE(witness.has_value());
    for (std::size_t i = 0; i < 3; ++i) CHECK(witness->delta[i] == 0);
  }
}

TEST_CASE("structurally different representations are inequivalent") {
  auto sl2 = plesken::testing::sl2_algebra();
  const auto irred = as_projective(LinearRep::make(sl2, sl2_images()));
  const auto zero = as_projective(LinearRep::make(sl2, {Mat(2, 2), Mat(2, 2), Mat(2, 2)}));
  CHECK_FALSE(projectively_equivalent(irred, zero).has_value());

  // different degrees are never equivalent
  const auto deg3 = as_projective(LinearRep::make(sl2, {Mat(3, 3), Mat(3, 3), Mat(3, 3)}));
  CHECK_FALSE(projectively_equivalent(irred, deg3).has_value());
}

TEST_CASE("degree-1 representations are irreducible") {
  auto ab = make_algebra(LieAlgebra::abelian(2));
  const auto rep = LinearRep::make(ab, {Mat::from_rows({{Rat(3)}}), Mat::from_rows({{Rat(-1)}})});
  const auto cert = irreducible(rep);
  CHECK(cert.irreducible);
  CHECK(cert.spin_dim == 1);
  CHECK(cert.commutant_dim == 1);
}

TEST_CASE("the standard sl2 representation is absolutely irreducible") {
  const auto rep = LinearRep::make(plesken::testing::sl2_algebra(), sl2_images());
  const auto cert = irreducible(rep);
  CHECK(cert.irreducible);
  CHECK(cert.spin_dim == 4);
  CHECK(cert.commutant_dim == 1);
}

TEST_CASE("the defining heisenberg representation is reducible with an invariant line") {
  auto h = plesken::testing::heisenberg_algebra();
  const auto rep = LinearRep::make(h, heisenberg_images());
  const auto cert = irreducible(rep);
  CHECK_FALSE(cert.irreducible);
  CHECK(cert.spin_dim < 9);
  // the first coordinate line is invariant
  Mat e0(3, 1);
  e0(0, 0) = 1;
  for (const Mat& m : rep.images) CHECK((m * e0).is_zero());
}

TEST_CASE("quaternion left multiplication has Schur index two over the rationals") {
  // The rational quaternion representation is irreducible over Q but not
  // absolutely: its image algebra is 4-dimensional with a 4-dimensional
  // commutant (the right multiplications).
  const auto quat = quaternion_regular();
  const auto mp = plesken_from_matrices(quat);
  REQUIRE(mp.algebra->dim() == 3);
  const auto abstract = plesken_from_group(FiniteGroup::quaternion8());
  REQUIRE(same_structure(*mp.algebra, *abstract.algebra));

  const auto rep = LinearRep::make(abstract.algebra, mp.basis_matrices);
  const auto cert = irreducible(rep);
  CHECK_FALSE(cert.irreducible);
  CHECK(cert.spin_dim == 4);
  CHECK(cert.commutant_dim == 4);
}

TEST_CASE("the adjoint representation of the quaternion algebra is irreducible") {
  const auto p = plesken_from_group(FiniteGroup::quaternion8());
  std::vector<Mat> ad_images;
  for (std::size_t i = 0; i < 3; ++i) ad_images.push_back(p.algebra->ad(i));
  const auto rep = LinearRep::make(p.algebra, ad_images);
  const auto cert = irreducible(rep);
  CHECK(cert.irreducible);
  CHECK(cert.spin_dim == 9);
}

TEST_CASE("lift of a linear representation through the plane cover") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto cover = build_cover(l);
  // mu = 0: any commuting images
  const auto rep = as_projective(
      LinearRep::make(l, {unit(2, 0, 1), Rat(3) * unit(2, 0, 1) + Mat::identity(2)}));
  const auto lifted = lift_to_cover(rep, cover);
  CHECK(lifted.chi == std::vector<Rat>{Rat(0)});
  // kernel acts by zero
  CHECK(lifted.gamma.of(cover.extension.f.col(0)).is_zero());

  const auto back = descend_from_cover(lifted.gamma, cover.extension);
  CHECK(back.chi == std::vector<Rat>{Rat(0)});
  const auto witness = projectively_equivalent(back.rep, rep);
  CHECK(witness.has_value());
}

TEST_CASE("lift and descend round trip on the heisenberg base") {
  Rng rng(51004);
  auto h = plesken::testing::heisenberg_algebra();
  const auto cover = build_cover(h);
  REQUIRE(cover.extension.kernel_dim() == 2);

  for (int trial = 0; trial < 5; ++trial) {
    const auto rep = random_shifted(h, heisenberg_images(), rng);
    const auto lifted = lift_to_cover(rep, cover);
    // Gamma is scalar on every kernel direction
    for (std::size_t t = 0; t < 2; ++t)
      CHECK(lifted.gamma.of(cover.extension.f.col(t)).scalar_value().has_value());

    const auto back = descend_from_cover(lifted.gamma, cover.extension);
    const auto witness = projectively_equivalent(back.rep, rep);
    REQUIRE(witness.has_value());
  }
}

TEST_CASE("descent rejects a kernel acting by non-scalars") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto cover = build_cover(l);
  // total has the heisenberg structure; its defining representation sends
  // the kernel generator to a nilpotent matrix
  const auto gamma = LinearRep::make(cover.extension.total, heisenberg_images());
  CHECK_THROWS_AS(descend_from_cover(gamma, cover.extension), validation_error);
}

TEST_CASE("bijection report for degree-1 catalogs over the heisenberg cover") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto cover = build_cover(l);
  const auto scalar_rep = [&](int a, int b) {
    return LinearRep::make(cover.extension.total,
                           {Mat::from_rows({{Rat(a)}}), Mat::from_rows({{Rat(b)}}),
                            Mat::from_rows({{Rat(0)}})});
  };
  const std::vector<LinearRep> catalog{scalar_rep(1, 0), scalar_rep(0, 1), scalar_rep(2, 3)};
  const auto report = irr_bijection_check(cover, catalog);
  REQUIRE(report.entries.size() == 3);
  for (const auto& entry : report.entries) {
    CHECK(entry.mu_is_coboundary);
    CHECK(entry.descended_irreducible);
    CHECK(entry.lift_equivalent);
  }
  CHECK(report.all_descents_coboundary);
  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes.front().find("empty") != std::string::npos);
  // all three land in the zero class
  REQUIRE(report.class_collisions.size() == 1);
  CHECK(report.class_collisions.front().size() == 3);
}

TEST_CASE("bijection report with a trivial cover") {
  const auto p = plesken_from_group(FiniteGroup::quaternion8());
  const auto cover = build_cover(p.algebra);
  std::vector<Mat> ad_images;
  for (std::size_t i = 0; i < 3; ++i) ad_images.push_back(p.algebra->ad(i));
  const std::vector<LinearRep> catalog{LinearRep::make(cover.extension.total, ad_images)};
  const auto report = irr_bijection_check(cover, catalog);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].lift_equivalent);
  CHECK(report.entries[0].matched_catalog_index == 0);
  CHECK(report.entries[0].descended_irreducible);
  CHECK(report.notes.front().find("multiplier vanishes") != std::string::npos);
}

TEST_CASE("bijection check rejects reducible catalog entries") {
  auto h = plesken::testing::heisenberg_algebra();
  const auto cover = build_cover(h);
  const auto reducible_rep = LinearRep::make(
      cover.extension.total, {Mat(2, 2), Mat(2, 2), Mat(2, 2), Mat(2, 2), Mat(2, 2)});
  CHECK_THROWS_AS(irr_bijection_check(cover, {reducible_rep}), validation_error);
}

TEST_CASE("rep format round trips with and without mu") {
  Rng rng(51005);
  auto h = plesken::testing::heisenberg_algebra();
  const auto lin = LinearRep::make(h, heisenberg_images());
  const auto parsed_lin = parse_rep(render_rep(lin), h);
  CHECK(parsed_lin.images == lin.images);
  CHECK_FALSE(parsed_lin.mu.has_value());

  const auto proj = random_shifted(h, heisenberg_images(), rng);
  const auto parsed_proj = parse_rep(render_rep(proj), h);
  CHECK(parsed_proj.images == proj.images);
  REQUIRE(parsed_proj.mu.has_value());
  CHECK(*parsed_proj.mu == proj.mu);

  CHECK_THROWS_AS(parse_rep("rep 2\n1 1\n0\n", h), parse_error);
  CHECK_THROWS_AS(parse_rep("rep 1\n1 1\n0\n", h), validation_error);
  CHECK_THROWS_AS(parse_rep("rep 1\n3 1\n0\n1\n", h), parse_error);
}
