#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "plesken/extension.hpp"
#include "plesken/plesken.hpp"

using namespace plesken;
using plesken::testing::Rng;

namespace {

Mat flatten(const Mat& m) {
  Mat v(m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
  return v;
}

Mat span_of(const std::vector<Mat>& mats) {
  Mat s(mats.front().rows() * mats.front().cols(), mats.size());
  for (std::size_t c = 0; c < mats.size(); ++c) {
    const Mat f = flatten(mats[c]);
    for (std::size_t r = 0; r < f.rows(); ++r) s(r, c) = f(r, 0);
  }
  return s;
}

Cocycle2 symplectic(const AlgebraPtr& two_dim_abelian) {
  Mat v(2, 2);
  v(0, 1) = 1;
  v(1, 0) = -1;
  return Cocycle2::from_matrix(two_dim_abelian, v);
}

/// The paper-style Heisenberg central extension for prime p: base L(G),
/// total the full Heisenberg Plesken algebra, maps written through the
/// matrix realizations.
CentralExtension paper_heisenberg_extension(std::size_t p) {
  const auto sub = heisenberg_subgroups(p);
  const auto lg = plesken_from_matrices(sub.G);
  const auto lh = plesken_from_matrices(sub.H);
  const auto hh = plesken_from_matrices(sub.full);

  const Mat span_h = span_of(hh.basis_matrices);
  const Mat span_g = span_of(lg.basis_matrices);

  // f: inclusion of L(H)
  Mat f(3, 1);
  {
    const auto x = solve(span_h, flatten(lh.basis_matrices[0]));
    REQUIRE(x.has_value());
    f = *x;
  }
  // g: (0,1) entry -> (0,2) slot, (1,2) entry kept, (0,2) killed
  Mat g(2, 3);
  for (std::size_t u = 0; u < 3; ++u) {
    Mat image(3, 3);
    image(0, 2) = hh.basis_matrices[u](0, 1);
    image(1, 2) = hh.basis_matrices[u](1, 2);
    const auto x = solve(span_g, flatten(image));
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < 2; ++i) g(i, u) = (*x)(i, 0);
  }
  // s: (0,2) entry -> (0,1) slot, (1,2) entry kept
  Mat s(3, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    Mat image(3, 3);
    image(0, 1) = lg.basis_matrices[i](0, 2);
    image(1, 2) = lg.basis_matrices[i](1, 2);
    const auto x = solve(span_h, flatten(image));
    REQUIRE(x.has_value());
    for (std::size_t u = 0; u < 3; ++u) s(u, i) = (*x)(u, 0);
  }
  return CentralExtension::make(lg.algebra, hh.algebra, std::move(f), std::move(g), std::move(s));
}

} // namespace

TEST_CASE("split extension: zero cocycles give a direct sum") {
  auto l = plesken::testing::heisenberg_algebra();
  const auto e = extension_from_cocycles(l, {Cocycle2::zero(l), Cocycle2::zero(l)});
  CHECK(e.total->dim() == 5);
  for (const auto& beta : beta_from_section(e)) CHECK(beta.is_zero());
}

TEST_CASE("symplectic extension of the plane is the heisenberg algebra") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto e = extension_from_cocycles(l, {symplectic(l)});
  CHECK(e.total->dim() == 3);
  CHECK(derived_subalgebra(*e.total).cols() == 1);
  // exactly one independent bracket
  CHECK(e.total->bracket(e.total->basis_vector(0), e.total->basis_vector(1)) ==
        e.total->basis_vector(2));
}

TEST_CASE("all elementary cocycles saturate the dimension bound") {
  for (std::size_t n : {2u, 3u, 4u}) {
    auto l = make_algebra(LieAlgebra::abelian(n));
    const auto basis = h2(l);
    REQUIRE(basis.h2_dim == n * (n - 1) / 2);
    const auto e = extension_from_cocycles(l, basis.representatives);
    CHECK(e.total->dim() == n * (n + 1) / 2);
  }
}

TEST_CASE("total algebra passes Jacobi iff the forms pass the cocycle identity") {
  Rng rng(41001);
  auto l = plesken::testing::heisenberg_algebra();
  const std::size_t n = l->dim();
  for (int trial = 0; trial < 20; ++trial) {
    Mat form(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        form(i, j) = plesken::testing::random_rational(rng);
        form(j, i) = -form(i, j);
      }
    bool is_cocycle = true;
    try {
      Cocycle2::from_matrix(l, form);
    } catch (const validation_error&) {
      is_cocycle = false;
    }
    bool jacobi_ok = true;
    try {
      detail::extension_total_from_forms(*l, {form});
    } catch (const validation_error&) {
      jacobi_ok = false;
    }
    CHECK(is_cocycle == jacobi_ok);
  }
}

TEST_CASE("beta_from_section recovers the defining cocycles") {
  Rng rng(41002);
  auto l = plesken::testing::heisenberg_algebra();
  const auto basis = h2(l);
  REQUIRE(basis.h2_dim == 2);
  const auto e = extension_from_cocycles(l, basis.representatives);
  const auto betas = beta_from_section(e);
  REQUIRE(betas.size() == 2);
  CHECK(betas[0] == basis.representatives[0]);
  CHECK(betas[1] == basis.representatives[1]);
}

TEST_CASE("changing the section moves beta by coboundaries only") {
  auto l = plesken::testing::heisenberg_algebra();
  const auto basis = h2(l);
  const auto e = extension_from_cocycles(l, basis.representatives);
  Rng rng(41003);
  for (int trial = 0; trial < 5; ++trial) {
    // s' = s + f tau for a random tau: L -> A
    Mat tau(e.kernel_dim(), l->dim());
    for (std::size_t t = 0; t < tau.rows(); ++t)
      for (std::size_t x = 0; x < tau.cols(); ++x)
        tau(t, x) = plesken::testing::random_rational(rng);
    const auto moved =
        CentralExtension::make(e.base, e.total, e.f, e.g, e.s + e.f * tau);
    const auto betas = beta_from_section(moved);
    for (std::size_t t = 0; t < betas.size(); ++t) {
      CHECK(class_coordinates(betas[t], basis) ==
            class_coordinates(basis.representatives[t], basis));
    }
  }
}

TEST_CASE("an extension is equivalent to itself") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto e = extension_from_cocycles(l, {symplectic(l)});
  const auto phi = are_equivalent(e, e);
  REQUIRE(phi.has_value());
  CHECK(*phi == Mat::identity(3));
}

TEST_CASE("cohomologous cocycles give equivalent extensions") {
  Rng rng(41004);
  auto l = plesken::testing::heisenberg_algebra();
  const auto basis = h2(l);
  const auto& alpha = basis.representatives[0];
  for (int trial = 0; trial < 5; ++trial) {
    const Cochain1 sigma(l, plesken::testing::random_vector(rng, 3));
    const auto e1 = extension_from_cocycles(l, {alpha});
    const auto e2 = extension_from_cocycles(l, {alpha + coboundary(sigma)});
    const auto phi = are_equivalent(e1, e2);
    REQUIRE(phi.has_value());
    // the witness fixes base coordinates and shifts the kernel
    CHECK(e2.g * *phi == e1.g);
    CHECK(*phi * e1.f == e2.f);
  }
}

TEST_CASE("extensions from distinct classes are inequivalent") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto alpha = symplectic(l);
  const auto e1 = extension_from_cocycles(l, {alpha});
  const auto e2 = extension_from_cocycles(l, {Rat(2) * alpha});
  CHECK_FALSE(are_equivalent(e1, e2).has_value());

  auto l3 = make_algebra(LieAlgebra::abelian(3));
  const auto basis3 = h2(l3);
  const auto f1 = extension_from_cocycles(l3, {basis3.representatives[0]});
  const auto f2 = extension_from_cocycles(l3, {basis3.representatives[1]});
  CHECK_FALSE(are_equivalent(f1, f2).has_value());
}

TEST_CASE("cover of the plane is the heisenberg algebra") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto cover = build_cover(l);
  CHECK(cover.extension.total->dim() == 3);
  CHECK(cover.extension.kernel_dim() == 1);
  CHECK(cover.multiplier_iso == Mat::identity(1));
  CHECK(subspace_contains(derived_subalgebra(*cover.extension.total), cover.extension.f));
}

TEST_CASE("cover of an algebra with vanishing multiplier is itself") {
  const auto p = plesken_from_group(FiniteGroup::quaternion8());
  const auto cover = build_cover(p.algebra);
  CHECK(cover.extension.kernel_dim() == 0);
  CHECK(cover.extension.total->dim() == 3);
}

TEST_CASE("cover of three-dimensional abelian saturates the bound") {
  auto l = make_algebra(LieAlgebra::abelian(3));
  const auto cover = build_cover(l);
  CHECK(cover.extension.total->dim() == 6);
  CHECK(cover.extension.kernel_dim() == 3);
}

TEST_CASE("paper heisenberg extension validates and is a cover (p = 3)") {
  const auto e = paper_heisenberg_extension(3);
  CHECK(e.kernel_dim() == 1);
  CHECK(subspace_equal(nullspace_matrix(e.g), derived_subalgebra(*e.total)));
  CHECK(subspace_equal(e.f, center(*e.total)));

  const auto basis = h2(e.base);
  REQUIRE(basis.h2_dim == 1);
  CHECK_NOTHROW(cover_from_extension(e, basis));

  // the section defect is the symplectic form up to scale
  const auto betas = beta_from_section(e);
  REQUIRE(betas.size() == 1);
  CHECK(betas[0](0, 1) != 0);

  // and the paper extension is equivalent to the canonical cover
  const auto cover = build_cover(e.base);
  const auto phi = are_equivalent(cover.extension, e);
  CHECK(phi.has_value());
}

TEST_CASE("transgression on the canonical cover of the plane") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto cover = build_cover(l);
  const auto basis = cover.multiplier;

  const auto zero = transgression(cover.extension, {Rat(0)}, basis);
  CHECK(zero.class_coords == std::vector<Rat>{Rat(0)});

  const auto dual = transgression(cover.extension, {Rat(1)}, basis);
  CHECK(dual.class_coords == std::vector<Rat>{Rat(1)});

  const auto split = extension_from_cocycles(l, {Cocycle2::zero(l)});
  const auto tri = transgression(split, {Rat(5)}, basis);
  CHECK(tri.class_coords == std::vector<Rat>{Rat(0)});
  CHECK(tri.cocycle.is_zero());
}

TEST_CASE("hochschild-serre sequence is exact on the heisenberg cover") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto cover = build_cover(l);
  const auto maps = hochschild_serre_maps(cover.extension);

  // Hom(E) has dimension 2 (functionals killing the derived line)
  CHECK(maps.hom_total_basis.cols() == 2);
  CHECK(maps.hom_base_basis.cols() == 2);

  // restriction to the kernel is zero, inflation surjects onto Hom(E)
  CHECK(maps.res.is_zero());
  CHECK(rank(maps.inf1) == 2);

  // exactness at Hom(E): image(Inf1) = kernel(Res)
  CHECK(subspace_equal(column_space(maps.inf1), nullspace_matrix(maps.res)));

  // exactness at Hom(A): image(Res) = kernel(Tra); here Tra is injective
  CHECK(rank(maps.tra) == 1);
  CHECK(nullspace(maps.tra).empty());

  // exactness at H2(L): image(Tra) = kernel(Inf2)
  CHECK(subspace_equal(column_space(maps.tra), nullspace_matrix(maps.inf2)));
}

TEST_CASE("hochschild-serre maps on a split extension") {
  auto l = plesken::testing::heisenberg_algebra();
  const auto split = extension_from_cocycles(l, {Cocycle2::zero(l)});
  const auto maps = hochschild_serre_maps(split);
  CHECK(maps.tra.is_zero());
  // Inf2 is injective on a split extension
  CHECK(nullspace(maps.inf2).empty());
  CHECK(subspace_equal(column_space(maps.tra), nullspace_matrix(maps.inf2)));
  CHECK(subspace_equal(column_space(maps.inf1), nullspace_matrix(maps.res)));
  CHECK(subspace_equal(column_space(maps.res), nullspace_matrix(maps.tra)));
}

TEST_CASE("extension dump round trip") {
  auto l = plesken::testing::heisenberg_algebra();
  const auto basis = h2(l);
  const auto e = extension_from_cocycles(l, basis.representatives);
  const auto back = parse_extension(render_extension(e));
  CHECK(same_structure(*back.base, *e.base));
  CHECK(same_structure(*back.total, *e.total));
  CHECK(back.f == e.f);
  CHECK(back.g == e.g);
  CHECK(back.s == e.s);

  CHECK_THROWS_AS(parse_extension("maps 1\n"), parse_error);
}

TEST_CASE("malformed extensions are rejected") {
  auto l = make_algebra(LieAlgebra::abelian(2));
  const auto e = extension_from_cocycles(l, {symplectic(l)});
  // break the section
  Mat bad_s = e.s;
  bad_s(0, 0) = 2;
  CHECK_THROWS_AS(CentralExtension::make(e.base, e.total, e.f, e.g, bad_s), validation_error);
  // non-central "kernel": swap f for a base direction
  Mat bad_f(3, 1);
  bad_f(0, 0) = 1;
  CHECK_THROWS_AS(CentralExtension::make(e.base, e.total, bad_f, e.g, e.s), validation_error);
}
