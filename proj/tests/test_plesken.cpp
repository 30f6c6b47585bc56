#include <catch2/catch_amalgamated.hpp>

#include "plesken/plesken.hpp"

using namespace plesken;

namespace {

// Independent oracle: dim of the hat span as the rank of the |G|-column
// coefficient matrix of all hats inside the group algebra.
std::size_t hat_span_rank(const FiniteGroup& g) {
  Mat coeffs(g.order(), g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto h = hat(x, g);
    for (std::size_t e = 0; e < g.order(); ++e) coeffs(e, x) = h[e];
  }
  return rank(coeffs);
}

std::size_t matrix_hat_span_rank(const MatrixRepresentation& rep) {
  const std::size_t d = rep.degree;
  Mat flat(d * d, rep.group->order());
  for (std::size_t x = 0; x < rep.group->order(); ++x) {
    const Mat h = rep.images[x] - rep.images[rep.group->inv(x)];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) flat(i * d + j, x) = h(i, j);
  }
  return rank(flat);
}

} // namespace

TEST_CASE("hat of identity and involutions is zero") {
  const auto g = FiniteGroup::dihedral(3);
  CHECK(hat(g.identity(), g).is_zero());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.mul(x, x) == g.identity()) CHECK(hat(x, g).is_zero());
}

TEST_CASE("hat of a cyclic(3) generator is c - c^2") {
  const auto g = FiniteGroup::cyclic(3);
  const auto h = hat(1, g);
  CHECK(h[0] == 0);
  CHECK(h[1] == 1);
  CHECK(h[2] == -1);
}

TEST_CASE("hat expansion bookkeeping") {
  const auto g = FiniteGroup::cyclic(5);
  const auto hats = HatBasis::of(g);
  REQUIRE(hats.representatives == std::vector<std::size_t>{1, 2});
  CHECK(hats.expand[0].sign == 0);
  CHECK(hats.expand[1].sign == 1);
  CHECK(hats.expand[4].sign == -1);
  CHECK(hats.expand[4].index == 0);
  CHECK(hats.representatives.size() == (g.order() - g.involution_count()) / 2);
}

TEST_CASE("plesken of cyclic(3) is the line") {
  const auto p = plesken_from_group(FiniteGroup::cyclic(3));
  CHECK(p.algebra->dim() == 1);
  CHECK(p.algebra->is_abelian());
  CHECK(hat_span_rank(FiniteGroup::cyclic(3)) == 1);
}

TEST_CASE("plesken of symmetric(3) is one-dimensional abelian") {
  const auto g = FiniteGroup::symmetric(3);
  const auto p = plesken_from_group(g);
  CHECK(p.algebra->dim() == 1);
  CHECK(p.algebra->is_abelian());
  CHECK(hat_span_rank(g) == 1);
  CHECK(p.algebra->dim() == (g.order() - g.involution_count()) / 2);
}

TEST_CASE("plesken of quaternion8 is three-dimensional with nondegenerate Killing form") {
  const auto p = plesken_from_group(FiniteGroup::quaternion8());
  REQUIRE(p.algebra->dim() == 3);
  CHECK_FALSE(p.algebra->is_abelian());
  CHECK(rank(killing_form(*p.algebra)) == 3);
  CHECK(center(*p.algebra).cols() == 0);
  CHECK(derived_subalgebra(*p.algebra).cols() == 3);
}

TEST_CASE("closure identity via the convolution oracle") {
  // [hat g, hat h] = (gh)^ - (hg)^ + (h^-1 g)^ - (g h^-1)^
  for (const char* spec : {"quaternion8", "dihedral:5", "symmetric:4", "heisenberg:2"}) {
    const auto g = FiniteGroup::builtin(spec);
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b) {
        const auto lhs = bracket(hat(a, g), hat(b, g));
        const auto rhs = hat(g.mul(a, b), g) - hat(g.mul(b, a), g) +
                         hat(g.mul(g.inv(b), a), g) - hat(g.mul(a, g.inv(b)), g);
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("dimension formula for a spread of builtin groups") {
  for (const char* spec : {"cyclic:2", "cyclic:7", "dihedral:6", "symmetric:4", "quaternion8",
                           "heisenberg:3", "elementary-abelian:5,2"}) {
    const auto g = FiniteGroup::builtin(spec);
    const auto p = plesken_from_group(g);
    CHECK(p.algebra->dim() == (g.order() - g.involution_count()) / 2);
    CHECK(p.algebra->dim() == hat_span_rank(g));
    CHECK_NOTHROW(p.algebra->validate());
  }
}

TEST_CASE("matrix plesken of the Heisenberg subgroups, p = 3") {
  const auto sub = heisenberg_subgroups(3);

  const auto lh = plesken_from_matrices(sub.H);
  CHECK(lh.algebra->dim() == 1);
  CHECK(lh.algebra->is_abelian());

  const auto lg = plesken_from_matrices(sub.G);
  CHECK(lg.algebra->dim() == 2);
  CHECK(lg.algebra->is_abelian());

  const auto h = plesken_from_matrices(sub.full);
  CHECK(h.algebra->dim() == 3);
  CHECK_FALSE(h.algebra->is_abelian());
  CHECK(derived_subalgebra(*h.algebra).cols() == 1);
  CHECK(rank(killing_form(*h.algebra)) == 0);

  // the center of the full algebra equals its derived subalgebra
  CHECK(subspace_equal(center(*h.algebra), derived_subalgebra(*h.algebra)));

  // oracle agreement
  CHECK(matrix_hat_span_rank(sub.H) == 1);
  CHECK(matrix_hat_span_rank(sub.G) == 2);
  CHECK(matrix_hat_span_rank(sub.full) == 3);
}

TEST_CASE("matrix plesken of a faithful abelian representation is abelian") {
  const auto sub = heisenberg_subgroups(5);
  const auto lg = plesken_from_matrices(sub.G);
  CHECK(lg.algebra->is_abelian());
  CHECK(lg.algebra->dim() == 2);
}

TEST_CASE("center of an abelian algebra is everything") {
  const auto l = LieAlgebra::abelian(4);
  CHECK(center(l).cols() == 4);
  CHECK(derived_subalgebra(l).cols() == 0);
  CHECK(killing_form(l) == Mat(4, 4));
}

TEST_CASE("quotient by the zero and full ideals") {
  const auto p = plesken_from_group(FiniteGroup::quaternion8());
  const auto& l = p.algebra;

  const auto by_zero = quotient(l, Mat(3, 0));
  CHECK(by_zero.algebra->dim() == 3);
  CHECK(same_structure(*by_zero.algebra, *l));
  CHECK(by_zero.projection == Mat::identity(3));

  const auto by_all = quotient(l, Mat::identity(3));
  CHECK(by_all.algebra->dim() == 0);
}

TEST_CASE("heisenberg algebra modulo its center is two-dimensional abelian") {
  const auto sub = heisenberg_subgroups(3);
  const auto h = plesken_from_matrices(sub.full);
  const auto q = quotient(h.algebra, center(*h.algebra));
  CHECK(q.algebra->dim() == 2);
  CHECK(q.algebra->is_abelian());
}

TEST_CASE("quotient rejects non-ideals") {
  const auto p = plesken_from_group(FiniteGroup::quaternion8());
  Mat line(3, 1);
  line(0, 0) = 1; // span{b0} is not an ideal in the quaternion algebra
  CHECK_THROWS_AS(quotient(p.algebra, line), validation_error);
}

TEST_CASE("liealg format round trip") {
  const auto p = plesken_from_group(FiniteGroup::quaternion8());
  const auto back = parse_liealg(render_liealg(*p.algebra));
  CHECK(same_structure(back, *p.algebra));

  CHECK_THROWS_AS(parse_liealg("liealg 2\n1\n"), parse_error);
  CHECK_THROWS_AS(parse_liealg("liealg 1\n2\n0 0 5 1\n"), parse_error);
  CHECK_THROWS_AS(parse_liealg("liealg 1\n2\n0 0\n"), parse_error);
}

TEST_CASE("structure validation rejects bad tensors") {
  // not antisymmetric
  std::vector<Rat> bad(8);
  bad[(0 * 2 + 1) * 2 + 0] = 1; // c(0,1,0) = 1 but c(1,0,0) = 0
  CHECK_THROWS_AS(LieAlgebra::from_structure({"a", "b"}, bad), validation_error);

  // antisymmetric but fails Jacobi: [e0,e1]=e2, [e1,e2]=e1
  const auto set = [](std::vector<Rat>& t, std::size_t i, std::size_t j, std::size_t k, int v) {
    t[(i * 3 + j) * 3 + k] = v;
    t[(j * 3 + i) * 3 + k] = -v;
  };
  std::vector<Rat> nj(27);
  set(nj, 0, 1, 2, 1);
  set(nj, 1, 2, 1, 1);
  CHECK_THROWS_AS(LieAlgebra::from_structure({"a", "b", "c"}, nj), validation_error);
}
