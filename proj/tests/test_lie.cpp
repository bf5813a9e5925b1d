#include "doctest.h"
#include "kmforge/error.hpp"
#include "kmforge/lie/algebra.hpp"
#include "kmforge/lie/automorphism.hpp"

using namespace kmforge;

namespace {

Matrix diag(std::vector<CyclotomicNumber> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// Independent oracle: trace of ad x ad y computed from 2x2 matrices directly.
CyclotomicNumber killing_oracle_sl2(const Matrix& x, const Matrix& y) {
  auto tr = [](const Matrix& m) { return m(0, 0) + m(1, 1); };
  return CyclotomicNumber(4L) * tr(x * y) - CyclotomicNumber(2L) * tr(x) * tr(y);
}

}  // namespace

TEST_CASE("builtin tables") {
  for (const auto& name : builtin_algebra_names()) {
    auto g = builtin_algebra(name);
    CHECK(g->jacobi_violations() == 0);
    CHECK(g->antisymmetric());
    CHECK(g->killing_nondegenerate());
    CHECK(g->killing_negative_definite() == g->compact());
  }
  CHECK(builtin_algebra("su2")->compact());
  CHECK(builtin_algebra("sl3C")->dim() == 8);
  CHECK_THROWS_AS(builtin_algebra("e8"), Error);
}

TEST_CASE("sl2C bracket and Killing form") {
  auto g = builtin_algebra("sl2C");
  auto e = AlgebraElement::basis(g, "e"), h = AlgebraElement::basis(g, "h"), f = AlgebraElement::basis(g, "f");
  CHECK(bracket(h, e) == CyclotomicNumber(2L) * e);
  CHECK(bracket(h, f) == CyclotomicNumber(-2L) * f);
  CHECK(bracket(e, f) == h);
  CHECK(bracket(e, e).is_zero());
  CHECK(killing_form(h, h) == CyclotomicNumber(8L));
  CHECK(killing_form(e, e).is_zero());
  const auto& real = *g->realization();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(killing_form(AlgebraElement::basis(g, i), AlgebraElement::basis(g, j)) ==
            killing_oracle_sl2(real.basis[i], real.basis[j]));
  CHECK_THROWS_AS(bracket(e, AlgebraElement::basis(builtin_algebra("su2"), 0)), Error);
}

TEST_CASE("Killing form is ad-invariant") {
  auto g = builtin_algebra("sl3C");
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      for (std::size_t c = 0; c < 8; ++c) {
        auto x = AlgebraElement::basis(g, a), y = AlgebraElement::basis(g, b), z = AlgebraElement::basis(g, c);
        CHECK((killing_form(bracket(z, x), y) + killing_form(x, bracket(z, y))).is_zero());
      }
}

TEST_CASE("automorphism checks and orders") {
  auto g = builtin_algebra("sl2C");
  auto id = FiniteAutomorphism::identity(g);
  CHECK(check_automorphism(id));
  auto tau = FiniteAutomorphism::adjoint(g, diag({1L, -1L}));
  CHECK(check_automorphism(tau));
  CHECK(tau.apply(AlgebraElement::basis(g, "e")) == CyclotomicNumber(-1L) * AlgebraElement::basis(g, "e"));
  CHECK(automorphism_order(tau) == 2u);
  auto mu = FiniteAutomorphism::from_matrix_map(g, [](const Matrix& a) { return a.transposed().scaled(-1L); });
  CHECK(check_automorphism(mu));
  CHECK(automorphism_order(mu) == 2u);
  Matrix bad = Matrix::identity(3);
  bad(1, 1) = 2L;
  CHECK_FALSE(check_automorphism(FiniteAutomorphism(g, bad)));
  // Ad diag(1, (3+4i)/5) has an eigenvalue of infinite order
  auto z = (CyclotomicNumber(3L) + CyclotomicNumber(4L) * imag_unit()).scaled(Rational(1, 5));
  auto gen = FiniteAutomorphism::adjoint(g, diag({1L, z}));
  CHECK(check_automorphism(gen));
  CHECK_FALSE(automorphism_order(gen, 48).has_value());
  CHECK_THROWS_AS(finite_order(gen), Error);
  CHECK(power(tau, 5) == tau);
  CHECK(compose(inverse(gen), gen).is_identity());
}

TEST_CASE("antilinear maps") {
  auto g = builtin_algebra("sl2C");
  auto omega = FiniteAutomorphism::from_matrix_map(
      g, [](const Matrix& a) { return a.transposed().scaled(-1L); }, true);
  CHECK(check_automorphism(omega));
  CHECK(automorphism_order(omega) == 2u);
  auto mu = FiniteAutomorphism::from_matrix_map(g, [](const Matrix& a) { return a.transposed().scaled(-1L); });
  auto wm = compose(omega, mu);
  CHECK(wm.antilinear());
  auto fixed = fixed_subalgebra(wm);
  CHECK(fixed.real_span);
  CHECK(fixed.basis.size() == 3);
  CHECK(bracket_closed(fixed));
  for (const auto& b : fixed.basis) CHECK(b == b.conjugated());
  auto su2 = fixed_subalgebra(omega);
  CHECK(su2.basis.size() == 3);
  CHECK(bracket_closed(su2));
  CHECK(compose(inverse(omega), omega).is_identity());
  auto x = AlgebraElement(g, {imag_unit(), CyclotomicNumber(2L), CyclotomicNumber(Rational(1, 3))});
  CHECK(omega.apply(CyclotomicNumber(imag_unit()) * x) == CyclotomicNumber(-1L) * imag_unit() * omega.apply(x));
}

TEST_CASE("eigenspaces and fixed subalgebras") {
  auto g = builtin_algebra("sl2C");
  auto tau = FiniteAutomorphism::adjoint(g, diag({1L, -1L}));
  auto spaces = eigenspace_decomposition(tau);
  REQUIRE(spaces.size() == 2);
  CHECK(spaces[0].eigenvalue.is_one());
  CHECK(spaces[0].basis.size() == 1);
  CHECK(spaces[1].basis.size() == 2);
  CHECK(fixed_subalgebra(tau).basis.size() == 1);
  CHECK(eigenspace_decomposition(FiniteAutomorphism::identity(g)).size() == 1);

  auto g3 = builtin_algebra("sl3C");
  auto rot = FiniteAutomorphism::adjoint(g3, diag({1L, zeta_power(3, 1), zeta_power(3, 2)}));
  auto s3 = eigenspace_decomposition(rot);
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].basis.size() == 2);
  CHECK(s3[1].basis.size() == 3);
  CHECK(s3[2].basis.size() == 3);
  CHECK(bracket_closed(fixed_subalgebra(rot)));
}

TEST_CASE("exp_ad curves") {
  auto g = builtin_algebra("sl2C");
  auto h = AlgebraElement::basis(g, "h");
  auto curve = make_exp_curve(CyclotomicNumber(imag_unit()).scaled(Rational(1, 2)) * h);
  CHECK(exp_ad(curve, 0).is_identity());
  CHECK(exp_ad(curve, 1).is_identity());
  auto tau = FiniteAutomorphism::adjoint(g, diag({1L, -1L}));
  CHECK(exp_ad(curve, Rational(1, 2)) == tau);
  for (int k = -2; k <= 2; ++k) {
    const Rational t(1, 3);
    CHECK(exp_ad(curve, t + k) == compose(exp_ad(curve, t), power(exp_ad(curve, 1), k)));
  }
  CHECK(check_automorphism(exp_ad(curve, Rational(1, 5))));
  CHECK_THROWS_AS(exp_ad(curve, Rational(1, 3), 4), Error);
}
