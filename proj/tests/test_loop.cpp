#include <random>

#include "doctest.h"
#include "kmforge/affine/affine.hpp"
#include "kmforge/affine/hat.hpp"
#include "kmforge/error.hpp"
#include "support.hpp"

using namespace kmforge;
using namespace testing_support;

TEST_CASE("twist validation") {
  auto plain = TwistContext::untwisted(sl2());
  CHECK(validate(LoopElement::constant(plain, h())));
  auto twisted = TwistContext::make(tau(), 2);
  CHECK(validate(LoopElement::monomial(twisted, 1, e())));
  CHECK_FALSE(validate(LoopElement::monomial(twisted, 1, h())));
  CHECK(twisted->level() == 4);
  CHECK_THROWS_AS(TwistContext::make(tau(), 3), Error);
  CHECK_THROWS_AS(TwistContext::make(tau(), 2, 6), Error);
}

TEST_CASE("loop bracket, derivative, inner product, cocycle") {
  auto ctx = TwistContext::untwisted(sl2());
  auto m = [&](std::int64_t k, const AlgebraElement& x) { return LoopElement::monomial(ctx, k, x); };
  CHECK(loop_bracket(m(1, h()), m(1, e())) == m(2, num(2) * e()));
  CHECK(loop_bracket(m(1, e()), m(-1, f())) == m(0, h()));
  CHECK(loop_bracket(m(3, e()) + m(0, h()), m(3, e()) + m(0, h())).is_zero());
  CHECK(loop_derivative(m(0, h())).is_zero());
  CHECK(loop_derivative(m(1, h())) == m(1, I() * h()));
  auto half = TwistContext::make(tau(), 2);
  CHECK(loop_derivative(LoopElement::monomial(half, 1, e())) ==
        LoopElement::monomial(half, 1, I() * num(1, 2) * e()));
  CHECK(loop_inner(m(0, h()), m(0, h())) == num(8));
  CHECK(loop_inner(m(1, h()), m(0, h())).is_zero());
  CHECK(loop_inner(m(1, h()), m(-1, h())) == num(8));
  CHECK(cocycle(m(1, h()), m(-1, h())) == num(8) * I());
  CHECK(cocycle(m(0, h()), m(0, e())).is_zero());
  CHECK_THROWS_AS(loop_bracket(m(0, h()), LoopElement::monomial(half, 0, h())), Error);
}

TEST_CASE("loop algebra properties on random triples") {
  std::mt19937_64 rng(11);
  for (auto ctx : {TwistContext::untwisted(sl2()), TwistContext::make(tau(), 2), TwistContext::make(mu(), 4)}) {
    for (int t = 0; t < 15; ++t) {
      auto u = random_loop(ctx, rng, 3), v = random_loop(ctx, rng, 3), w = random_loop(ctx, rng, 3);
      REQUIRE(validate(u));
      CHECK(validate(loop_bracket(u, v)));
      CHECK(validate(loop_derivative(u)));
      auto jac = loop_bracket(u, loop_bracket(v, w)) + loop_bracket(v, loop_bracket(w, u)) +
                 loop_bracket(w, loop_bracket(u, v));
      CHECK(jac.is_zero());
      CHECK(cocycle(u, v) == -cocycle(v, u));
      CHECK((cocycle(loop_bracket(u, v), w) + cocycle(loop_bracket(v, w), u) + cocycle(loop_bracket(w, u), v))
                .is_zero());
      CHECK(loop_derivative(loop_bracket(u, v)) ==
            loop_bracket(loop_derivative(u), v) + loop_bracket(u, loop_derivative(v)));
      CHECK(loop_inner(u, v) == loop_inner(v, u));
    }
  }
}

TEST_CASE("affine bracket") {
  auto ctx = TwistContext::untwisted(sl2());
  auto u = AffineElement::from_loop(LoopElement::monomial(ctx, 1, h()));
  auto d = AffineElement::derivation(ctx), c = AffineElement::central(ctx);
  CHECK(affine_bracket(d, u) == AffineElement::from_loop(LoopElement::monomial(ctx, 1, I() * h())));
  CHECK(affine_bracket(c, u).is_zero());
  CHECK(affine_bracket(c, d).is_zero());
  auto v = AffineElement::from_loop(LoopElement::monomial(ctx, -1, h()));
  auto z = affine_bracket(u, v);
  CHECK(z.loop.is_zero());
  CHECK(z.c == num(8) * I());
  CHECK(z.d.is_zero());
  auto report = center_and_derived_check(ctx, 3);
  CHECK(report.pass);
  CHECK(center_and_derived_check(TwistContext::make(tau(), 2), 3).pass);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto x = random_affine(ctx, rng, 3), y = random_affine(ctx, rng, 3), w = random_affine(ctx, rng, 3);
    auto jac = affine_bracket(x, affine_bracket(y, w)) + affine_bracket(y, affine_bracket(w, x)) +
               affine_bracket(w, affine_bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("standard automorphism application") {
  auto ctx = TwistContext::untwisted(sl2());
  auto m = [&](std::int64_t k, const AlgebraElement& x) { return LoopElement::monomial(ctx, k, x); };
  auto id = FiniteAutomorphism::identity(sl2());
  auto half_turn = StandardAutomorphism::constant(ctx, id, 1, Rational(1, 2));
  CHECK(half_turn.apply(m(1, h())) == m(1, num(-1) * h()));
  CHECK(StandardAutomorphism::identity(ctx).apply(m(2, e())) == m(2, e()));
  auto flip = StandardAutomorphism::constant(ctx, id, -1);
  CHECK(flip.apply(m(1, h())) == m(-1, h()));
  auto bad = LoopElement::monomial(TwistContext::make(tau(), 2), 1, h());
  CHECK_THROWS_AS(StandardAutomorphism::constant(TwistContext::make(tau(), 2), id).apply(bad), Error);
}

TEST_CASE("standard orders and composition") {
  auto ctx = TwistContext::untwisted(sl2());
  auto id = FiniteAutomorphism::identity(sl2());
  auto rot3 = StandardAutomorphism::constant(ctx, id, 1, Rational(1, 3));
  CHECK(standard_order(rot3) == 3u);
  CHECK(compose(rot3, compose(rot3, rot3)).is_identity());
  auto phi = StandardAutomorphism::constant(ctx, tau(), 1, Rational(1, 2));
  CHECK(standard_order(phi) == 2u);
  auto refl = StandardAutomorphism::constant(ctx, tau(), -1);
  CHECK(compose(inverse(refl), refl).is_identity());
  CHECK(standard_order(refl) == 2u);
  auto map = [&](const StandardAutomorphism& s) { return [s](const LoopElement& u) { return s.apply(u); }; };
  CHECK(bruteforce_order(map(rot3), ctx, 4) == 3u);
  CHECK(bruteforce_order(map(phi), ctx, 4) == 2u);

  auto twisted = TwistContext::make(tau(), 2);
  auto x = StandardAutomorphism::constant(twisted, tau(), 1, Rational(1, 2));
  CHECK(standard_order(x) == bruteforce_order(map(x), twisted, 6));
  CHECK_THROWS_AS(compose(x, rot3), Error);
}

TEST_CASE("apply preserves the bracket") {
  std::mt19937_64 rng(3);
  auto ctx = TwistContext::untwisted(sl2(), 2);
  auto curve = make_exp_curve(I() * num(1, 2) * h());
  std::vector<StandardAutomorphism> maps = {
      StandardAutomorphism::constant(ctx, mu(), 1, Rational(1, 3)),
      StandardAutomorphism::constant(ctx, tau(), -1, Rational(1, 2)),
      StandardAutomorphism(ctx, ctx, 1, Rational(1, 4), mu(), curve),
      StandardAutomorphism(ctx, ctx, -1, 0, tau(), curve),
  };
  for (const auto& phi : maps)
    for (int t = 0; t < 5; ++t) {
      auto u = random_loop(ctx, rng, 3), v = random_loop(ctx, rng, 3);
      CHECK(phi.apply(loop_bracket(u, v)) == loop_bracket(phi.apply(u), phi.apply(v)));
      CHECK(validate(phi.apply(u)));
      CHECK(inverse(phi).apply(phi.apply(u)) == u);
      CHECK(compose(phi, phi).apply(u) == phi.apply(phi.apply(u)));
    }
  for (int t = 0; t < 5; ++t) {
    auto u = random_loop(ctx, rng, 3), v = random_loop(ctx, rng, 3);
    CHECK(tau_r_apply(2, loop_bracket(u, v)) == loop_bracket(tau_r_apply(2, u), tau_r_apply(2, v)));
  }
  auto m = LoopElement::monomial(TwistContext::untwisted(sl2()), 1, h());
  CHECK(tau_r_apply(2, m) == num(2) * m);
  CHECK(tau_r_apply(1, m) == m);
}

TEST_CASE("tau_r composed orders") {
  auto ctx = TwistContext::untwisted(sl2());
  auto id = FiniteAutomorphism::identity(sl2());
  ScaledStandard first{StandardAutomorphism::constant(ctx, tau()), 2};
  CHECK_FALSE(standard_order(first).has_value());
  auto f1 = [&](const LoopElement& u) { return first.apply(u); };
  CHECK_FALSE(bruteforce_order(f1, ctx, 2).has_value());
  ScaledStandard second{StandardAutomorphism::constant(ctx, id, -1), 2};
  CHECK(standard_order(second) == 2u);
  auto f2 = [&](const LoopElement& u) { return second.apply(u); };
  CHECK(bruteforce_order(f2, ctx, 3) == 2u);
}

TEST_CASE("hat extensions") {
  std::mt19937_64 rng(9);
  auto ctx = TwistContext::untwisted(sl2());
  auto phi = StandardAutomorphism::constant(ctx, mu(), 1, Rational(1, 2));
  auto hat = extend_to_hat(phi);
  CHECK(hat.u_phi.is_zero());
  auto d = AffineElement::derivation(ctx);
  CHECK(hat.apply(d) == d);
  auto id_hat = extend_to_hat(StandardAutomorphism::identity(ctx), num(5));
  CHECK(id_hat.apply(d) == d + num(5) * AffineElement::central(ctx));
  auto curve = make_exp_curve(I() * num(1, 2) * h());
  auto exp_map = StandardAutomorphism(ctx, ctx, 1, 0, FiniteAutomorphism::identity(sl2()), curve);
  auto exp_hat = extend_to_hat(exp_map);
  CHECK(exp_hat.u_phi == LoopElement::constant(ctx, num(-1) * I() * num(1, 2) * h()));
  for (const auto& hx : {hat, id_hat, exp_hat, extend_to_hat(exp_map, num(3))})
    for (int t = 0; t < 5; ++t) {
      auto x = random_affine(ctx, rng, 3), y = random_affine(ctx, rng, 3);
      CHECK(hx.apply(affine_bracket(x, y)) == affine_bracket(hx.apply(x), hx.apply(y)));
    }
  auto rot = StandardAutomorphism::constant(ctx, FiniteAutomorphism::identity(sl2()), 1, Rational(1, 3));
  CHECK(hat_order(finite_order_extension(rot), 3) == 3u);
  CHECK(hat_order(finite_order_extension(phi), 3) == 2u);
}
