#include "doctest.h"
#include "kmforge/autom/invariants.hpp"
#include "kmforge/error.hpp"
#include "support.hpp"

using namespace kmforge;
using namespace testing_support;

namespace {

FiniteAutomorphism named(const std::string& n) { return named_automorphism(sl2(), n); }

std::optional<std::uint32_t> oracle_order(const StandardAutomorphism& phi) {
  const auto d = static_cast<std::int64_t>(phi.source()->denominator());
  return bruteforce_order([&](const LoopElement& u) { return phi.apply(u); }, phi.source(), 2 * d + 1);
}

}  // namespace

TEST_CASE("named automorphisms are automorphisms of the stated order") {
  for (const auto& alg : {sl2(), builtin_algebra("sl3C")})
    for (const auto& n : automorphism_names(alg)) {
      auto a = named_automorphism(alg, n);
      CAPTURE(n);
      CHECK(check_automorphism(a));
      CHECK(automorphism_order(a) == a.declared_order());
    }
  CHECK(named("mu") == mu());
  CHECK(named("tau") == tau());
  CHECK(name_of(mu()) == std::string("mu"));
}

TEST_CASE("A1 classifier") {
  CHECK(component_label(named("mu"), named("id")) == "id");
  CHECK(component_label(named("mu"), named("tau")) == "tau");
  CHECK(component_label(named("tau"), named("w")) == "tau");
  CHECK(component_label(named("id"), named("tau")) == "id");
  CHECK_THROWS_AS(component_label(named("mu"), named("rot3")), Error);
  // constant along exp(ad tX) for X in the centralizer
  auto curve = make_exp_curve(I() * num(1, 2) * h());
  for (int k = 1; k < 8; ++k) {
    auto a = exp_ad(curve, Rational(1, static_cast<unsigned long>(k + 1)));
    CHECK(component_label(named("tau"), a) == "id");
    CHECK(component_label(named("tau"), compose(a, named("w"))) == "tau");
  }
  for (const auto& x : {"id", "tau", "mu", "rot3", "rot4", "rot6"}) {
    for (const auto& y : {"id", "tau", "mu", "rot3", "rot4", "rot6"}) {
      auto alpha = conjugator(named(x), named(y));
      const bool same_order = automorphism_order(named(x)) == automorphism_order(named(y));
      CHECK(alpha.has_value() == same_order);
      if (alpha) CHECK(compose(*alpha, compose(named(x), inverse(*alpha))) == named(y));
    }
  }
  // conjugate of mu by a non-diagonal element
  auto g = FiniteAutomorphism::adjoint(sl2(), [] {
    Matrix m(2, 2);
    m(0, 0) = 1L;
    m(0, 1) = 2L;
    m(1, 0) = 1L;
    m(1, 1) = 3L;
    return m;
  }());
  auto x = compose(g, compose(named("mu"), inverse(g)));
  auto alpha = conjugator(named("mu"), x);
  REQUIRE(alpha);
  CHECK(compose(*alpha, compose(named("mu"), inverse(*alpha))) == x);
}

TEST_CASE("A2 classifier") {
  auto g3 = builtin_algebra("sl3C");
  auto a = [&](const std::string& n) { return named_automorphism(g3, n); };
  CHECK(is_inner(a("id")));
  CHECK(is_inner(a("inv")));
  CHECK(is_inner(a("rot3")));
  CHECK_FALSE(is_inner(a("mu")));
  CHECK(component_label(a("id"), a("mu")) == "mu");
  CHECK(component_label(a("inv"), a("mu")) == "mu");
  CHECK(component_label(a("mu"), a("inv")) == "id");
  CHECK_THROWS_AS(component_label(builtin_algebra("su2") ? FiniteAutomorphism::identity(builtin_algebra("su2"))
                                                         : a("id"),
                                  FiniteAutomorphism::identity(builtin_algebra("su2"))),
                  Error);
}

TEST_CASE("first-kind realization examples") {
  auto r = realize_first(1, named("id"), named("tau"), 2);
  CHECK(r.sigma.is_identity());
  CHECK(r.phi.phi0() == named("tau"));
  CHECK(r.phi.shift() == Rational(1, 2));
  auto inv = extract_invariant_first(r.phi, 2);
  CHECK(inv.p == 1);
  CHECK(inv.rho_id == "id");
  CHECK(inv.beta_class == "id");

  auto r2 = realize_first(0, named("mu"), named("id"), 2);
  CHECK(r2.sigma.is_identity());
  CHECK(r2.phi.phi0() == named("mu"));
  auto r3 = realize_first(0, named("id"), named("id"), 1);
  CHECK(r3.phi.is_identity());
  auto inv3 = extract_invariant_first(r3.phi, 1);
  CHECK(to_string(inv3) == "(0, id, [id]) q=1");

  // phi u(t) = rho(u(t)) on L(g, beta)
  auto ctx = TwistContext::make(named("tau"));
  auto inv4 = extract_invariant_first(StandardAutomorphism::constant(ctx, named("mu")), 2);
  CHECK(inv4.p == 0);
  CHECK(inv4.rho_id == "mu");
  CHECK(inv4.beta_class == "tau");

  CHECK_THROWS_AS(realize_first(0, named("mu"), named("rot3"), 2), Error);
  CHECK_THROWS_AS(extract_invariant_first(StandardAutomorphism::constant(ctx, named("mu")), 4), Error);
  CHECK_THROWS_AS(extract_invariant_first(StandardAutomorphism::constant(ctx, named("id"), -1), 2), Error);
}

TEST_CASE("first-kind round trips over the A1 catalog") {
  for (std::uint32_t q : {2u, 3u, 4u, 6u})
    for (std::int64_t p = 0; 2 * p <= static_cast<std::int64_t>(q); ++p) {
      const auto r = std::gcd(p, static_cast<std::int64_t>(q));
      for (const auto& entry : rho_catalog(sl2())) {
        if (entry.order != static_cast<std::uint32_t>(r)) continue;
        for (const auto& label : component_labels(entry.rho)) {
          CAPTURE(q);
          CAPTURE(p);
          CAPTURE(entry.id);
          CAPTURE(label);
          auto real = realize_first(p, entry.id, label, q, sl2());
          CHECK(standard_order(real.phi) == q);
          CHECK(oracle_order(real.phi) == q);
          // phi0^q sigma^p = id
          CHECK(compose(power(real.phi.phi0(), q), power(real.sigma, p)).is_identity());
          auto inv = extract_invariant_first(real.phi, q);
          CHECK(inv.p == p);
          CHECK(inv.rho_id == entry.id);
          CHECK(inv.beta_class == label);
        }
      }
    }
}

TEST_CASE("normalization flip p -> q - p") {
  for (std::uint32_t q : {3u, 4u, 6u})
    for (std::int64_t p = 1; 2 * p < static_cast<std::int64_t>(q); ++p) {
      const auto r = std::gcd(p, static_cast<std::int64_t>(q));
      for (const auto& entry : rho_catalog(sl2())) {
        if (entry.order != static_cast<std::uint32_t>(r)) continue;
        auto a = realize_first(p, entry.id, "id", q, sl2());
        auto b = realize_first(static_cast<std::int64_t>(q) - p, entry.rho, named("id"), q);
        CHECK(invariants_equal_first(extract_invariant_first(a.phi, q), extract_invariant_first(b.phi, q)));
      }
    }
}

TEST_CASE("second-kind realization and extraction") {
  auto r = realize_second(named("tau"), named("tau"));
  CHECK(r.sigma.is_identity());
  CHECK(standard_order(r.phi) == 2u);
  auto r0 = realize_second(named("id"), named("id"));
  CHECK(standard_order(r0.phi) == 2u);
  auto r1 = realize_second(named("mu"), named("id"));
  CHECK(r1.sigma == named("mu"));
  CHECK(standard_order(r1.phi) == 2u);
  CHECK(oracle_order(r1.phi) == 2u);
  CHECK_THROWS_AS(realize_second(named("rot3"), named("id")), Error);

  auto inv = extract_invariant_second(r1.phi, 2);
  CHECK(invariants_equal_second(inv, {named("mu"), named("id")}));
  auto plain = StandardAutomorphism::constant(TwistContext::untwisted(sl2()), named("id"), -1);
  auto inv0 = extract_invariant_second(plain, 2);
  CHECK(inv0.phi_plus.is_identity());
  CHECK(inv0.phi_minus.is_identity());
  CHECK_THROWS_AS(extract_invariant_second(StandardAutomorphism::identity(TwistContext::untwisted(sl2())), 2), Error);

  CHECK(invariants_equal_second({named("tau"), named("id")}, {named("id"), named("tau")}));
  CHECK_FALSE(invariants_equal_second({named("mu"), named("mu")}, {named("mu"), named("id")}));
  CHECK_FALSE(invariants_equal_second({named("id"), named("id")}, {named("mu"), named("id")}));
  CHECK_FALSE(invariants_equal_second({named("id"), named("id")}, {named("mu"), named("mu")}));
  CHECK(invariants_equal_second({named("tau"), named("tau")}, {named("mu"), named("mu")}));
  auto g = exp_ad(make_exp_curve(I() * num(1, 2) * h()), Rational(1, 3));
  CHECK(invariants_equal_second({named("mu"), named("mu")}, {named("mu"), compose(g, compose(named("mu"), inverse(g)))}));

  // order-4 second kind: phi+ = phi- = rot4 has square of order 2
  auto r4 = realize_second(named("rot4"), named("rot4"));
  CHECK(standard_order(r4.phi) == 4u);
  auto inv4 = extract_invariant_second(r4.phi, 4);
  CHECK(invariants_equal_second(inv4, {named("rot4"), named("rot4")}));
  auto rot4_inv = inverse(named("rot4"));
  // rot4^{-1} has the same square but is conjugate to rot4 only through the Weyl reflection,
  // which lies in the other component of the square's centralizer
  CHECK_FALSE(invariants_equal_second({named("rot4"), named("rot4")}, {named("rot4"), rot4_inv}));
  CHECK(invariants_equal_second({rot4_inv, rot4_inv}, {named("rot4"), named("rot4")}));
}

TEST_CASE("first-kind classifier invariance under centralizer deformation") {
  auto curve = make_exp_curve(I() * num(1, 2) * h());
  for (int k = 1; k <= 4; ++k) {
    auto a = exp_ad(curve, Rational(1, static_cast<unsigned long>(k + 2)));
    // rho = tau, beta = tau * exp(...) stays in the identity component
    CHECK(component_label(named("tau"), compose(named("tau"), a)) == "id");
  }
}
