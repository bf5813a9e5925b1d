// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "kmforge/affine/hat.hpp"
#include "kmforge/classify/realforms.hpp"
#include "kmforge/error.hpp"
#include "kmforge/verify/suites.hpp"

using namespace kmforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

AlgebraPtr sl2() { return builtin_algebra("sl2C"); }
FiniteAutomorphism named(const std::string& n) { return named_automorphism(sl2(), n); }
CyclotomicNumber frac(long n, long d) { return CyclotomicNumber(Rational(n, static_cast<unsigned long>(d))); }
AlgebraElement basis(const std::string& n) { return AlgebraElement::basis(sl2(), n); }

LoopMap as_map(const StandardAutomorphism& phi) {
  return [phi](const LoopElement& u) { return phi.apply(u); };
}

std::string summary(const SuiteReport& r) {
  std::size_t checks = 0;
  for (const auto& item : r.items) checks += item.report.checks;
  return std::to_string(r.passed()) + "/" + std::to_string(r.items.size()) + " items, " + std::to_string(checks) +
         " exact checks";
}

void absorb(Outcome& out, const SuiteReport& r) {
  for (const auto& item : r.items)
    out.require(item.report.pass,
                item.label + ": " + (item.report.witnesses.empty() ? std::string("failed") : item.report.witnesses[0]));
}

Outcome jacobi() {
  Outcome out;
  std::string detail;
  for (const std::string sigma : {"id", "tau"}) {
    SuiteConfig c;
    c.sigma = sigma;
    c.n = 6;
    c.trials = 100;
    c.seed = 2024;
    auto r = run_suite("jacobi", c);
    absorb(out, r);
    detail += "sigma=" + sigma + " " + summary(r) + "; ";
  }
  if (out.pass) out.detail = detail + "degree <= 6 with c, d components";
  return out;
}

Outcome cocycle_laws() {
  Outcome out;
  std::string detail;
  for (const std::string sigma : {"id", "tau"}) {
    SuiteConfig c;
    c.sigma = sigma;
    c.n = 6;
    c.trials = 100;
    c.seed = 77;
    auto r = run_suite("cocycle", c);
    absorb(out, r);
    detail += "sigma=" + sigma + " " + summary(r) + "; ";
  }
  if (out.pass) out.detail = detail + "antisymmetry and cyclic identity";
  return out;
}

Outcome first_kind() {
  Outcome out;
  SuiteConfig c;
  c.q = 0;
  auto r = run_suite("roundtrip", c);
  absorb(out, r);
  if (out.pass) out.detail = "q in {2,3,4,6}: " + summary(r) + " (closed form, brute force, extraction)";
  return out;
}

Outcome second_kind() {
  Outcome out;
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"id", "id"}, {"tau", "tau"}, {"tau", "id"}, {"mu", "mu"}, {"mu", "id"}};
  for (const auto& [a, b] : pairs) {
    const std::string label = "[" + a + "," + b + "]";
    auto plus = named(a), minus = named(b);
    auto real = realize_second(plus, minus);
    const auto expected = 2 * finite_order(compose(plus, plus));
    out.require(standard_order(real.phi) == expected, label + ": closed-form order");
    const auto d = static_cast<std::int64_t>(real.phi.source()->denominator());
    out.require(bruteforce_order(as_map(real.phi), real.phi.source(), 2 * d + 1) == expected, label + ": brute force");
    auto inv = extract_invariant_second(real.phi, expected);
    out.require(invariants_equal_second(inv, {plus, minus}), label + ": extracted invariant");
    out.require(invariants_equal_second({plus, minus}, {minus, plus}), label + ": swap symmetry");
  }
  out.require(!invariants_equal_second({named("tau"), named("id")}, {named("id"), named("id")}),
              "[tau,id] must differ from [id,id]");
  out.require(invariants_equal_second({named("tau"), named("tau")}, {named("mu"), named("mu")}),
              "[tau,tau] and [mu,mu] are related by conjugation");
  out.require(invariants_equal_second({named("tau"), named("id")}, {named("mu"), named("id")}),
              "[tau,id] and [mu,id] are related by conjugation");
  if (out.pass) out.detail = "5 pairs: order 2 (both oracles), invariant recovered, swaps detected";
  return out;
}

FirstKindInvariant golden_first(std::int64_t p, const std::string& rho, const std::string& beta, std::uint32_t q) {
  FirstKindInvariant inv;
  inv.q = q;
  inv.p = p;
  inv.rho_id = rho;
  inv.rho = named(rho);
  inv.beta_class = beta;
  return inv;
}

Outcome golden_real_forms() {
  Outcome out;
  const auto forms = enumerate_real_forms(sl2());
  out.require(forms.size() == 7, "expected 7 real forms, got " + std::to_string(forms.size()));
  const std::vector<Invariant> golden{golden_first(0, "id", "id", 1),
                                      golden_first(0, "mu", "id", 2),
                                      golden_first(0, "mu", "tau", 2),
                                      golden_first(1, "id", "id", 2),
                                      SecondKindInvariant{named("id"), named("id")},
                                      SecondKindInvariant{named("mu"), named("mu")},
                                      SecondKindInvariant{named("mu"), named("id")}};
  for (const auto& g : golden) {
    int hits = 0;
    for (const auto& f : forms) hits += invariants_equal(f.invariant, g) ? 1 : 0;
    out.require(hits == 1, to_string(g) + " matched " + std::to_string(hits) + " forms");
  }
  for (std::size_t a = 0; a < forms.size(); ++a)
    for (std::size_t b = a + 1; b < forms.size(); ++b)
      out.require(!invariants_equal(forms[a].invariant, forms[b].invariant), forms[a].label + " ~ " + forms[b].label);
  std::size_t checks = 0;
  for (const auto& f : forms) {
    auto r = verify_real_form(f, 4);
    checks += r.checks;
    out.require(r.pass, f.label + ": " + (r.witnesses.empty() ? std::string("failed") : r.witnesses[0]));
  }
  auto corrupted = forms.back();
  for (const auto& f : forms)
    if (f.label == "2[mu,id]") corrupted = f;
  corrupted.involution->rho_plus = named("id");
  out.require(!verify_real_form(corrupted, 2).pass, "corrupted kind 2 condition was accepted");
  if (out.pass)
    out.detail = "7 classes, pairwise inequivalent, verified at N=4 (" + std::to_string(checks) +
                 " checks), corrupted control rejected";
  return out;
}

Outcome hat_involutions() {
  Outcome out;
  auto ctx = TwistContext::untwisted(sl2());
  const auto x = imag_unit() * frac(1, 2) * basis("h");
  auto curve = make_exp_curve(x);
  const auto id = FiniteAutomorphism::identity(sl2());
  StandardAutomorphism e(ctx, ctx, 1, 0, id, curve);
  auto e_inv = inverse(e);
  std::size_t conjugated = 0;
  for (const std::string name : {"tau", "mu", "w"}) {
    for (const Rational& shift : {Rational(0), Rational(1, 2)}) {
      auto phi = StandardAutomorphism::constant(ctx, named(name), 1, shift);
      if (standard_order(phi) != 2u) continue;
      auto psi = compose(e, compose(phi, e_inv));
      const std::string label = name + " shift " + shift.get_str();
      out.require(standard_order(psi) == 2u, label + ": conjugate is not an involution");
      auto hat = finite_order_extension(psi);
      out.require(hat_order(hat, 2) == 2u, label + ": hat order is not 2");
      if (!hat.u_phi.is_zero()) {
        ++conjugated;
        out.require(hat_order(extend_to_hat(psi, CyclotomicNumber()), 2) != 2u, label + ": nu = 0 passed");
      }
    }
  }
  out.require(conjugated > 0, "no involution picked up a nonzero u_phi");
  if (out.pass)
    out.detail = "X=(i/2)h; hat order 2 for all, " + std::to_string(conjugated) +
                 " with u_phi != 0 fail at nu=0";
  return out;
}

Outcome cartan() {
  Outcome out;
  std::size_t n = 0;
  for (const auto& f : enumerate_real_forms(sl2())) {
    if (f.kind == FormKind::Compact) continue;
    ++n;
    auto r = verify_cartan(f, 3);
    out.require(r.pass, f.label + ": " + (r.witnesses.empty() ? std::string("failed") : r.witnesses[0]));
  }
  if (out.pass) out.detail = std::to_string(n) + " noncompact forms at N=3, inclusions and compact k + im";
  return out;
}

Outcome tau_r() {
  Outcome out;
  std::mt19937_64 rng(5);
  const Rational r(2);
  for (auto ctx : {TwistContext::untwisted(sl2()), TwistContext::make(named("tau"), 2)})
    for (int t = 0; t < 25; ++t) {
      auto u = random_loop(ctx, rng, 5), v = random_loop(ctx, rng, 5);
      out.require(tau_r_apply(r, loop_bracket(u, v)) == loop_bracket(tau_r_apply(r, u), tau_r_apply(r, v)),
                  "tau_2 is not a homomorphism");
    }
  auto ctx = TwistContext::untwisted(sl2());
  for (const auto& phi : {StandardAutomorphism::identity(ctx), StandardAutomorphism::constant(ctx, named("mu")),
                          StandardAutomorphism::constant(ctx, named("tau"), 1, Rational(1, 3))}) {
    ScaledStandard scaled{phi, r};
    out.require(!standard_order(scaled, 48).has_value(), "a first-kind tau_2 composite reported a finite order");
    out.require(!bruteforce_order([&](const LoopElement& u) { return scaled.apply(u); }, ctx, 1, 12).has_value(),
                "brute force found a finite order");
  }
  if (out.pass) out.detail = "50 pairs exact; first-kind composites Unbounded at bound 48";
  return out;
}

Outcome exp_isomorphism() {
  Outcome out;
  auto source = TwistContext::make(named("tau"), 2);
  auto target = TwistContext::untwisted(sl2(), 2);
  auto curve = make_exp_curve(imag_unit() * frac(1, 4) * basis("h"));
  const auto id = FiniteAutomorphism::identity(sl2());
  out.require(exp_ad(curve, 1) == named("tau"), "exp(2 pi ad X) != tau");
  StandardAutomorphism psi(source, target, 1, 0, id, curve);
  // e e^{it/2} -> e e^{it}, f e^{it/2} -> f, h -> h
  out.require(psi.apply(LoopElement::monomial(source, 1, basis("e"))) == LoopElement::monomial(target, 2, basis("e")),
              "image of e e^{it/2}");
  out.require(psi.apply(LoopElement::monomial(source, 1, basis("f"))) == LoopElement::constant(target, basis("f")),
              "image of f e^{it/2}");
  out.require(psi.apply(LoopElement::constant(source, basis("h"))) == LoopElement::constant(target, basis("h")),
              "image of h");
  std::mt19937_64 rng(3);
  auto back = inverse(psi);
  for (int t = 0; t < 30; ++t) {
    auto u = random_loop(source, rng, 6), v = random_loop(source, rng, 6);
    auto pu = psi.apply(u), pv = psi.apply(v);
    out.require(validate(pu) && validate(pv), "image is not a valid loop");
    out.require(psi.apply(loop_bracket(u, v)) == loop_bracket(pu, pv), "bracket not preserved");
    out.require(back.apply(pu) == u, "inverse does not undo the map");
  }
  if (out.pass) out.detail = "X=(i/4)h, exp(2 pi ad X)=tau; monomials, validity, bracket and inverse exact";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Jacobi identity on the affine algebra", jacobi},
      {"cocycle laws", cocycle_laws},
      {"first-kind round trip", first_kind},
      {"second-kind round trip", second_kind},
      {"sl2C real form catalog", golden_real_forms},
      {"finite-order hat extensions", hat_involutions},
      {"Cartan decompositions", cartan},
      {"tau_r", tau_r},
      {"exp-curve isomorphism", exp_isomorphism},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %s: %s (%.2fs) %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
