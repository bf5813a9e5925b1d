#include "kmforge/verify/suites.hpp"

#include <numeric>
#include <random>

#include "kmforge/error.hpp"

namespace kmforge {

namespace {

ContextPtr suite_context(const SuiteConfig& c) {
  auto g = builtin_algebra(c.algebra);
  return TwistContext::make(named_automorphism(g, c.sigma), c.denominator, c.level);
}

SuiteReport jacobi(const SuiteConfig& c) {
  auto ctx = suite_context(c);
  std::mt19937_64 rng(c.seed);
  CheckReport r;
  for (std::uint32_t t = 0; t < c.trials; ++t) {
    auto x = random_affine(ctx, rng, c.n);
    auto y = random_affine(ctx, rng, c.n);
    auto z = random_affine(ctx, rng, c.n);
    auto jac = affine_bracket(x, affine_bracket(y, z)) + affine_bracket(y, affine_bracket(z, x)) +
               affine_bracket(z, affine_bracket(x, y));
    r.expect(jac.is_zero(), "trial " + std::to_string(t) + ": Jacobi residual " + jac.to_string());
    auto anti = affine_bracket(x, y) + affine_bracket(y, x);
    r.expect(anti.is_zero(), "trial " + std::to_string(t) + ": [x,y] + [y,x] = " + anti.to_string());
  }
  return {"jacobi", {{c.algebra + " sigma=" + c.sigma, r}}};
}

SuiteReport cocycle_suite(const SuiteConfig& c) {
  auto ctx = suite_context(c);
  std::mt19937_64 rng(c.seed);
  CheckReport r;
  for (std::uint32_t t = 0; t < c.trials; ++t) {
    auto u = random_loop(ctx, rng, c.n);
    auto v = random_loop(ctx, rng, c.n);
    auto w = random_loop(ctx, rng, c.n);
    auto anti = cocycle(u, v) + cocycle(v, u);
    r.expect(anti.is_zero(), "trial " + std::to_string(t) + ": w(u,v) + w(v,u) = " + anti.to_string());
    auto cyc = cocycle(loop_bracket(u, v), w) + cocycle(loop_bracket(v, w), u) + cocycle(loop_bracket(w, u), v);
    r.expect(cyc.is_zero(), "trial " + std::to_string(t) + ": cyclic sum " + cyc.to_string());
  }
  return {"cocycle", {{c.algebra + " sigma=" + c.sigma, r}}};
}

SuiteReport roundtrip(const SuiteConfig& c) {
  auto g = builtin_algebra(c.algebra);
  std::vector<std::uint32_t> qs = c.q ? std::vector<std::uint32_t>{c.q} : std::vector<std::uint32_t>{2, 3, 4, 6};
  SuiteReport out{"roundtrip", {}};
  for (std::uint32_t q : qs)
    for (std::int64_t p = 0; 2 * p <= static_cast<std::int64_t>(q); ++p) {
      const auto r = static_cast<std::uint32_t>(std::gcd(p, static_cast<std::int64_t>(q)));
      for (const auto& entry : rho_catalog(g)) {
        if (entry.order != r) continue;
        for (const auto& label : component_labels(entry.rho)) {
          CheckReport rep;
          auto real = realize_first(p, entry.id, label, q, g);
          rep.expect(standard_order(real.phi, c.bound) == q, "closed-form order differs from q");
          const auto d = static_cast<std::int64_t>(real.phi.source()->denominator());
          auto brute = bruteforce_order([&](const LoopElement& u) { return real.phi.apply(u); }, real.phi.source(),
                                        2 * d + 1, c.bound);
          rep.expect(brute == q, "brute-force order differs from q");
          auto inv = extract_invariant_first(real.phi, q);
          rep.expect(inv.p == p && inv.rho_id == entry.id && inv.beta_class == label,
                     "extracted " + to_string(inv));
          out.items.push_back({"q=" + std::to_string(q) + " (" + std::to_string(p) + "," + entry.id + ",[" + label +
                                   "])",
                               rep});
        }
      }
    }
  return out;
}

template <typename F>
SuiteReport per_form(const std::string& name, const SuiteConfig& c, bool skip_compact, F check) {
  SuiteReport out{name, {}};
  for (const auto& form : enumerate_real_forms(builtin_algebra(c.algebra))) {
    if (skip_compact && form.kind == FormKind::Compact) continue;
    out.items.push_back({form.label, check(form)});
  }
  return out;
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& item : items)
    if (!item.report.pass) return false;
  return true;
}

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const auto& item : items) n += item.report.pass ? 1 : 0;
  return n;
}

std::vector<std::string> suite_names() { return {"jacobi", "cocycle", "roundtrip", "realforms", "cartan", "hat"}; }

SuiteReport run_suite(const std::string& suite, const SuiteConfig& c) {
  if (c.n < 0) throw Error(ErrorCode::InvalidInput, "N must be nonnegative");
  if (suite == "jacobi") return jacobi(c);
  if (suite == "cocycle") return cocycle_suite(c);
  if (suite == "roundtrip") return roundtrip(c);
  if (suite == "realforms")
    return per_form(suite, c, false, [&](const RealFormDescriptor& f) { return verify_real_form(f, c.n); });
  if (suite == "cartan")
    return per_form(suite, c, true, [&](const RealFormDescriptor& f) { return verify_cartan(f, c.n); });
  if (suite == "hat")
    return per_form(suite, c, false, [&](const RealFormDescriptor& f) { return verify_hat_real_form(f, c.n); });
  throw Error(ErrorCode::InvalidInput, "unknown suite '" + suite + "'");
}

nlohmann::json to_json(const SuiteReport& report, const SuiteConfig& c) {
  nlohmann::json items = nlohmann::json::array();
  std::size_t checks = 0;
  for (const auto& item : report.items) {
    auto j = io::to_json(item.report);
    j["label"] = item.label;
    items.push_back(j);
    checks += item.report.checks;
  }
  return {{"suite", report.suite},
          {"algebra", c.algebra},
          {"N", c.n},
          {"seed", std::to_string(c.seed)},
          {"pass", report.pass()},
          {"checks", checks},
          {"passed", std::to_string(report.passed()) + "/" + std::to_string(report.items.size())},
          {"items", items}};
}

}  // namespace kmforge
