#include "kmforge/autom/invariants.hpp"

#include <numeric>

#include "kmforge/error.hpp"

namespace kmforge {

namespace {

std::int64_t floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

struct Bezout {
  std::int64_t l;
  std::int64_t m;
};

// l in [0, q') and m with l p' + m q' = 1.
Bezout bezout(std::int64_t p1, std::int64_t q1) {
  for (std::int64_t l = 0; l < q1; ++l)
    if ((l * p1 - 1) % q1 == 0) return {l, (1 - l * p1) / q1};
  throw Error(ErrorCode::InvalidInput, "p' and q' are not coprime");
}

std::string describe(const FiniteAutomorphism& a) {
  auto name = name_of(a);
  return name ? *name : "<matrix>";
}

void require_constant_endomorphism(const StandardAutomorphism& phi) {
  if (!phi.is_constant()) throw Error(ErrorCode::InvalidInput, "invariant extraction needs a constant curve");
  if (!phi.is_endomorphism()) throw Error(ErrorCode::TwistMismatch, "invariant extraction needs sigma~ = sigma");
  if (phi.antilinear()) throw Error(ErrorCode::InvalidInput, "invariant extraction needs a linear automorphism");
}

void require_order(const StandardAutomorphism& phi, std::uint32_t q) {
  auto n = standard_order(phi, std::max(q, kDefaultOrderBound));
  if (!n || *n != q)
    throw Error(ErrorCode::OrderMismatch, "automorphism order is " + (n ? std::to_string(*n) : std::string("unbounded")) +
                                              ", not " + std::to_string(q));
}

}  // namespace

FirstKindInvariant extract_invariant_first(const StandardAutomorphism& phi, std::uint32_t q) {
  if (phi.epsilon() != 1) throw Error(ErrorCode::NotFirstKind, "automorphism reverses orientation");
  require_constant_endomorphism(phi);
  require_order(phi, q);
  FiniteAutomorphism sigma = phi.source()->sigma();
  // u(t + 2 pi (s0 + j)) = sigma^j u(t + 2 pi s0)
  const std::int64_t j = floor_of(phi.shift());
  FiniteAutomorphism phi0 = compose(phi.phi0(), power(sigma, j));
  Rational s = phi.shift() - Rational(j);
  const Rational pq = s * Rational(static_cast<long>(q));
  if (pq.get_den() != 1) throw Error(ErrorCode::OrderMismatch, "shift is not a multiple of 1/q");
  std::int64_t p = pq.get_num().get_si();
  if (2 * p > static_cast<std::int64_t>(q)) {
    // conjugate by u(t) -> u(-t): L(g, sigma) -> L(g, sigma^{-1}), phi0 u(t - t0) = phi0 sigma u(t + 2 pi - t0)
    phi0 = compose(phi0, sigma);
    sigma = inverse(sigma);
    p = static_cast<std::int64_t>(q) - p;
  }
  const auto qq = static_cast<std::int64_t>(q);
  const std::int64_t r = std::gcd(p, qq);
  const std::int64_t p1 = p / r, q1 = qq / r;
  const auto [l, m] = bezout(p1, q1);
  const FiniteAutomorphism rho_t = compose(power(phi0, q1), power(sigma, p1));
  const FiniteAutomorphism lambda = compose(power(phi0, l), power(sigma, -m));
  const auto rho_order = automorphism_order(rho_t);
  for (const auto& entry : rho_catalog(phi.source()->algebra())) {
    if (!rho_order || entry.order != *rho_order) continue;
    auto alpha = conjugator(entry.rho, rho_t);
    if (!alpha) continue;
    const FiniteAutomorphism beta_bar = compose(inverse(*alpha), compose(inverse(lambda), *alpha));
    return {q, p, entry.id, entry.rho, component_label(entry.rho, beta_bar)};
  }
  throw Error(ErrorCode::CatalogMiss, "rho_t matches no catalog representative");
}

Realization realize_first(std::int64_t p, const FiniteAutomorphism& rho, const FiniteAutomorphism& beta,
                          std::uint32_t q) {
  const auto qq = static_cast<std::int64_t>(q);
  if (q == 0 || p < 0 || p >= qq) throw Error(ErrorCode::InvalidInput, "need 0 <= p < q");
  require_same_algebra(rho.algebra(), beta.algebra());
  const std::int64_t r = std::gcd(p, qq);
  const auto rho_order = automorphism_order(rho);
  if (!rho_order || r % static_cast<std::int64_t>(*rho_order) != 0)
    throw Error(ErrorCode::InvalidInput, "order of rho must divide gcd(p, q)");
  if (!commute(rho, beta)) throw Error(ErrorCode::IncompatibleData, "beta does not commute with rho");
  const std::int64_t p1 = p / r, q1 = qq / r;
  const auto [l, m] = bezout(p1, q1);
  const FiniteAutomorphism sigma = compose(power(rho, l), power(beta, q1));
  const FiniteAutomorphism phi0 = compose(power(rho, m), power(beta, -p1));
  auto context = TwistContext::make(sigma);
  return {context->sigma(), StandardAutomorphism::constant(context, phi0, 1, Rational(p, q))};
}

Realization realize_first(std::int64_t p, const std::string& rho_id, const std::string& beta_class,
                          std::uint32_t q, const AlgebraPtr& algebra) {
  const auto& entry = catalog_entry(algebra, rho_id);
  return realize_first(p, entry.rho, component_representative(entry.rho, beta_class), q);
}

SecondKindInvariant extract_invariant_second(const StandardAutomorphism& phi, std::uint32_t q) {
  if (phi.epsilon() != -1) throw Error(ErrorCode::NotSecondKind, "automorphism preserves orientation");
  if (q % 2 != 0) throw Error(ErrorCode::OrderMismatch, "second-kind orders are even");
  require_constant_endomorphism(phi);
  require_order(phi, q);
  // conjugation by the rotation u(t) -> u(t - t0/2) removes the shift
  const FiniteAutomorphism& sigma = phi.source()->sigma();
  SecondKindInvariant inv{phi.phi0(), compose(phi.phi0(), inverse(sigma))};
  const auto sq = compose(inv.phi_plus, inv.phi_plus);
  if (!(sq == compose(inv.phi_minus, inv.phi_minus)) || automorphism_order(sq) != q / 2)
    throw Error(ErrorCode::OrderMismatch, "phi+ and phi- squares disagree with the order");
  return inv;
}

Realization realize_second(const FiniteAutomorphism& phi_plus, const FiniteAutomorphism& phi_minus) {
  require_same_algebra(phi_plus.algebra(), phi_minus.algebra());
  if (!(compose(phi_plus, phi_plus) == compose(phi_minus, phi_minus)))
    throw Error(ErrorCode::SquareMismatch, "phi+^2 != phi-^2");
  const FiniteAutomorphism sigma = compose(inverse(phi_minus), phi_plus);
  auto context = TwistContext::make(sigma);
  return {context->sigma(), StandardAutomorphism::constant(context, phi_plus, -1)};
}

bool invariants_equal_first(const FirstKindInvariant& a, const FirstKindInvariant& b) {
  return a.q == b.q && a.p == b.p && a.rho_id == b.rho_id && a.beta_class == b.beta_class;
}

namespace {

// (a+, a-) ~ (b+, b-) by one conjugation move: alpha = alpha0 z, beta = beta0 w with
// z in C(a+), w in C(a-), and alpha^{-1} beta in the identity component of C(a+^2).
bool conjugation_move(const FiniteAutomorphism& a_plus, const FiniteAutomorphism& a_minus,
                      const FiniteAutomorphism& b_plus, const FiniteAutomorphism& b_minus) {
  auto alpha0 = conjugator(a_plus, b_plus);
  auto beta0 = conjugator(a_minus, b_minus);
  if (!alpha0 || !beta0) {
    if (automorphism_order(a_plus) != automorphism_order(b_plus) ||
        automorphism_order(a_minus) != automorphism_order(b_minus))
      return false;
    throw Error(ErrorCode::ClassifierUnavailable, "no conjugator found between invariant components");
  }
  const FiniteAutomorphism square = compose(a_plus, a_plus);
  const FiniteAutomorphism core = compose(inverse(*alpha0), *beta0);
  for (const auto& z : centralizer_components(a_plus))
    for (const auto& w : centralizer_components(a_minus))
      if (in_identity_component(square, compose(inverse(z), compose(core, w)))) return true;
  return false;
}

}  // namespace

bool invariants_equal_second(const SecondKindInvariant& a, const SecondKindInvariant& b) {
  require_same_algebra(a.phi_plus.algebra(), b.phi_plus.algebra());
  if (!(compose(a.phi_plus, a.phi_plus) == compose(a.phi_minus, a.phi_minus)) ||
      !(compose(b.phi_plus, b.phi_plus) == compose(b.phi_minus, b.phi_minus)))
    throw Error(ErrorCode::SquareMismatch, "invariant pair with unequal squares");
  if ((a.phi_plus == b.phi_plus && a.phi_minus == b.phi_minus) ||
      (a.phi_plus == b.phi_minus && a.phi_minus == b.phi_plus))
    return true;
  std::optional<Error> pending;
  for (bool swap : {false, true}) {
    const auto& bp = swap ? b.phi_minus : b.phi_plus;
    const auto& bm = swap ? b.phi_plus : b.phi_minus;
    try {
      if (conjugation_move(a.phi_plus, a.phi_minus, bp, bm)) return true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClassifierUnavailable) throw;
      pending = e;
    }
  }
  if (pending) throw *pending;
  return false;
}

std::string to_string(const FirstKindInvariant& inv) {
  return "(" + std::to_string(inv.p) + ", " + inv.rho_id + ", [" + inv.beta_class + "]) q=" + std::to_string(inv.q);
}

std::string to_string(const SecondKindInvariant& inv) {
  return "[" + describe(inv.phi_plus) + ", " + describe(inv.phi_minus) + "]";
}

}  // namespace kmforge
