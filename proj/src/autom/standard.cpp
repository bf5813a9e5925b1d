#include "kmforge/autom/standard.hpp"

#include <numeric>

#include "kmforge/error.hpp"

namespace kmforge {

namespace {

bool is_integer(const Rational& x) { return x.get_den() == 1; }

long to_long(const Rational& x) { return x.get_num().get_si(); }

Rational rational_power(const Rational& r, std::int64_t k) {
  Rational base = k < 0 ? Rational(1) / r : r;
  Rational out = 1;
  for (std::int64_t n = k < 0 ? -k : k; n > 0; --n) out *= base;
  return out;
}

// Some lambda with y = lambda x and lambda rational, if one exists.
std::optional<Rational> rational_ratio(const AlgebraElement& y, const AlgebraElement& x) {
  const auto& xs = x.coords();
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (xs[j].is_zero()) continue;
    const CyclotomicNumber l = y.coords()[j] / xs[j];
    if (!l.is_rational()) return std::nullopt;
    const Rational lambda = l.to_rational();
    if (!(CyclotomicNumber(lambda) * x == y)) return std::nullopt;
    return lambda;
  }
  return std::nullopt;
}

}  // namespace

StandardAutomorphism::StandardAutomorphism(ContextPtr source, ContextPtr target, int epsilon, Rational shift,
                                           FiniteAutomorphism phi0, std::optional<ExpCurveData> curve)
    : source_(std::move(source)),
      target_(std::move(target)),
      epsilon_(epsilon),
      shift_(std::move(shift)),
      phi0_(std::move(phi0)),
      curve_(std::move(curve)) {
  shift_.canonicalize();
  if (epsilon_ != 1 && epsilon_ != -1) throw Error(ErrorCode::InvalidInput, "epsilon must be +1 or -1");
  if (source_->algebra() != target_->algebra() || phi0_.algebra() != source_->algebra())
    throw Error(ErrorCode::AlgebraMismatch, "standard automorphism data over different algebras");
  if (source_->denominator() != target_->denominator())
    throw Error(ErrorCode::TwistMismatch, "source and target use different exponent denominators");
  if (curve_ && curve_->is_zero()) curve_.reset();
  if (curve_) {
    if (source_->denominator() % curve_->denominator() != 0)
      throw Error(ErrorCode::IncompatibleDenominator, "ad X eigenvalues need exponent denominator " +
                                                          std::to_string(curve_->denominator()));
    if (!(target_->sigma().apply(curve_->generator()) == curve_->generator()))
      throw Error(ErrorCode::TwistMismatch, "target twist does not fix the curve generator");
  }
  const auto lhs = compose(curve_at(1), power(source_->sigma(), epsilon_));
  if (!(lhs == compose(target_->sigma(), phi0_)))
    throw Error(ErrorCode::TwistMismatch, "periodicity phi_{t+2pi} = sigma~ phi_t sigma^{-eps} fails");
}

StandardAutomorphism StandardAutomorphism::identity(const ContextPtr& context) {
  return constant(context, FiniteAutomorphism::identity(context->algebra()));
}

StandardAutomorphism StandardAutomorphism::constant(const ContextPtr& context, const FiniteAutomorphism& phi0,
                                                    int epsilon, const Rational& shift) {
  return StandardAutomorphism(context, context, epsilon, shift, phi0);
}

FiniteAutomorphism StandardAutomorphism::curve_at(const Rational& turns) const {
  if (!curve_) return phi0_;
  return compose(exp_ad(*curve_, turns), phi0_);
}

LoopElement StandardAutomorphism::apply(const LoopElement& u) const {
  require_same_context(u.context(), source_);
  if (!validate(u)) throw Error(ErrorCode::InvalidInput, "loop fails the twist condition of the source");
  return apply_unchecked(u);
}

LoopElement StandardAutomorphism::apply_unchecked(const LoopElement& u) const {
  const auto d = static_cast<long>(source_->denominator());
  const std::uint32_t level = target_->level();
  LoopElement out(target_);
  for (const auto& [k, x] : u.terms()) {
    Rational turns = shift_ * Rational(k) / Rational(d);
    turns.canonicalize();
    const AlgebraElement y = phi0_.apply(turns == 0 ? x : root_of_unity(turns, level) * x);
    const std::int64_t exponent = (antilinear() ? -epsilon_ : epsilon_) * k;
    if (!curve_) {
      out.add_term(exponent, y);
      continue;
    }
    const auto parts = curve_->decompose(y.coords());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (is_zero(parts[j])) continue;
      const Rational shift = curve_->eigenpairs()[j].q * Rational(d);
      out.add_term(exponent + to_long(shift), AlgebraElement(target_->algebra(), parts[j]));
    }
  }
  return out;
}

bool StandardAutomorphism::is_identity() const {
  if (epsilon_ != 1 || curve_ || !is_integer(shift_) || !is_endomorphism()) return false;
  return compose(phi0_, power(source_->sigma(), to_long(shift_))).is_identity();
}

StandardAutomorphism compose(const StandardAutomorphism& outer, const StandardAutomorphism& inner) {
  if (!same_context(inner.target(), outer.source()))
    throw Error(ErrorCode::TwistMismatch, "inner target twist differs from outer source twist");
  const int eps_a = outer.epsilon();
  const Rational shift = Rational(inner.epsilon()) * outer.shift() + inner.shift();
  // c_t = a_t o b_{eps_a t + t0_a} = exp(ad tX) exp(ad (eps_a t + t0_a) a0 Y) a0 b0
  std::optional<ExpCurveData> y_moved;
  FiniteAutomorphism phi0 = compose(outer.phi0(), inner.phi0());
  if (inner.curve()) {
    y_moved = transported(*inner.curve(), outer.phi0());
    phi0 = compose(exp_ad(*y_moved, outer.shift()), phi0);
  }
  std::optional<ExpCurveData> curve;
  if (!y_moved) {
    curve = outer.curve();
  } else if (!outer.curve()) {
    curve = scaled(*y_moved, eps_a);
  } else {
    auto lambda = rational_ratio(y_moved->generator(), outer.curve()->generator());
    if (!lambda) throw Error(ErrorCode::InvalidInput, "composition of exp curves with non-proportional generators");
    const Rational total = 1 + eps_a * *lambda;
    if (total != 0) curve = scaled(*outer.curve(), total);
  }
  return StandardAutomorphism(inner.source(), outer.target(), eps_a * inner.epsilon(), shift, phi0, curve);
}

StandardAutomorphism inverse(const StandardAutomorphism& phi) {
  const int eps = phi.epsilon();
  const FiniteAutomorphism phi0_inv = inverse(phi.phi0());
  const Rational shift = -eps * phi.shift();
  if (!phi.curve()) return StandardAutomorphism(phi.target(), phi.source(), eps, shift, phi0_inv);
  // psi_s = phi_{eps(s - t0)}^{-1} = exp(ad s(-eps X'')) exp(ad eps t0 X'') phi0^{-1}, X'' = phi0^{-1} X
  const ExpCurveData moved = transported(*phi.curve(), phi0_inv);
  const FiniteAutomorphism c0 = compose(exp_ad(moved, Rational(eps) * phi.shift()), phi0_inv);
  return StandardAutomorphism(phi.target(), phi.source(), eps, shift, c0, scaled(moved, -eps));
}

StandardAutomorphism power(const StandardAutomorphism& phi, std::uint32_t n) {
  StandardAutomorphism out = StandardAutomorphism::identity(phi.source());
  for (std::uint32_t j = 0; j < n; ++j) out = compose(phi, out);
  return out;
}

std::optional<std::uint32_t> standard_order(const StandardAutomorphism& phi, std::uint32_t bound) {
  if (!phi.is_endomorphism()) throw Error(ErrorCode::TwistMismatch, "order needs source twist = target twist");
  try {
    StandardAutomorphism p = phi;
    for (std::uint32_t n = 1; n <= bound; ++n) {
      if (p.is_identity()) return n;
      if (n < bound) p = compose(phi, p);
    }
    return std::nullopt;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidInput) throw;
  }
  const auto d = static_cast<std::int64_t>(phi.source()->denominator());
  return bruteforce_order([&](const LoopElement& u) { return phi.apply_unchecked(u); }, phi.source(), 2 * d + 2,
                          bound);
}

std::optional<std::uint32_t> bruteforce_order(const LoopMap& map, const ContextPtr& context, std::int64_t degree,
                                              std::uint32_t bound) {
  auto start = spanning_set(context, degree);
  const std::size_t n_basis = start.size();
  for (std::size_t j = 0; j < n_basis; ++j) start.push_back(imag_unit() * start[j]);
  auto current = start;
  for (std::uint32_t n = 1; n <= bound; ++n) {
    bool all = true;
    for (std::size_t j = 0; j < current.size(); ++j) {
      current[j] = map(current[j]);
      all = all && current[j] == start[j];
    }
    if (all) return n;
  }
  return std::nullopt;
}

LoopElement tau_r_apply(const Rational& r, const LoopElement& u) {
  if (r <= 0) throw Error(ErrorCode::InvalidInput, "tau_r needs r > 0");
  LoopElement out(u.context());
  for (const auto& [k, x] : u.terms()) out.add_term(k, CyclotomicNumber(rational_power(r, k)) * x);
  return out;
}

std::optional<std::uint32_t> standard_order(const ScaledStandard& phi, std::uint32_t bound) {
  if (phi.r == 1) return standard_order(phi.phi, bound);
  if (phi.phi.epsilon() == 1) return std::nullopt;
  if (phi.phi.is_constant()) return standard_order(phi.phi, bound);
  const auto d = static_cast<std::int64_t>(phi.phi.source()->denominator());
  return bruteforce_order([&](const LoopElement& u) { return phi.apply(u); }, phi.phi.source(), 2 * d + 2, bound);
}

}  // namespace kmforge
