#pragma once

// Standard automorphisms u(t) -> phi_t(u(eps t + 2 pi s)) between twisted loop
// algebras, with phi_t constant or phi_t = exp(ad tX) phi_0.

#include <functional>
#include <optional>

#include "kmforge/loop/loop.hpp"

namespace kmforge {

class StandardAutomorphism {
 public:
  /// Checks phi_{2pi} sigma^eps = target_sigma phi_0 and that target_sigma fixes X;
  /// throws TwistMismatch otherwise, IncompatibleDenominator when D * q is not integral.
  StandardAutomorphism(ContextPtr source, ContextPtr target, int epsilon, Rational shift, FiniteAutomorphism phi0,
                       std::optional<ExpCurveData> curve = std::nullopt);

  static StandardAutomorphism identity(const ContextPtr& context);
  /// u(t) -> phi0(u(eps t + 2 pi shift)) on a single twisted loop algebra.
  static StandardAutomorphism constant(const ContextPtr& context, const FiniteAutomorphism& phi0, int epsilon = 1,
                                       const Rational& shift = 0);

  const ContextPtr& source() const noexcept { return source_; }
  const ContextPtr& target() const noexcept { return target_; }
  int epsilon() const noexcept { return epsilon_; }
  const Rational& shift() const noexcept { return shift_; }
  const FiniteAutomorphism& phi0() const noexcept { return phi0_; }
  const std::optional<ExpCurveData>& curve() const noexcept { return curve_; }
  bool is_constant() const noexcept { return !curve_; }
  bool antilinear() const noexcept { return phi0_.antilinear(); }
  bool is_endomorphism() const { return same_context(source_, target_); }

  /// Throws InvalidInput when u fails validation in the source.
  LoopElement apply(const LoopElement& u) const;
  LoopElement apply_unchecked(const LoopElement& u) const;
  /// phi_t at t = 2 pi * turns.
  FiniteAutomorphism curve_at(const Rational& turns) const;
  bool is_identity() const;

 private:
  ContextPtr source_;
  ContextPtr target_;
  int epsilon_;
  Rational shift_;
  FiniteAutomorphism phi0_;
  std::optional<ExpCurveData> curve_;
};

/// outer o inner; TwistMismatch unless inner.target matches outer.source. Two
/// exp curves compose only when the transported generators are proportional.
StandardAutomorphism compose(const StandardAutomorphism& outer, const StandardAutomorphism& inner);
StandardAutomorphism inverse(const StandardAutomorphism& phi);
StandardAutomorphism power(const StandardAutomorphism& phi, std::uint32_t n);

/// Least n <= bound with phi^n = id (closed form on the composed data); nullopt means Unbounded.
std::optional<std::uint32_t> standard_order(const StandardAutomorphism& phi, std::uint32_t bound = kDefaultOrderBound);

using LoopMap = std::function<LoopElement(const LoopElement&)>;
/// Least n <= bound with map^n = id on the degree-n spanning set and its i-multiples (so antilinear maps are covered).
std::optional<std::uint32_t> bruteforce_order(const LoopMap& map, const ContextPtr& context, std::int64_t degree,
                                              std::uint32_t bound = kDefaultOrderBound);

/// u_k -> r^k u_k.
LoopElement tau_r_apply(const Rational& r, const LoopElement& u);

/// phi o tau_r.
struct ScaledStandard {
  StandardAutomorphism phi;
  Rational r;

  LoopElement apply(const LoopElement& u) const { return phi.apply(tau_r_apply(r, u)); }
};

/// First kind with r != 1: Unbounded (a monomial of degree k != 0 picks up r^k at every step).
/// Second kind, constant curve: tau_r phi = phi tau_{1/r}, so (phi tau_r)^2 = phi^2 and the
/// order is that of phi. Other cases fall back to bruteforce_order.
std::optional<std::uint32_t> standard_order(const ScaledStandard& phi, std::uint32_t bound = kDefaultOrderBound);

}  // namespace kmforge
