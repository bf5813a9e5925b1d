#pragma once

// Twisted algebraic loops: finite sums of u_k e^{ikt/D} with sigma(u_k) = zeta_D^k u_k.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "kmforge/lie/automorphism.hpp"

namespace kmforge {

class TwistContext {
 public:
  /// sigma must be linear of finite order l with l | D. level = 0 picks
  /// lcm(4, D, level of sigma); a nonzero level must be a multiple of that.
  static std::shared_ptr<const TwistContext> make(const FiniteAutomorphism& sigma, std::uint32_t denominator = 0,
                                                  std::uint32_t level = 0);
  static std::shared_ptr<const TwistContext> untwisted(AlgebraPtr algebra, std::uint32_t denominator = 1,
                                                       std::uint32_t level = 0);

  const AlgebraPtr& algebra() const noexcept { return sigma_.algebra(); }
  const FiniteAutomorphism& sigma() const noexcept { return sigma_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t denominator() const noexcept { return denominator_; }
  std::uint32_t level() const noexcept { return level_; }

  /// zeta_D^k at the context level.
  CyclotomicNumber twist_eigenvalue(std::int64_t k) const;
  /// Basis of the zeta_D^k-eigenspace of sigma (cached per residue).
  const std::vector<AlgebraElement>& residue_basis(std::int64_t k) const;
  bool admits(std::int64_t k, const AlgebraElement& coefficient) const;

  TwistContext(FiniteAutomorphism sigma, std::uint32_t order, std::uint32_t denominator, std::uint32_t level);

 private:
  FiniteAutomorphism sigma_;
  std::uint32_t order_;
  std::uint32_t denominator_;
  std::uint32_t level_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint32_t, std::vector<AlgebraElement>> residue_cache_;
};

using ContextPtr = std::shared_ptr<const TwistContext>;

/// Same algebra, denominator and twist matrix.
bool same_context(const ContextPtr& a, const ContextPtr& b);
/// Throws ContextMismatch unless same_context.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

class LoopElement {
 public:
  LoopElement() = default;
  explicit LoopElement(ContextPtr context) : context_(std::move(context)) {}

  static LoopElement monomial(ContextPtr context, std::int64_t k, const AlgebraElement& x);
  static LoopElement constant(ContextPtr context, const AlgebraElement& x) { return monomial(std::move(context), 0, x); }

  const ContextPtr& context() const noexcept { return context_; }
  const std::map<std::int64_t, AlgebraElement>& terms() const noexcept { return terms_; }
  /// Coefficient of e^{ikt/D}, zero if absent.
  AlgebraElement coefficient(std::int64_t k) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// max |k|, or 0 for the zero loop.
  std::int64_t degree() const;

  /// Adds x e^{ikt/D}, dropping the term if it cancels.
  void add_term(std::int64_t k, const AlgebraElement& x);

  LoopElement operator-() const;
  LoopElement& operator+=(const LoopElement& rhs);
  LoopElement& operator-=(const LoopElement& rhs);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  friend LoopElement operator*(const CyclotomicNumber& s, const LoopElement& u);
  friend bool operator==(const LoopElement& a, const LoopElement& b);

  std::string to_string() const;

 private:
  ContextPtr context_;
  std::map<std::int64_t, AlgebraElement> terms_;
};

bool validate(const LoopElement& u);
LoopElement loop_bracket(const LoopElement& u, const LoopElement& v);
LoopElement loop_derivative(const LoopElement& u);
/// Sum_k kappa(u_k, v_{-k}): the L2 pairing divided by 2 pi.
CyclotomicNumber loop_inner(const LoopElement& u, const LoopElement& v);
/// (u', v).
CyclotomicNumber cocycle(const LoopElement& u, const LoopElement& v);

/// Monomials b e^{ikt/D} for |k| <= n and b in the residue bases; a basis of the degree-n slice.
std::vector<LoopElement> spanning_set(const ContextPtr& context, std::int64_t n);
/// Complex dimension of the degree-n slice.
std::size_t slice_dimension(const ContextPtr& context, std::int64_t n);

/// Valid loop with terms of degree <= max_degree and small random coefficients in Q(i).
LoopElement random_loop(const ContextPtr& context, std::mt19937_64& rng, std::int64_t max_degree);

}  // namespace kmforge
