#pragma once

// Quasiconjugacy invariants (p, rho, [beta]) of first-kind and [phi+, phi-] of
// second-kind finite-order automorphisms, and representatives realizing them.

#include <string>

#include "kmforge/autom/catalog.hpp"
#include "kmforge/autom/standard.hpp"

namespace kmforge {

struct FirstKindInvariant {
  std::uint32_t q = 1;
  std::int64_t p = 0;
  std::string rho_id;
  FiniteAutomorphism rho;
  std::string beta_class;
};

struct SecondKindInvariant {
  FiniteAutomorphism phi_plus;
  FiniteAutomorphism phi_minus;
};

struct Realization {
  FiniteAutomorphism sigma;
  StandardAutomorphism phi;
};

/// Needs a constant-curve first-kind phi of order q on a single twisted loop algebra.
/// Errors: NotFirstKind, OrderMismatch, CatalogMiss.
FirstKindInvariant extract_invariant_first(const StandardAutomorphism& phi, std::uint32_t q);
/// sigma = rho^l beta^{q'}, phi0 = rho^m beta^{-p'}, phi u(t) = phi0(u(t + 2 pi p/q)).
/// Errors: InvalidInput for p out of [0, q) or a rho order not dividing gcd(p, q); IncompatibleData.
Realization realize_first(std::int64_t p, const FiniteAutomorphism& rho, const FiniteAutomorphism& beta,
                          std::uint32_t q);
/// Convenience: rho from the catalog, beta a representative of the labelled component.
Realization realize_first(std::int64_t p, const std::string& rho_id, const std::string& beta_class,
                          std::uint32_t q, const AlgebraPtr& algebra);

/// Errors: NotSecondKind, OrderMismatch.
SecondKindInvariant extract_invariant_second(const StandardAutomorphism& phi, std::uint32_t q);
/// phi u(t) = phi+ u(-t) on L(g, phi-^{-1} phi+). Errors: SquareMismatch.
Realization realize_second(const FiniteAutomorphism& phi_plus, const FiniteAutomorphism& phi_minus);

bool invariants_equal_first(const FirstKindInvariant& a, const FirstKindInvariant& b);
/// Decides equality under the swap and component-wise conjugation moves.
/// Throws ClassifierUnavailable when the classifier cannot decide.
bool invariants_equal_second(const SecondKindInvariant& a, const SecondKindInvariant& b);

std::string to_string(const FirstKindInvariant& inv);
std::string to_string(const SecondKindInvariant& inv);

}  // namespace kmforge
