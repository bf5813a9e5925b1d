#pragma once

// Named automorphisms, catalog representatives rho, and the component
// classifier for the built-in algebras of type A1 (sl2C) and A2 (sl3C).

#include <optional>
#include <string>
#include <vector>

#include "kmforge/lie/automorphism.hpp"

namespace kmforge {

/// sl2C: id, tau, mu, omega, w, rot3, rot4, rot6.  sl3C: id, inv, mu, omega, rot3.
/// omega is the antilinear conjugation A -> -conj(A)^t fixing the compact form.
FiniteAutomorphism named_automorphism(const AlgebraPtr& algebra, const std::string& name);
std::vector<std::string> automorphism_names(const AlgebraPtr& algebra);
/// Name of an automorphism equal to a, if any.
std::optional<std::string> name_of(const FiniteAutomorphism& a);

struct CatalogEntry {
  std::string id;
  FiniteAutomorphism rho;
  std::uint32_t order;
};

/// Linear catalog representatives, ordered by order then id. Throws ClassifierUnavailable.
const std::vector<CatalogEntry>& rho_catalog(const AlgebraPtr& algebra);
const CatalogEntry& catalog_entry(const AlgebraPtr& algebra, const std::string& id);

/// Label of the component of beta in (Aut g)^rho: A1 uses "id"/"tau", A2 "id"/"mu".
/// IncompatibleData when beta does not commute with rho.
std::string component_label(const FiniteAutomorphism& rho, const FiniteAutomorphism& beta);
/// All labels of pi0((Aut g)^rho), "id" first.
std::vector<std::string> component_labels(const FiniteAutomorphism& rho);
/// An element of (Aut g)^rho with the given label.
FiniteAutomorphism component_representative(const FiniteAutomorphism& rho, const std::string& label);

/// Whether alpha (commuting with a) lies in the identity component of (Aut g)^a.
bool in_identity_component(const FiniteAutomorphism& a, const FiniteAutomorphism& alpha);
/// One element per component of (Aut g)^a.
std::vector<FiniteAutomorphism> centralizer_components(const FiniteAutomorphism& a);

/// Some alpha with y = alpha x alpha^{-1}; nullopt when none is found.
std::optional<FiniteAutomorphism> conjugator(const FiniteAutomorphism& x, const FiniteAutomorphism& y);

/// Inner automorphisms of sl3C (or any algebra with a matrix realization): solves g B = a(B) g.
bool is_inner(const FiniteAutomorphism& a);

}  // namespace kmforge
