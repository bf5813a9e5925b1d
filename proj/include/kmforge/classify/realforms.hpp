#pragma once

// Involutions and real forms of the twisted loop algebras of a built-in g,
// truncated fixed-point bases, and Cartan decompositions.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kmforge/affine/affine.hpp"
#include "kmforge/autom/invariants.hpp"

namespace kmforge {

enum class FormKind { Compact, OneA, OneB, Two };
std::string kind_name(FormKind kind);
/// Accepts "compact", "1a", "1b", "2"; throws InvalidInput.
FormKind parse_kind(const std::string& name);

using Invariant = std::variant<FirstKindInvariant, SecondKindInvariant>;
std::string to_string(const Invariant& inv);
/// Same kind and equal under invariants_equal_first / invariants_equal_second.
bool invariants_equal(const Invariant& a, const Invariant& b);

struct InvolutionDescriptor {
  FormKind kind;
  /// 1a: (rho, beta); 1b: phi; 2: (rho+, rho-). Unused slots hold the identity.
  FiniteAutomorphism rho;
  FiniteAutomorphism beta;
  FiniteAutomorphism phi;
  FiniteAutomorphism rho_plus;
  FiniteAutomorphism rho_minus;
  FiniteAutomorphism twist;
  /// The linear involution on L(g, twist).
  StandardAutomorphism psi;
  Invariant invariant;
  std::string label;
};

struct RealFormDescriptor {
  FormKind kind;
  std::string label;
  /// Antilinear involution omega~ o psi (omega~ for the compact form); its fixed set is the form.
  StandardAutomorphism theta;
  /// psi for noncompact forms.
  std::optional<InvolutionDescriptor> involution;
  Invariant invariant;
  /// "Rc+Rd" or "R(ic)+R(id)".
  std::string hat_adjoin;

  const ContextPtr& context() const { return theta.source(); }
};

/// Lists for sl2C and sl3C; UnknownAlgebra / ClassifierUnavailable otherwise.
std::vector<InvolutionDescriptor> enumerate_involutions(const AlgebraPtr& algebra, FormKind kind);
std::vector<RealFormDescriptor> enumerate_real_forms(const AlgebraPtr& algebra);
RealFormDescriptor compact_real_form(const AlgebraPtr& algebra);
RealFormDescriptor real_form_of(const InvolutionDescriptor& involution);

/// Real basis of the degree-n slice of the form, built from the per-exponent coefficient conditions.
std::vector<LoopElement> fixed_point_basis(const RealFormDescriptor& desc, std::int64_t n);
/// Same span, built independently by averaging over the antilinear involution.
std::vector<LoopElement> fixed_point_basis_by_averaging(const StandardAutomorphism& theta, std::int64_t n);

/// Coordinates of the degree-n slice, exponents -n..n in order.
Vector slice_coordinates(const LoopElement& u, std::int64_t n);

/// Real-span membership against a fixed C-independent family in the degree-n slice.
class RealSpan {
 public:
  RealSpan(std::vector<LoopElement> basis, std::int64_t n);
  bool contains(const LoopElement& u) const;
  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<LoopElement>& basis() const noexcept { return basis_; }

 private:
  std::vector<LoopElement> basis_;
  std::int64_t degree_;
  Matrix reduced_;
  std::vector<std::size_t> pivots_;
  std::size_t rows_;
};

/// Twist validation, theta-fixedness, H cap iH = 0 and H + iH = slice (dimension count),
/// bracket closure into the degree-2n form, and agreement with the averaging construction.
CheckReport verify_real_form(const RealFormDescriptor& desc, std::int64_t n);

struct CartanDecomposition {
  std::vector<LoopElement> k_basis;
  std::vector<LoopElement> m_basis;
  /// Compact conjugation omega~, restricted to the form it is the Cartan involution.
  StandardAutomorphism cartan_involution;
};

/// NotApplicable for the compact form.
CartanDecomposition cartan_decomposition(const RealFormDescriptor& desc, std::int64_t n);
/// [k,k] in k, [k,m] in m, [m,m] in k, dim k + dim m = dim H, and k + im inside the compact form.
CheckReport verify_cartan(const RealFormDescriptor& desc, std::int64_t n);

/// The adjoined span tag.
std::string hat_real_form(const RealFormDescriptor& desc);
/// Affine brackets of the truncated basis plus the adjoined c', d' stay in the extended form.
CheckReport verify_hat_real_form(const RealFormDescriptor& desc, std::int64_t n);

/// Order of (h g- h^{-1})^{-1} g+; nullopt means Unbounded. SquareMismatch unless g+^2 = g-^2.
std::optional<std::uint32_t> finite_order_product_check(const FiniteAutomorphism& g_plus,
                                                        const FiniteAutomorphism& g_minus,
                                                        const FiniteAutomorphism& h,
                                                        std::uint32_t bound = kDefaultOrderBound);

}  // namespace kmforge
