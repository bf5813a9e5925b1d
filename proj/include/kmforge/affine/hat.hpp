#pragma once

// Extension of a standard automorphism to the affine algebra:
//   c -> eps c,  d -> eps d + u_phi + nu c,  u -> phi(u) + alpha(u) c,
// with alpha(u) = -eps (phi u, u_phi) and u_phi = -eps X for phi_t = exp(ad tX) phi_0.

#include <optional>

#include "kmforge/affine/affine.hpp"
#include "kmforge/autom/standard.hpp"

namespace kmforge {

struct HatExtensionData {
  int mu1;
  int mu2;
  LoopElement u_phi;
  CyclotomicNumber nu;
  StandardAutomorphism base;

  AffineElement apply(const AffineElement& x) const;
};

HatExtensionData extend_to_hat(const StandardAutomorphism& phi, const CyclotomicNumber& nu = {});
/// nu = -eps (u_phi, u_phi) / 2; throws NotFiniteOrder when phi has no finite order.
HatExtensionData finite_order_extension(const StandardAutomorphism& phi, std::uint32_t bound = kDefaultOrderBound);

/// Least n <= bound with hat^n = id on the degree-n spanning set plus c and d.
std::optional<std::uint32_t> hat_order(const HatExtensionData& hat, std::int64_t degree,
                                       std::uint32_t bound = kDefaultOrderBound);

}  // namespace kmforge
