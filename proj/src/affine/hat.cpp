#include "kmforge/affine/hat.hpp"

#include "kmforge/error.hpp"

namespace kmforge {

AffineElement HatExtensionData::apply(const AffineElement& x) const {
  const bool anti = base.antilinear();
  const CyclotomicNumber xc = anti ? conj(x.c) : x.c;
  const CyclotomicNumber xd = anti ? conj(x.d) : x.d;
  const CyclotomicNumber eps(static_cast<long>(mu1));
  AffineElement out{base.apply(x.loop), eps * xc, eps * xd};
  if (!u_phi.is_zero()) {
    out.c -= eps * loop_inner(out.loop, u_phi);
    if (!xd.is_zero()) out.loop += xd * u_phi;
  }
  if (!xd.is_zero()) out.c += xd * nu;
  return out;
}

HatExtensionData extend_to_hat(const StandardAutomorphism& phi, const CyclotomicNumber& nu) {
  LoopElement u_phi(phi.target());
  if (phi.curve()) u_phi = LoopElement::constant(phi.target(), CyclotomicNumber(static_cast<long>(-phi.epsilon())) *
                                                                   phi.curve()->generator());
  return {phi.epsilon(), phi.epsilon(), std::move(u_phi), nu, phi};
}

HatExtensionData finite_order_extension(const StandardAutomorphism& phi, std::uint32_t bound) {
  if (!standard_order(phi, bound)) throw Error(ErrorCode::NotFiniteOrder, "standard automorphism has no finite order");
  HatExtensionData hat = extend_to_hat(phi);
  hat.nu = CyclotomicNumber(static_cast<long>(-phi.epsilon())) * loop_inner(hat.u_phi, hat.u_phi) *
           CyclotomicNumber(Rational(1, 2));
  return hat;
}

std::optional<std::uint32_t> hat_order(const HatExtensionData& hat, std::int64_t degree, std::uint32_t bound) {
  const auto& context = hat.base.source();
  if (!hat.base.is_endomorphism()) throw Error(ErrorCode::TwistMismatch, "hat order needs an endomorphism");
  std::vector<AffineElement> start;
  for (auto& u : spanning_set(context, degree)) start.push_back(AffineElement::from_loop(std::move(u)));
  start.push_back(AffineElement::central(context));
  start.push_back(AffineElement::derivation(context));
  auto current = start;
  for (std::uint32_t n = 1; n <= bound; ++n) {
    bool all = true;
    for (std::size_t j = 0; j < current.size(); ++j) {
      current[j] = hat.apply(current[j]);
      all = all && current[j] == start[j];
    }
    if (all) return n;
  }
  return std::nullopt;
}

}  // namespace kmforge
