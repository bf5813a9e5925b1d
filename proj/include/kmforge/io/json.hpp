#pragma once

// JSON encodings. Integers inside numbers are decimal strings; small counters
// (levels, exponents, orders) are plain JSON integers.

#include <json.hpp>

#include "kmforge/affine/affine.hpp"
#include "kmforge/classify/realforms.hpp"

namespace kmforge::io {

using nlohmann::json;

/// {"level": L, "coords": [["num","den"], ...]}
json to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const json& j);

/// "p/q" or "n".
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"algebra": name, "coords": [...]}
json to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const json& j, const AlgebraPtr& algebra);

/// {"algebra", "matrix": row-major rows, "antilinear"} plus "catalog" when the map has a name.
/// Reading accepts {"algebra", "catalog": name} alone.
json to_json(const FiniteAutomorphism& a);
FiniteAutomorphism automorphism_from_json(const json& j, const AlgebraPtr& fallback = nullptr);

json to_json(const LieAlgebraTable& table);

/// {"algebra", "sigma", "D", "level"}; level_override > 0 replaces the stored level.
json to_json(const ContextPtr& ctx);
ContextPtr context_from_json(const json& j, std::uint32_t level_override = 0);

/// {"context": ..., "terms": [{"k": int, "coeff": element}]}
json to_json(const LoopElement& u);
LoopElement loop_from_json(const json& j, std::uint32_t level_override = 0);

/// {"loop", "c", "d"}
json to_json(const AffineElement& x);
AffineElement affine_from_json(const json& j, std::uint32_t level_override = 0);

/// {"source", "target", "epsilon", "shift", "phi0", "curve": {"generator"}?}
json to_json(const StandardAutomorphism& phi);
StandardAutomorphism standard_from_json(const json& j, std::uint32_t level_override = 0);

/// {"kind": "first", "q", "p", "rho", "beta"} or {"kind": "second", "phi_plus", "phi_minus"};
/// catalog identifiers instead of matrices wherever a name exists.
json to_json(const Invariant& inv);
Invariant invariant_from_json(const json& j, const AlgebraPtr& algebra);

json to_json(const InvolutionDescriptor& d);
json to_json(const RealFormDescriptor& d);
json to_json(const CheckReport& r, std::size_t max_witnesses = 10);

/// {"error": {"code", "message"}}
json error_body(const std::string& code, const std::string& message);

}  // namespace kmforge::io
