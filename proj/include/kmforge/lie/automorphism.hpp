#pragma once

// Linear and antilinear automorphisms of a finite-dimensional Lie algebra,
// and the one-parameter groups exp(ad tX) built from exact eigen-data.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kmforge/lie/algebra.hpp"

namespace kmforge {

inline constexpr std::uint32_t kDefaultOrderBound = 48;

/// x -> M x, or x -> M conj(x) when antilinear.
class FiniteAutomorphism {
 public:
  FiniteAutomorphism() = default;
  FiniteAutomorphism(AlgebraPtr algebra, Matrix matrix, bool antilinear = false,
                     std::optional<std::uint32_t> declared_order = std::nullopt);

  static FiniteAutomorphism identity(AlgebraPtr algebra);
  /// Builds the (anti)linear map induced by a map on the matrix realization.
  static FiniteAutomorphism from_matrix_map(AlgebraPtr algebra, const std::function<Matrix(const Matrix&)>& map,
                                            bool antilinear = false);
  /// Ad(g) x = g x g^{-1}.
  static FiniteAutomorphism adjoint(AlgebraPtr algebra, const Matrix& g);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  bool antilinear() const noexcept { return antilinear_; }
  std::optional<std::uint32_t> declared_order() const noexcept { return declared_order_; }
  FiniteAutomorphism with_order(std::optional<std::uint32_t> order) const;

  Vector apply(const Vector& coords) const;
  AlgebraElement apply(const AlgebraElement& x) const;
  bool is_identity() const { return !antilinear_ && matrix_.is_identity(); }

  friend bool operator==(const FiniteAutomorphism& a, const FiniteAutomorphism& b) {
    return a.antilinear_ == b.antilinear_ && a.matrix_ == b.matrix_;
  }

 private:
  AlgebraPtr algebra_;
  Matrix matrix_;
  bool antilinear_ = false;
  std::optional<std::uint32_t> declared_order_;
};

/// outer o inner.
FiniteAutomorphism compose(const FiniteAutomorphism& outer, const FiniteAutomorphism& inner);
FiniteAutomorphism inverse(const FiniteAutomorphism& a);
FiniteAutomorphism power(const FiniteAutomorphism& a, std::int64_t n);
bool commute(const FiniteAutomorphism& a, const FiniteAutomorphism& b);

/// Invertible and bracket-preserving on all basis pairs.
bool check_automorphism(const FiniteAutomorphism& a);
/// Least n <= bound with a^n = id; nullopt means Unbounded.
std::optional<std::uint32_t> automorphism_order(const FiniteAutomorphism& a,
                                                std::uint32_t bound = kDefaultOrderBound);
/// Declared order if present, else computed; throws NotFiniteOrder.
std::uint32_t finite_order(const FiniteAutomorphism& a, std::uint32_t bound = kDefaultOrderBound);

struct Eigenspace {
  std::uint32_t exponent;  // eigenvalue = zeta_n^exponent
  CyclotomicNumber eigenvalue;
  std::vector<AlgebraElement> basis;
};

/// g = sum of eigenspaces of a linear finite-order automorphism, ordered by exponent.
std::vector<Eigenspace> eigenspace_decomposition(const FiniteAutomorphism& a);
/// Basis of {x : a x = lambda x} for a linear a.
std::vector<AlgebraElement> eigenvectors(const FiniteAutomorphism& a, const CyclotomicNumber& lambda);

struct FixedSubalgebra {
  std::vector<AlgebraElement> basis;
  /// true when the basis spans over R (antilinear case); the real dimension is basis.size().
  bool real_span = false;
};

FixedSubalgebra fixed_subalgebra(const FiniteAutomorphism& a);
/// Real basis of the fixed set of an antilinear finite-order map restricted to a
/// complex subspace spanned by `span` (which it must preserve).
std::vector<Vector> antilinear_fixed_basis(const FiniteAutomorphism& a, const std::vector<Vector>& span);
/// Every bracket of basis members lies in the span, with real coefficients when real_span.
bool bracket_closed(const FixedSubalgebra& sub);

/// Solves x = sum c_j basis_j; nullopt if x is not in the complex span.
std::optional<Vector> span_coefficients(const std::vector<Vector>& basis, const Vector& x);
/// In the real span: complex coefficients exist and are all self-conjugate.
bool in_real_span(const std::vector<Vector>& basis, const Vector& x);

/// Eigen-data for exp(ad tX): ad X acts on each listed subspace as i*q.
struct Eigenpair {
  Rational q;
  std::vector<AlgebraElement> basis;
};

class ExpCurveData {
 public:
  ExpCurveData(AlgebraElement generator, std::vector<Eigenpair> eigenpairs);

  const AlgebraElement& generator() const noexcept { return generator_; }
  const std::vector<Eigenpair>& eigenpairs() const noexcept { return eigenpairs_; }
  /// Splits coordinates into components per eigenpair (same order as eigenpairs()).
  std::vector<Vector> decompose(const Vector& coords) const;
  /// lcm of the denominators of all q.
  std::uint32_t denominator() const;
  bool is_zero() const;

 private:
  AlgebraElement generator_;
  std::vector<Eigenpair> eigenpairs_;
  Matrix basis_inverse_;
  std::vector<std::size_t> offsets_;
};

/// Eigen-data by exact kernel computation of ad X - i q for the candidate q's;
/// throws InvalidInput when the candidate eigenspaces do not span g.
ExpCurveData make_exp_curve(const AlgebraElement& generator, const std::vector<Rational>& candidates);
/// Candidates a/b with b <= max_den and |a/b| <= max_abs.
ExpCurveData make_exp_curve(const AlgebraElement& generator, std::uint32_t max_den = 4, std::int64_t max_abs = 4);
/// Curve for lambda * X.
ExpCurveData scaled(const ExpCurveData& curve, const Rational& lambda);
/// Curve for phi(X); eigenvalues flip sign when phi is antilinear.
ExpCurveData transported(const ExpCurveData& curve, const FiniteAutomorphism& phi);

/// exp(ad tX) at t = 2 pi * turns. When level is nonzero, every eigenvalue
/// root of unity must live in Q(zeta_level), else IncompatibleDenominator.
FiniteAutomorphism exp_ad(const ExpCurveData& curve, const Rational& turns, std::uint32_t level = 0);

}  // namespace kmforge
