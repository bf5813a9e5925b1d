#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_L).
//
// An element is stored in the power basis 1, z, ..., z^{deg-1} reduced modulo
// the L-th cyclotomic polynomial, so two elements of the same level are equal
// iff their coordinate vectors are equal. Elements of different levels are
// combined in Q(zeta_lcm); levels whose lcm exceeds kMaxLevel are rejected.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace kmforge {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint32_t kMaxLevel = 1008;

std::uint32_t lcm_u32(std::uint32_t a, std::uint32_t b);

/// Per-level data shared by all elements of Q(zeta_L): the cyclotomic
/// polynomial and the reduced powers z^k for 0 <= k < L.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::uint32_t level);

  std::uint32_t level() const noexcept { return level_; }
  std::size_t degree() const noexcept { return degree_; }
  /// Coefficients of Phi_L, lowest degree first (monic).
  const std::vector<Integer>& minimal_polynomial() const noexcept { return phi_; }
  /// Reduced coordinates of z^k; k is taken mod L.
  const std::vector<Rational>& power(std::int64_t k) const;

  explicit CyclotomicField(std::uint32_t level);

 private:
  std::uint32_t level_;
  std::size_t degree_;
  std::vector<Integer> phi_;
  std::vector<std::vector<Rational>> powers_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(std::uint32_t n);

class CyclotomicNumber {
 public:
  /// Zero at level 1.
  CyclotomicNumber();
  CyclotomicNumber(long value);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(const Rational& value);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(std::uint32_t level, std::vector<Rational> coords);

  std::uint32_t level() const noexcept { return field_->level(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const CyclotomicField& field() const noexcept { return *field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// Precondition: is_rational().
  Rational to_rational() const;
  /// Fixed by complex conjugation.
  bool is_real() const;

  /// Embeds this element into Q(zeta_M); requires level() | M.
  CyclotomicNumber lifted(std::uint32_t target_level) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// Multiplication by a rational, no level change.
  CyclotomicNumber scaled(const Rational& r) const;

  std::string to_string() const;
  /// Floating point value, for diagnostics only.
  std::pair<double, double> approx() const;

 private:
  CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coords);
  friend CyclotomicNumber inverse(const CyclotomicNumber& a);
  friend CyclotomicNumber conj(const CyclotomicNumber& a);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coords_;
};

CyclotomicNumber inverse(const CyclotomicNumber& a);
/// The field automorphism z_L -> z_L^{-1}.
CyclotomicNumber conj(const CyclotomicNumber& a);
/// zeta_L^k.
CyclotomicNumber zeta_power(std::uint32_t level, std::int64_t k);
/// e^{2 pi i x} for rational x, represented at level lcm(den(x), base_level).
CyclotomicNumber root_of_unity(const Rational& x, std::uint32_t base_level = 1);
/// The imaginary unit, zeta_4.
CyclotomicNumber imag_unit();
CyclotomicNumber pow(const CyclotomicNumber& a, std::int64_t n);

/// A square root of a, if one of the form (rational) * zeta_M^j exists with
/// M = lcm(2 * level, 4). Partial: does not attempt general square roots.
bool try_sqrt(const CyclotomicNumber& a, CyclotomicNumber& out);

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& a);

}  // namespace kmforge
