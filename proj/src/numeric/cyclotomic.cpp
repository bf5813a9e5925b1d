#include "kmforge/numeric/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kmforge/error.hpp"

namespace kmforge {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorCode::IncompatibleDenominator: return "IncompatibleDenominator";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::TwistMismatch: return "TwistMismatch";
    case ErrorCode::NotFirstKind: return "NotFirstKind";
    case ErrorCode::NotSecondKind: return "NotSecondKind";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::CatalogMiss: return "CatalogMiss";
    case ErrorCode::IncompatibleData: return "IncompatibleData";
    case ErrorCode::SquareMismatch: return "SquareMismatch";
    case ErrorCode::ClassifierUnavailable: return "ClassifierUnavailable";
    case ErrorCode::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

std::uint32_t lcm_u32(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of integer polynomials; the divisor is monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer lead = num[i];
    if (lead == 0) continue;
    quot[i - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  return quot;
}

// Quotient and remainder over Q.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 1, Rational(0));
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational coef = r.back() / lead;
    q[shift] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= coef * b[j];
    r.pop_back();
    trim(r);
  }
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::int64_t mod_level(std::int64_t k, std::uint32_t level) {
  const auto l = static_cast<std::int64_t>(level);
  return ((k % l) + l) % l;
}

std::uint32_t common_level(std::uint32_t a, std::uint32_t b) {
  if (a == b) return a;
  const std::uint64_t l = std::lcm(std::uint64_t{a}, std::uint64_t{b});
  if (l > kMaxLevel)
    throw Error(ErrorCode::LevelMismatch, "levels " + std::to_string(a) + " and " + std::to_string(b) +
                                              " need a common field above level " + std::to_string(kMaxLevel));
  return static_cast<std::uint32_t>(l);
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  std::lock_guard lock(mutex);
  cache.emplace(n, poly);
  return poly;
}

CyclotomicField::CyclotomicField(std::uint32_t level) : level_(level) {
  if (level == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic level must be positive");
  phi_ = cyclotomic_polynomial(level);
  degree_ = phi_.size() - 1;
  powers_.reserve(level);
  std::vector<Rational> cur(degree_, Rational(0));
  cur[0] = 1;
  for (std::uint32_t k = 0; k < level; ++k) {
    powers_.push_back(cur);
    // multiply by z and reduce with the monic Phi_L
    std::vector<Rational> next(degree_ + 1, Rational(0));
    for (std::size_t j = 0; j < degree_; ++j) next[j + 1] = cur[j];
    const Rational top = next[degree_];
    if (top != 0) {
      for (std::size_t j = 0; j < degree_; ++j) next[j] -= top * Rational(phi_[j]);
    }
    next.pop_back();
    cur = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint32_t level) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[level];
  if (!slot) slot = std::make_shared<const CyclotomicField>(level);
  return slot;
}

const std::vector<Rational>& CyclotomicField::power(std::int64_t k) const {
  return powers_[static_cast<std::size_t>(mod_level(k, level_))];
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(long value) : CyclotomicNumber(Rational(value)) {}

CyclotomicNumber::CyclotomicNumber(const Rational& value)
    : field_(CyclotomicField::get(1)), coords_{value} {
  coords_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(std::uint32_t level, std::vector<Rational> coords)
    : field_(CyclotomicField::get(level)) {
  const std::size_t deg = field_->degree();
  coords_.assign(deg, Rational(0));
  // accept any length: reduce higher powers with the power table
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] == 0) continue;
    coords[j].canonicalize();
    if (j < deg) {
      coords_[j] += coords[j];
    } else {
      const auto& p = field_->power(static_cast<std::int64_t>(j));
      for (std::size_t i = 0; i < deg; ++i) coords_[i] += coords[j] * p[i];
    }
  }
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field,
                                   std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

bool CyclotomicNumber::is_zero() const noexcept {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const noexcept {
  for (std::size_t j = 1; j < coords_.size(); ++j)
    if (coords_[j] != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const noexcept { return is_rational() && coords_[0] == 1; }

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidInput, "value is not rational: " + to_string());
  return coords_[0];
}

bool CyclotomicNumber::is_real() const { return conj(*this) == *this; }

CyclotomicNumber CyclotomicNumber::lifted(std::uint32_t target_level) const {
  const std::uint32_t l = level();
  if (target_level == l) return *this;
  if (target_level % l != 0)
    throw Error(ErrorCode::LevelMismatch,
                "cannot lift level " + std::to_string(l) + " to " + std::to_string(target_level));
  auto target = CyclotomicField::get(target_level);
  const std::int64_t step = target_level / l;
  std::vector<Rational> out(target->degree(), Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    const auto& p = target->power(static_cast<std::int64_t>(j) * step);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (p[i] != 0) out[i] += coords_[j] * p[i];
  }
  return CyclotomicNumber(std::move(target), std::move(out));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  const std::uint32_t l = common_level(level(), rhs.level());
  if (l != level()) *this = lifted(l);
  if (l != rhs.level()) return *this += rhs.lifted(l);
  for (std::size_t j = 0; j < coords_.size(); ++j)
    if (rhs.coords_[j] != 0) coords_[j] += rhs.coords_[j];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  const std::uint32_t l = common_level(level(), rhs.level());
  if (l != level()) *this = lifted(l);
  if (l != rhs.level()) return *this -= rhs.lifted(l);
  for (std::size_t j = 0; j < coords_.size(); ++j)
    if (rhs.coords_[j] != 0) coords_[j] -= rhs.coords_[j];
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.is_rational()) {
    const std::uint32_t l = common_level(a.level(), b.level());
    CyclotomicNumber out = b.level() == l ? b : b.lifted(l);
    const Rational r = a.coords_[0];
    if (r == 0) return CyclotomicNumber(out.field_, std::vector<Rational>(out.coords_.size(), Rational(0)));
    if (r != 1)
      for (auto& c : out.coords_) c *= r;
    return out;
  }
  if (b.is_rational()) return b * a;
  const std::uint32_t l = common_level(a.level(), b.level());
  if (a.level() != l) return a.lifted(l) * b;
  if (b.level() != l) return a * b.lifted(l);
  const std::size_t deg = a.coords_.size();
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coords_[j] == 0) continue;
      prod[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(deg));
  for (std::size_t j = deg; j < prod.size(); ++j) {
    if (prod[j] == 0) continue;
    const auto& p = a.field_->power(static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < deg; ++i)
      if (p[i] != 0) out[i] += prod[j] * p[i];
  }
  return CyclotomicNumber(a.field_, std::move(out));
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  *this = *this * rhs;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
  *this = *this * inverse(rhs);
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.level() == b.level()) return a.coords_ == b.coords_;
  if (a.is_rational() && b.is_rational()) return a.coords_[0] == b.coords_[0];
  const std::uint32_t l = std::lcm(a.level(), b.level());
  return a.lifted(l).coords_ == b.lifted(l).coords_;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& r) const {
  Rational rc = r;
  rc.canonicalize();
  CyclotomicNumber out = *this;
  for (auto& c : out.coords_) c *= rc;
  return out;
}

CyclotomicNumber inverse(const CyclotomicNumber& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (a.is_rational()) {
    CyclotomicNumber out = a;
    out.coords_[0] = 1 / a.coords_[0];
    return out;
  }
  // extended Euclid: s * a + t * Phi = gcd (a constant since Phi is irreducible)
  const auto& phi_int = a.field_->minimal_polynomial();
  RatPoly r0(phi_int.begin(), phi_int.end());
  RatPoly r1 = a.coords_;
  trim(r1);
  RatPoly s0{Rational(0)}, s1{Rational(1)};
  while (!r1.empty()) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error(ErrorCode::DivisionByZero, "element not invertible");
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return CyclotomicNumber(a.level(), s0);
}

CyclotomicNumber conj(const CyclotomicNumber& a) {
  if (a.is_rational()) return a;
  const auto& f = *a.field_;
  std::vector<Rational> out(a.coords_.size(), Rational(0));
  for (std::size_t j = 0; j < a.coords_.size(); ++j) {
    if (a.coords_[j] == 0) continue;
    const auto& p = f.power(-static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < out.size(); ++i)
      if (p[i] != 0) out[i] += a.coords_[j] * p[i];
  }
  return CyclotomicNumber(a.field_, std::move(out));
}

CyclotomicNumber zeta_power(std::uint32_t level, std::int64_t k) {
  if (level == 0) throw Error(ErrorCode::InvalidInput, "level must be positive");
  auto field = CyclotomicField::get(level);
  return CyclotomicNumber(level, field->power(k));
}

CyclotomicNumber root_of_unity(const Rational& x, std::uint32_t base_level) {
  Rational y = x;
  y.canonicalize();
  if (!y.get_den().fits_ulong_p()) throw Error(ErrorCode::LevelMismatch, "denominator too large");
  const auto den = static_cast<std::uint32_t>(y.get_den().get_ui());
  const std::uint32_t level = std::lcm(den, base_level);
  Integer num = y.get_num() * (level / den);
  Integer red = num % level;
  if (red < 0) red += level;
  return zeta_power(level, red.get_si());
}

CyclotomicNumber imag_unit() { return zeta_power(4, 1); }

CyclotomicNumber pow(const CyclotomicNumber& a, std::int64_t n) {
  if (n < 0) return pow(inverse(a), -n);
  CyclotomicNumber result(1L), base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

namespace {

bool rational_sqrt(const Rational& r, Rational& out) {
  if (r < 0) return false;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

}  // namespace

bool try_sqrt(const CyclotomicNumber& a, CyclotomicNumber& out) {
  if (a.is_zero()) {
    out = a;
    return true;
  }
  const std::uint32_t m = std::lcm(2 * a.level(), 4u);
  const CyclotomicNumber lifted = a.lifted(m);
  for (std::uint32_t j = 0; j < m; ++j) {
    const CyclotomicNumber b = lifted * zeta_power(m, -2 * static_cast<std::int64_t>(j));
    if (!b.is_rational()) continue;
    Rational s;
    if (rational_sqrt(b.to_rational(), s)) {
      out = zeta_power(m, j) * CyclotomicNumber(s);
      return true;
    }
  }
  return false;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    if (!first) os << (coords_[j] > 0 ? " + " : " - ");
    else if (coords_[j] < 0) os << "-";
    first = false;
    const Rational mag = abs(coords_[j]);
    if (j == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << level();
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::pair<double, double> CyclotomicNumber::approx() const {
  double re = 0, im = 0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    const double c = coords_[j].get_d();
    const double angle = 2 * std::numbers::pi * static_cast<double>(j) / level();
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& a) { return os << a.to_string(); }

}  // namespace kmforge
