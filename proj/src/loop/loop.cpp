#include "kmforge/loop/loop.hpp"

#include <numeric>
#include <sstream>

#include "kmforge/error.hpp"
#include "kmforge/numeric/levels.hpp"

namespace kmforge {

namespace {

std::uint32_t residue(std::int64_t k, std::uint32_t d) {
  const auto m = static_cast<std::int64_t>(d);
  return static_cast<std::uint32_t>(((k % m) + m) % m);
}

}  // namespace

TwistContext::TwistContext(FiniteAutomorphism sigma, std::uint32_t order, std::uint32_t denominator,
                           std::uint32_t level)
    : sigma_(std::move(sigma)), order_(order), denominator_(denominator), level_(level) {}

ContextPtr TwistContext::make(const FiniteAutomorphism& sigma, std::uint32_t denominator, std::uint32_t level) {
  if (sigma.antilinear()) throw Error(ErrorCode::InvalidInput, "twist must be linear");
  const std::uint32_t l = finite_order(sigma);
  const std::uint32_t d = denominator == 0 ? l : denominator;
  if (d % l != 0)
    throw Error(ErrorCode::InvalidInput,
                "exponent denominator " + std::to_string(d) + " is not a multiple of the twist order " + std::to_string(l));
  const std::uint32_t needed = std::lcm(std::lcm(4u, d), level_of(sigma.matrix()));
  if (level != 0 && level % needed != 0)
    throw Error(ErrorCode::LevelMismatch,
                "field level " + std::to_string(level) + " is not a multiple of " + std::to_string(needed));
  return std::make_shared<const TwistContext>(sigma.with_order(l), l, d, level == 0 ? needed : level);
}

ContextPtr TwistContext::untwisted(AlgebraPtr algebra, std::uint32_t denominator, std::uint32_t level) {
  return make(FiniteAutomorphism::identity(std::move(algebra)), denominator, level);
}

CyclotomicNumber TwistContext::twist_eigenvalue(std::int64_t k) const {
  return zeta_power(level_, static_cast<std::int64_t>(residue(k, denominator_)) * (level_ / denominator_));
}

const std::vector<AlgebraElement>& TwistContext::residue_basis(std::int64_t k) const {
  const std::uint32_t r = residue(k, denominator_);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = residue_cache_.find(r);
  if (it == residue_cache_.end()) it = residue_cache_.emplace(r, eigenvectors(sigma_, twist_eigenvalue(r))).first;
  return it->second;
}

bool TwistContext::admits(std::int64_t k, const AlgebraElement& coefficient) const {
  return sigma_.apply(coefficient) == twist_eigenvalue(k) * coefficient;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->algebra() == b->algebra() && a->denominator() == b->denominator() && a->sigma() == b->sigma();
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw Error(ErrorCode::ContextMismatch, "loops live in different twisted loop algebras");
}

LoopElement LoopElement::monomial(ContextPtr context, std::int64_t k, const AlgebraElement& x) {
  require_same_algebra(context->algebra(), x.algebra());
  LoopElement u(std::move(context));
  u.add_term(k, x);
  return u;
}

AlgebraElement LoopElement::coefficient(std::int64_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? AlgebraElement::zero(context_->algebra()) : it->second;
}

std::int64_t LoopElement::degree() const {
  if (terms_.empty()) return 0;
  return std::max(-terms_.begin()->first, terms_.rbegin()->first);
}

void LoopElement::add_term(std::int64_t k, const AlgebraElement& x) {
  if (x.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) terms_.erase(it);
}

LoopElement LoopElement::operator-() const {
  LoopElement out(context_);
  for (const auto& [k, x] : terms_) out.terms_.emplace(k, -x);
  return out;
}

LoopElement& LoopElement::operator+=(const LoopElement& rhs) {
  if (!context_) context_ = rhs.context_;
  if (rhs.is_zero()) return *this;
  require_same_context(context_, rhs.context_);
  for (const auto& [k, x] : rhs.terms_) add_term(k, x);
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& rhs) { return *this += -rhs; }

LoopElement operator*(const CyclotomicNumber& s, const LoopElement& u) {
  LoopElement out(u.context_);
  if (s.is_zero()) return out;
  for (const auto& [k, x] : u.terms_) out.add_term(k, s * x);
  return out;
}

bool operator==(const LoopElement& a, const LoopElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [k, x] : a.terms_) {
    if (it->first != k || !(it->second == x)) return false;
    ++it;
  }
  return true;
}

std::string LoopElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, x] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << x.to_string() << "]";
    if (k != 0) os << "*e^{i*" << k << "t/" << context_->denominator() << "}";
  }
  return os.str();
}

bool validate(const LoopElement& u) {
  for (const auto& [k, x] : u.terms())
    if (!u.context()->admits(k, x)) return false;
  return true;
}

LoopElement loop_bracket(const LoopElement& u, const LoopElement& v) {
  require_same_context(u.context(), v.context());
  LoopElement out(u.context());
  for (const auto& [k1, x] : u.terms())
    for (const auto& [k2, y] : v.terms()) out.add_term(k1 + k2, bracket(x, y));
  return out;
}

LoopElement loop_derivative(const LoopElement& u) {
  const CyclotomicNumber i = imag_unit();
  const Rational inv_d(1, u.context()->denominator());
  LoopElement out(u.context());
  for (const auto& [k, x] : u.terms()) {
    if (k == 0) continue;
    out.add_term(k, (i.scaled(inv_d * k)) * x);
  }
  return out;
}

CyclotomicNumber loop_inner(const LoopElement& u, const LoopElement& v) {
  require_same_context(u.context(), v.context());
  CyclotomicNumber sum;
  for (const auto& [k, x] : u.terms()) {
    auto it = v.terms().find(-k);
    if (it != v.terms().end()) sum += killing_form(x, it->second);
  }
  return sum;
}

CyclotomicNumber cocycle(const LoopElement& u, const LoopElement& v) { return loop_inner(loop_derivative(u), v); }

std::vector<LoopElement> spanning_set(const ContextPtr& context, std::int64_t n) {
  std::vector<LoopElement> out;
  for (std::int64_t k = -n; k <= n; ++k)
    for (const auto& b : context->residue_basis(k)) out.push_back(LoopElement::monomial(context, k, b));
  return out;
}

std::size_t slice_dimension(const ContextPtr& context, std::int64_t n) {
  std::size_t dim = 0;
  for (std::int64_t k = -n; k <= n; ++k) dim += context->residue_basis(k).size();
  return dim;
}

LoopElement random_loop(const ContextPtr& context, std::mt19937_64& rng, std::int64_t max_degree) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution keep(0.6);
  const CyclotomicNumber i = imag_unit();
  LoopElement u(context);
  for (std::int64_t k = -max_degree; k <= max_degree; ++k) {
    if (!keep(rng)) continue;
    for (const auto& b : context->residue_basis(k)) {
      Rational re(coef(rng), 1), im(coef(rng), den(rng));
      im.canonicalize();
      u.add_term(k, (CyclotomicNumber(re) + i.scaled(im)) * b);
    }
  }
  return u;
}

}  // namespace kmforge
