#include "kmforge/affine/affine.hpp"

#include "kmforge/error.hpp"

namespace kmforge {

AffineElement& AffineElement::operator+=(const AffineElement& rhs) {
  loop += rhs.loop;
  c += rhs.c;
  d += rhs.d;
  return *this;
}

AffineElement& AffineElement::operator-=(const AffineElement& rhs) {
  loop -= rhs.loop;
  c -= rhs.c;
  d -= rhs.d;
  return *this;
}

AffineElement operator*(const CyclotomicNumber& s, const AffineElement& x) { return {s * x.loop, s * x.c, s * x.d}; }

bool operator==(const AffineElement& a, const AffineElement& b) {
  return a.loop == b.loop && a.c == b.c && a.d == b.d;
}

std::string AffineElement::to_string() const {
  return loop.to_string() + " + (" + c.to_string() + ")c + (" + d.to_string() + ")d";
}

AffineElement affine_bracket(const AffineElement& x, const AffineElement& y) {
  require_same_context(x.loop.context(), y.loop.context());
  AffineElement out{loop_bracket(x.loop, y.loop), cocycle(x.loop, y.loop), {}};
  if (!x.d.is_zero()) out.loop += x.d * loop_derivative(y.loop);
  if (!y.d.is_zero()) out.loop -= y.d * loop_derivative(x.loop);
  return out;
}

void CheckReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  pass = false;
  if (witnesses.size() < 20) witnesses.push_back(what);
}

void CheckReport::merge(const CheckReport& other) {
  pass = pass && other.pass;
  checks += other.checks;
  for (const auto& w : other.witnesses)
    if (witnesses.size() < 20) witnesses.push_back(w);
}

CheckReport center_and_derived_check(const ContextPtr& context, std::int64_t n) {
  CheckReport report;
  std::vector<AffineElement> span;
  for (auto& u : spanning_set(context, n)) span.push_back(AffineElement::from_loop(std::move(u)));
  span.push_back(AffineElement::central(context));
  span.push_back(AffineElement::derivation(context));
  const auto c = AffineElement::central(context);
  std::vector<Vector> derived_loop_parts;
  for (std::size_t a = 0; a < span.size(); ++a) {
    report.expect(affine_bracket(c, span[a]).is_zero(), "[c, x] != 0 for x = " + span[a].to_string());
    for (std::size_t b = a + 1; b < span.size(); ++b) {
      const auto z = affine_bracket(span[a], span[b]);
      report.expect(z.d.is_zero(), "d-component in [" + span[a].to_string() + ", " + span[b].to_string() + "]");
    }
  }
  const auto d = AffineElement::derivation(context);
  for (std::size_t a = 0; a + 2 < span.size(); ++a) {
    const auto& u = span[a].loop;
    const auto k = u.terms().begin()->first;
    if (k != 0) report.expect(!affine_bracket(d, span[a]).is_zero(), "[d, u] = 0 for " + u.to_string());
  }
  return report;
}

AffineElement random_affine(const ContextPtr& context, std::mt19937_64& rng, std::int64_t max_degree) {
  std::uniform_int_distribution<int> coef(-4, 4);
  const CyclotomicNumber i = imag_unit();
  AffineElement x{random_loop(context, rng, max_degree), {}, {}};
  x.c = CyclotomicNumber(static_cast<long>(coef(rng))) + CyclotomicNumber(static_cast<long>(coef(rng))) * i;
  x.d = CyclotomicNumber(static_cast<long>(coef(rng)));
  return x;
}

}  // namespace kmforge
