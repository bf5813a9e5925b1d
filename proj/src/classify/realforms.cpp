#include "kmforge/classify/realforms.hpp"

#include "kmforge/error.hpp"

namespace kmforge {

namespace {


FiniteAutomorphism omega_of(const AlgebraPtr& g) { return named_automorphism(g, "omega"); }

std::vector<Vector> coords_of(const std::vector<AlgebraElement>& xs) {
  std::vector<Vector> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.coords());
  return out;
}

LoopElement real_pair(const ContextPtr& ctx, std::int64_t k, const AlgebraElement& y, const FiniteAutomorphism& swap) {
  LoopElement u(ctx);
  u.add_term(k, y);
  u.add_term(-k, swap.apply(y));
  return u;
}

/// {x in E_k : phi x = lambda x}.
std::vector<AlgebraElement> split_residue(const ContextPtr& ctx, std::int64_t k, const FiniteAutomorphism& phi,
                                          const CyclotomicNumber& lambda) {
  const auto& basis = ctx->residue_basis(k);
  const auto& g = ctx->algebra();
  if (basis.empty()) return {};
  const std::size_t dim = basis.front().coords().size();
  Matrix shifted(dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vector col = sub(phi.apply(basis[j].coords()), scale(lambda, basis[j].coords()));
    for (std::size_t r = 0; r < dim; ++r) shifted(r, j) = col[r];
  }
  std::vector<AlgebraElement> out;
  for (const auto& c : nullspace(shifted)) {
    AlgebraElement x = AlgebraElement::zero(g);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!c[j].is_zero()) x += c[j] * basis[j];
    out.push_back(x);
  }
  return out;
}

/// u_{-k} = a(u_k) for an antilinear a swapping E_k and E_{-k}.
std::vector<LoopElement> reflected_basis(const ContextPtr& ctx, const FiniteAutomorphism& a, std::int64_t n) {
  std::vector<LoopElement> out;
  for (const auto& v : antilinear_fixed_basis(a, coords_of(ctx->residue_basis(0))))
    out.push_back(LoopElement::constant(ctx, AlgebraElement(ctx->algebra(), v)));
  const CyclotomicNumber i = imag_unit();
  for (std::int64_t k = 1; k <= n; ++k)
    for (const auto& x : ctx->residue_basis(k)) {
      out.push_back(real_pair(ctx, k, x, a));
      out.push_back(real_pair(ctx, k, i * x, a));
    }
  return out;
}

std::vector<LoopElement> pointwise_basis(const ContextPtr& ctx, const FiniteAutomorphism& a, std::int64_t n) {
  std::vector<LoopElement> out;
  for (std::int64_t k = -n; k <= n; ++k)
    for (const auto& v : antilinear_fixed_basis(a, coords_of(ctx->residue_basis(k))))
      out.push_back(LoopElement::monomial(ctx, k, AlgebraElement(ctx->algebra(), v)));
  return out;
}

/// {u compact-valued, u(t+pi) = phi u(t)} + i {u compact-valued, u(t+pi) = -phi u(t)}.
std::vector<LoopElement> half_period_basis(const ContextPtr& ctx, const FiniteAutomorphism& phi, std::int64_t n) {
  const auto& g = ctx->algebra();
  const FiniteAutomorphism omega = omega_of(g);
  const CyclotomicNumber i = imag_unit();
  const std::uint32_t D = ctx->denominator();
  std::vector<LoopElement> out;
  for (std::int64_t k = 0; k <= n; ++k) {
    const CyclotomicNumber lambda = root_of_unity(Rational(k, 2 * static_cast<std::int64_t>(D)), ctx->level());
    for (int sign : {1, -1}) {
      const CyclotomicNumber factor = sign == 1 ? CyclotomicNumber(1L) : i;
      auto part = split_residue(ctx, k, phi, sign == 1 ? lambda : -lambda);
      if (k == 0) {
        for (const auto& v : antilinear_fixed_basis(omega, coords_of(part)))
          out.push_back(factor * LoopElement::constant(ctx, AlgebraElement(g, v)));
        continue;
      }
      for (const auto& x : part) {
        out.push_back(factor * real_pair(ctx, k, x, omega));
        out.push_back(factor * real_pair(ctx, k, i * x, omega));
      }
    }
  }
  return out;
}

std::vector<LoopElement> independent_loops(const std::vector<LoopElement>& xs, std::int64_t n) {
  std::vector<Vector> coords;
  coords.reserve(xs.size());
  for (const auto& x : xs) coords.push_back(slice_coordinates(x, n));
  std::vector<LoopElement> out;
  for (std::size_t idx : independent_subset(coords)) out.push_back(xs[idx]);
  return out;
}

FirstKindInvariant first_invariant(std::int64_t p, const std::string& rho_id, const FiniteAutomorphism& rho,
                                   const std::string& beta, std::uint32_t q) {
  FirstKindInvariant inv;
  inv.q = q;
  inv.p = p;
  inv.rho_id = rho_id;
  inv.rho = rho;
  inv.beta_class = beta;
  return inv;
}

StandardAutomorphism theta_for(const StandardAutomorphism& psi) {
  const auto& ctx = psi.source();
  return compose(StandardAutomorphism::constant(ctx, omega_of(ctx->algebra())), psi);
}

}  // namespace

std::string kind_name(FormKind kind) {
  switch (kind) {
    case FormKind::Compact: return "compact";
    case FormKind::OneA: return "1a";
    case FormKind::OneB: return "1b";
    case FormKind::Two: return "2";
  }
  return "?";
}

FormKind parse_kind(const std::string& name) {
  if (name == "compact") return FormKind::Compact;
  if (name == "1a") return FormKind::OneA;
  if (name == "1b") return FormKind::OneB;
  if (name == "2") return FormKind::Two;
  throw Error(ErrorCode::InvalidInput, "unknown kind '" + name + "' (expected compact, 1a, 1b or 2)");
}

std::string to_string(const Invariant& inv) {
  return std::visit([](const auto& x) { return to_string(x); }, inv);
}

bool invariants_equal(const Invariant& a, const Invariant& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<FirstKindInvariant>(&a))
    return invariants_equal_first(*fa, std::get<FirstKindInvariant>(b));
  return invariants_equal_second(std::get<SecondKindInvariant>(a), std::get<SecondKindInvariant>(b));
}

std::vector<InvolutionDescriptor> enumerate_involutions(const AlgebraPtr& algebra, FormKind kind) {
  const auto& catalog = rho_catalog(algebra);
  const FiniteAutomorphism id = FiniteAutomorphism::identity(algebra);
  std::vector<InvolutionDescriptor> out;
  auto blank = [&](FormKind k, const Realization& r, Invariant inv, std::string label) {
    return InvolutionDescriptor{k, id, id, id, id, id, r.sigma, r.phi, std::move(inv), std::move(label)};
  };

  switch (kind) {
    case FormKind::Compact:
      throw Error(ErrorCode::InvalidInput, "the compact form has no involution");
    case FormKind::OneA:
      for (const auto& entry : catalog) {
        if (entry.order != 2) continue;
        for (const auto& label : component_labels(entry.rho)) {
          auto beta = component_representative(entry.rho, label);
          auto d = blank(kind, realize_first(0, entry.rho, beta, 2), first_invariant(0, entry.id, entry.rho, label, 2),
                         "1a(" + entry.id + ",[" + label + "])");
          d.rho = entry.rho;
          d.beta = beta;
          out.push_back(std::move(d));
        }
      }
      break;
    case FormKind::OneB:
      for (const auto& label : component_labels(id)) {
        auto phi = component_representative(id, label);
        auto d = blank(kind, realize_first(1, id, phi, 2), first_invariant(1, "id", id, label, 2),
                       "1b([" + label + "])");
        d.phi = phi;
        out.push_back(std::move(d));
      }
      break;
    case FormKind::Two: {
      std::vector<std::pair<std::string, FiniteAutomorphism>> involutions{{"id", id}};
      for (const auto& entry : catalog)
        if (entry.order == 2) involutions.emplace_back(entry.id, entry.rho);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < involutions.size(); ++a) pairs.emplace_back(a, a);
      for (std::size_t a = 0; a < involutions.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) pairs.emplace_back(a, b);
      for (const auto& [a, b] : pairs) {
        const auto& [plus_id, plus] = involutions[a];
        const auto& [minus_id, minus] = involutions[b];
        SecondKindInvariant inv{plus, minus};
        bool seen = false;
        for (const auto& prev : out) {
          try {
            if (invariants_equal(prev.invariant, inv)) seen = true;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::ClassifierUnavailable) throw;
          }
        }
        if (seen) continue;
        auto d = blank(kind, realize_second(plus, minus), inv, "2[" + plus_id + "," + minus_id + "]");
        d.rho_plus = plus;
        d.rho_minus = minus;
        out.push_back(std::move(d));
      }
      break;
    }
  }
  return out;
}

RealFormDescriptor compact_real_form(const AlgebraPtr& algebra) {
  rho_catalog(algebra);
  auto ctx = TwistContext::untwisted(algebra);
  const FiniteAutomorphism id = FiniteAutomorphism::identity(algebra);
  return {FormKind::Compact, "compact", StandardAutomorphism::constant(ctx, omega_of(algebra)), std::nullopt,
          first_invariant(0, "id", id, "id", 1), "Rc+Rd"};
}

RealFormDescriptor real_form_of(const InvolutionDescriptor& involution) {
  if (standard_order(involution.psi) != 2u)
    throw Error(ErrorCode::InvalidInput, "psi of " + involution.label + " is not an involution");
  return {involution.kind,
          involution.label,
          theta_for(involution.psi),
          involution,
          involution.invariant,
          involution.kind == FormKind::Two ? "R(ic)+R(id)" : "Rc+Rd"};
}

std::vector<RealFormDescriptor> enumerate_real_forms(const AlgebraPtr& algebra) {
  std::vector<RealFormDescriptor> out{compact_real_form(algebra)};
  for (FormKind kind : {FormKind::OneA, FormKind::OneB, FormKind::Two})
    for (const auto& inv : enumerate_involutions(algebra, kind)) out.push_back(real_form_of(inv));
  return out;
}

Vector slice_coordinates(const LoopElement& u, std::int64_t n) {
  const std::size_t dim = u.context()->algebra()->dim();
  Vector out;
  out.reserve(dim * static_cast<std::size_t>(2 * n + 1));
  for (std::int64_t k = -n; k <= n; ++k) {
    auto it = u.terms().find(k);
    if (it == u.terms().end())
      out.insert(out.end(), dim, CyclotomicNumber());
    else
      out.insert(out.end(), it->second.coords().begin(), it->second.coords().end());
  }
  return out;
}

std::vector<LoopElement> fixed_point_basis(const RealFormDescriptor& desc, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative truncation degree");
  const auto& ctx = desc.context();
  const auto& g = ctx->algebra();
  const FiniteAutomorphism omega = omega_of(g);
  switch (desc.kind) {
    case FormKind::Compact:
      return reflected_basis(ctx, omega, n);
    case FormKind::OneA:
      return reflected_basis(ctx, compose(omega, desc.involution->rho), n);
    case FormKind::OneB:
      return half_period_basis(ctx, inverse(desc.involution->phi), n);
    case FormKind::Two:
      return pointwise_basis(ctx, compose(omega, desc.involution->rho_plus), n);
  }
  return {};
}

std::vector<LoopElement> fixed_point_basis_by_averaging(const StandardAutomorphism& theta, std::int64_t n) {
  if (!theta.antilinear() || !theta.is_endomorphism())
    throw Error(ErrorCode::InvalidInput, "expected an antilinear involution of one loop algebra");
  const auto& ctx = theta.source();
  const CyclotomicNumber i = imag_unit();
  std::vector<LoopElement> candidates;
  for (const auto& b : spanning_set(ctx, n))
    for (const auto& s : {CyclotomicNumber(1L), i}) {
      LoopElement x = s * b;
      candidates.push_back(x + theta.apply_unchecked(x));
    }
  std::vector<LoopElement> nonzero;
  for (auto& x : candidates)
    if (!x.is_zero()) nonzero.push_back(std::move(x));
  return independent_loops(nonzero, n);
}

RealSpan::RealSpan(std::vector<LoopElement> basis, std::int64_t n) : basis_(std::move(basis)), degree_(n) {
  std::vector<Vector> cols;
  for (const auto& b : basis_) cols.push_back(slice_coordinates(b, n));
  rows_ = cols.empty() ? 0 : cols.front().size();
  const std::size_t r = cols.size();
  std::vector<Vector> row_vectors(rows_, Vector(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < rows_; ++i) row_vectors[i][j] = cols[j][i];
  pivots_ = independent_subset(row_vectors);
  if (pivots_.size() != r) throw Error(ErrorCode::InvalidInput, "real span basis is not C-independent");
  Matrix square(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < r; ++j) square(a, j) = row_vectors[pivots_[a]][j];
  if (r > 0) reduced_ = *inverse(square);
}

bool RealSpan::contains(const LoopElement& u) const {
  if (u.degree() > degree_) return false;
  const Vector v = slice_coordinates(u, degree_);
  const std::size_t r = basis_.size();
  if (r == 0) return is_zero(v);
  Vector picked(r);
  for (std::size_t a = 0; a < r; ++a) picked[a] = v[pivots_[a]];
  const Vector c = reduced_ * picked;
  LoopElement rebuilt(u.context());
  for (std::size_t j = 0; j < r; ++j) {
    if (c[j].is_zero()) continue;
    if (!c[j].is_real()) return false;
    rebuilt += c[j] * basis_[j];
  }
  return rebuilt == u;
}

CheckReport verify_real_form(const RealFormDescriptor& desc, std::int64_t n) {
  CheckReport report;
  const auto& ctx = desc.context();
  const auto basis = fixed_point_basis(desc, n);
  for (const auto& h : basis) {
    report.expect(validate(h), "basis element violates the twist: " + h.to_string());
    report.expect(desc.theta.apply_unchecked(h) == h, "basis element not fixed by theta: " + h.to_string());
  }
  std::vector<Vector> coords;
  for (const auto& h : basis) coords.push_back(slice_coordinates(h, n));
  const bool independent = independent_subset(coords).size() == basis.size();
  report.expect(independent, "basis is not C-independent");
  report.expect(basis.size() == slice_dimension(ctx, n),
                "real dimension " + std::to_string(basis.size()) + " != complex slice dimension " +
                    std::to_string(slice_dimension(ctx, n)));
  if (!report.pass) return report;

  const RealSpan doubled(fixed_point_basis(desc, 2 * n), 2 * n);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      auto z = loop_bracket(basis[a], basis[b]);
      report.expect(doubled.contains(z), "bracket leaves the real form: " + z.to_string());
    }

  const RealSpan here(basis, n);
  const auto averaged = fixed_point_basis_by_averaging(desc.theta, n);
  report.expect(averaged.size() == basis.size(), "averaging gives a different dimension");
  for (const auto& x : averaged) report.expect(here.contains(x), "averaged element outside the form: " + x.to_string());
  return report;
}

CartanDecomposition cartan_decomposition(const RealFormDescriptor& desc, std::int64_t n) {
  if (desc.kind == FormKind::Compact) throw Error(ErrorCode::NotApplicable, "the compact form is its own compact part");
  const auto& ctx = desc.context();
  auto theta_c = StandardAutomorphism::constant(ctx, omega_of(ctx->algebra()));
  std::vector<LoopElement> plus, minus;
  const CyclotomicNumber half(Rational(1, 2));
  for (const auto& h : fixed_point_basis(desc, n)) {
    auto image = theta_c.apply_unchecked(h);
    auto p = half * (h + image);
    auto m = half * (h - image);
    if (!p.is_zero()) plus.push_back(std::move(p));
    if (!m.is_zero()) minus.push_back(std::move(m));
  }
  return {independent_loops(plus, n), independent_loops(minus, n), std::move(theta_c)};
}

CheckReport verify_cartan(const RealFormDescriptor& desc, std::int64_t n) {
  CheckReport report;
  const auto cd = cartan_decomposition(desc, n);
  const auto basis = fixed_point_basis(desc, n);
  const RealSpan form(basis, n);
  report.expect(cd.k_basis.size() + cd.m_basis.size() == basis.size(), "dim k + dim m != dim of the form");
  report.expect(!cd.m_basis.empty(), "m is trivial for a noncompact form");
  for (const auto& h : basis)
    report.expect(form.contains(cd.cartan_involution.apply_unchecked(h)), "cartan involution leaves the form");

  const auto wide = cartan_decomposition(desc, 2 * n);
  const RealSpan k2(wide.k_basis, 2 * n), m2(wide.m_basis, 2 * n);
  auto closed = [&](const std::vector<LoopElement>& xs, const std::vector<LoopElement>& ys, const RealSpan& target,
                    const std::string& what) {
    for (const auto& x : xs)
      for (const auto& y : ys) {
        auto z = loop_bracket(x, y);
        report.expect(target.contains(z), what + ": " + z.to_string());
      }
  };
  closed(cd.k_basis, cd.k_basis, k2, "[k,k] not in k");
  closed(cd.k_basis, cd.m_basis, m2, "[k,m] not in m");
  closed(cd.m_basis, cd.m_basis, k2, "[m,m] not in k");

  RealFormDescriptor compact{FormKind::Compact, "compact", cd.cartan_involution, std::nullopt, desc.invariant, "Rc+Rd"};
  const RealSpan compact_span(fixed_point_basis(compact, n), n);
  const CyclotomicNumber i = imag_unit();
  for (const auto& x : cd.k_basis) report.expect(compact_span.contains(x), "k not compact: " + x.to_string());
  for (const auto& x : cd.m_basis)
    report.expect(compact_span.contains(i * x), "i m not compact: " + x.to_string());
  return report;
}

std::string hat_real_form(const RealFormDescriptor& desc) { return desc.hat_adjoin; }

CheckReport verify_hat_real_form(const RealFormDescriptor& desc, std::int64_t n) {
  CheckReport report;
  const auto& ctx = desc.context();
  const CyclotomicNumber unit = desc.hat_adjoin == "R(ic)+R(id)" ? imag_unit() : CyclotomicNumber(1L);
  std::vector<AffineElement> basis;
  for (const auto& h : fixed_point_basis(desc, n)) basis.push_back(AffineElement::from_loop(h));
  basis.push_back(unit * AffineElement::central(ctx));
  basis.push_back(unit * AffineElement::derivation(ctx));
  const RealSpan loops(fixed_point_basis(desc, 2 * n), 2 * n);
  const CyclotomicNumber unit_inv = inverse(unit);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      auto z = affine_bracket(basis[a], basis[b]);
      report.expect(z.d.is_zero(), "bracket has a d component");
      report.expect((z.c * unit_inv).is_real(), "c component outside the adjoined line: " + z.to_string());
      report.expect(loops.contains(z.loop), "loop part leaves the form: " + z.to_string());
    }
  return report;
}

std::optional<std::uint32_t> finite_order_product_check(const FiniteAutomorphism& g_plus,
                                                        const FiniteAutomorphism& g_minus,
                                                        const FiniteAutomorphism& h, std::uint32_t bound) {
  if (!(compose(g_plus, g_plus) == compose(g_minus, g_minus)))
    throw Error(ErrorCode::SquareMismatch, "g+^2 != g-^2");
  auto conj = compose(h, compose(g_minus, inverse(h)));
  return automorphism_order(compose(inverse(conj), g_plus), bound);
}

}  // namespace kmforge
