#include "kmforge/lie/automorphism.hpp"

#include <numeric>

#include "kmforge/error.hpp"
#include "kmforge/numeric/levels.hpp"

namespace kmforge {

FiniteAutomorphism::FiniteAutomorphism(AlgebraPtr algebra, Matrix matrix, bool antilinear,
                                       std::optional<std::uint32_t> declared_order)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)), antilinear_(antilinear), declared_order_(declared_order) {
  if (!algebra_ || matrix_.rows() != algebra_->dim() || matrix_.cols() != algebra_->dim())
    throw Error(ErrorCode::InvalidInput, "automorphism matrix does not match the algebra dimension");
}

FiniteAutomorphism FiniteAutomorphism::identity(AlgebraPtr algebra) {
  const std::size_t d = algebra->dim();
  return FiniteAutomorphism(std::move(algebra), Matrix::identity(d), false, 1);
}

FiniteAutomorphism FiniteAutomorphism::from_matrix_map(AlgebraPtr algebra,
                                                       const std::function<Matrix(const Matrix&)>& map,
                                                       bool antilinear) {
  const auto& real = algebra->realization();
  if (!real) throw Error(ErrorCode::InvalidInput, algebra->name() + " has no matrix realization");
  const std::size_t d = algebra->dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto coords = algebra->coordinates_of(map(real->basis[j]));
    if (!coords) throw Error(ErrorCode::InvalidInput, "matrix map leaves the algebra");
    for (std::size_t i = 0; i < d; ++i) m(i, j) = (*coords)[i];
  }
  return FiniteAutomorphism(std::move(algebra), std::move(m), antilinear);
}

FiniteAutomorphism FiniteAutomorphism::adjoint(AlgebraPtr algebra, const Matrix& g) {
  auto g_inv = kmforge::inverse(g);
  if (!g_inv) throw Error(ErrorCode::InvalidInput, "Ad(g) needs an invertible g");
  return from_matrix_map(std::move(algebra), [&](const Matrix& x) { return g * x * *g_inv; });
}

FiniteAutomorphism FiniteAutomorphism::with_order(std::optional<std::uint32_t> order) const {
  FiniteAutomorphism out = *this;
  out.declared_order_ = order;
  return out;
}

Vector FiniteAutomorphism::apply(const Vector& coords) const {
  return antilinear_ ? matrix_ * conj(coords) : matrix_ * coords;
}

AlgebraElement FiniteAutomorphism::apply(const AlgebraElement& x) const {
  require_same_algebra(algebra_, x.algebra());
  return AlgebraElement(algebra_, apply(x.coords()));
}

FiniteAutomorphism compose(const FiniteAutomorphism& outer, const FiniteAutomorphism& inner) {
  require_same_algebra(outer.algebra(), inner.algebra());
  const Matrix rhs = outer.antilinear() ? inner.matrix().conjugated() : inner.matrix();
  return FiniteAutomorphism(outer.algebra(), outer.matrix() * rhs, outer.antilinear() != inner.antilinear());
}

FiniteAutomorphism inverse(const FiniteAutomorphism& a) {
  auto inv = kmforge::inverse(a.matrix());
  if (!inv) throw Error(ErrorCode::InvalidInput, "automorphism matrix is singular");
  if (a.antilinear()) return FiniteAutomorphism(a.algebra(), inv->conjugated(), true, a.declared_order());
  return FiniteAutomorphism(a.algebra(), std::move(*inv), false, a.declared_order());
}

FiniteAutomorphism power(const FiniteAutomorphism& a, std::int64_t n) {
  if (n < 0) return power(inverse(a), -n);
  FiniteAutomorphism result = FiniteAutomorphism::identity(a.algebra());
  FiniteAutomorphism base = a;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

bool commute(const FiniteAutomorphism& a, const FiniteAutomorphism& b) { return compose(a, b) == compose(b, a); }

bool check_automorphism(const FiniteAutomorphism& a) {
  if (rank(a.matrix()) != a.algebra()->dim()) return false;
  const auto& table = *a.algebra();
  const std::size_t d = table.dim();
  std::vector<Vector> images;
  for (std::size_t j = 0; j < d; ++j) images.push_back(a.matrix().column(j));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector bij(d);
      for (const auto& t : table.bracket_terms(i, j)) bij[t.index] = CyclotomicNumber(t.coefficient);
      // structure constants are rational, so conj does not touch [x_i, x_j]
      if (!(a.matrix() * bij == bracket_coords(table, images[i], images[j]))) return false;
    }
  return true;
}

std::optional<std::uint32_t> automorphism_order(const FiniteAutomorphism& a, std::uint32_t bound) {
  FiniteAutomorphism p = a;
  for (std::uint32_t n = 1; n <= bound; ++n) {
    if (p.is_identity()) return n;
    p = compose(a, p);
  }
  return std::nullopt;
}

std::uint32_t finite_order(const FiniteAutomorphism& a, std::uint32_t bound) {
  if (a.declared_order()) return *a.declared_order();
  auto n = automorphism_order(a, bound);
  if (!n) throw Error(ErrorCode::NotFiniteOrder, "automorphism has no finite order up to " + std::to_string(bound));
  return *n;
}

std::vector<AlgebraElement> eigenvectors(const FiniteAutomorphism& a, const CyclotomicNumber& lambda) {
  if (a.antilinear()) throw Error(ErrorCode::InvalidInput, "eigenvectors of an antilinear map");
  const std::size_t d = a.algebra()->dim();
  const std::uint32_t level = std::lcm(level_of(a.matrix()), lambda.level());
  Matrix m = lift(a.matrix(), level);
  const CyclotomicNumber l = lambda.lifted(level);
  for (std::size_t i = 0; i < d; ++i) m(i, i) -= l;
  std::vector<AlgebraElement> out;
  for (auto& v : nullspace(m)) out.emplace_back(a.algebra(), std::move(v));
  return out;
}

std::vector<Eigenspace> eigenspace_decomposition(const FiniteAutomorphism& a) {
  if (a.antilinear()) throw Error(ErrorCode::InvalidInput, "eigenspace decomposition needs a linear map");
  const std::uint32_t n = finite_order(a);
  const std::uint32_t level = std::lcm(level_of(a.matrix()), n);
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (std::uint32_t k = 0; k < n; ++k) {
    const CyclotomicNumber lambda = zeta_power(level, static_cast<std::int64_t>(k * (level / n)));
    auto basis = eigenvectors(a, lambda);
    if (basis.empty()) continue;
    total += basis.size();
    out.push_back({k, lambda, std::move(basis)});
  }
  if (total != a.algebra()->dim())
    throw Error(ErrorCode::NotFiniteOrder, "eigenspaces do not span; declared order is wrong");
  return out;
}

std::vector<Vector> antilinear_fixed_basis(const FiniteAutomorphism& a, const std::vector<Vector>& span) {
  const std::uint32_t n = finite_order(a);
  std::vector<FiniteAutomorphism> powers;
  FiniteAutomorphism p = FiniteAutomorphism::identity(a.algebra());
  for (std::uint32_t j = 0; j < n; ++j) {
    powers.push_back(p);
    p = compose(a, p);
  }
  const CyclotomicNumber i = imag_unit();
  const Rational inv_n(1, n);
  std::vector<Vector> candidates;
  for (const auto& v : span) {
    for (const Vector& w : {v, scale(i, v)}) {
      Vector avg(v.size());
      for (const auto& pw : powers) avg = add(avg, pw.apply(w));
      for (auto& x : avg) x = x.scaled(inv_n);
      candidates.push_back(std::move(avg));
    }
  }
  // for a fixed set of an antilinear map, R-independence equals C-independence
  std::vector<Vector> basis;
  for (auto idx : independent_subset(candidates)) basis.push_back(candidates[idx]);
  return basis;
}

FixedSubalgebra fixed_subalgebra(const FiniteAutomorphism& a) {
  FixedSubalgebra out;
  if (!a.antilinear()) {
    finite_order(a);
    out.basis = eigenvectors(a, CyclotomicNumber(1L));
    return out;
  }
  std::vector<Vector> full;
  for (std::size_t j = 0; j < a.algebra()->dim(); ++j) full.push_back(AlgebraElement::basis(a.algebra(), j).coords());
  for (auto& v : antilinear_fixed_basis(a, full)) out.basis.emplace_back(a.algebra(), std::move(v));
  out.real_span = true;
  return out;
}

std::optional<Vector> span_coefficients(const std::vector<Vector>& basis, const Vector& x) {
  if (basis.empty()) return is_zero(x) ? std::optional<Vector>(Vector{}) : std::nullopt;
  return solve(Matrix::from_columns(basis, x.size()), x);
}

bool in_real_span(const std::vector<Vector>& basis, const Vector& x) {
  auto c = span_coefficients(basis, x);
  if (!c) return false;
  for (const auto& v : *c)
    if (!v.is_real()) return false;
  return true;
}

bool bracket_closed(const FixedSubalgebra& sub) {
  std::vector<Vector> basis;
  for (const auto& b : sub.basis) basis.push_back(b.coords());
  for (std::size_t i = 0; i < sub.basis.size(); ++i)
    for (std::size_t j = i + 1; j < sub.basis.size(); ++j) {
      const Vector br = bracket(sub.basis[i], sub.basis[j]).coords();
      if (sub.real_span ? !in_real_span(basis, br) : !span_coefficients(basis, br)) return false;
    }
  return true;
}

ExpCurveData::ExpCurveData(AlgebraElement generator, std::vector<Eigenpair> eigenpairs)
    : generator_(std::move(generator)), eigenpairs_(std::move(eigenpairs)) {
  const auto& alg = generator_.algebra();
  const std::size_t d = alg->dim();
  const CyclotomicNumber i = imag_unit();
  std::vector<Vector> columns;
  for (const auto& pair : eigenpairs_) {
    offsets_.push_back(columns.size());
    const CyclotomicNumber scale_iq = i * CyclotomicNumber(pair.q);
    for (const auto& v : pair.basis) {
      if (!(bracket(generator_, v) == scale_iq * v))
        throw Error(ErrorCode::InvalidInput, "ad X does not act as i*q on the supplied eigenspace");
      columns.push_back(v.coords());
    }
  }
  offsets_.push_back(columns.size());
  if (columns.size() != d) throw Error(ErrorCode::InvalidInput, "eigenspaces of ad X do not span g");
  auto inv = kmforge::inverse(Matrix::from_columns(columns, d));
  if (!inv) throw Error(ErrorCode::InvalidInput, "eigenspaces of ad X are dependent");
  basis_inverse_ = std::move(*inv);
}

std::vector<Vector> ExpCurveData::decompose(const Vector& coords) const {
  const Vector c = basis_inverse_ * coords;
  std::vector<Vector> parts;
  for (std::size_t p = 0; p < eigenpairs_.size(); ++p) {
    Vector part(coords.size());
    for (std::size_t b = offsets_[p]; b < offsets_[p + 1]; ++b) {
      if (c[b].is_zero()) continue;
      part = add(part, scale(c[b], eigenpairs_[p].basis[b - offsets_[p]].coords()));
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::uint32_t ExpCurveData::denominator() const {
  std::uint32_t den = 1;
  for (const auto& p : eigenpairs_) den = std::lcm(den, static_cast<std::uint32_t>(p.q.get_den().get_ui()));
  return den;
}

bool ExpCurveData::is_zero() const { return generator_.is_zero(); }

ExpCurveData make_exp_curve(const AlgebraElement& generator, const std::vector<Rational>& candidates) {
  const Matrix ad = ad_matrix(generator);
  const std::size_t d = ad.rows();
  const CyclotomicNumber i = imag_unit();
  std::vector<Eigenpair> pairs;
  std::size_t total = 0;
  for (const auto& q : candidates) {
    Matrix m = ad;
    const CyclotomicNumber iq = i * CyclotomicNumber(q);
    for (std::size_t k = 0; k < d; ++k) m(k, k) -= iq;
    auto kernel = nullspace(m);
    if (kernel.empty()) continue;
    Eigenpair pair{q, {}};
    for (auto& v : kernel) pair.basis.emplace_back(generator.algebra(), std::move(v));
    total += pair.basis.size();
    pairs.push_back(std::move(pair));
  }
  if (total != d) throw Error(ErrorCode::InvalidInput, "ad X is not diagonalizable with the candidate eigenvalues");
  return ExpCurveData(generator, std::move(pairs));
}

ExpCurveData make_exp_curve(const AlgebraElement& generator, std::uint32_t max_den, std::int64_t max_abs) {
  std::vector<Rational> candidates;
  for (std::int64_t num = -max_abs * max_den; num <= max_abs * max_den; ++num)
    for (std::uint32_t den = 1; den <= max_den; ++den) {
      Rational q(num, den);
      q.canonicalize();
      if (q.get_den() != den) continue;
      candidates.push_back(q);
    }
  return make_exp_curve(generator, candidates);
}

ExpCurveData scaled(const ExpCurveData& curve, const Rational& lambda) {
  std::vector<Eigenpair> pairs;
  for (const auto& p : curve.eigenpairs()) pairs.push_back({p.q * lambda, p.basis});
  return ExpCurveData(CyclotomicNumber(lambda) * curve.generator(), std::move(pairs));
}

ExpCurveData transported(const ExpCurveData& curve, const FiniteAutomorphism& phi) {
  std::vector<Eigenpair> pairs;
  for (const auto& p : curve.eigenpairs()) {
    Eigenpair np{phi.antilinear() ? Rational(-p.q) : p.q, {}};
    for (const auto& v : p.basis) np.basis.push_back(phi.apply(v));
    pairs.push_back(std::move(np));
  }
  return ExpCurveData(phi.apply(curve.generator()), std::move(pairs));
}

FiniteAutomorphism exp_ad(const ExpCurveData& curve, const Rational& turns, std::uint32_t level) {
  const auto& alg = curve.generator().algebra();
  const std::size_t d = alg->dim();
  std::vector<Vector> columns;
  std::vector<CyclotomicNumber> factors;
  std::uint32_t base = level_of(curve.generator().coords());
  for (const auto& p : curve.eigenpairs())
    for (const auto& v : p.basis) base = std::lcm(base, level_of(v.coords()));
  for (const auto& p : curve.eigenpairs()) {
    Rational x = p.q * turns;
    x.canonicalize();
    const auto den = static_cast<std::uint32_t>(x.get_den().get_ui());
    if (level != 0 && level % den != 0)
      throw Error(ErrorCode::IncompatibleDenominator,
                  "exp(ad tX) eigenvalue needs level " + std::to_string(den) + " not dividing " + std::to_string(level));
    const CyclotomicNumber z = root_of_unity(x, std::lcm(base, level == 0 ? 1u : level));
    for (const auto& v : p.basis) {
      columns.push_back(v.coords());
      factors.push_back(z);
    }
  }
  const Matrix basis = Matrix::from_columns(columns, d);
  Matrix scaled_basis = basis;
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) scaled_basis(r, c) = basis(r, c) * factors[c];
  auto inv = kmforge::inverse(basis);
  return FiniteAutomorphism(alg, scaled_basis * *inv);
}

}  // namespace kmforge
