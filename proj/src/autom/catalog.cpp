#include "kmforge/autom/catalog.hpp"

#include <map>
#include <mutex>

#include "kmforge/error.hpp"

namespace kmforge {

namespace {

enum class Family { A1, A2 };

Family family_of(const AlgebraPtr& algebra) {
  if (algebra->name() == "sl2C") return Family::A1;
  if (algebra->name() == "sl3C") return Family::A2;
  throw Error(ErrorCode::ClassifierUnavailable, "no component classifier for " + algebra->name());
}

Matrix diag(const std::vector<CyclotomicNumber>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

FiniteAutomorphism minus_transpose(const AlgebraPtr& g, bool antilinear) {
  return FiniteAutomorphism::from_matrix_map(
      g, [](const Matrix& a) { return a.transposed().scaled(CyclotomicNumber(-1L)); }, antilinear);
}

std::map<std::string, FiniteAutomorphism> build_named(const AlgebraPtr& g) {
  std::map<std::string, FiniteAutomorphism> out;
  out.emplace("id", FiniteAutomorphism::identity(g));
  out.emplace("mu", minus_transpose(g, false).with_order(2));
  out.emplace("omega", minus_transpose(g, true).with_order(2));
  if (family_of(g) == Family::A1) {
    out.emplace("tau", FiniteAutomorphism::adjoint(g, diag({1L, -1L})).with_order(2));
    Matrix w(2, 2);
    w(0, 1) = 1L;
    w(1, 0) = 1L;
    out.emplace("w", FiniteAutomorphism::adjoint(g, w).with_order(2));
    for (std::uint32_t r : {3u, 4u, 6u})
      out.emplace("rot" + std::to_string(r), FiniteAutomorphism::adjoint(g, diag({1L, zeta_power(r, 1)})).with_order(r));
  } else {
    out.emplace("inv", FiniteAutomorphism::adjoint(g, diag({1L, 1L, -1L})).with_order(2));
    out.emplace("rot3",
                FiniteAutomorphism::adjoint(g, diag({1L, zeta_power(3, 1), zeta_power(3, 2)})).with_order(3));
  }
  return out;
}

const std::map<std::string, FiniteAutomorphism>& named(const AlgebraPtr& g) {
  static std::mutex mutex;
  static std::map<const LieAlgebraTable*, std::map<std::string, FiniteAutomorphism>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(g.get());
  if (it == cache.end()) it = cache.emplace(g.get(), build_named(g)).first;
  return it->second;
}

// ---- A1: sl2-triple normal forms ----

// Some scalar c with y = c x for nonzero x, if y is a multiple of x.
std::optional<CyclotomicNumber> ratio(const Vector& y, const Vector& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    const CyclotomicNumber c = y[j] / x[j];
    if (!(scale(c, x) == y)) return std::nullopt;
    return c;
  }
  return std::nullopt;
}

// alpha with alpha(e) = E, alpha(h) = H, alpha(f) = F, given H' spanning a Cartan line and
// ad H'-eigenvectors E', F' with opposite eigenvalues.
std::optional<FiniteAutomorphism> triple(const AlgebraPtr& g, const Vector& h0, const Vector& e0, const Vector& f0) {
  const auto& table = *g;
  auto c = ratio(bracket_coords(table, h0, e0), e0);
  if (!c || c->is_zero()) return std::nullopt;
  const Vector hh = scale(CyclotomicNumber(2L) / *c, h0);
  auto k = ratio(bracket_coords(table, e0, f0), hh);
  if (!k || k->is_zero()) return std::nullopt;
  const Vector ff = scale(inverse(*k), f0);
  if (!(bracket_coords(table, hh, ff) == scale(CyclotomicNumber(-2L), ff))) return std::nullopt;
  FiniteAutomorphism alpha(g, Matrix::from_columns(std::vector<Vector>{e0, hh, ff}, 3));
  return alpha;
}

// alpha with x = alpha model alpha^{-1}, model = Ad diag(1, zeta_r) (tau for r = 2).
std::optional<FiniteAutomorphism> a1_normal_form(const FiniteAutomorphism& x) {
  const auto& g = x.algebra();
  if (x.antilinear()) return std::nullopt;
  auto r = automorphism_order(x);
  if (!r) return std::nullopt;
  if (*r == 1) return FiniteAutomorphism::identity(g);
  auto fixed = eigenvectors(x, CyclotomicNumber(1L));
  if (fixed.size() != 1) return std::nullopt;
  const Vector h0 = fixed[0].coords();
  if (*r > 2) {
    auto e0 = eigenvectors(x, zeta_power(*r, -1));
    auto f0 = eigenvectors(x, zeta_power(*r, 1));
    if (e0.size() != 1 || f0.size() != 1) return std::nullopt;
    return triple(g, h0, e0[0].coords(), f0[0].coords());
  }
  auto minus = eigenvectors(x, CyclotomicNumber(-1L));
  if (minus.size() != 2) return std::nullopt;
  const Vector v1 = minus[0].coords(), v2 = minus[1].coords();
  const std::vector<Vector> basis{v1, v2};
  auto a1 = span_coefficients(basis, bracket_coords(*g, h0, v1));
  auto a2 = span_coefficients(basis, bracket_coords(*g, h0, v2));
  if (!a1 || !a2) return std::nullopt;
  // ad H' on span(v1, v2) is traceless with eigenvalues +-c
  const CyclotomicNumber det = (*a1)[0] * (*a2)[1] - (*a1)[1] * (*a2)[0];
  CyclotomicNumber c;
  if (!try_sqrt(-det, c) || c.is_zero()) return std::nullopt;
  auto eigen_in_plane = [&](const CyclotomicNumber& lambda) -> std::optional<Vector> {
    Matrix m(2, 2);
    m(0, 0) = (*a1)[0] - lambda;
    m(1, 0) = (*a1)[1];
    m(0, 1) = (*a2)[0];
    m(1, 1) = (*a2)[1] - lambda;
    auto ker = nullspace(m);
    if (ker.size() != 1) return std::nullopt;
    return add(scale(ker[0][0], v1), scale(ker[0][1], v2));
  };
  auto e0 = eigen_in_plane(c), f0 = eigen_in_plane(-c);
  if (!e0 || !f0) return std::nullopt;
  return triple(g, h0, *e0, *f0);
}

std::optional<FiniteAutomorphism> a1_conjugator(const FiniteAutomorphism& x, const FiniteAutomorphism& y) {
  if (x == y) return FiniteAutomorphism::identity(x.algebra());
  if (automorphism_order(x) != automorphism_order(y)) return std::nullopt;
  auto ax = a1_normal_form(x), ay = a1_normal_form(y);
  if (!ax || !ay) return std::nullopt;
  auto alpha = compose(*ay, inverse(*ax));
  if (!(compose(alpha, compose(x, inverse(alpha))) == y)) return std::nullopt;
  return alpha;
}

// Fixed line of an involution of sl2C.
Vector a1_fixed_line(const FiniteAutomorphism& rho) {
  auto fixed = eigenvectors(rho, CyclotomicNumber(1L));
  if (fixed.size() != 1) throw Error(ErrorCode::ClassifierUnavailable, "involution without a fixed line");
  return fixed[0].coords();
}

std::uint32_t order_or_unavailable(const FiniteAutomorphism& a) {
  auto n = automorphism_order(a);
  if (!n) throw Error(ErrorCode::ClassifierUnavailable, "component data needs a finite-order automorphism");
  return *n;
}

void require_commuting(const FiniteAutomorphism& rho, const FiniteAutomorphism& beta) {
  require_same_algebra(rho.algebra(), beta.algebra());
  if (beta.antilinear() || rho.antilinear())
    throw Error(ErrorCode::InvalidInput, "component classes are defined for linear automorphisms");
  if (!commute(rho, beta)) throw Error(ErrorCode::IncompatibleData, "beta does not commute with rho");
}

bool a2_known(const FiniteAutomorphism& a) {
  const auto& g = a.algebra();
  return a.is_identity() || a == named_automorphism(g, "inv") || a == named_automorphism(g, "mu");
}

}  // namespace

FiniteAutomorphism named_automorphism(const AlgebraPtr& algebra, const std::string& name) {
  const auto& table = named(algebra);
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::InvalidInput, "unknown automorphism '" + name + "' for " + algebra->name());
  return it->second;
}

std::vector<std::string> automorphism_names(const AlgebraPtr& algebra) {
  std::vector<std::string> out;
  for (const auto& [name, a] : named(algebra)) out.push_back(name);
  return out;
}

std::optional<std::string> name_of(const FiniteAutomorphism& a) {
  try {
    for (const auto& [name, b] : named(a.algebra()))
      if (a == b) return name;
  } catch (const Error&) {
  }
  return std::nullopt;
}

const std::vector<CatalogEntry>& rho_catalog(const AlgebraPtr& algebra) {
  static std::mutex mutex;
  static std::map<const LieAlgebraTable*, std::vector<CatalogEntry>> cache;
  const Family fam = family_of(algebra);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(algebra.get());
  if (it != cache.end()) return it->second;
  std::vector<std::pair<std::string, std::uint32_t>> ids;
  if (fam == Family::A1)
    ids = {{"id", 1}, {"mu", 2}, {"rot3", 3}, {"rot4", 4}, {"rot6", 6}};
  else
    ids = {{"id", 1}, {"inv", 2}, {"mu", 2}};
  std::vector<CatalogEntry> entries;
  const auto& table = named(algebra);
  for (const auto& [id, order] : ids) entries.push_back({id, table.at(id), order});
  return cache.emplace(algebra.get(), std::move(entries)).first->second;
}

const CatalogEntry& catalog_entry(const AlgebraPtr& algebra, const std::string& id) {
  for (const auto& entry : rho_catalog(algebra))
    if (entry.id == id) return entry;
  throw Error(ErrorCode::CatalogMiss, "no catalog representative '" + id + "' for " + algebra->name());
}

std::string component_label(const FiniteAutomorphism& rho, const FiniteAutomorphism& beta) {
  require_commuting(rho, beta);
  if (family_of(rho.algebra()) == Family::A1) {
    if (order_or_unavailable(rho) != 2) return "id";
    const Vector line = a1_fixed_line(rho);
    return beta.apply(line) == line ? "id" : "tau";
  }
  if (!a2_known(rho)) throw Error(ErrorCode::ClassifierUnavailable, "A2 component data only for id, inv and mu");
  return is_inner(beta) ? "id" : "mu";
}

std::vector<std::string> component_labels(const FiniteAutomorphism& rho) {
  if (family_of(rho.algebra()) == Family::A1) {
    if (order_or_unavailable(rho) == 2) return {"id", "tau"};
    return {"id"};
  }
  if (!a2_known(rho)) throw Error(ErrorCode::ClassifierUnavailable, "A2 component data only for id, inv and mu");
  return {"id", "mu"};
}

FiniteAutomorphism component_representative(const FiniteAutomorphism& rho, const std::string& label) {
  const auto& g = rho.algebra();
  if (label == "id") return FiniteAutomorphism::identity(g);
  if (family_of(g) == Family::A2) {
    if (label == "mu" && a2_known(rho)) return named_automorphism(g, "mu");
  } else if (label == "tau" && order_or_unavailable(rho) == 2) {
    if (rho == named_automorphism(g, "mu")) return named_automorphism(g, "tau");
    auto alpha = a1_normal_form(rho);
    if (alpha) return compose(*alpha, compose(named_automorphism(g, "w"), inverse(*alpha))).with_order(2);
  }
  throw Error(ErrorCode::InvalidInput, "no component labelled '" + label + "' for this rho");
}

bool in_identity_component(const FiniteAutomorphism& a, const FiniteAutomorphism& alpha) {
  require_commuting(a, alpha);
  if (family_of(a.algebra()) == Family::A1) {
    if (order_or_unavailable(a) != 2) return true;
    const Vector line = a1_fixed_line(a);
    return alpha.apply(line) == line;
  }
  const auto n = order_or_unavailable(a);
  if (n == 1 || (n == 2 && is_inner(a))) return is_inner(alpha);
  throw Error(ErrorCode::ClassifierUnavailable, "A2 identity components only for id and inner involutions");
}

std::vector<FiniteAutomorphism> centralizer_components(const FiniteAutomorphism& a) {
  const auto& g = a.algebra();
  std::vector<FiniteAutomorphism> out{FiniteAutomorphism::identity(g)};
  if (family_of(g) == Family::A1) {
    if (order_or_unavailable(a) == 2) out.push_back(component_representative(a, "tau"));
    return out;
  }
  if (!a2_known(a)) throw Error(ErrorCode::ClassifierUnavailable, "A2 centralizers only for id, inv and mu");
  out.push_back(named_automorphism(g, "mu"));
  return out;
}

std::optional<FiniteAutomorphism> conjugator(const FiniteAutomorphism& x, const FiniteAutomorphism& y) {
  require_same_algebra(x.algebra(), y.algebra());
  if (family_of(x.algebra()) == Family::A1) return a1_conjugator(x, y);
  if (x == y) return FiniteAutomorphism::identity(x.algebra());
  return std::nullopt;
}

bool is_inner(const FiniteAutomorphism& a) {
  if (a.antilinear()) return false;
  const auto& g = a.algebra();
  const auto& real = g->realization();
  if (!real) throw Error(ErrorCode::ClassifierUnavailable, "innerness needs a matrix realization");
  const std::size_t n = real->n;
  // unknown g_{rs} at column r*n+s; condition (g B - A g)_{ij} = 0 for every basis matrix B, A = a(B)
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < g->dim(); ++j) {
    const Matrix& b = real->basis[j];
    const Matrix img = g->matrix_of(a.matrix().column(j));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vector row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[r * n + k] += b(k, c);
          row[k * n + c] -= img(r, k);
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix system(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) system(r, c) = rows[r][c];
  return !nullspace(system).empty();
}

}  // namespace kmforge
