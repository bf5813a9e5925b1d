#include "kmforge/lie/algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "kmforge/error.hpp"

namespace kmforge {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

}  // namespace

LieAlgebraTable::LieAlgebraTable(std::string name, std::size_t dim, BaseField base, bool compact,
                                 std::vector<Rational> constants, std::vector<std::string> basis_names,
                                 std::optional<MatrixRealization> realization)
    : name_(std::move(name)),
      dim_(dim),
      base_(base),
      compact_(compact),
      constants_(std::move(constants)),
      basis_names_(std::move(basis_names)),
      realization_(std::move(realization)) {
  if (constants_.size() != dim_ * dim_ * dim_)
    throw Error(ErrorCode::InvalidInput, "structure constant array has wrong size");
  if (basis_names_.size() != dim_) {
    basis_names_.clear();
    for (std::size_t i = 0; i < dim_; ++i) basis_names_.push_back("x" + std::to_string(i));
  }
  sparse_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = structure_constant(i, j, k);
        if (c != 0) sparse_[i * dim_ + j].push_back({k, c});
      }
  // kappa(x_i, x_j) = tr(ad x_i ad x_j) = sum_{k,l} c_{jk}^l c_{il}^k
  killing_.assign(dim_ * dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k < dim_; ++k)
        for (const auto& term : sparse_[j * dim_ + k]) sum += term.coefficient * structure_constant(i, term.index, k);
      killing_[i * dim_ + j] = sum;
    }
  if (realization_) {
    std::vector<Vector> columns;
    for (const auto& b : realization_->basis) columns.push_back(flatten(b));
    const Matrix full = Matrix::from_columns(columns, realization_->n * realization_->n);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < full.rows(); ++r) {
      Vector row(dim_);
      for (std::size_t c = 0; c < dim_; ++c) row[c] = full(r, c);
      rows.push_back(std::move(row));
    }
    solver_rows_ = independent_subset(rows);
    if (solver_rows_.size() != dim_) throw Error(ErrorCode::InvalidInput, "realization basis is dependent");
    Matrix square(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) square(r, c) = full(solver_rows_[r], c);
    coordinate_solver_ = kmforge::inverse(square);
  }
}

std::optional<Vector> LieAlgebraTable::coordinates_of(const Matrix& m) const {
  if (!realization_) throw Error(ErrorCode::InvalidInput, name_ + " has no matrix realization");
  const Vector flat = flatten(m);
  Vector rhs(dim_);
  for (std::size_t r = 0; r < dim_; ++r) rhs[r] = flat[solver_rows_[r]];
  Vector coords = (*coordinate_solver_) * rhs;
  if (!(flatten(matrix_of(coords)) == flat)) return std::nullopt;
  return coords;
}

Matrix LieAlgebraTable::matrix_of(const Vector& coords) const {
  if (!realization_) throw Error(ErrorCode::InvalidInput, name_ + " has no matrix realization");
  const std::size_t n = realization_->n;
  Matrix out(n, n);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (coords[i].is_zero()) continue;
    out = out + realization_->basis[i].scaled(coords[i]);
  }
  return out;
}

std::optional<std::size_t> LieAlgebraTable::basis_index(const std::string& name) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (basis_names_[i] == name) return i;
  return std::nullopt;
}

std::size_t LieAlgebraTable::jacobi_violations() const {
  std::size_t bad = 0;
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t c = 0; c < dim_; ++c) {
        // [x_a,[x_b,x_c]] + [x_b,[x_c,x_a]] + [x_c,[x_a,x_b]]
        std::vector<Rational> sum(dim_, Rational(0));
        auto accumulate = [&](std::size_t x, std::size_t y, std::size_t z) {
          for (const auto& inner : sparse_[y * dim_ + z])
            for (const auto& outer : sparse_[x * dim_ + inner.index])
              sum[outer.index] += inner.coefficient * outer.coefficient;
        };
        accumulate(a, b, c);
        accumulate(b, c, a);
        accumulate(c, a, b);
        for (const auto& s : sum)
          if (s != 0) {
            ++bad;
            break;
          }
      }
  return bad;
}

bool LieAlgebraTable::antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (structure_constant(i, j, k) != -structure_constant(j, i, k)) return false;
  return true;
}

bool LieAlgebraTable::killing_nondegenerate() const {
  Matrix k(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) k(i, j) = CyclotomicNumber(killing(i, j));
  return rank(k) == dim_;
}

bool LieAlgebraTable::killing_negative_definite() const {
  // -kappa positive definite iff symmetric Gaussian elimination sees only positive pivots
  std::vector<Rational> m(dim_ * dim_);
  for (std::size_t i = 0; i < dim_ * dim_; ++i) m[i] = -killing_[i];
  for (std::size_t p = 0; p < dim_; ++p) {
    const Rational pivot = m[p * dim_ + p];
    if (pivot <= 0) return false;
    for (std::size_t r = p + 1; r < dim_; ++r) {
      const Rational f = m[r * dim_ + p] / pivot;
      if (f == 0) continue;
      for (std::size_t c = p; c < dim_; ++c) m[r * dim_ + c] -= f * m[p * dim_ + c];
    }
  }
  return true;
}

AlgebraPtr table_from_matrices(std::string name, std::vector<Matrix> basis, std::vector<std::string> basis_names,
                               BaseField base, bool compact) {
  if (basis.empty()) throw Error(ErrorCode::InvalidInput, "empty basis");
  const std::size_t n = basis.front().rows();
  const std::size_t dim = basis.size();
  MatrixRealization real{n, basis};
  // a provisional table gives access to coordinates_of
  LieAlgebraTable probe(name, dim, base, compact, std::vector<Rational>(dim * dim * dim, Rational(0)), basis_names,
                        real);
  std::vector<Rational> constants(dim * dim * dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      auto coords = probe.coordinates_of(comm);
      if (!coords) throw Error(ErrorCode::InvalidInput, name + ": basis span is not bracket-closed");
      for (std::size_t k = 0; k < dim; ++k) {
        if (!(*coords)[k].is_rational())
          throw Error(ErrorCode::InvalidInput, name + ": structure constants are not rational");
        constants[(i * dim + j) * dim + k] = (*coords)[k].to_rational();
      }
    }
  auto table = std::make_shared<const LieAlgebraTable>(std::move(name), dim, base, compact, std::move(constants),
                                                       std::move(basis_names), std::move(real));
  if (!table->antisymmetric() || table->jacobi_violations() != 0)
    throw Error(ErrorCode::InvalidInput, table->name() + ": invalid structure constants");
  if (!table->killing_nondegenerate())
    throw Error(ErrorCode::InvalidInput, table->name() + ": Killing form is degenerate");
  if (compact != table->killing_negative_definite())
    throw Error(ErrorCode::InvalidInput, table->name() + ": compact flag disagrees with the Killing form");
  return table;
}

namespace {

Matrix unit(std::size_t n, std::size_t r, std::size_t c, const CyclotomicNumber& v = CyclotomicNumber(1L)) {
  Matrix m(n, n);
  m(r, c) = v;
  return m;
}

AlgebraPtr make_sl2c() {
  const CyclotomicNumber one(1L);
  Matrix h(2, 2);
  h(0, 0) = one;
  h(1, 1) = -one;
  return table_from_matrices("sl2C", {unit(2, 0, 1), h, unit(2, 1, 0)}, {"e", "h", "f"}, BaseField::Complex, false);
}

AlgebraPtr make_su2() {
  const CyclotomicNumber i = imag_unit();
  Matrix u1(2, 2), u2(2, 2), u3(2, 2);
  u1(0, 0) = i;
  u1(1, 1) = -i;
  u2(0, 1) = CyclotomicNumber(1L);
  u2(1, 0) = CyclotomicNumber(-1L);
  u3(0, 1) = i;
  u3(1, 0) = i;
  return table_from_matrices("su2", {u1, u2, u3}, {"u1", "u2", "u3"}, BaseField::Real, true);
}

Matrix diag3(long a, long b, long c) {
  Matrix m(3, 3);
  m(0, 0) = CyclotomicNumber(a);
  m(1, 1) = CyclotomicNumber(b);
  m(2, 2) = CyclotomicNumber(c);
  return m;
}

AlgebraPtr make_sl3c() {
  return table_from_matrices("sl3C",
                             {unit(3, 0, 1), unit(3, 0, 2), unit(3, 1, 2), diag3(1, -1, 0), diag3(0, 1, -1),
                              unit(3, 1, 0), unit(3, 2, 0), unit(3, 2, 1)},
                             {"e12", "e13", "e23", "h1", "h2", "e21", "e31", "e32"}, BaseField::Complex, false);
}

AlgebraPtr make_su3() {
  const CyclotomicNumber i = imag_unit();
  std::vector<Matrix> basis{diag3(1, -1, 0).scaled(i), diag3(0, 1, -1).scaled(i)};
  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [a, b] : pairs) basis.push_back(unit(3, a, b) - unit(3, b, a));
  for (auto [a, b] : pairs) basis.push_back((unit(3, a, b) + unit(3, b, a)).scaled(i));
  return table_from_matrices("su3", std::move(basis), {"ih1", "ih2", "a12", "a13", "a23", "s12", "s13", "s23"},
                             BaseField::Real, true);
}

}  // namespace

AlgebraPtr builtin_algebra(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, AlgebraPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  AlgebraPtr table;
  if (name == "sl2C") table = make_sl2c();
  else if (name == "sl3C") table = make_sl3c();
  else if (name == "su2") table = make_su2();
  else if (name == "su3") table = make_su3();
  else throw Error(ErrorCode::UnknownAlgebra, "unknown algebra '" + name + "'");
  cache.emplace(name, table);
  return table;
}

std::vector<std::string> builtin_algebra_names() { return {"sl2C", "sl3C", "su2", "su3"}; }

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b && (!a || !b || a->name() != b->name()))
    throw Error(ErrorCode::AlgebraMismatch, "elements belong to different algebras");
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, Vector coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_ || coords_.size() != algebra_->dim())
    throw Error(ErrorCode::InvalidInput, "coordinate vector length does not match the algebra dimension");
}

AlgebraElement AlgebraElement::zero(AlgebraPtr algebra) {
  const std::size_t d = algebra->dim();
  return AlgebraElement(std::move(algebra), Vector(d));
}

AlgebraElement AlgebraElement::basis(AlgebraPtr algebra, std::size_t index) {
  Vector v(algebra->dim());
  v.at(index) = CyclotomicNumber(1L);
  return AlgebraElement(std::move(algebra), std::move(v));
}

AlgebraElement AlgebraElement::basis(AlgebraPtr algebra, const std::string& name) {
  auto idx = algebra->basis_index(name);
  if (!idx) throw Error(ErrorCode::InvalidInput, "no basis element named '" + name + "'");
  return basis(std::move(algebra), *idx);
}

AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(algebra_, scale(CyclotomicNumber(-1L), coords_)); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_algebra(algebra_, rhs.algebra_);
  coords_ = add(coords_, rhs.coords_);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_algebra(algebra_, rhs.algebra_);
  coords_ = sub(coords_, rhs.coords_);
  return *this;
}

AlgebraElement operator*(const CyclotomicNumber& s, const AlgebraElement& x) {
  return AlgebraElement(x.algebra_, scale(s, x.coords_));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  return a.coords_ == b.coords_;
}

AlgebraElement AlgebraElement::conjugated() const { return AlgebraElement(algebra_, conj(coords_)); }

std::string AlgebraElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coords_[i] << ")" << algebra_->basis_names()[i];
  }
  if (first) os << "0";
  return os.str();
}

Vector bracket_coords(const LieAlgebraTable& table, const Vector& x, const Vector& y) {
  const std::size_t d = table.dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = table.bracket_terms(i, j);
      if (terms.empty()) continue;
      const CyclotomicNumber xy = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += xy.scaled(t.coefficient);
    }
  }
  return out;
}

CyclotomicNumber killing_coords(const LieAlgebraTable& table, const Vector& x, const Vector& y) {
  const std::size_t d = table.dim();
  CyclotomicNumber sum;
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Rational& k = table.killing(i, j);
      if (k != 0) sum += (x[i] * y[j]).scaled(k);
    }
  }
  return sum;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return AlgebraElement(x.algebra(), bracket_coords(*x.algebra(), x.coords(), y.coords()));
}

CyclotomicNumber killing_form(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return killing_coords(*x.algebra(), x.coords(), y.coords());
}

Matrix ad_matrix(const AlgebraElement& x) {
  const auto& table = *x.algebra();
  const std::size_t d = table.dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vector col = bracket_coords(table, x.coords(), AlgebraElement::basis(x.algebra(), j).coords());
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace kmforge
