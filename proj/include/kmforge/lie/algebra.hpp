#pragma once

// Simple Lie algebras given by rational structure constants.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kmforge/numeric/matrix.hpp"

namespace kmforge {

enum class BaseField { Complex, Real };

/// n x n matrices spanning the algebra; used to build automorphisms such as
/// Ad(g) or A -> -A^t and to decide innerness.
struct MatrixRealization {
  std::size_t n = 0;
  std::vector<Matrix> basis;
};

struct StructureTerm {
  std::size_t index;
  Rational coefficient;
};

class LieAlgebraTable {
 public:
  /// constants[(i * dim + j) * dim + k] = c_{ij}^k with [x_i, x_j] = sum_k c_{ij}^k x_k.
  LieAlgebraTable(std::string name, std::size_t dim, BaseField base, bool compact,
                  std::vector<Rational> constants, std::vector<std::string> basis_names,
                  std::optional<MatrixRealization> realization = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }
  BaseField base_field() const noexcept { return base_; }
  bool compact() const noexcept { return compact_; }
  const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }

  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  /// Nonzero terms of [x_i, x_j].
  const std::vector<StructureTerm>& bracket_terms(std::size_t i, std::size_t j) const {
    return sparse_[i * dim_ + j];
  }
  const Rational& killing(std::size_t i, std::size_t j) const { return killing_[i * dim_ + j]; }

  const std::optional<MatrixRealization>& realization() const noexcept { return realization_; }
  /// Coordinates of a matrix in the realization basis; nullopt if not in the span.
  std::optional<Vector> coordinates_of(const Matrix& m) const;
  Matrix matrix_of(const Vector& coords) const;

  std::optional<std::size_t> basis_index(const std::string& name) const;

  /// Largest |Jacobi residual| count over basis triples; zero for a valid table.
  std::size_t jacobi_violations() const;
  bool antisymmetric() const;
  bool killing_nondegenerate() const;
  bool killing_negative_definite() const;

 private:
  std::string name_;
  std::size_t dim_;
  BaseField base_;
  bool compact_;
  std::vector<Rational> constants_;
  std::vector<std::vector<StructureTerm>> sparse_;
  std::vector<Rational> killing_;
  std::vector<std::string> basis_names_;
  std::optional<MatrixRealization> realization_;
  std::optional<Matrix> coordinate_solver_;
  std::vector<std::size_t> solver_rows_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebraTable>;

/// Builds and validates a table from basis matrices; throws InvalidInput if
/// the span is not bracket-closed with rational structure constants.
AlgebraPtr table_from_matrices(std::string name, std::vector<Matrix> basis,
                               std::vector<std::string> basis_names, BaseField base, bool compact);

/// sl2C, sl3C, su2, su3.
AlgebraPtr builtin_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr algebra, Vector coords);
  static AlgebraElement zero(AlgebraPtr algebra);
  static AlgebraElement basis(AlgebraPtr algebra, std::size_t index);
  /// Basis element by name, e.g. "e", "h", "f" for sl2C.
  static AlgebraElement basis(AlgebraPtr algebra, const std::string& name);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Vector& coords() const noexcept { return coords_; }
  bool is_zero() const { return kmforge::is_zero(coords_); }

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const CyclotomicNumber& s, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Coordinatewise field conjugation (conjugation of g_C w.r.t. the real span of the basis).
  AlgebraElement conjugated() const;
  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  Vector coords_;
};

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
CyclotomicNumber killing_form(const AlgebraElement& x, const AlgebraElement& y);
/// Matrix of ad x in the table basis.
Matrix ad_matrix(const AlgebraElement& x);
/// Bracket on raw coordinate vectors.
Vector bracket_coords(const LieAlgebraTable& table, const Vector& x, const Vector& y);
CyclotomicNumber killing_coords(const LieAlgebraTable& table, const Vector& x, const Vector& y);

}  // namespace kmforge
