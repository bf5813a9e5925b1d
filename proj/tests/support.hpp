#pragma once

#include "kmforge/lie/algebra.hpp"
#include "kmforge/lie/automorphism.hpp"

namespace testing_support {

using namespace kmforge;

inline Matrix diag(std::vector<CyclotomicNumber> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

inline AlgebraPtr sl2() { return builtin_algebra("sl2C"); }
inline AlgebraElement e() { return AlgebraElement::basis(sl2(), "e"); }
inline AlgebraElement h() { return AlgebraElement::basis(sl2(), "h"); }
inline AlgebraElement f() { return AlgebraElement::basis(sl2(), "f"); }
inline FiniteAutomorphism tau() { return FiniteAutomorphism::adjoint(sl2(), diag({1L, -1L})); }
inline FiniteAutomorphism mu() {
  return FiniteAutomorphism::from_matrix_map(sl2(), [](const Matrix& a) { return a.transposed().scaled(-1L); });
}
inline CyclotomicNumber num(long n, long d = 1) { return CyclotomicNumber(Rational(n, static_cast<unsigned long>(d))); }
inline CyclotomicNumber I() { return imag_unit(); }

}  // namespace testing_support
