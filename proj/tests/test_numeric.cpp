#include <random>

#include "doctest.h"
#include "kmforge/error.hpp"
#include "kmforge/numeric/cyclotomic.hpp"
#include "kmforge/numeric/matrix.hpp"

using namespace kmforge;

namespace {

CyclotomicNumber random_element(std::mt19937_64& rng, std::uint32_t level) {
  std::uniform_int_distribution<int> coef(-5, 5);
  CyclotomicNumber x;
  for (int j = 0; j < 4; ++j) x += zeta_power(level, j).scaled(Rational(coef(rng), static_cast<unsigned long>(1 + rng() % 3)));
  return x;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic examples") {
  const auto z4 = zeta_power(4, 1);
  CHECK((CyclotomicNumber(1L) + z4) * (CyclotomicNumber(1L) - z4) == CyclotomicNumber(2L));
  const auto z3 = zeta_power(3, 1);
  CHECK((CyclotomicNumber(1L) + z3 + z3 * z3).is_zero());
  const auto a = CyclotomicNumber(1L) + zeta_power(5, 1);
  CHECK((inverse(a) * a).is_one());
  CHECK_THROWS_AS(inverse(CyclotomicNumber()), Error);
}

TEST_CASE("zeta powers") {
  CHECK(zeta_power(4, 2) == CyclotomicNumber(-1L));
  CHECK(zeta_power(6, 3) == CyclotomicNumber(-1L));
  const auto w = zeta_power(12, 4);
  CHECK(w.level() == 12);
  // minimal polynomial x^2 + x + 1
  CHECK((w * w + w + CyclotomicNumber(1L)).is_zero());
  CHECK(w == zeta_power(3, 1));
  for (std::int64_t k = -7; k <= 7; ++k)
    for (std::int64_t m = -7; m <= 7; ++m) CHECK(zeta_power(12, k) * zeta_power(12, m) == zeta_power(12, k + m));
  CHECK(zeta_power(9, 0).is_one());
}

TEST_CASE("conjugation") {
  CHECK(conj(zeta_power(4, 1)) == -zeta_power(4, 1));
  CHECK(conj(CyclotomicNumber(Rational(3, 7))) == CyclotomicNumber(Rational(3, 7)));
  const auto a = CyclotomicNumber(2L) + zeta_power(8, 1).scaled(3);
  CHECK(conj(a) == CyclotomicNumber(2L) + zeta_power(8, -1).scaled(3));
  CHECK((conj(a) * a).is_real());
}

TEST_CASE("field axioms and conj on random triples") {
  std::mt19937_64 rng(7);
  for (std::uint32_t level : {4u, 12u, 20u}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_element(rng, level), b = random_element(rng, level), c = random_element(rng, level);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(conj(a * b) == conj(a) * conj(b));
      CHECK(conj(conj(a)) == a);
      if (!a.is_zero()) CHECK((a / a).is_one());
    }
  }
}

TEST_CASE("levels combine via lcm") {
  const auto x = zeta_power(3, 1) * zeta_power(4, 1);
  CHECK(x.level() == 12);
  CHECK(x == zeta_power(12, 7));
  CHECK_THROWS_AS(zeta_power(4, 1).lifted(6), Error);
  try {
    (void)(zeta_power(997, 1) + zeta_power(991, 1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LevelMismatch);
  }
}

TEST_CASE("roots of unity and square roots") {
  CHECK(root_of_unity(Rational(1, 4)) == imag_unit());
  CHECK(root_of_unity(Rational(1, 2)) == CyclotomicNumber(-1L));
  CyclotomicNumber s;
  REQUIRE(try_sqrt(CyclotomicNumber(-4L), s));
  CHECK(s * s == CyclotomicNumber(-4L));
  REQUIRE(try_sqrt(zeta_power(3, 1).scaled(Rational(9, 4)), s));
  CHECK(s * s == zeta_power(3, 1).scaled(Rational(9, 4)));
  CHECK_FALSE(try_sqrt(CyclotomicNumber(2L), s));
}

TEST_CASE("matrix helpers") {
  Matrix m(2, 2);
  m(0, 0) = 1L;
  m(0, 1) = imag_unit();
  m(1, 0) = -imag_unit();
  m(1, 1) = 1L;
  CHECK(rank(m) == 1);
  auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(m * ker[0]));
  m(1, 1) = 2L;
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((m * *inv).is_identity());
  SpanTracker span(2);
  CHECK(span.insert({imag_unit(), CyclotomicNumber(1L)}));
  CHECK_FALSE(span.insert({CyclotomicNumber(-1L), imag_unit()}));
  CHECK(span.contains({CyclotomicNumber(2L), CyclotomicNumber(-2L) * imag_unit()}));
}
