#include "kmforge/numeric/levels.hpp"

#include <numeric>

namespace kmforge {

std::uint32_t level_of(const Vector& v) {
  std::uint32_t l = 1;
  for (const auto& x : v)
    if (!x.is_rational()) l = std::lcm(l, x.level());
  return l;
}

std::uint32_t level_of(const Matrix& m) {
  std::uint32_t l = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_rational()) l = std::lcm(l, m(r, c).level());
  return l;
}

Vector lift(const Vector& v, std::uint32_t level) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.is_rational() ? CyclotomicNumber(x.to_rational()).lifted(level) : x.lifted(level));
  return out;
}

Matrix lift(const Matrix& m, std::uint32_t level) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = m(r, c);
      out(r, c) = x.is_rational() ? CyclotomicNumber(x.to_rational()).lifted(level) : x.lifted(level);
    }
  return out;
}

}  // namespace kmforge
