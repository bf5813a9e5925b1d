#pragma once

#include <cstdint>

#include "kmforge/numeric/matrix.hpp"

namespace kmforge {

/// lcm of the entry levels.
std::uint32_t level_of(const Vector& v);
std::uint32_t level_of(const Matrix& m);

Vector lift(const Vector& v, std::uint32_t level);
Matrix lift(const Matrix& m, std::uint32_t level);

}  // namespace kmforge
