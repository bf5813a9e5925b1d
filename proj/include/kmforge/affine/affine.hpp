#pragma once

// The extension L(g, sigma) + Fc + Fd with [u,v] = [u,v]_0 + (u',v) c and [d,u] = u'.

#include <string>
#include <vector>

#include "kmforge/loop/loop.hpp"

namespace kmforge {

struct AffineElement {
  LoopElement loop;
  CyclotomicNumber c;
  CyclotomicNumber d;

  static AffineElement from_loop(LoopElement u) { return {std::move(u), {}, {}}; }
  static AffineElement central(const ContextPtr& context) { return {LoopElement(context), 1L, {}}; }
  static AffineElement derivation(const ContextPtr& context) { return {LoopElement(context), {}, 1L}; }

  bool is_zero() const { return loop.is_zero() && c.is_zero() && d.is_zero(); }
  AffineElement& operator+=(const AffineElement& rhs);
  AffineElement& operator-=(const AffineElement& rhs);
  friend AffineElement operator+(AffineElement a, const AffineElement& b) { return a += b; }
  friend AffineElement operator-(AffineElement a, const AffineElement& b) { return a -= b; }
  friend AffineElement operator*(const CyclotomicNumber& s, const AffineElement& x);
  friend bool operator==(const AffineElement& a, const AffineElement& b);
  std::string to_string() const;
};

AffineElement affine_bracket(const AffineElement& x, const AffineElement& y);

struct CheckReport {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> witnesses;

  void expect(bool ok, const std::string& what);
  void merge(const CheckReport& other);
};

/// On the degree-n spanning set plus c and d: c is central, no bracket has a
/// d-component (so d is outside the derived algebra), and d acts nontrivially
/// on every nonconstant monomial.
CheckReport center_and_derived_check(const ContextPtr& context, std::int64_t n);

/// Random element with a random loop of degree <= max_degree and random c, d.
AffineElement random_affine(const ContextPtr& context, std::mt19937_64& rng, std::int64_t max_degree);

}  // namespace kmforge
