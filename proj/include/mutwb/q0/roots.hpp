#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mutwb/numeric.hpp"
#include "mutwb/prime_field.hpp"

namespace mutwb {

/// Roots in the base field with multiplicities, for a polynomial given from degree 0 upward.
std::vector<std::pair<Rational, std::size_t>> base_field_roots(const std::vector<Rational>& poly);

template <std::uint32_t P>
std::vector<std::pair<PrimeField<P>, std::size_t>> base_field_roots(const std::vector<PrimeField<P>>& poly);

/// Divides out (x - r) as often as it divides; returns the multiplicity.
template <class F>
std::size_t strip_root(std::vector<F>& poly, const F& r) {
  std::size_t mult = 0;
  while (poly.size() > 1) {
    // synthetic division
    std::vector<F> q(poly.size() - 1);
    F carry(0);
    for (std::size_t d = poly.size(); d-- > 1;) {
      carry = poly[d] + carry * r;
      q[d - 1] = carry;
    }
    if (!(poly[0] + carry * r == F(0))) break;
    poly = std::move(q);
    ++mult;
  }
  return mult;
}

template <std::uint32_t P>
std::vector<std::pair<PrimeField<P>, std::size_t>> base_field_roots(const std::vector<PrimeField<P>>& poly) {
  std::vector<std::pair<PrimeField<P>, std::size_t>> out;
  std::vector<PrimeField<P>> rest = poly;
  for (std::uint32_t v = 0; v < P; ++v) {
    PrimeField<P> r(static_cast<long>(v));
    std::size_t m = strip_root(rest, r);
    if (m) out.emplace_back(r, m);
  }
  return out;
}

}  // namespace mutwb
