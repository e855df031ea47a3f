#pragma once

#include <array>
#include <cstdint>
#include <numeric>

#include "laver/element.hpp"
#include "laver/errors.hpp"
#include "laver/row.hpp"

namespace laver {

// The threshold chain of p walks the partial bit-sums p_1 < p_2 < ... < p_r
// (p_j = sum of the j lowest set bits of p). The row of p_1 = 2^{nu_1} is the
// identity on [0, 2^{nu_1}); at each later step the row of p_{j+1} is derived
// from the row of p_j by the threshold rule:
//   theta(p_{j+1}) == period(p_j)  ->  the row doubles, the second half being
//                                      the first half plus the new bit;
//   otherwise                      ->  the last theta(p_{j+1}) entries gain
//                                      the new bit.
// Everything below evaluates rows through that rule given a theta source
// `theta_of(x)`, which is only ever consulted for partial sums with at least
// two set bits (never for powers of two).

template <typename ThetaFn>
std::uint64_t chain_period(ElementId p, ThetaFn&& theta_of) {
  std::uint64_t period = lowest_bit(p);
  ElementId partial = lowest_bit(p);
  for (ElementId rest = p ^ lowest_bit(p); rest != 0;) {
    const ElementId bit = lowest_bit(rest);
    rest ^= bit;
    partial += bit;
    if (theta_of(partial) == period) period *= 2;
  }
  return period;
}

// Single-column evaluation: p*q without materializing the row. Walks the
// chain upward collecting per-step data, then resolves the column index
// top-down. O(popcount(p)) time and space.
template <typename ThetaFn>
ElementId chain_product(ElementId p, ElementId q, ThetaFn&& theta_of) {
  struct Step {
    ElementId bit;
    std::uint64_t below;  // period of the previous partial sum
    std::uint64_t theta;
  };
  std::array<Step, 62> steps;
  int count = 0;

  std::uint64_t period = lowest_bit(p);
  ElementId partial = lowest_bit(p);
  for (ElementId rest = p ^ lowest_bit(p); rest != 0;) {
    const ElementId bit = lowest_bit(rest);
    rest ^= bit;
    partial += bit;
    const std::uint64_t theta = theta_of(partial);
    steps[count++] = {bit, period, theta};
    if (theta == period) period *= 2;
  }

  std::uint64_t column = q % period;
  ElementId gained = 0;
  for (int i = count - 1; i >= 0; --i) {
    const Step& s = steps[i];
    if (s.theta == s.below) {
      if (column >= s.below) {
        gained += s.bit;
        column -= s.below;
      }
    } else if (column >= s.below - s.theta) {
      gained += s.bit;
    }
  }
  return gained + column;  // base row is the identity
}

// Materializes the row of p. `max_entries` bounds the final period.
template <typename ThetaFn>
Row chain_row(ElementId p, ThetaFn&& theta_of, std::uint64_t max_entries) {
  Row row;
  row.owner = p;

  const ElementId base = lowest_bit(p);
  if (base > max_entries)
    throw BoundError("row of " + std::to_string(p) +
                     " exceeds the row materialization bound");
  row.values.resize(static_cast<std::size_t>(base));
  std::iota(row.values.begin(), row.values.end(), ElementId{0});

  std::uint64_t period = base;
  ElementId partial = base;
  for (ElementId rest = p ^ base; rest != 0;) {
    const ElementId bit = lowest_bit(rest);
    rest ^= bit;
    partial += bit;
    const std::uint64_t theta = theta_of(partial);
    if (theta == period) {
      if (period * 2 > max_entries)
        throw BoundError("row of " + std::to_string(p) +
                         " exceeds the row materialization bound");
      row.values.resize(static_cast<std::size_t>(period * 2));
      for (std::uint64_t i = 0; i < period; ++i)
        row.values[period + i] = row.values[i] + bit;
      period *= 2;
    } else {
      for (std::uint64_t i = period - theta; i < period; ++i)
        row.values[i] += bit;
    }
  }
  return row;
}

}  // namespace laver
