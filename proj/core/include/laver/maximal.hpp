#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laver/table.hpp"

namespace laver {

// Maximal elements are the p with period(p) = 2^bit(p-1): their rows
// enumerate exactly the subsets of p-1 in increasing order. They are
// recognized by the shape of p-1's binary word,
//   1 0^{b0} 1^{2^{a_1}} 0^{b_1 2^{a_1}} ... 1^{2^{a_r}} 0^{b_r 2^{a_r}}
// with a_1 < a_2 < ... < a_r, and classified by binary partitions.

struct MaximalBlock {
  int exponent = 0;            // a_i
  std::uint64_t repeats = 0;   // b_i (zeros run = b_i * 2^{a_i})
  bool operator==(const MaximalBlock&) const = default;
};

struct MaximalPattern {
  std::uint64_t leader_gap = 0;  // b0: zeros right of the leading 1
  std::vector<MaximalBlock> blocks;
  bool operator==(const MaximalPattern&) const = default;
};

// Parses the word of p-1; nullopt when p is not maximal. Defined for p >= 2
// (p = 1 is maximal but has an empty word).
std::optional<MaximalPattern> maximal_pattern(ElementId p);

// Pattern recognizer; O(word length).
bool is_maximal(ElementId p);

// The defining test, period(p) == 2^bit(p-1), through the engine.
bool is_maximal_by_period(Table& table, ElementId p);

// p*q for maximal p in O(word) time: scatter the low bit(p-1) bits of q
// onto the set bits of p-1, lowest to lowest. q is reduced mod period(p).
ElementId maximal_prod(ElementId p, ElementId q);

// Multiset of powers of two as (exponent, multiplicity) pairs with strictly
// increasing exponents.
struct BinaryPartition {
  std::vector<std::pair<int, std::uint64_t>> parts;
  std::uint64_t sum() const;
  bool operator==(const BinaryPartition&) const = default;
};

struct MaximalDecomposition {
  BinaryPartition partition;   // part 2^{a_i} with multiplicity b_i + 1
  std::uint64_t leader_gap = 0;
};

// Requires is_maximal(p) and p >= 2. For p in (2^{n-1}+2^{n-2}, 2^n] the
// leader gap is 0 and the partition sums to n-1 (the bijection range).
MaximalDecomposition maximal_to_partition(ElementId p);

// Inverse: rebuilds p from the partition and leader gap.
ElementId partition_to_maximal(const BinaryPartition& partition,
                               std::uint64_t leader_gap);

// All maximal elements in [lo, hi], increasing.
std::vector<ElementId> list_maximal(ElementId lo, ElementId hi);

// Number of binary partitions of n (a(2m+1) = a(2m) = a(2m-1) + a(m)).
std::uint64_t count_binary_partitions(std::uint64_t n);

// Inserts 0^{b * 2^a} into the 0/1 word w = uv, where u carries
// c = ones(w) mod 2^{a+1} ones (2^{a+1} when the remainder is 0, so the
// leading 1 stays in u) and v's ones count is a multiple of 2^{a+1}.
// b = 0 returns the word unchanged.
std::string insert_zero_block(const std::string& word, int a, std::uint64_t b);

}  // namespace laver
