#include "laver/maximal.hpp"

namespace laver {

std::optional<MaximalPattern> maximal_pattern(ElementId p) {
  if (p < 2) throw DomainError("maximal_pattern requires p >= 2");
  check_element(p);
  const ElementId w = p - 1;

  MaximalPattern pattern;
  int i = floor_log2(w) - 1;  // position below the leader bit
  const auto bit = [w](int pos) { return (w >> pos) & 1; };

  while (i >= 0 && !bit(i)) {
    ++pattern.leader_gap;
    --i;
  }

  int prev_exp = -1;
  while (i >= 0) {
    std::uint64_t ones = 0;
    while (i >= 0 && bit(i)) {
      ++ones;
      --i;
    }
    // A merged ones run splits into strictly increasing powers: the binary
    // expansion of its length, read from the lowest bit.
    for (ElementId rest = ones; rest != 0; rest ^= lowest_bit(rest)) {
      const int exp = floor_log2(lowest_bit(rest));
      if (exp <= prev_exp) return std::nullopt;
      pattern.blocks.push_back({exp, 0});
      prev_exp = exp;
    }
    std::uint64_t zeros = 0;
    while (i >= 0 && !bit(i)) {
      ++zeros;
      --i;
    }
    const std::uint64_t granularity = std::uint64_t{1} << prev_exp;
    if (zeros % granularity != 0) return std::nullopt;
    pattern.blocks.back().repeats = zeros / granularity;
  }
  return pattern;
}

bool is_maximal(ElementId p) {
  if (p == 0) throw DomainError("is_maximal requires p >= 1");
  if (p == 1) return true;
  return maximal_pattern(p).has_value();
}

bool is_maximal_by_period(Table& table, ElementId p) {
  if (p == 0) throw DomainError("is_maximal_by_period requires p >= 1");
  return table.period(p) == std::uint64_t{1} << bit_count(p - 1);
}

ElementId maximal_prod(ElementId p, ElementId q) {
  if (!is_maximal(p))
    throw DomainError("maximal_prod requires a maximal first operand");
  check_element(q);
  ElementId mask = p - 1;
  ElementId bits = q % (ElementId{1} << bit_count(mask));
  ElementId out = 0;
  while (mask != 0 && bits != 0) {
    if (bits & 1) out |= lowest_bit(mask);
    bits >>= 1;
    mask ^= lowest_bit(mask);
  }
  return out;
}

std::uint64_t BinaryPartition::sum() const {
  std::uint64_t total = 0;
  for (const auto& [exp, mult] : parts) total += mult << exp;
  return total;
}

MaximalDecomposition maximal_to_partition(ElementId p) {
  if (p < 2) throw DomainError("maximal_to_partition requires p >= 2");
  const auto pattern = maximal_pattern(p);
  if (!pattern) throw DomainError(std::to_string(p) + " is not maximal");
  MaximalDecomposition d;
  d.leader_gap = pattern->leader_gap;
  for (const MaximalBlock& b : pattern->blocks)
    d.partition.parts.emplace_back(b.exponent, b.repeats + 1);
  return d;
}

ElementId partition_to_maximal(const BinaryPartition& partition,
                               std::uint64_t leader_gap) {
  int prev_exp = -1;
  std::uint64_t length = 1 + leader_gap;
  for (const auto& [exp, mult] : partition.parts) {
    if (exp <= prev_exp)
      throw DomainError("partition exponents must be strictly increasing");
    if (exp > kMaxOrder) throw BoundError("partition exponent too large");
    if (mult < 1) throw DomainError("partition multiplicities must be >= 1");
    prev_exp = exp;
    length += mult << exp;
  }
  if (length > 62)
    throw BoundError("encoded word exceeds the 62-bit element bound");

  ElementId w = 1;
  w <<= leader_gap;
  for (const auto& [exp, mult] : partition.parts) {
    const std::uint64_t run = std::uint64_t{1} << exp;
    w = (w << run) | ((ElementId{1} << run) - 1);
    w <<= (mult - 1) << exp;
  }
  return w + 1;
}

std::vector<ElementId> list_maximal(ElementId lo, ElementId hi) {
  if (lo < 1 || lo > hi) throw DomainError("list_maximal requires 1 <= lo <= hi");
  check_element(hi);
  std::vector<ElementId> out;
  for (ElementId p = lo; p <= hi; ++p)
    if (is_maximal(p)) out.push_back(p);
  return out;
}

std::uint64_t count_binary_partitions(std::uint64_t n) {
  if (n > (std::uint64_t{1} << 20))
    throw BoundError("binary partition counts limited to n <= 2^20");
  static_assert(sizeof(std::uint64_t) == 8);
  std::vector<std::uint64_t> a(n + 1);
  a[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    a[m] = a[m - 1];
    if (m % 2 == 0) {
      if (a[m] > ~std::uint64_t{0} - a[m / 2])
        throw BoundError("binary partition count overflows 64 bits");
      a[m] += a[m / 2];
    }
  }
  return a[n];
}

std::string insert_zero_block(const std::string& word, int a, std::uint64_t b) {
  if (word.empty()) throw DomainError("insertion into an empty word");
  if (a < 0 || a > kMaxOrder) throw DomainError("block exponent out of range");
  std::uint64_t ones = 0;
  for (char c : word) {
    if (c != '0' && c != '1') throw DomainError("word must consist of 0s and 1s");
    if (c == '1') ++ones;
  }
  if (ones == 0)
    throw DomainError("insertion requires a word with at least one 1");
  if (b == 0) return word;

  const std::uint64_t zeros = b << a;
  if (word.size() + zeros > 4096) throw BoundError("inserted word too long");

  const std::uint64_t modulus = std::uint64_t{1} << (a + 1);
  std::uint64_t ones_in_u = ones % modulus;
  if (ones_in_u == 0) ones_in_u = modulus;
  if (ones_in_u > ones)
    throw DomainError("no admissible split for this block");

  // Boundary right after the ones_in_u-th 1; zeros between the split ones
  // commute with the inserted block, so this choice is canonical.
  std::size_t cut = 0;
  for (std::uint64_t seen = 0; seen < ones_in_u; ++cut)
    if (word[cut] == '1') ++seen;

  std::string out;
  out.reserve(word.size() + zeros);
  out.append(word, 0, cut);
  out.append(zeros, '0');
  out.append(word, cut, std::string::npos);
  return out;
}

}  // namespace laver
