#include "laver/oracle.hpp"

#include "laver/errors.hpp"

namespace laver {

BruteTable::BruteTable(int order) : order_(order) {
  if (order < 1 || order > 12)
    throw DomainError("brute-force tables are limited to order <= 12");
  size_ = ElementId{1} << order;
  cells_.assign(static_cast<std::size_t>(size_) << order, 0);

  const auto cell = [this](ElementId p, ElementId q) -> std::uint32_t& {
    return cells_[static_cast<std::size_t>(p - 1) << order_ | (q - 1)];
  };
  // The top row is the identity, straight from p*1 = p+1 cyclically.
  for (ElementId q = 1; q <= size_; ++q)
    cell(size_, q) = static_cast<std::uint32_t>(q);
  // Below it, p*(q+1) = (p*q)*(p+1) reads only rows strictly above p.
  for (ElementId p = size_ - 1; p >= 1; --p) {
    cell(p, 1) = static_cast<std::uint32_t>(p + 1);
    for (ElementId q = 1; q < size_; ++q)
      cell(p, q + 1) = static_cast<std::uint32_t>(star(star(p, q), p + 1));
  }
}

std::uint64_t BruteTable::back_period(ElementId p) const {
  if (p < 1 || p >= size_)
    throw DomainError("back_period requires p in [1, 2^n)");
  // The row increases strictly up to p-1, then repeats.
  for (ElementId r = 0; r < size_; ++r)
    if (back(p, r) == p - 1) return r + 1;
  throw DomainError("row of " + std::to_string(p) + " never reaches p-1");
}

std::uint64_t BruteTable::back_theta(ElementId p) const {
  const std::uint64_t period = back_period(p);
  const ElementId top = top_bit(p);
  std::uint64_t above = 0;
  for (ElementId r = 0; r < period; ++r)
    if (back(p, r) >= top) ++above;
  if (above == 0) return top >> 1;  // power of two
  return above;
}

std::uint64_t BruteTable::star_period(ElementId p) const {
  if (p < 1 || p > size_) throw DomainError("star_period requires p in [1, 2^n]");
  // Smallest power of two T with row(q) = row(q mod T).
  for (std::uint64_t t = 1; t <= size_; t *= 2) {
    bool ok = true;
    for (ElementId q = 1; ok && q + t <= size_; ++q)
      ok = star(p, q) == star(p, q + t);
    if (ok) return t;
  }
  return size_;
}

}  // namespace laver
