#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "laver/table.hpp"

namespace laver {

// Parse tree of a parenthesized term over the binary operation: leaves are
// positive integer atoms, internal nodes are applications. Stored as a node
// pool in which children always precede their parent, so evaluation is a
// single forward pass.
class LdTerm {
 public:
  struct Node {
    std::int32_t left = -1;  // -1 marks an atom
    std::int32_t right = -1;
    ElementId atom = 0;
  };

  static LdTerm atom(ElementId value);
  static LdTerm apply(const LdTerm& lhs, const LdTerm& rhs);
  // Left power of the generator: 1^(k) = ((1*1)*1)...*1 with k leaves.
  static LdTerm generator_power(std::uint64_t k);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::int32_t root() const { return root_; }
  std::size_t leaf_count() const;

  // Canonical form: atoms in decimal, applications as "(l*r)", no spaces.
  std::string unparse() const;

  bool operator==(const LdTerm& other) const;

 private:
  std::int32_t graft(const LdTerm& src);  // appends src's nodes, returns root

  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

// Grammar:  expr := atom | "(" expr op expr ")"
//           atom := integer >= 1 | "1^(" k ")"   (k-th left generator power)
//           op   := "*" | U+22C6
// Whitespace is insignificant. Chains without parentheses are rejected: the
// operation is not associative, so "a*b*c" has no default reading.
LdTerm parse_term(std::string_view text);

// Bottom-up evaluation in the order-2^order table; atoms must lie in
// [1, 2^order].
ElementId eval_term(const LdTerm& term, int order, Table& table);

bool equal_in(int order, const LdTerm& s, const LdTerm& t, Table& table);

}  // namespace laver
