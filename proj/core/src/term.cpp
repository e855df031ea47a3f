#include "laver/term.hpp"

namespace laver {

namespace {
constexpr std::uint64_t kMaxGeneratorPower = std::uint64_t{1} << 20;
constexpr int kMaxNesting = 10000;
}  // namespace

LdTerm LdTerm::atom(ElementId value) {
  if (value < 1) throw DomainError("term atoms must be >= 1");
  check_element(value);
  LdTerm t;
  t.nodes_.push_back({-1, -1, value});
  t.root_ = 0;
  return t;
}

std::int32_t LdTerm::graft(const LdTerm& src) {
  const auto offset = static_cast<std::int32_t>(nodes_.size());
  for (Node n : src.nodes_) {
    if (n.left >= 0) {
      n.left += offset;
      n.right += offset;
    }
    nodes_.push_back(n);
  }
  return src.root_ + offset;
}

LdTerm LdTerm::apply(const LdTerm& lhs, const LdTerm& rhs) {
  LdTerm t;
  t.nodes_.reserve(lhs.nodes_.size() + rhs.nodes_.size() + 1);
  const std::int32_t l = t.graft(lhs);
  const std::int32_t r = t.graft(rhs);
  t.nodes_.push_back({l, r, 0});
  t.root_ = static_cast<std::int32_t>(t.nodes_.size()) - 1;
  return t;
}

LdTerm LdTerm::generator_power(std::uint64_t k) {
  if (k < 1) throw DomainError("left power exponent must be >= 1");
  if (k > kMaxGeneratorPower)
    throw BoundError("generator power too large to expand as a tree");
  LdTerm t;
  t.nodes_.reserve(2 * k - 1);
  t.nodes_.push_back({-1, -1, 1});
  std::int32_t acc = 0;
  for (std::uint64_t i = 1; i < k; ++i) {
    t.nodes_.push_back({-1, -1, 1});
    const auto leaf = static_cast<std::int32_t>(t.nodes_.size()) - 1;
    t.nodes_.push_back({acc, leaf, 0});
    acc = static_cast<std::int32_t>(t.nodes_.size()) - 1;
  }
  t.root_ = acc;
  return t;
}

std::size_t LdTerm::leaf_count() const {
  std::size_t leaves = 0;
  for (const Node& n : nodes_)
    if (n.left < 0) ++leaves;
  return leaves;
}

std::string LdTerm::unparse() const {
  // Children precede parents, so one forward pass assembles the text.
  std::vector<std::string> text(nodes_.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (n.left < 0) {
      text[i] = std::to_string(n.atom);
    } else {
      text[i].reserve(text[n.left].size() + text[n.right].size() + 3);
      text[i] += '(';
      text[i] += text[n.left];
      text[i] += '*';
      text[i] += text[n.right];
      text[i] += ')';
    }
    total += text[i].size();
    if (total > (std::size_t{1} << 26))
      throw BoundError("term too large to unparse");
  }
  return text[root_];
}

bool LdTerm::operator==(const LdTerm& other) const {
  // Structural comparison, independent of pool layout.
  std::vector<std::pair<std::int32_t, std::int32_t>> stack{{root_, other.root_}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const Node& na = nodes_[a];
    const Node& nb = other.nodes_[b];
    if ((na.left < 0) != (nb.left < 0)) return false;
    if (na.left < 0) {
      if (na.atom != nb.atom) return false;
    } else {
      stack.push_back({na.left, nb.left});
      stack.push_back({na.right, nb.right});
    }
  }
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LdTerm run() {
    LdTerm t = expr(0);
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("trailing input after term", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // "*" or the star operator U+22C6 (e2 8b 86).
  void expect_op() {
    skip_space();
    if (eat('*')) return;
    if (text_.size() - pos_ >= 3 && static_cast<unsigned char>(text_[pos_]) == 0xe2 &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0x8b &&
        static_cast<unsigned char>(text_[pos_ + 2]) == 0x86) {
      pos_ += 3;
      return;
    }
    throw ParseError("expected '*'", pos_);
  }

  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      if (v > (kElementLimit >> 3))
        throw ParseError("integer literal too large", start);
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return v;
  }

  LdTerm expr(int depth) {
    if (depth > kMaxNesting) throw ParseError("term nested too deeply", pos_);
    skip_space();
    if (eat('(')) {
      LdTerm lhs = expr(depth + 1);
      expect_op();
      LdTerm rhs = expr(depth + 1);
      skip_space();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return LdTerm::apply(lhs, rhs);
    }
    const std::size_t at = pos_;
    const std::uint64_t value = integer();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      if (value != 1)
        throw ParseError("power sugar is defined for the generator 1 only", at);
      ++pos_;
      skip_space();
      if (!eat('(')) throw ParseError("expected '(' after '^'", pos_);
      const std::size_t kat = pos_;
      const std::uint64_t k = integer();
      skip_space();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      if (k < 1) throw ParseError("left power exponent must be >= 1", kat);
      return LdTerm::generator_power(k);
    }
    if (value < 1) throw ParseError("atoms must be >= 1", at);
    if (value >= kElementLimit)
      throw ParseError("atom exceeds the element bound", at);
    return LdTerm::atom(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LdTerm parse_term(std::string_view text) { return Parser(text).run(); }

ElementId eval_term(const LdTerm& term, int order, Table& table) {
  if (order < 1 || order > kMaxOrder)
    throw DomainError("order exponent must be in [1, 61]");
  const ElementId n = ElementId{1} << order;
  const auto& nodes = term.nodes();
  std::vector<ElementId> value(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const LdTerm::Node& node = nodes[i];
    if (node.left < 0) {
      if (node.atom > n)
        throw DomainError("atom " + std::to_string(node.atom) +
                          " outside [1, 2^" + std::to_string(order) + "]");
      value[i] = node.atom;
    } else {
      value[i] = table.star_prod(order, value[node.left], value[node.right]);
    }
  }
  return value[term.root()];
}

bool equal_in(int order, const LdTerm& s, const LdTerm& t, Table& table) {
  return eval_term(s, order, table) == eval_term(t, order, table);
}

}  // namespace laver
