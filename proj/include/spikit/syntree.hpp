#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spikit/errors.hpp"

namespace spikit {

// Ordered labeled constituency tree node. A node with no children is a
// terminal leaf (a word); a node whose single child is a leaf is a
// preterminal (a POS tag). Nodes are immutable after construction.
class TreeNode {
 public:
  explicit TreeNode(std::string label, std::vector<TreeNode> children = {})
      : label_(std::move(label)), children_(std::move(children)) {}

  const std::string& label() const { return label_; }
  const std::vector<TreeNode>& children() const { return children_; }

  bool is_leaf() const { return children_.empty(); }
  bool is_preterminal() const {
    return children_.size() == 1 && children_.front().is_leaf();
  }

  friend bool operator==(const TreeNode& a, const TreeNode& b) {
    return a.label_ == b.label_ && a.children_ == b.children_;
  }
  friend bool operator!=(const TreeNode& a, const TreeNode& b) {
    return !(a == b);
  }

 private:
  std::string label_;
  std::vector<TreeNode> children_;
};

// One sentence's syntax tree. Valid trees have an internal root; use
// validate() to check the full invariant set.
class SyntaxTree {
 public:
  explicit SyntaxTree(TreeNode root) : root_(std::move(root)) {}

  const TreeNode& root() const { return root_; }

  friend bool operator==(const SyntaxTree& a, const SyntaxTree& b) {
    return a.root_ == b.root_;
  }
  friend bool operator!=(const SyntaxTree& a, const SyntaxTree& b) {
    return !(a == b);
  }

 private:
  TreeNode root_;
};

// One rewrite-rule instance: a node label plus its ordered child labels.
struct Production {
  std::string parent;
  std::vector<std::string> children;

  friend bool operator==(const Production& a, const Production& b) {
    return a.parent == b.parent && a.children == b.children;
  }
  friend bool operator<(const Production& a, const Production& b) {
    if (a.parent != b.parent) return a.parent < b.parent;
    return a.children < b.children;
  }
};

inline std::string to_string(const Production& p) {
  std::string s = p.parent + " ->";
  for (const auto& c : p.children) {
    s += ' ';
    s += c;
  }
  return s;
}

struct Violation {
  enum class Kind { BareLeaf, IllegalLabel, MixedChildren };
  Kind kind;
  std::string path;    // "root", "root.0.1", ...
  std::string detail;
};

namespace detail {

struct Token {
  enum class Type { Open, Close, Atom };
  Type type;
  std::string text;
  std::size_t offset;
};

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                       std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void fail(ParseError::Kind kind, const std::string& msg,
                              std::string_view text, std::size_t offset) {
  auto [line, col] = line_column(text, offset);
  throw ParseError(kind, msg, line, col);
}

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(' || c == ')') {
      tokens.push_back({c == '(' ? Token::Type::Open : Token::Type::Close,
                        std::string(1, c), i});
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && text[i] != '(' && text[i] != ')' &&
             !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      tokens.push_back(
          {Token::Type::Atom, std::string(text.substr(start, i - start)), start});
    }
  }
  return tokens;
}

inline TreeNode parse_node(const std::vector<Token>& tokens, std::size_t& pos,
                           std::string_view text) {
  // Caller guarantees tokens[pos] is Open.
  const std::size_t open_at = tokens[pos].offset;
  ++pos;
  if (pos >= tokens.size()) {
    fail(ParseError::Kind::UnbalancedBrackets, "input ends inside a node",
         text, text.size());
  }
  if (tokens[pos].type == Token::Type::Close) {
    fail(ParseError::Kind::EmptyNode, "empty node '()'", text, open_at);
  }
  if (tokens[pos].type != Token::Type::Atom) {
    fail(ParseError::Kind::EmptyNode, "node is missing a label", text,
         tokens[pos].offset);
  }
  std::string label = tokens[pos].text;
  ++pos;

  std::vector<TreeNode> children;
  while (true) {
    if (pos >= tokens.size()) {
      fail(ParseError::Kind::UnbalancedBrackets,
           "missing ')' for node '" + label + "'", text, text.size());
    }
    const Token& t = tokens[pos];
    if (t.type == Token::Type::Close) {
      ++pos;
      break;
    }
    if (t.type == Token::Type::Open) {
      children.push_back(parse_node(tokens, pos, text));
    } else {
      children.emplace_back(t.text);
      ++pos;
    }
  }
  if (children.empty()) {
    fail(ParseError::Kind::EmptyNode, "node '" + label + "' has no children",
         text, open_at);
  }
  return TreeNode(std::move(label), std::move(children));
}

}  // namespace detail

// Parses one bracketed tree, e.g. "(S (NP (DT the) (NN dog)) (VP (VB runs)))".
// Tokens are separated by whitespace and parentheses; labels and words may be
// any non-bracket, non-whitespace byte sequence (Unicode words pass through).
inline SyntaxTree parse_bracketed(std::string_view text) {
  auto tokens = detail::lex(text);
  if (tokens.empty()) {
    detail::fail(ParseError::Kind::EmptyInput, "no tree in input", text, 0);
  }
  const auto& first = tokens.front();
  if (first.type == detail::Token::Type::Atom) {
    detail::fail(ParseError::Kind::BareLeaf,
                 "input is a bare token, not a parenthesized tree", text,
                 first.offset);
  }
  if (first.type == detail::Token::Type::Close) {
    detail::fail(ParseError::Kind::UnbalancedBrackets,
                 "input starts with ')'", text, first.offset);
  }
  std::size_t pos = 0;
  TreeNode root = detail::parse_node(tokens, pos, text);
  if (pos < tokens.size()) {
    bool only_closes = true;
    for (std::size_t i = pos; i < tokens.size(); ++i) {
      if (tokens[i].type != detail::Token::Type::Close) only_closes = false;
    }
    if (only_closes) {
      detail::fail(ParseError::Kind::UnbalancedBrackets,
                   "more ')' than '(' in input", text, tokens[pos].offset);
    }
    detail::fail(ParseError::Kind::TrailingContent,
                 "input continues after the root node closes", text,
                 tokens[pos].offset);
  }
  return SyntaxTree(std::move(root));
}

namespace detail {

inline void write_bracketed(const TreeNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += node.label();
    return;
  }
  out += '(';
  out += node.label();
  for (const auto& child : node.children()) {
    out += ' ';
    write_bracketed(child, out);
  }
  out += ')';
}

}  // namespace detail

// Canonical single-space bracketed form; inverse of parse_bracketed.
inline std::string to_bracketed(const SyntaxTree& tree) {
  std::string out;
  detail::write_bracketed(tree.root(), out);
  return out;
}

namespace detail {

inline void collect_productions(const TreeNode& node,
                                std::vector<Production>& out) {
  if (node.is_leaf()) return;
  Production p;
  p.parent = node.label();
  p.children.reserve(node.children().size());
  for (const auto& child : node.children()) {
    p.children.push_back(child.label());
  }
  out.push_back(std::move(p));
  for (const auto& child : node.children()) {
    collect_productions(child, out);
  }
}

}  // namespace detail

// One Production per internal node, in preorder. Preterminal productions
// include the word child; use delexicalize() first for word-free rules.
inline std::vector<Production> productions(const SyntaxTree& tree) {
  std::vector<Production> out;
  detail::collect_productions(tree.root(), out);
  return out;
}

inline constexpr const char* kDelexSentinel = "*";

namespace detail {

inline TreeNode delexicalize_node(const TreeNode& node) {
  if (node.is_leaf()) return TreeNode(kDelexSentinel);
  std::vector<TreeNode> children;
  children.reserve(node.children().size());
  for (const auto& child : node.children()) {
    children.push_back(delexicalize_node(child));
  }
  return TreeNode(node.label(), std::move(children));
}

}  // namespace detail

// Replaces every leaf word with the sentinel "*"; structure and labels are
// untouched. Idempotent.
inline SyntaxTree delexicalize(const SyntaxTree& tree) {
  return SyntaxTree(detail::delexicalize_node(tree.root()));
}

namespace detail {

inline bool label_is_legal(const std::string& label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (c == '(' || c == ')' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

inline void validate_node(const TreeNode& node, const std::string& path,
                          std::vector<Violation>& out) {
  if (!label_is_legal(node.label())) {
    out.push_back({Violation::Kind::IllegalLabel, path,
                   "label '" + node.label() +
                       "' is empty or contains whitespace/parentheses"});
  }
  if (!node.is_leaf()) {
    bool has_leaf_child = false;
    for (const auto& child : node.children()) {
      if (child.is_leaf()) has_leaf_child = true;
    }
    if (has_leaf_child && node.children().size() > 1) {
      out.push_back({Violation::Kind::MixedChildren, path,
                     "node '" + node.label() +
                         "' mixes word leaves with sibling nodes"});
    }
  }
  for (std::size_t i = 0; i < node.children().size(); ++i) {
    validate_node(node.children()[i], path + "." + std::to_string(i), out);
  }
}

}  // namespace detail

// Empty result iff the tree satisfies every invariant. Violations name the
// offending node path ("root", "root.0.1", ...).
inline std::vector<Violation> validate(const SyntaxTree& tree) {
  std::vector<Violation> out;
  if (tree.root().is_leaf()) {
    out.push_back({Violation::Kind::BareLeaf, "root",
                   "root '" + tree.root().label() + "' is a bare leaf"});
  }
  detail::validate_node(tree.root(), "root", out);
  return out;
}

namespace detail {

inline void collect_leaves(const TreeNode& node,
                           std::vector<std::string>& out) {
  if (node.is_leaf()) {
    out.push_back(node.label());
    return;
  }
  for (const auto& child : node.children()) {
    collect_leaves(child, out);
  }
}

inline void collect_internal(const TreeNode& node,
                             std::vector<const TreeNode*>& out) {
  if (node.is_leaf()) return;
  out.push_back(&node);
  for (const auto& child : node.children()) {
    collect_internal(child, out);
  }
}

}  // namespace detail

// Leaf words in order.
inline std::vector<std::string> leaves(const SyntaxTree& tree) {
  std::vector<std::string> out;
  detail::collect_leaves(tree.root(), out);
  return out;
}

// Internal nodes (preterminals included, leaf words excluded), in preorder.
inline std::vector<const TreeNode*> internal_nodes(const SyntaxTree& tree) {
  std::vector<const TreeNode*> out;
  detail::collect_internal(tree.root(), out);
  return out;
}

// Reads a newline-delimited multi-tree stream, one tree per line. Blank
// lines are skipped. A bad line throws ParseError with its line number.
inline std::vector<SyntaxTree> read_tree_lines(std::istream& in) {
  std::vector<SyntaxTree> trees;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) continue;
    try {
      trees.push_back(parse_bracketed(line));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), e.message(), line_no, e.column());
    }
  }
  return trees;
}

}  // namespace spikit
