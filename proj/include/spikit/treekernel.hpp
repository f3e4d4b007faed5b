#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spikit/errors.hpp"
#include "spikit/syntree.hpp"

namespace spikit {

// Preterminal matching: lexicalized compares the word child too,
// delexicalized compares by POS label alone.
enum class MatchMode { lexicalized, delexicalized };

inline std::string to_string(MatchMode mode) {
  return mode == MatchMode::lexicalized ? "lexicalized" : "delexicalized";
}

inline MatchMode match_mode_from_string(const std::string& s) {
  if (s == "lexicalized") return MatchMode::lexicalized;
  if (s == "delexicalized") return MatchMode::delexicalized;
  throw ConfigError("unknown match mode: " + s);
}

struct KernelParams {
  double lambda = 1.0;  // decay factor, 0 < lambda <= 1
  MatchMode mode = MatchMode::delexicalized;
};

inline void check_params(const KernelParams& params) {
  if (!(params.lambda > 0.0 && params.lambda <= 1.0)) {
    throw LambdaOutOfRange(params.lambda);
  }
}

// Raw kernel K, normalized kernel in [0,1], and the induced distance
// d = sqrt(2 - 2*K_norm) in [0, sqrt(2)].
struct KernelValue {
  double raw = 0.0;
  double normalized = 0.0;
  double distance = 0.0;
};

namespace detail {

// Production signature used for kernel matching. Preterminals get their word
// (or the sentinel, when delexicalized) plus a marker that keeps them from
// colliding with internal nodes whose single child happens to share the name.
inline std::string production_key(const TreeNode& node, MatchMode mode) {
  std::string key;
  if (node.is_preterminal()) {
    key += "#p ";
    key += node.label();
    key += " ->";
    key += ' ';
    key += mode == MatchMode::delexicalized ? kDelexSentinel
                                            : node.children().front().label();
    return key;
  }
  key += node.label();
  key += " ->";
  for (const auto& child : node.children()) {
    key += ' ';
    key += child.label();
  }
  return key;
}

}  // namespace detail

// Per-call memo for delta(), keyed by node-pair identity.
using DeltaMemo =
    std::map<std::pair<const TreeNode*, const TreeNode*>, double>;

// Number of (decay-weighted) common subset-tree fragments rooted at the two
// nodes: 0 when the productions differ, lambda for matching preterminals,
// lambda * prod_j (1 + delta(child_j, child_j)) otherwise.
inline double delta(const TreeNode& n1, const TreeNode& n2,
                    const KernelParams& params, DeltaMemo& memo) {
  check_params(params);
  auto key = std::make_pair(&n1, &n2);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  double value = 0.0;
  if (n1.is_preterminal() != n2.is_preterminal()) {
    value = 0.0;
  } else if (detail::production_key(n1, params.mode) !=
             detail::production_key(n2, params.mode)) {
    value = 0.0;
  } else if (n1.is_preterminal()) {
    value = params.lambda;
  } else {
    double prod = params.lambda;
    for (std::size_t j = 0; j < n1.children().size(); ++j) {
      prod *= 1.0 + delta(n1.children()[j], n2.children()[j], params, memo);
    }
    value = prod;
  }
  memo.emplace(key, value);
  return value;
}

// Convolution tree kernel: sum of delta over all internal-node pairs.
// Node sets include preterminals and exclude leaf words. Symmetric and
// deterministic; O(|N1| * |N2|) node-pair work via a shared per-call memo,
// with nodes pre-grouped by production so non-matching pairs are skipped.
inline double kernel(const SyntaxTree& t1, const SyntaxTree& t2,
                     const KernelParams& params) {
  check_params(params);
  const auto nodes1 = internal_nodes(t1);
  const auto nodes2 = internal_nodes(t2);

  std::unordered_map<std::string, std::vector<const TreeNode*>> by_production;
  by_production.reserve(nodes2.size());
  for (const TreeNode* n2 : nodes2) {
    by_production[detail::production_key(*n2, params.mode)].push_back(n2);
  }

  DeltaMemo memo;
  double sum = 0.0;
  for (const TreeNode* n1 : nodes1) {
    auto it = by_production.find(detail::production_key(*n1, params.mode));
    if (it == by_production.end()) continue;
    for (const TreeNode* n2 : it->second) {
      sum += delta(*n1, *n2, params, memo);
    }
  }
  return sum;
}

// K(t1,t2) / sqrt(K(t1,t1) * K(t2,t2)); 1 for structurally identical trees.
inline double normalized_kernel(const SyntaxTree& t1, const SyntaxTree& t2,
                                const KernelParams& params) {
  const double k11 = kernel(t1, t1, params);
  const double k22 = kernel(t2, t2, params);
  if (k11 <= 0.0 || k22 <= 0.0) throw DegenerateTree();
  const double k12 = kernel(t1, t2, params);
  return std::min(1.0, k12 / std::sqrt(k11 * k22));
}

// sqrt(2 - 2 * K_norm); 0 iff K_norm = 1, sqrt(2) when no production is shared.
inline double tree_distance(const SyntaxTree& t1, const SyntaxTree& t2,
                            const KernelParams& params) {
  const double norm = normalized_kernel(t1, t2, params);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * norm));
}

// All three kernel quantities, computing each pairwise kernel once.
inline KernelValue kernel_value(const SyntaxTree& t1, const SyntaxTree& t2,
                                const KernelParams& params) {
  KernelValue v;
  v.raw = kernel(t1, t2, params);
  const double k11 = kernel(t1, t1, params);
  const double k22 = kernel(t2, t2, params);
  if (k11 <= 0.0 || k22 <= 0.0) throw DegenerateTree();
  v.normalized = std::min(1.0, v.raw / std::sqrt(k11 * k22));
  v.distance = std::sqrt(std::max(0.0, 2.0 - 2.0 * v.normalized));
  return v;
}

}  // namespace spikit
