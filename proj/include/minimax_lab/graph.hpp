#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace minimax_lab {

/// A joint labeling y = (y_1, ..., y_l), one bit per variable node.
using Labeling = std::vector<std::uint8_t>;

/// Labeling at lexicographic position `index` (y_1 is the most significant bit).
Labeling labeling_from_index(std::uint64_t index, int l);

/// A factor node. Scope holds one node id (unary) or two distinct ids
/// (pairwise, stored ascending). Node ids are 1-based.
struct Factor {
  std::vector<int> scope;

  bool is_unary() const { return scope.size() == 1; }
  bool is_pairwise() const { return scope.size() == 2; }

  static Factor unary(int u) { return Factor{{u}}; }
  static Factor pairwise(int u, int v);

  bool operator==(const Factor&) const = default;
};

/// Factor graph over variable nodes {1, ..., l} with unary and pairwise
/// factors. Immutable by convention once built; use the builders.
struct FactorGraph {
  int l = 0;
  std::vector<Factor> factors;

  /// Chain: unary factors on every node, pairwise factors {i, i+1}.
  static FactorGraph chain(int l);
  /// rows x cols grid of pairwise factors, row-major node numbering, no unary.
  static FactorGraph grid(int rows, int cols);
  /// Explicit factor lists; throws DomainError on out-of-range nodes,
  /// duplicates, or a disconnected result.
  static FactorGraph from_edges(int l, const std::vector<std::pair<int, int>>& pairwise,
                                const std::vector<int>& unary);

  /// T: canonical (u < v) pairs, one per pairwise factor.
  std::vector<std::pair<int, int>> pair_set() const;

  bool operator==(const FactorGraph&) const = default;
};

/// Checks every FactorGraph invariant. Empty result means the graph is valid;
/// otherwise each entry names one offending factor or node.
std::vector<std::string> validate(const FactorGraph& g);

/// Number of coordinates on which two labelings disagree. Throws DomainError
/// on length mismatch.
int hamming_loss(const Labeling& a, const Labeling& b);

}  // namespace minimax_lab
