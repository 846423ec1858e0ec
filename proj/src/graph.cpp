#include "minimax_lab/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "minimax_lab/common.hpp"

namespace minimax_lab {

Labeling labeling_from_index(std::uint64_t index, int l) {
  Labeling y(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) y[i] = static_cast<std::uint8_t>((index >> (l - 1 - i)) & 1u);
  return y;
}

Factor Factor::pairwise(int u, int v) {
  if (u == v) throw DomainError("pairwise factor scope must hold two distinct nodes");
  if (u > v) std::swap(u, v);
  return Factor{{u, v}};
}

FactorGraph FactorGraph::chain(int l) {
  if (l < 1) throw DomainError("chain: l must be >= 1");
  FactorGraph g;
  g.l = l;
  for (int i = 1; i <= l; ++i) g.factors.push_back(Factor::unary(i));
  for (int i = 1; i < l; ++i) g.factors.push_back(Factor::pairwise(i, i + 1));
  return g;
}

FactorGraph FactorGraph::grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("grid: rows and cols must be >= 1");
  FactorGraph g;
  g.l = rows * cols;
  auto node = [cols](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) g.factors.push_back(Factor::pairwise(node(r, c), node(r, c + 1)));
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) g.factors.push_back(Factor::pairwise(node(r, c), node(r + 1, c)));
  if (g.l == 1) g.factors.push_back(Factor::unary(1));
  return g;
}

FactorGraph FactorGraph::from_edges(int l, const std::vector<std::pair<int, int>>& pairwise,
                                    const std::vector<int>& unary) {
  if (l < 1) throw DomainError("from_edges: l must be >= 1");
  FactorGraph g;
  g.l = l;
  std::vector<int> unary_sorted = unary;
  std::sort(unary_sorted.begin(), unary_sorted.end());
  for (int u : unary_sorted) {
    if (u < 1 || u > l) {
      std::ostringstream msg;
      msg << "from_edges: unary factor references node " << u << " outside 1.." << l;
      throw DomainError(msg.str());
    }
    g.factors.push_back(Factor::unary(u));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : pairwise) {
    if (u < 1 || u > l || v < 1 || v > l) {
      std::ostringstream msg;
      msg << "from_edges: pairwise factor {" << u << "," << v << "} references a node outside 1.." << l;
      throw DomainError(msg.str());
    }
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) g.factors.push_back(Factor::pairwise(u, v));
  if (auto violations = validate(g); !violations.empty())
    throw DomainError("from_edges: " + violations.front());
  return g;
}

std::vector<std::pair<int, int>> FactorGraph::pair_set() const {
  std::set<std::pair<int, int>> pairs;
  for (const auto& f : factors)
    if (f.is_pairwise()) pairs.emplace(f.scope[0], f.scope[1]);
  return {pairs.begin(), pairs.end()};
}

namespace {

std::string factor_name(const Factor& f) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < f.scope.size(); ++i) out << (i ? "," : "") << f.scope[i];
  out << "}";
  return out.str();
}

}  // namespace

std::vector<std::string> validate(const FactorGraph& g) {
  std::vector<std::string> violations;
  if (g.l < 1) {
    violations.push_back("graph has no variable nodes (l < 1)");
    return violations;
  }

  std::set<std::vector<int>> seen;
  for (const auto& f : g.factors) {
    const std::string name = factor_name(f);
    if (f.scope.empty() || f.scope.size() > 2) {
      violations.push_back("factor " + name + ": scope must hold 1 or 2 nodes");
      continue;
    }
    bool in_range = true;
    for (int u : f.scope)
      if (u < 1 || u > g.l) {
        violations.push_back("factor " + name + ": node outside 1.." + std::to_string(g.l));
        in_range = false;
      }
    if (!in_range) continue;
    if (f.scope.size() == 2) {
      if (f.scope[0] == f.scope[1]) {
        violations.push_back("pairwise factor " + name + ": scope members not distinct");
        continue;
      }
      if (f.scope[0] > f.scope[1]) violations.push_back("pairwise factor " + name + ": scope not stored ascending");
    }
    std::vector<int> key = f.scope;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) violations.push_back("duplicate factor " + name);
  }
  if (!violations.empty()) return violations;

  // Connectivity of the bipartite graph. Unary factors attach to a single
  // node, so for l >= 2 every node must be reachable through pairwise scopes.
  if (g.l >= 2) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.l) + 1);
    for (const auto& f : g.factors)
      if (f.is_pairwise()) {
        adj[f.scope[0]].push_back(f.scope[1]);
        adj[f.scope[1]].push_back(f.scope[0]);
      }
    std::vector<char> reached(static_cast<std::size_t>(g.l) + 1, 0);
    std::vector<int> stack{1};
    reached[1] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!reached[v]) {
          reached[v] = 1;
          stack.push_back(v);
        }
    }
    for (int u = 1; u <= g.l; ++u)
      if (!reached[u]) violations.push_back("graph not connected: node " + std::to_string(u) + " unreachable from node 1");
  }
  return violations;
}

int hamming_loss(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) throw DomainError("hamming_loss: labelings have different lengths");
  int loss = 0;
  for (std::size_t i = 0; i < a.size(); ++i) loss += (a[i] != b[i]);
  return loss;
}

}  // namespace minimax_lab
