#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scomp.hpp"

namespace sweak {

// Attachment of node j: to leaf k (1-based, left to right) or astride the gap
// between leaves k and k+1.
struct Att {
  bool gap = false;
  int k = 0;
};
inline Att leaf_at(int k) { return {false, k}; }
inline Att gap_at(int k) { return {true, k}; }
inline bool operator==(const Att& a, const Att& b) { return a.gap == b.gap && a.k == b.k; }
inline bool operator<(const Att& a, const Att& b) {
  return a.k != b.k ? a.k < b.k : a.gap < b.gap;
}

// Outgoing edge (node, slot); its target is children[node][slot].
struct Edge {
  int node = 0;
  int slot = 0;
};
inline bool operator==(const Edge& a, const Edge& b) { return a.node == b.node && a.slot == b.slot; }

struct Bush {
  SComp s;
  std::vector<Att> att;                    // att[j-1] = attachment of node j
  std::vector<std::vector<int>> children;  // children[v][slot]: node id, 0 = leaf; v in 0..n
  std::vector<std::vector<Edge>> parents;  // parents[j]: incoming edges, left-right order

  int n() const { return (int)s.size(); }
  int indeg(int j) const { return (int)parents[j].size(); }
  int outdeg(int v) const { return (int)children[v].size(); }
  int rank() const;
  bool is_tree() const;
  bool is_trunk() const;
  long long leaf_count() const;

  bool is_ancestor(int i, int j) const;  // strict: i != j and i above j
  std::vector<int> ancestors(int j) const;

  std::string key() const;
};

bool operator==(const Bush& a, const Bush& b);
inline bool operator!=(const Bush& a, const Bush& b) { return !(a == b); }
bool operator<(const Bush& a, const Bush& b);

Bush build_bush(const SComp& s, const std::vector<Att>& att);

// Inverse of Bush::key(): parses "L1|G4|..." back into a bush.
Bush bush_from_key(const SComp& s, const std::string& key);

// Minimal possible rank: min({i : s_i != 0} union {n}).
int trunk_rank(const SComp& s);

// Pairs (i, j) where j has indegree 2 and i is the greatest common ancestor
// of the sources of the two incoming edges. Sorted by (i, j).
std::vector<std::pair<int, int>> holes(const Bush& b);

// Nodes visited after j when following leftmost (side 'L') or rightmost ('R')
// edges, switching sides after each node with two distinct parents.
std::vector<int> zigzag(const Bush& b, int j, char side);

std::vector<std::pair<int, int>> ascents(const Bush& b);
std::vector<std::pair<int, int>> descents(const Bush& b);

// Greedy extreme increasing path from i to j: at each node takes the
// leftmost ('L') / rightmost ('R') edge from which j is reachable.
// If required_parent is 0 or 1, the path must arrive at j through that
// incoming edge (0 = left/only, 1 = right). Throws NotAncestor if i is not
// an ancestor of j.
std::vector<Edge> extreme_path(const Bush& b, int i, int j, char side, int required_parent = -1);

// Side of node k relative to path pi (from pi[0].node down): -1 strictly
// left, 0 on the path, +1 strictly right.
int side_of(const Bush& b, const std::vector<Edge>& pi, int k);

// Exit sides along a zigzag: (node, 'L' or 'R'); includes the start node j.
std::vector<std::pair<int, char>> zigzag_marks(const Bush& b, int j, char side);

}  // namespace sweak
