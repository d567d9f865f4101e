#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bush.hpp"

namespace sweak {

using IJ = std::pair<int, int>;

// Position matrix of a tree: p[i][j] for 1 <= i < j <= n (1-based, row 0 and
// column 0 unused), each entry in 0..s_i.
struct PositionVector {
  SComp s;
  std::vector<std::vector<int>> p;
  int at(int i, int j) const { return p[i][j]; }
};
bool operator==(const PositionVector& a, const PositionVector& b);

int pos(const Bush& t, int i, int j);
PositionVector positions(const Bush& t);

// Explicit finite poset with unique-id elements, Hasse cover edges, and
// bitset reachability. Joins and meets are computed from the order.
struct FiniteLattice {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> covers;  // covers[u] = elements covering u
  std::vector<std::vector<uint64_t>> up, down;
  std::vector<int> topo;  // linear extension, bottom to top

  int size() const { return (int)labels.size(); }
  bool leq(int u, int v) const { return (up[u][v >> 6] >> (v & 63)) & 1; }
  int join(int u, int v) const;  // -1 when absent or not unique
  int meet(int u, int v) const;
  bool is_lattice() const;
  int bottom() const;  // -1 when not unique
  int top() const;
  int index_of(const std::string& label) const;
};

// Builds reachability from Hasse edges (u covered by v). verify checks the
// lattice property and throws InvalidInput when it fails.
FiniteLattice make_finite_lattice(std::vector<std::string> labels,
                                  const std::vector<IJ>& cover_edges,
                                  bool verify = false);

// Builds Hasse edges from a full order relation leq[u][v].
FiniteLattice lattice_from_order(std::vector<std::string> labels,
                                 const std::vector<std::vector<bool>>& leq_rel,
                                 bool verify = false);

bool sweak_leq(const Bush& t, const Bush& tp);
FiniteLattice sweak_lattice(const SComp& s);

// Componentwise maximum closed under the chain propagation rule; the meet is
// the greatest lower bound found by exhaustive scan.
Bush join(const Bush& t, const Bush& tp);
Bush meet(const Bush& t, const Bush& tp);

// Unique tree whose positions equal P (NotAPositionVector when none exists).
Bush tree_from_positions(const PositionVector& P);

int lpos(const Bush& b, int i, int j);
int rpos(const Bush& b, int i, int j);
bool facial_leq(const Bush& b, const Bush& bp);
FiniteLattice facial_lattice(const SComp& s);

struct PolygonEdge {
  int from = 0, to = 0;  // element ids in the ambient lattice
  IJ label;              // the rotated pair
};
struct Polygon {
  std::string type;  // "square" | "pentagonL" | "pentagonR" | "hexagon"
  std::vector<PolygonEdge> edges;
};

// Classifies the interval [t, rotate(t,ab) v rotate(t,cd)] spanned by two
// ascents ab, cd of t with ab.first < cd.first (NotAscents otherwise).
Polygon polygon_type(const FiniteLattice& L, const Bush& t, IJ ab, IJ cd);

struct DoublingStep {
  int m = 0;     // prefix length: the step refines the order on trees of s_1..s_m
  int i = 0, j = 0;
  int coarse_size = 0, fine_size = 0;
  int intervals_doubled = 0;
};
struct DoublingReport {
  std::vector<DoublingStep> steps;
};

// For every prefix of s, builds the chain of quotients of the tree order
// obtained by progressively refining the identification on the positions of
// the last node, and verifies that every consecutive step is a disjoint union
// of interval doublings (DoublingFailed otherwise). The combined chain climbs
// from the one-element order to the full tree order on s.
DoublingReport verify_doubling_sequence(const SComp& s);

}  // namespace sweak
