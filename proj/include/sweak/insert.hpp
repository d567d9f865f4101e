#pragma once

#include <utility>
#include <vector>

#include "bush.hpp"
#include "dbm.hpp"
#include "rational.hpp"

namespace sweak {

struct GapLabel {
  int u = 0;
  long long rho = 0;
};
inline bool operator==(const GapLabel& a, const GapLabel& b) { return a.u == b.u && a.rho == b.rho; }

// Gap labels of b from left to right, including the sentinels (0, 0) and
// (n+1, 0). There are leaf_count(b) + 1 of them.
std::vector<GapLabel> gap_labels(const Bush& b);

Bush insert(const SComp& s, const std::vector<Rat>& x);

// insert(s, x + eps*omega) for side 'L', insert(s, x - eps*omega) for 'R',
// with omega_i = 2i - n - 1 and eps positive infinitesimal. Always a tree.
Bush insert_perturbed(const SComp& s, const std::vector<Rat>& x, char side);

// Path statistics for an ancestor i of j (NotAncestor otherwise).
long long mu(const Bush& b, int i, int j);
long long nu(const Bush& b, int i, int j);

// Closed fiber: x_i - x_j = mu on holes, <= mu on ascents, >= nu on descents.
// Coordinates 0..n-1 stand for x_1..x_n.
DBM fiber_hrep(const Bush& b);

// kind: 'A' = treat (i,j) as an ascent, 'D' = as a descent, '?' = infer
// (throws InvalidInput when (i,j) is both an ascent and a descent).
Bush stitch(const Bush& b, std::pair<int, int> ij, char kind = '?');
Bush incise(const Bush& b, char side);
Bush rotate(const Bush& b, std::pair<int, int> ij, char kind = '?');

// Detach one incoming edge of the indegree-2 node j (InvalidInput otherwise);
// incise() is the special case where j is the only such node.
Bush incise_at(const Bush& b, int j, char side);

Bush left_tree(const Bush& b);
Bush right_tree(const Bush& b);

// Rebuild the attachment encoding from an edited children table.
Bush bush_from_children(const SComp& s, const std::vector<std::vector<int>>& children);

}  // namespace sweak
