#pragma once

#include <utility>
#include <vector>

#include "bush.hpp"
#include "enumerate.hpp"
#include "lattice.hpp"

namespace sweak {

// Arc (i, j, A, B, r): endpoints 1 <= i < j <= n with s_i != 0, a partition
// A | B of the nonzero interior {k : i < k < j, s_k != 0}, and a strength
// r in 1..s_i. A and B are kept sorted increasing.
struct SArc {
  int i = 0, j = 0;
  std::vector<int> A, B;
  int r = 0;
};

bool operator==(const SArc& a, const SArc& b);
inline bool operator!=(const SArc& a, const SArc& b) { return !(a == b); }
// Lexicographic on (i, j, r, A read as a bitmask).
bool operator<(const SArc& a, const SArc& b);

// Kept sorted; pairwise non-crossing when used as a diagram.
using ArcDiagram = std::vector<SArc>;

// Throws InvalidInput unless a is a valid arc for s.
void check_arc(const SComp& s, const SArc& a);

// Renders a as "(i, j, {A}, {B}, r)".
std::string arc_repr(const SArc& a);

// All arcs for s, sorted. Their number is sum_{i<j} s_i * 2^{#nonzero
// interior of ]i,j[}; throws CapExceeded when it exceeds cap.
std::vector<SArc> all_arcs(const SComp& s, long long cap = kDefaultCap);

// The two trees attached to an arc: a chain of rightmost (resp. leftmost)
// descents through A + {j} (resp. B + {j}) grafted onto the spine of the
// remaining nodes at child r of i counted from the right. t_join(a) has
// unique descent (i, j), t_meet(a) unique ascent (i, j).
Bush t_join(const SComp& s, const SArc& a);
Bush t_meet(const SComp& s, const SArc& a);

// Arc of a single descent (i, j) of a tree: r = pos(t, i, j), A = nonzero
// interior nodes weakly left of the i -> j path, B = strictly right.
// Throws NotAnAscentOrDescent when (i, j) is not a descent of t.
SArc alpha_join(const Bush& t, IJ descent);
// Mirror for an ascent (i, j): r = pos(t, i, j) + 1, A = strictly left,
// B = weakly right.
SArc alpha_meet(const Bush& t, IJ ascent);

// Inverse bijections of t_join / t_meet: require a unique descent (resp.
// ascent), i.e. a join- (resp. meet-) irreducible tree; throw InvalidInput
// otherwise.
SArc alpha_join(const Bush& t);
SArc alpha_meet(const Bush& t);

// The (arc, tree) pairs of the bijection arcs <-> join- (resp. meet-)
// irreducible trees, sorted by arc.
std::vector<std::pair<SArc, Bush>> join_irreducibles(const SComp& s, long long cap = kDefaultCap);
std::vector<std::pair<SArc, Bush>> meet_irreducibles(const SComp& s, long long cap = kDefaultCap);

// Non-crossing test. Symmetric; false on identical arcs and whenever the
// two arcs share their upper endpoint.
bool noncrossing(const SArc& a, const SArc& b);

// One arc per descent (resp. ascent) of t, sorted: a non-crossing diagram.
ArcDiagram delta_join(const Bush& t);
ArcDiagram delta_meet(const Bush& t);

// Inverse of delta_join: rebuilds the tree by attaching node k under the
// arc ending at k, or under the tightest arc covering k on its A side, or
// on the spine. Throws CrossingDiagram when d has a crossing pair.
Bush tree_from_diagram(const SComp& s, const ArcDiagram& d);

// Canonical join (resp. meet) representation: t_join over delta_join(t)
// (resp. t_meet over delta_meet(t)). Its join (resp. meet) is t, it is
// irredundant, and it is an antichain of irreducibles.
std::vector<Bush> canonical_join_rep(const Bush& t);
std::vector<Bush> canonical_meet_rep(const Bush& t);

// Compatibility of a join-side arc with a meet-side arc: no k < l with
// k in (A_meet + i_meet) n (B_join + i_join) and l in (A_join + j_join) n
// (B_meet + j_meet), except at a shared lower endpoint k = i_join = i_meet
// when r_join < r_meet. Equivalent to t_join(aj) <= t_meet(am).
bool semicrossing(const SArc& aj, const SArc& am);

// (delta_join(t), delta_meet(tp)) for t <= tp; throws NotComparable
// otherwise. Bijection from intervals to semi-crossing pairs of diagrams.
std::pair<ArcDiagram, ArcDiagram> interval_bidiagram(const Bush& t, const Bush& tp);

}  // namespace sweak
