#pragma once

#include <string>
#include <vector>

#include "arcs.hpp"
#include "bush.hpp"
#include "dbm.hpp"
#include "enumerate.hpp"
#include "rational.hpp"

namespace sweak {

// One integer linear constraint: a.x = b when eq, a.x <= b otherwise.
struct LinCon {
  std::vector<long long> a;
  long long b = 0;
  bool eq = false;
};

// Intersection of integer half-spaces and hyperplanes of R^n.
struct HPolyhedron {
  int n = 0;
  std::vector<LinCon> cons;
};

bool hp_is_empty(const HPolyhedron& P);
bool hp_contains(const HPolyhedron& P, const std::vector<Rat>& x);
bool hp_subset(const HPolyhedron& P, const HPolyhedron& Q);

// Dimension of the affine hull; -1 for the empty set.
int hp_dim(const HPolyhedron& P);

// All nonempty faces including P itself, each with its tight constraints
// turned into equalities.
std::vector<HPolyhedron> hp_faces(const HPolyhedron& P);

// F nonempty and equal to the smallest face of P containing it.
bool hp_is_face(const HPolyhedron& F, const HPolyhedron& P);

// A point with every non-forced inequality strict.
std::vector<Rat> hp_relint(const HPolyhedron& P);

// Difference-bound cell as a general H-polyhedron (one row per finite bound,
// pinned pairs as equalities).
HPolyhedron hp_of_dbm(const DBM& d);

// Wall of the arc (i, j, A, B, r): the equality
//   x_i - x_j = r - 1 + sum_{k in B} max(0, s_k - 1)
// plus, for each interior node m with the sum truncated to B below m, the
// inequality x_i - x_m >= rhs when m is in A and x_i - x_m <= rhs when m is
// in B.
struct SShard {
  SArc arc;
  HPolyhedron hp;
  DBM poly;
};
SShard shard(const SComp& s, const SArc& a);

// Bushes whose closed fibers tile shard(s, a): (i, j) is a hole, the
// rightmost path from i into the left incoming edge of j keeps A weakly on
// its left and B strictly on its right, and exactly r outgoing edges of i
// hang strictly right of it.
std::vector<Bush> shard_bushes(const SComp& s, const SArc& a, long long cap = kDefaultCap);

struct PCell {
  DBM poly;
  int dim = 0;
  std::string label;
};

// Finite cell complex: cells closed under faces and meeting along faces.
struct PolyhedralComplex {
  int n = 0;
  bool complete = false;  // the cells cover all of R^n
  std::vector<PCell> cells;
  std::vector<int> maximal;                // cells that are no one's proper face
  std::vector<std::vector<int>> faces_of;  // proper faces of each cell, sorted
};

// Index of the cell with the same canonical form, or -1.
int cell_index(const PolyhedralComplex& C, const DBM& d);

// All closed fibers of the bushes of s, labeled by bush key.
PolyhedralComplex foam(const SComp& s, long long cap = kDefaultCap);

// Glue tree fibers along the classes of the congruence induced by the kept
// arcs D, then close under faces. Maximal cells carry the key of the minimal
// tree of their class; lower cells carry their canonical form.
PolyhedralComplex quotient_foam(const SComp& s, const std::vector<SArc>& D,
                                long long cap = kDefaultCap);

// Face closure, pairwise intersection along common faces, and (when the
// complex is complete) sampled points landing in exactly one maximal cell.
bool complex_axioms(const PolyhedralComplex& C, int samples = 64, unsigned seed = 1,
                    std::string* why = nullptr);

// The direction (2i - n - 1)_i singling out the increasing chamber.
std::vector<Rat> omega_direction(int n);

struct DualGraph {
  std::vector<std::string> labels;         // one per maximal cell
  std::vector<std::pair<int, int>> edges;  // lower -> upper
};

// Nodes are the maximal cells; cells sharing a facet are joined by an edge
// oriented so that crossing the wall lower -> upper moves against omega.
DualGraph dual_graph(const PolyhedralComplex& C, const std::vector<Rat>& omega);
DualGraph dual_graph(const PolyhedralComplex& C);

}  // namespace sweak
