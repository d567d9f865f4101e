#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arcs.hpp"

namespace sweak {

// ---------------------------------------------------------------------------
// Containment order on arcs
// ---------------------------------------------------------------------------

// Whether a is contained in b: the span of a sits inside the span of b, sides
// are preserved (A within A', B within B'), the upper endpoint may only move
// when its weight is nonzero, and the slot is pinned when the lower endpoint
// stays (r = r') while sliding the lower endpoint into a side forces an
// extreme slot (r = 1 into A', r = s_i into B').
bool is_subarc(const SComp& s, const SArc& a, const SArc& b);

// Arcs reached from a by one endpoint step: the upper endpoint moves past j
// (which joins a side, the endpoint landing on any index separated from j by
// zero weights only), or the lower endpoint moves to the previous index of
// nonzero weight (i joins A when r = 1, B when r = s_i, and the new slot is
// arbitrary). Chains of steps reach exactly the arcs containing a.
std::vector<SArc> extensions(const SComp& s, const SArc& a);

// All arcs of s together with their containment relation:
// leq[x][y] iff arcs[x] is contained in arcs[y]; arcs ordered as all_arcs(s).
struct ArcPoset {
  std::vector<SArc> arcs;
  std::vector<std::vector<bool>> leq;
};
ArcPoset subarc_poset(const SComp& s, long long cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Congruences of a finite lattice
// ---------------------------------------------------------------------------

// A partition of the elements of a lattice into interval classes such that
// mapping each element to the bottom (resp. top) of its class is order
// preserving; equivalently, an equivalence compatible with joins and meets.
struct Congruence {
  std::vector<int> cls;      // element -> class id, dense from 0
  std::vector<int> cls_min;  // class id -> bottom element of the class
  std::vector<int> cls_max;  // class id -> top element of the class
  int classes() const { return (int)cls_min.size(); }
};

// The three axioms, checkable one at a time on a raw element -> class
// assignment. why, when non-null, receives the reason for a failure.
bool classes_are_intervals(const FiniteLattice& L, const std::vector<int>& cls,
                           std::string* why = nullptr);
bool projections_monotone(const FiniteLattice& L, const std::vector<int>& cls,
                          std::string* why = nullptr);
bool join_meet_compatible(const FiniteLattice& L, const std::vector<int>& cls,
                          std::string* why = nullptr);

// Builds a Congruence from an element -> class assignment, renumbering the
// classes by their bottom element. Throws NotACongruence when the interval or
// monotonicity axioms fail.
Congruence make_congruence(const FiniteLattice& L, const std::vector<int>& assignment);

// Smallest congruence identifying each seed pair: a worklist fixpoint that
// closes the merged pairs under join and meet translates.
Congruence congruence_closure(const FiniteLattice& L,
                              const std::vector<std::pair<int, int>>& seeds);

// forces[x][y] iff every congruence of the tree lattice of s merging
// t_join(arcs[x]) with its lower cover also merges t_join(arcs[y]) with its
// lower cover, computed from smallest congruences by closure; arcs ordered as
// all_arcs(s). Agrees with subarc_poset(s).leq.
std::vector<std::vector<bool>> forcing_bruteforce(const SComp& s,
                                                  long long cap = kDefaultCap);

// ---------------------------------------------------------------------------
// The congruence lattice
// ---------------------------------------------------------------------------

// All down sets of the containment order on the arcs of s, each listed as a
// sorted vector of indices into arcs, ordered by inclusion. Labels render the
// index sets as "{0,2,3}". Throws CapExceeded when the number of arcs exceeds
// arc_cap.
struct CongruenceLattice {
  std::vector<SArc> arcs;
  std::vector<std::vector<int>> downsets;
  FiniteLattice lattice;
};
CongruenceLattice all_congruences(const SComp& s, int arc_cap = 24);

// The congruence of the tree lattice determined by a down set D of arcs: a
// cover edge t < t' is merged exactly when the arc of the rotated descent of
// t' lies outside D. L must be sweak_lattice(s). Throws NotADownSet when D is
// not closed under containment.
Congruence congruence_from_downset(const SComp& s, const FiniteLattice& L,
                                   const std::vector<SArc>& D);

// Subposet of L induced on the bottom elements of the classes of c, with the
// covers recomputed; this realizes the quotient lattice.
FiniteLattice quotient(const FiniteLattice& L, const Congruence& c);

// Arcs whose one-descent tree is not merged with its lower cover by c. For
// c = congruence_from_downset(s, L, D) this returns exactly D.
std::vector<SArc> uncontracted_arcs(const SComp& s, const FiniteLattice& L,
                                    const Congruence& c, long long cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Named down sets
// ---------------------------------------------------------------------------

enum class Decoration { None, Up, Down, UpDown };

// All right arcs of s: the arcs whose left side B is empty.
std::vector<SArc> sylvester_downset(const SComp& s, long long cap = kDefaultCap);

// All arcs contained in alpha.
std::vector<SArc> cambrian_downset(const SComp& s, const SArc& alpha,
                                   long long cap = kDefaultCap);

// All arcs passing right of no node decorated Up or UpDown and left of no
// node decorated Down or UpDown. dec must assign a decoration to exactly the
// nodes of nonzero weight (InvalidDecoration otherwise).
std::vector<SArc> permutree_downset(const SComp& s,
                                    const std::map<int, Decoration>& dec,
                                    long long cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Quotient statistics
// ---------------------------------------------------------------------------

// Face counts, by cardinality, of the complex of pairwise noncrossing subsets
// of D; entry k counts the noncrossing subdiagrams of D of size k, and entry
// 0 is always 1. This is the face vector of the canonical join complex of the
// quotient by D. Throws CapExceeded when the total face count exceeds cap.
std::vector<long long> cjc_fvector(const SComp& s, const std::vector<SArc>& D,
                                   long long cap = kDefaultCap);

// Undirected cover graph of L as adjacency lists.
std::vector<std::vector<int>> cover_graph(const FiniteLattice& L);

// Undirected graph isomorphism on adjacency lists: iterated color refinement,
// then backtracking over the refined classes.
bool graphs_isomorphic(const std::vector<std::vector<int>>& a,
                       const std::vector<std::vector<int>>& b);

// Whether the cover graph of every cellular interval of L is regular. A
// cellular interval is [x, join of Y] for a nonempty set Y of covers of x, or
// dually [meet of X, y] for a nonempty set X of elements covered by y. Throws
// CapExceeded when scanning the subsets of some cover set would exceed cap.
bool cellularly_regular(const FiniteLattice& L, long long cap = kDefaultCap);

// One row per congruence examined by conjecture_report.
struct QuotientSummary {
  std::string name;
  std::vector<int> downset;  // indices into the arcs of the report
  long long cardinality = 0;
  std::vector<long long> fvector;
  bool cellular_regular = false;
  bool unilateral_complement = false;  // minimal missing arcs all one-sided
};

// family is "cambrian" (one row per arc, compared across equal endpoints),
// "permutree" (one row per Up/Down decoration, compared across single
// Up -> Down flips), or "regular" (one row per congruence, comparing cellular
// regularity of the quotient with one-sidedness of the minimal missing arcs).
// The notes record the comparisons without asserting them.
struct ConjectureReport {
  std::string family;
  std::vector<SArc> arcs;
  std::vector<QuotientSummary> rows;
  std::vector<std::string> notes;
};
ConjectureReport conjecture_report(const SComp& s, const std::string& family,
                                   long long cap = kDefaultCap);

}  // namespace sweak
