#include "sweak/arcs.hpp"

#include <algorithm>
#include <string>

#include "sweak/insert.hpp"

namespace sweak {

namespace {

// Compares two sorted sets read as bitmask numbers: the larger top element
// wins, then the next one down; a leftover prefix means extra lower bits.
int cmp_mask(const std::vector<int>& a, const std::vector<int>& b) {
  int p = (int)a.size() - 1, q = (int)b.size() - 1;
  while (p >= 0 && q >= 0) {
    if (a[p] != b[q]) return a[p] < b[q] ? -1 : 1;
    --p;
    --q;
  }
  if (p >= 0) return 1;
  if (q >= 0) return -1;
  return 0;
}

bool contains(const std::vector<int>& v, int k) {
  return std::binary_search(v.begin(), v.end(), k);
}

// v restricted to the open interval ]lo, hi[.
std::vector<int> inter_open(const std::vector<int>& v, int lo, int hi) {
  std::vector<int> out;
  for (int x : v)
    if (x > lo && x < hi) out.push_back(x);
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string set_str(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t t = 0; t < v.size(); ++t) {
    if (t) out += ", ";
    out += std::to_string(v[t]);
  }
  return out + "}";
}

std::string arc_str(const SArc& a) {
  return "(" + std::to_string(a.i) + ", " + std::to_string(a.j) + ", " + set_str(a.A) + ", " +
         set_str(a.B) + ", " + std::to_string(a.r) + ")";
}

}  // namespace

std::string arc_repr(const SArc& a) { return arc_str(a); }

bool operator==(const SArc& a, const SArc& b) {
  return a.i == b.i && a.j == b.j && a.r == b.r && a.A == b.A && a.B == b.B;
}

bool operator<(const SArc& a, const SArc& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  if (a.r != b.r) return a.r < b.r;
  return cmp_mask(a.A, b.A) < 0;
}

void check_arc(const SComp& s, const SArc& a) {
  int n = (int)s.size();
  if (a.i < 1 || a.j > n || a.i >= a.j)
    throw InvalidInput("arc " + arc_str(a) + ": endpoints must satisfy 1 <= i < j <= n");
  if (s[a.i - 1] == 0)
    throw InvalidInput("arc " + arc_str(a) + ": the lower endpoint needs s_i != 0");
  if (a.r < 1 || a.r > s[a.i - 1])
    throw InvalidInput("arc " + arc_str(a) + ": strength r must lie in 1..s_i");
  std::vector<char> seen(n + 1, 0);
  auto check_side = [&](const std::vector<int>& v, const char* name) {
    int prev = 0;
    for (int k : v) {
      if (k <= a.i || k >= a.j)
        throw InvalidInput("arc " + arc_str(a) + ": " + name + " must lie strictly between i and j");
      if (s[k - 1] == 0)
        throw InvalidInput("arc " + arc_str(a) + ": " + name + " may only hold nodes with s_k != 0");
      if (k <= prev)
        throw InvalidInput("arc " + arc_str(a) + ": " + name + " must be sorted strictly increasing");
      if (seen[k]) throw InvalidInput("arc " + arc_str(a) + ": A and B must be disjoint");
      seen[k] = 1;
      prev = k;
    }
  };
  check_side(a.A, "A");
  check_side(a.B, "B");
  for (int k = a.i + 1; k < a.j; ++k)
    if (s[k - 1] != 0 && !seen[k])
      throw InvalidInput("arc " + arc_str(a) + ": A and B must cover the nonzero interior node " +
                         std::to_string(k));
}

std::vector<SArc> all_arcs(const SComp& s, long long cap) {
  int n = (int)s.size();
  long long total = 0;
  for (int i = 1; i < n; ++i) {
    if (s[i - 1] == 0) continue;
    int m = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (m >= 62 || s[i - 1] > (cap - total) / (1LL << m))
        throw CapExceeded("number of arcs exceeds cap " + std::to_string(cap));
      total += s[i - 1] * (1LL << m);
      if (s[j - 1] != 0) ++m;
    }
  }
  std::vector<SArc> out;
  out.reserve(total);
  for (int i = 1; i < n; ++i) {
    if (s[i - 1] == 0) continue;
    std::vector<int> interior;
    for (int j = i + 1; j <= n; ++j) {
      for (long long mask = 0; mask < (1LL << interior.size()); ++mask) {
        SArc a;
        a.i = i;
        a.j = j;
        for (size_t t = 0; t < interior.size(); ++t)
          ((mask >> t) & 1 ? a.A : a.B).push_back(interior[t]);
        for (int r = 1; r <= s[i - 1]; ++r) {
          a.r = r;
          out.push_back(a);
        }
      }
      if (s[j - 1] != 0) interior.push_back(j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Shared builder for t_join / t_meet: two chains (the grafted one through
// A + {j} or B + {j}, the spine through the rest), chained through the
// rightmost (join) or leftmost (meet) child slot of each node.
Bush comb_tree(const SComp& s, const SArc& a, bool join_side) {
  int n = (int)s.size();
  std::vector<char> in_sub(n + 1, 0);
  for (int k : (join_side ? a.A : a.B)) in_sub[k] = 1;
  in_sub[a.j] = 1;
  std::vector<int> trunk, sub;
  for (int v = 1; v <= n; ++v) (in_sub[v] ? sub : trunk).push_back(v);
  std::vector<std::vector<int>> ch(n + 1);
  ch[0] = {1};
  for (int v = 1; v <= n; ++v) ch[v].assign(s[v - 1] + 1, 0);
  auto chain_slot = [&](int v) { return join_side ? (int)ch[v].size() - 1 : 0; };
  for (size_t t = 0; t + 1 < trunk.size(); ++t) ch[trunk[t]][chain_slot(trunk[t])] = trunk[t + 1];
  for (size_t t = 0; t + 1 < sub.size(); ++t) ch[sub[t]][chain_slot(sub[t])] = sub[t + 1];
  int si = s[a.i - 1];
  ch[a.i][join_side ? si - a.r : si - a.r + 1] = sub[0];
  return bush_from_children(s, ch);
}

// Arc of the unique increasing path from i to j in a tree; keep_path tells
// whether on-path interior nodes go to A (descent side) or B (ascent side).
SArc arc_of_path(const Bush& t, int i, int j, int r, bool keep_path_left) {
  auto pi = extreme_path(t, i, j, 'R');
  SArc a;
  a.i = i;
  a.j = j;
  a.r = r;
  for (int k = i + 1; k < j; ++k) {
    if (t.s[k - 1] == 0) continue;
    int sd = side_of(t, pi, k);
    bool left = keep_path_left ? sd <= 0 : sd < 0;
    (left ? a.A : a.B).push_back(k);
  }
  return a;
}

bool has_pair(const std::vector<std::pair<int, int>>& v, IJ p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

Bush t_join(const SComp& s, const SArc& a) {
  check_arc(s, a);
  return comb_tree(s, a, true);
}

Bush t_meet(const SComp& s, const SArc& a) {
  check_arc(s, a);
  return comb_tree(s, a, false);
}

SArc alpha_join(const Bush& t, IJ descent) {
  if (!t.is_tree()) throw InvalidInput("alpha_join expects a tree");
  if (!has_pair(descents(t), descent))
    throw NotAnAscentOrDescent("(" + std::to_string(descent.first) + ", " +
                               std::to_string(descent.second) + ") is not a descent of this tree");
  return arc_of_path(t, descent.first, descent.second, pos(t, descent.first, descent.second), true);
}

SArc alpha_meet(const Bush& t, IJ ascent) {
  if (!t.is_tree()) throw InvalidInput("alpha_meet expects a tree");
  if (!has_pair(ascents(t), ascent))
    throw NotAnAscentOrDescent("(" + std::to_string(ascent.first) + ", " +
                               std::to_string(ascent.second) + ") is not an ascent of this tree");
  return arc_of_path(t, ascent.first, ascent.second, pos(t, ascent.first, ascent.second) + 1,
                     false);
}

SArc alpha_join(const Bush& t) {
  auto ds = descents(t);
  if (ds.size() != 1)
    throw InvalidInput("tree is not join-irreducible: it has " + std::to_string(ds.size()) +
                       " descents");
  return alpha_join(t, ds[0]);
}

SArc alpha_meet(const Bush& t) {
  auto as = ascents(t);
  if (as.size() != 1)
    throw InvalidInput("tree is not meet-irreducible: it has " + std::to_string(as.size()) +
                       " ascents");
  return alpha_meet(t, as[0]);
}

std::vector<std::pair<SArc, Bush>> join_irreducibles(const SComp& s, long long cap) {
  std::vector<std::pair<SArc, Bush>> out;
  for (const SArc& a : all_arcs(s, cap)) out.emplace_back(a, t_join(s, a));
  return out;
}

std::vector<std::pair<SArc, Bush>> meet_irreducibles(const SComp& s, long long cap) {
  std::vector<std::pair<SArc, Bush>> out;
  for (const SArc& a : all_arcs(s, cap)) out.emplace_back(a, t_meet(s, a));
  return out;
}

bool noncrossing(const SArc& x, const SArc& y) {
  const SArc* a = &x;
  const SArc* b = &y;
  if (a->j > b->j) std::swap(a, b);
  if (a->j == b->j) return false;
  int i = a->i, j = a->j, ip = b->i;
  // The interior sets restricted to the other arc's span.
  std::vector<int> Ap_in = inter_open(b->A, i, j);
  std::vector<int> A_in = inter_open(a->A, b->i, b->j);
  if (j <= ip) return true;
  if (i < ip && ip < j) {
    if (contains(a->A, ip) && !contains(b->A, j) && subset(Ap_in, A_in)) return true;
    if (contains(a->B, ip) && !contains(b->B, j) && subset(A_in, Ap_in)) return true;
    return false;
  }
  if (i == ip) {
    if (a->r < b->r) return !contains(b->A, j) && subset(Ap_in, A_in);
    if (a->r > b->r) return !contains(b->B, j) && subset(A_in, Ap_in);
    return !contains(b->A, j) && !contains(b->B, j) && Ap_in == A_in;
  }
  // ip < i: the longer arc passes the lower endpoint of the shorter one.
  if (contains(b->A, i) && !contains(b->B, j) && subset(A_in, Ap_in)) return true;
  if (contains(b->B, i) && !contains(b->A, j) && subset(Ap_in, A_in)) return true;
  return false;
}

ArcDiagram delta_join(const Bush& t) {
  if (!t.is_tree()) throw InvalidInput("delta_join expects a tree");
  ArcDiagram d;
  for (IJ ij : descents(t))
    d.push_back(arc_of_path(t, ij.first, ij.second, pos(t, ij.first, ij.second), true));
  std::sort(d.begin(), d.end());
  return d;
}

ArcDiagram delta_meet(const Bush& t) {
  if (!t.is_tree()) throw InvalidInput("delta_meet expects a tree");
  ArcDiagram d;
  for (IJ ij : ascents(t))
    d.push_back(arc_of_path(t, ij.first, ij.second, pos(t, ij.first, ij.second) + 1, false));
  std::sort(d.begin(), d.end());
  return d;
}

Bush tree_from_diagram(const SComp& s, const ArcDiagram& d) {
  int n = (int)s.size();
  for (const SArc& a : d) check_arc(s, a);
  for (size_t p = 0; p < d.size(); ++p)
    for (size_t q = p + 1; q < d.size(); ++q)
      if (!noncrossing(d[p], d[q]))
        throw CrossingDiagram("arcs " + arc_str(d[p]) + " and " + arc_str(d[q]) + " cross");
  std::vector<std::vector<int>> ch(n + 1);
  ch[0] = {1};
  if (n >= 1) ch[1].assign(s[0] + 1, 0);
  for (int k = 2; k <= n; ++k) {
    int i = 1, r = 0;
    const SArc* end = nullptr;
    for (const SArc& a : d)
      if (a.j == k) end = &a;
    if (end) {
      i = end->i;
      r = end->r;
    } else {
      bool covered = false;
      for (const SArc& a : d)
        if (contains(a.A, k) && (!covered || a.i > i)) {
          i = a.i;
          covered = true;
        }
      if (covered)
        for (const SArc& a : d)
          if (a.i == i && contains(a.A, k)) r = std::max(r, a.r);
    }
    // Rightmost leaf of the (r+1)-st subtree of i, counted from the right.
    int v = i, e = (int)ch[i].size() - 1 - r;
    while (ch[v][e] != 0) {
      v = ch[v][e];
      e = (int)ch[v].size() - 1;
    }
    ch[v][e] = k;
    ch[k].assign(s[k - 1] + 1, 0);
  }
  return bush_from_children(s, ch);
}

std::vector<Bush> canonical_join_rep(const Bush& t) {
  std::vector<Bush> out;
  for (const SArc& a : delta_join(t)) out.push_back(t_join(t.s, a));
  return out;
}

std::vector<Bush> canonical_meet_rep(const Bush& t) {
  std::vector<Bush> out;
  for (const SArc& a : delta_meet(t)) out.push_back(t_meet(t.s, a));
  return out;
}

bool semicrossing(const SArc& aj, const SArc& am) {
  std::vector<int> K, L;
  for (int k : am.A)
    if (k == aj.i || contains(aj.B, k)) K.push_back(k);
  if (am.i == aj.i || contains(aj.B, am.i)) K.push_back(am.i);
  for (int l : aj.A)
    if (l == am.j || contains(am.B, l)) L.push_back(l);
  if (aj.j == am.j || contains(am.B, aj.j)) L.push_back(aj.j);
  for (int k : K)
    for (int l : L)
      if (k < l && !(k == aj.i && k == am.i && aj.r < am.r)) return false;
  return true;
}

std::pair<ArcDiagram, ArcDiagram> interval_bidiagram(const Bush& t, const Bush& tp) {
  if (t.s != tp.s) throw InvalidInput("trees over different weak compositions");
  if (!t.is_tree() || !tp.is_tree()) throw InvalidInput("interval_bidiagram expects trees");
  if (!sweak_leq(t, tp))
    throw NotComparable("the lower tree is not below the upper tree in the tree order");
  return {delta_join(t), delta_meet(tp)};
}

}  // namespace sweak
