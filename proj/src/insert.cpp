#include "sweak/insert.hpp"

#include <algorithm>
#include <functional>

namespace sweak {

namespace {

// Values compared during insertion: a + b*eps with eps positive infinitesimal.
struct PV {
  Rat a, b;
};
inline bool operator<(const PV& x, const PV& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; }
inline bool operator==(const PV& x, const PV& y) { return x.a == y.a && x.b == y.b; }

void apply_step(const SComp& s, int j, std::vector<GapLabel>& labels, const Att& a) {
  int sj = s[j - 1];
  std::vector<GapLabel> mine;
  for (int t = sj - 1; t >= 0; --t) mine.push_back({j, t});
  if (a.gap) {
    if (sj == 0) mine = {{j, 0}};
    labels.erase(labels.begin() + a.k);
    labels.insert(labels.begin() + a.k, mine.begin(), mine.end());
  } else {
    labels.insert(labels.begin() + a.k, mine.begin(), mine.end());
  }
  long long shift = std::max(0, sj - 1);
  if (shift)
    for (auto& g : labels) {
      if (g.u == j) break;
      g.rho += shift;
    }
}

Bush insert_pv(const SComp& s, const std::vector<PV>& x) {
  int n = (int)s.size();
  if ((int)x.size() != n) throw InvalidInput("point dimension != n");
  std::vector<GapLabel> labels = {{0, 0}, {n + 1, 0}};
  std::vector<Att> att(n);
  for (int j = 1; j <= n; ++j) {
    int L = (int)labels.size() - 1;
    const PV& xj = x[j - 1];
    int pos = -1;
    bool astride = false;
    for (int k = 1; k < L && pos < 0; ++k) {
      const GapLabel& g = labels[k];
      PV t{x[g.u - 1].a - g.rho, x[g.u - 1].b};
      if (xj == t) {
        pos = k;
        astride = true;
      } else if (xj < t) {
        pos = k;
      }
    }
    if (pos < 0) pos = L;
    att[j - 1] = astride ? gap_at(pos) : leaf_at(pos);
    apply_step(s, j, labels, att[j - 1]);
  }
  return build_bush(s, att);
}

}  // namespace

std::vector<GapLabel> gap_labels(const Bush& b) {
  int n = b.n();
  std::vector<GapLabel> labels = {{0, 0}, {n + 1, 0}};
  for (int j = 1; j <= n; ++j) apply_step(b.s, j, labels, b.att[j - 1]);
  return labels;
}

Bush insert(const SComp& s, const std::vector<Rat>& x) {
  std::vector<PV> p;
  for (const Rat& v : x) p.push_back({v, 0});
  return insert_pv(s, p);
}

Bush insert_perturbed(const SComp& s, const std::vector<Rat>& x, char side) {
  int n = (int)s.size();
  if ((int)x.size() != n) throw InvalidInput("point dimension != n");
  std::vector<PV> p;
  for (int i = 1; i <= n; ++i) {
    Rat w = 2 * i - n - 1;
    p.push_back({x[i - 1], side == 'L' ? w : -w});
  }
  return insert_pv(s, p);
}

namespace {

long long path_stat(const Bush& b, int i, int j, char side) {
  if (!(i >= 1 && j <= b.n() && b.is_ancestor(i, j)))
    throw NotAncestor(std::to_string(i) + " is not an ancestor of " + std::to_string(j));
  int req = -1;
  if (b.indeg(j) == 2) {
    for (auto& h : holes(b))
      if (h.second == j && h.first == i) req = side == 'L' ? 1 : 0;
  }
  auto pi = extreme_path(b, i, j, side, req);
  long long r = side == 'L' ? b.outdeg(i) - pi[0].slot : b.outdeg(i) - pi[0].slot - 1;
  long long acc = r - 1;
  for (int k = i + 1; k < j; ++k) {
    int sd = side_of(b, pi, k);
    if (side == 'L' ? sd >= 0 : sd > 0) acc += std::max(0, b.s[k - 1] - 1);
  }
  return acc;
}

}  // namespace

long long mu(const Bush& b, int i, int j) { return path_stat(b, i, j, 'L'); }
long long nu(const Bush& b, int i, int j) { return path_stat(b, i, j, 'R'); }

DBM fiber_hrep(const Bush& b) {
  DBM d = DBM::top(b.n());
  for (auto [i, j] : holes(b)) d.add_eq(i - 1, j - 1, mu(b, i, j));
  for (auto [i, j] : ascents(b)) d.add_upper(i - 1, j - 1, mu(b, i, j));
  for (auto [i, j] : descents(b)) d.add_lower(i - 1, j - 1, nu(b, i, j));
  d.close();
  return d;
}

Bush bush_from_children(const SComp& s, const std::vector<std::vector<int>>& children) {
  int n = (int)s.size();
  std::vector<Att> att(n);
  for (int j = 1; j <= n; ++j) {
    // Planar leaf order of the partial bush on nodes < j: walk from the root,
    // descending only into nodes < j; edges to leaves or to nodes >= j are
    // the partial leaves.
    std::vector<int> partial;
    std::vector<char> visited(n + 1, 0);
    std::function<void(int)> dfs = [&](int v) {
      for (int t : children[v]) {
        if (t != 0 && t < j) {
          // A node with two incoming edges hangs astride a former gap; its
          // subtree is emitted at the first (left) edge only.
          if (!visited[t]) {
            visited[t] = 1;
            dfs(t);
          }
        } else {
          partial.push_back(t);
        }
      }
    };
    dfs(0);
    std::vector<int> at;
    for (int idx = 0; idx < (int)partial.size(); ++idx)
      if (partial[idx] == j) at.push_back(idx);
    if (at.size() == 1)
      att[j - 1] = leaf_at(at[0] + 1);
    else if (at.size() == 2 && at[1] == at[0] + 1)
      att[j - 1] = gap_at(at[0] + 1);
    else
      throw InvalidInput("edited children table is not a valid bush at node " + std::to_string(j));
  }
  return build_bush(s, att);
}

namespace {

// Edge p->q replaced during stitching/rotation at (i, j): the last edge with
// source < j along the extreme increasing path leaving i through the edge
// immediately inside the path from i to j.
Edge pq_edge(const Bush& b, int i, int j, char side) {
  auto pi = extreme_path(b, i, j, side);
  int start = side == 'L' ? pi[0].slot - 1 : pi[0].slot + 1;
  Edge last{i, start};
  int cur = b.children[i][start];
  while (cur != 0 && cur < j) {
    int slot = side == 'L' ? b.outdeg(cur) - 1 : 0;
    last = {cur, slot};
    cur = b.children[cur][slot];
  }
  return last;
}

char slope_side(const Bush& b, std::pair<int, int> ij, char kind) {
  auto asc = ascents(b);
  auto desc = descents(b);
  bool is_a = std::find(asc.begin(), asc.end(), ij) != asc.end();
  bool is_d = std::find(desc.begin(), desc.end(), ij) != desc.end();
  std::string name =
      "(" + std::to_string(ij.first) + ", " + std::to_string(ij.second) + ")";
  if (kind == 'A') {
    if (!is_a) throw NotAnAscentOrDescent(name + " is not an ascent");
    return 'L';
  }
  if (kind == 'D') {
    if (!is_d) throw NotAnAscentOrDescent(name + " is not a descent");
    return 'R';
  }
  if (is_a && is_d)
    throw InvalidInput(name + " is both an ascent and a descent; pass an explicit kind");
  if (is_a) return 'L';
  if (is_d) return 'R';
  throw NotAnAscentOrDescent(name);
}

}  // namespace

Bush stitch(const Bush& b, std::pair<int, int> ij, char kind) {
  char side = slope_side(b, ij, kind);
  auto [i, j] = ij;
  Edge pq = pq_edge(b, i, j, side);
  int q = b.children[pq.node][pq.slot];
  auto ch = b.children;
  ch[pq.node][pq.slot] = j;
  if (b.s[j - 1] == 0) {
    if (side == 'L')
      ch[j].insert(ch[j].begin(), q);
    else
      ch[j].push_back(q);
  } else {
    ch[j][side == 'L' ? 0 : b.outdeg(j) - 1] = q;
  }
  return bush_from_children(b.s, ch);
}

Bush incise_at(const Bush& b, int j, char side) {
  if (j < 1 || j > b.n() || b.indeg(j) != 2)
    throw InvalidInput("node " + std::to_string(j) + " does not have indegree 2");
  // Resolve the hole at j geometrically: move the rigid block of coordinates
  // tied to i (by the other hole equalities) off the wall by an infinitesimal,
  // so only this hole's tie breaks. Detaching the left edge drops j onto the
  // right leaf, i.e. below the threshold block.
  int n = b.n(), hi = 0;
  std::vector<int> comp(n + 1);
  for (int v = 0; v <= n; ++v) comp[v] = v;
  std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
  for (auto [a, c] : holes(b)) {
    if (c == j) {
      hi = a;
      continue;
    }
    comp[find(a)] = find(c);
  }
  std::vector<Rat> z = dbm_relint(fiber_hrep(b));
  std::vector<PV> p;
  for (int v = 1; v <= n; ++v)
    p.push_back({z[v - 1], find(v) == find(hi) ? (side == 'L' ? -1 : 1) : 0});
  return insert_pv(b.s, p);
}

Bush incise(const Bush& b, char side) {
  int j = 0, nh = 0;
  for (int v = 1; v <= b.n(); ++v)
    if (b.indeg(v) == 2) {
      j = v;
      ++nh;
    }
  if (nh != 1) throw WrongHoleCount("bush has " + std::to_string(nh) + " holes, need exactly 1");
  return incise_at(b, j, side);
}

Bush rotate(const Bush& b, std::pair<int, int> ij, char kind) {
  char side = slope_side(b, ij, kind);
  auto [i, j] = ij;
  Edge rj = b.parents[j][0];
  int sslot = side == 'L' ? b.outdeg(j) - 1 : 0;
  int snode = b.children[j][sslot];
  Edge pq = pq_edge(b, i, j, side);
  int q = b.children[pq.node][pq.slot];
  auto ch = b.children;
  ch[rj.node][rj.slot] = snode;
  ch[j][sslot] = 0;
  ch[j][side == 'L' ? 0 : b.outdeg(j) - 1] = q;
  ch[pq.node][pq.slot] = j;
  return bush_from_children(b.s, ch);
}

Bush left_tree(const Bush& b) { return insert_perturbed(b.s, dbm_relint(fiber_hrep(b)), 'L'); }

Bush right_tree(const Bush& b) { return insert_perturbed(b.s, dbm_relint(fiber_hrep(b)), 'R'); }

}  // namespace sweak
