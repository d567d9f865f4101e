#include "sweak/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sweak/enumerate.hpp"
#include "sweak/insert.hpp"

namespace sweak {

namespace {

void check_pair(const Bush& b, int i, int j) {
  if (i < 1 || j > b.n() || i >= j)
    throw InvalidInput("need 1 <= i < j <= n, got (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
}

// Ancestor chain of j as a root-to-j path (node, exit slot), trees only.
std::vector<Edge> tree_root_path(const Bush& t, int j) {
  std::vector<Edge> path;
  int cur = j;
  while (!t.parents[cur].empty()) {
    Edge e = t.parents[cur][0];
    if (e.node == 0) break;
    path.push_back(e);
    cur = e.node;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

int pos(const Bush& t, int i, int j) {
  check_pair(t, i, j);
  auto path = tree_root_path(t, j);
  for (const Edge& e : path)
    if (e.node == i) return t.s[i - 1] - e.slot;
  // i is not an ancestor of j: find the deepest ancestor of i on the path and
  // compare the branch slot with the path's exit slot there.
  std::map<int, int> exit_slot;
  for (const Edge& e : path) exit_slot[e.node] = e.slot;
  int cur = i, arrive = -1;
  while (true) {
    Edge e = t.parents[cur][0];
    if (e.node == 0) break;
    auto it = exit_slot.find(e.node);
    if (it != exit_slot.end()) {
      arrive = e.slot < it->second ? -1 : +1;
      break;
    }
    cur = e.node;
  }
  return arrive < 0 ? 0 : t.s[i - 1];
}

PositionVector positions(const Bush& t) {
  int n = t.n();
  PositionVector P{t.s, std::vector<std::vector<int>>(n + 1, std::vector<int>(n + 1, 0))};
  for (int j = 2; j <= n; ++j) {
    auto path = tree_root_path(t, j);
    std::map<int, int> exit_slot;
    for (const Edge& e : path) exit_slot[e.node] = e.slot;
    for (int i = 1; i < j; ++i) {
      auto it = exit_slot.find(i);
      if (it != exit_slot.end()) {
        P.p[i][j] = t.s[i - 1] - it->second;
        continue;
      }
      int cur = i, arrive = -1;
      while (true) {
        Edge e = t.parents[cur][0];
        if (e.node == 0) break;
        auto jt = exit_slot.find(e.node);
        if (jt != exit_slot.end()) {
          arrive = e.slot < jt->second ? -1 : +1;
          break;
        }
        cur = e.node;
      }
      P.p[i][j] = arrive < 0 ? 0 : t.s[i - 1];
    }
  }
  return P;
}

bool operator==(const PositionVector& a, const PositionVector& b) {
  return a.s == b.s && a.p == b.p;
}

int FiniteLattice::index_of(const std::string& label) const {
  for (int u = 0; u < size(); ++u)
    if (labels[u] == label) return u;
  return -1;
}

namespace {

int extreme_bound(const FiniteLattice& L, int u, int v, bool upper) {
  const auto& dir = upper ? L.up : L.down;
  int words = (int)dir[u].size();
  std::vector<uint64_t> common(words);
  for (int w = 0; w < words; ++w) common[w] = dir[u][w] & dir[v][w];
  int best = -1;
  std::vector<int> topo_pos(L.size());
  for (int k = 0; k < L.size(); ++k) topo_pos[L.topo[k]] = k;
  for (int w = 0; w < words; ++w) {
    uint64_t bits = common[w];
    while (bits) {
      int c = w * 64 + __builtin_ctzll(bits);
      bits &= bits - 1;
      if (best == -1 || (upper ? topo_pos[c] < topo_pos[best] : topo_pos[c] > topo_pos[best]))
        best = c;
    }
  }
  if (best == -1) return -1;
  for (int w = 0; w < words; ++w)
    if (common[w] & ~dir[best][w]) return -1;
  return best;
}

}  // namespace

int FiniteLattice::join(int u, int v) const { return extreme_bound(*this, u, v, true); }
int FiniteLattice::meet(int u, int v) const { return extreme_bound(*this, u, v, false); }

bool FiniteLattice::is_lattice() const {
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (join(u, v) == -1 || meet(u, v) == -1) return false;
  return true;
}

int FiniteLattice::bottom() const {
  int words = size() ? (int)up[0].size() : 0;
  int found = -1;
  for (int u = 0; u < size(); ++u) {
    bool all = true;
    for (int w = 0; w < words && all; ++w) {
      uint64_t mask = ~0ull;
      if (w == words - 1 && size() % 64) mask = (1ull << (size() % 64)) - 1;
      if ((up[u][w] & mask) != mask) all = false;
    }
    if (all) {
      if (found != -1) return -1;
      found = u;
    }
  }
  return found;
}

int FiniteLattice::top() const {
  int words = size() ? (int)down[0].size() : 0;
  int found = -1;
  for (int u = 0; u < size(); ++u) {
    bool all = true;
    for (int w = 0; w < words && all; ++w) {
      uint64_t mask = ~0ull;
      if (w == words - 1 && size() % 64) mask = (1ull << (size() % 64)) - 1;
      if ((down[u][w] & mask) != mask) all = false;
    }
    if (all) {
      if (found != -1) return -1;
      found = u;
    }
  }
  return found;
}

FiniteLattice make_finite_lattice(std::vector<std::string> labels,
                                  const std::vector<IJ>& cover_edges, bool verify) {
  FiniteLattice L;
  L.labels = std::move(labels);
  int n = L.size();
  L.covers.assign(n, {});
  std::vector<std::vector<int>> rev(n);
  std::vector<int> indeg(n, 0);
  for (auto [u, v] : cover_edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw InvalidInput("bad cover edge");
    L.covers[u].push_back(v);
    rev[v].push_back(u);
    ++indeg[v];
  }
  std::vector<int> queue;
  for (int u = 0; u < n; ++u)
    if (indeg[u] == 0) queue.push_back(u);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    L.topo.push_back(u);
    for (int v : L.covers[u])
      if (--indeg[v] == 0) queue.push_back(v);
  }
  if ((int)L.topo.size() != n) throw InvalidInput("cover relation has a cycle");
  int words = (n + 63) / 64;
  L.up.assign(n, std::vector<uint64_t>(words, 0));
  L.down.assign(n, std::vector<uint64_t>(words, 0));
  for (int k = n - 1; k >= 0; --k) {
    int u = L.topo[k];
    L.up[u][u >> 6] |= 1ull << (u & 63);
    for (int v : L.covers[u])
      for (int w = 0; w < words; ++w) L.up[u][w] |= L.up[v][w];
  }
  for (int k = 0; k < n; ++k) {
    int v = L.topo[k];
    L.down[v][v >> 6] |= 1ull << (v & 63);
    for (int u : rev[v])
      for (int w = 0; w < words; ++w) L.down[v][w] |= L.down[u][w];
  }
  if (verify && !L.is_lattice()) throw InvalidInput("order is not a lattice");
  return L;
}

FiniteLattice lattice_from_order(std::vector<std::string> labels,
                                 const std::vector<std::vector<bool>>& leq_rel, bool verify) {
  int n = (int)labels.size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && leq_rel[u][v] && leq_rel[v][u])
        throw InvalidInput("relation is not antisymmetric");
  std::vector<IJ> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !leq_rel[u][v]) continue;
      bool direct = true;
      for (int w = 0; w < n && direct; ++w)
        if (w != u && w != v && leq_rel[u][w] && leq_rel[w][v]) direct = false;
      if (direct) edges.push_back({u, v});
    }
  return make_finite_lattice(std::move(labels), edges, verify);
}

bool sweak_leq(const Bush& t, const Bush& tp) {
  if (t.s != tp.s) throw InvalidInput("trees over different weak compositions");
  PositionVector P = positions(t), Q = positions(tp);
  for (int i = 1; i <= t.n(); ++i)
    for (int j = i + 1; j <= t.n(); ++j)
      if (P.p[i][j] > Q.p[i][j]) return false;
  return true;
}

FiniteLattice sweak_lattice(const SComp& s) {
  auto trees = enumerate_kind(s, Kind::Trees);
  std::vector<std::string> labels;
  std::map<std::string, int> id;
  for (const auto& t : trees) {
    id[t.key()] = (int)labels.size();
    labels.push_back(t.key());
  }
  std::vector<IJ> edges;
  for (const auto& t : trees) {
    int u = id[t.key()];
    for (auto a : ascents(t)) edges.push_back({u, id[rotate(t, a, 'A').key()]});
  }
  return make_finite_lattice(std::move(labels), edges);
}

Bush tree_from_positions(const PositionVector& P) {
  const SComp& s = P.s;
  int n = (int)s.size();
  if ((int)P.p.size() != n + 1)
    throw NotAPositionVector("matrix has wrong dimensions");
  for (int i = 1; i <= n; ++i) {
    if ((int)P.p[i].size() != n + 1) throw NotAPositionVector("matrix has wrong dimensions");
    for (int j = i + 1; j <= n; ++j)
      if (P.p[i][j] < 0 || P.p[i][j] > s[i - 1])
        throw NotAPositionVector("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") out of range");
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (P.p[j][k] > 0 && P.p[i][j] > P.p[i][k])
          throw NotAPositionVector("positive (" + std::to_string(j) + ", " + std::to_string(k) +
                                   ") needs (" + std::to_string(i) + ", " + std::to_string(j) +
                                   ") <= (" + std::to_string(i) + ", " + std::to_string(k) + ")");
        if (P.p[j][k] < s[j - 1] && P.p[i][j] < P.p[i][k])
          throw NotAPositionVector("non-full (" + std::to_string(j) + ", " + std::to_string(k) +
                                   ") needs (" + std::to_string(i) + ", " + std::to_string(j) +
                                   ") >= (" + std::to_string(i) + ", " + std::to_string(k) + ")");
      }
  std::vector<std::vector<int>> ch(n + 1);
  ch[0] = {1};
  ch[1].assign(s[0] + 1, 0);
  for (int j = 2; j <= n; ++j) {
    int cur = 1;
    while (true) {
      int e = s[cur - 1] - P.p[cur][j];
      int c = ch[cur][e];
      if (c == 0) {
        ch[cur][e] = j;
        break;
      }
      cur = c;
    }
    ch[j].assign(s[j - 1] + 1, 0);
  }
  Bush t = bush_from_children(s, ch);
  if (!(positions(t) == P)) throw NotAPositionVector("no tree attains these positions");
  return t;
}

Bush join(const Bush& t, const Bush& tp) {
  if (t.s != tp.s) throw InvalidInput("trees over different weak compositions");
  int n = t.n();
  PositionVector P = positions(t), Q = positions(tp);
  PositionVector M{t.s, std::vector<std::vector<int>>(n + 1, std::vector<int>(n + 1, 0))};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) M.p[i][j] = std::max(P.p[i][j], Q.p[i][j]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          if (M.p[j][k] > 0 && M.p[i][k] < M.p[i][j]) {
            M.p[i][k] = M.p[i][j];
            changed = true;
          }
  }
  return tree_from_positions(M);
}

Bush meet(const Bush& t, const Bush& tp) {
  if (t.s != tp.s) throw InvalidInput("trees over different weak compositions");
  Bush best = t;
  bool found = false;
  for (const auto& c : enumerate_kind(t.s, Kind::Trees)) {
    if (!sweak_leq(c, t) || !sweak_leq(c, tp)) continue;
    if (!found || sweak_leq(best, c)) {
      best = c;
      found = true;
    }
  }
  // The scan keeps the running maximum of the lower bounds; confirm it
  // dominates every lower bound (true in a lattice).
  for (const auto& c : enumerate_kind(t.s, Kind::Trees))
    if (sweak_leq(c, t) && sweak_leq(c, tp) && !sweak_leq(c, best))
      throw InvalidInput("meet is not unique");
  return best;
}

namespace {

// All increasing paths from cur to j, as (node, exit slot) sequences.
void collect_paths(const Bush& b, int cur, int j, std::vector<Edge>& acc,
                   std::vector<std::vector<Edge>>& out) {
  if (cur == j) {
    out.push_back(acc);
    return;
  }
  for (int e = 0; e < b.outdeg(cur); ++e) {
    int c = b.children[cur][e];
    if (c == 0 || c > j) continue;
    acc.push_back({cur, e});
    collect_paths(b, c, j, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<Edge>> all_paths(const Bush& b, int from, int j) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> acc;
  collect_paths(b, from, j, acc, out);
  return out;
}

bool slots_less(const std::vector<Edge>& a, const std::vector<Edge>& c) {
  size_t m = std::min(a.size(), c.size());
  for (size_t k = 0; k < m; ++k)
    if (a[k].slot != c[k].slot) return a[k].slot < c[k].slot;
  return a.size() < c.size();
}

// side 'L': rightmost qualifying path and left edge count at i.
// side 'R': leftmost qualifying path and right edge count at i.
int facial_position(const Bush& b, int i, int j, char side) {
  check_pair(b, i, j);
  if (b.is_ancestor(i, j)) {
    std::vector<Edge> chosen;
    bool have = false;
    for (const auto& path : all_paths(b, i, j)) {
      bool ok = true;
      for (size_t k = 1; k < path.size() && ok; ++k) {
        // Node entered by edge path[k-1] and exited by edge path[k].
        int v = path[k].node;
        if (b.indeg(v) != 2) continue;
        bool from_right = b.parents[v][1] == Edge{path[k - 1].node, path[k - 1].slot};
        if (side == 'L' && from_right && path[k].slot == 0) ok = false;
        if (side == 'R' && !from_right && path[k].slot == b.outdeg(v) - 1) ok = false;
      }
      if (!ok) continue;
      if (!have || (side == 'L' ? slots_less(chosen, path) : slots_less(path, chosen))) {
        chosen = path;
        have = true;
      }
    }
    // When the side condition disqualifies every path, the sought path lies
    // beyond the extreme one and no outgoing edge of i is strictly beyond it.
    if (!have) return 0;
    int raw = side == 'L' ? chosen[0].slot : b.outdeg(i) - 1 - chosen[0].slot;
    return std::min(b.s[i - 1], raw);
  }
  bool left_of_all = true;
  for (const auto& path : all_paths(b, 1, j)) {
    std::vector<Edge> full = path;
    if (side_of(b, full, i) > 0) {
      left_of_all = false;
      break;
    }
  }
  if (left_of_all) return side == 'L' ? b.s[i - 1] : 0;
  return side == 'L' ? 0 : b.s[i - 1];
}

}  // namespace

int lpos(const Bush& b, int i, int j) { return facial_position(b, i, j, 'L'); }
int rpos(const Bush& b, int i, int j) { return facial_position(b, i, j, 'R'); }

bool facial_leq(const Bush& b, const Bush& bp) {
  if (b.s != bp.s) throw InvalidInput("bushes over different weak compositions");
  for (int i = 1; i <= b.n(); ++i)
    for (int j = i + 1; j <= b.n(); ++j) {
      if (lpos(b, i, j) < lpos(bp, i, j)) return false;
      if (rpos(b, i, j) > rpos(bp, i, j)) return false;
    }
  return true;
}

FiniteLattice facial_lattice(const SComp& s) {
  auto bushes = enumerate_kind(s, Kind::Bushes);
  std::vector<std::string> labels;
  std::map<std::string, int> id;
  for (const auto& b : bushes) {
    id[b.key()] = (int)labels.size();
    labels.push_back(b.key());
  }
  std::vector<IJ> edges;
  for (const auto& b : bushes) {
    int u = id[b.key()];
    for (int j = 1; j <= b.n(); ++j) {
      if (b.indeg(j) != 2) continue;
      edges.push_back({id[incise_at(b, j, 'L').key()], u});
      edges.push_back({u, id[incise_at(b, j, 'R').key()]});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return make_finite_lattice(std::move(labels), edges);
}

Polygon polygon_type(const FiniteLattice& L, const Bush& t, IJ ab, IJ cd) {
  auto asc = ascents(t);
  auto has = [&](IJ x) { return std::find(asc.begin(), asc.end(), x) != asc.end(); };
  if (!has(ab) || !has(cd) || ab.first >= cd.first)
    throw NotAscents("need two ascents with the first smaller first coordinate");
  Bush R = rotate(t, ab, 'A'), S = rotate(t, cd, 'A');
  auto ascS = ascents(S), ascR = ascents(R);
  bool ab_in_S = std::find(ascS.begin(), ascS.end(), ab) != ascS.end();
  bool cd_in_R = std::find(ascR.begin(), ascR.end(), cd) != ascR.end();
  Polygon poly;
  if (ab_in_S && cd_in_R)
    poly.type = "square";
  else if (ab_in_S)
    poly.type = "pentagonL";
  else if (cd_in_R)
    poly.type = "pentagonR";
  else
    poly.type = "hexagon";
  Bush topb = join(R, S);
  int lo = L.index_of(t.key()), hi = L.index_of(topb.key());
  if (lo == -1 || hi == -1) throw InvalidInput("tree is not an element of the given lattice");
  std::vector<int> members;
  for (int u = 0; u < L.size(); ++u)
    if (L.leq(lo, u) && L.leq(u, hi)) members.push_back(u);
  for (int u : members) {
    Bush bu = bush_from_key(t.s, L.labels[u]);
    for (int v : L.covers[u]) {
      if (!L.leq(v, hi)) continue;
      for (auto a : ascents(bu))
        if (rotate(bu, a, 'A').key() == L.labels[v]) {
          poly.edges.push_back({u, v, a});
          break;
        }
    }
  }
  return poly;
}

namespace {

struct QuotientPoset {
  std::vector<int> cls;  // tree index -> class id
  std::vector<int> rep;  // class id -> representative tree index
  std::vector<std::vector<bool>> leq;
  int size() const { return (int)rep.size(); }
};

QuotientPoset quotient_poset(const std::vector<Bush>& trees,
                             const std::vector<PositionVector>& pv,
                             const std::vector<std::vector<bool>>& tree_leq, int i, int j) {
  int n = (int)trees[0].s.size();
  std::map<std::string, int> ids;
  QuotientPoset Q;
  Q.cls.resize(trees.size());
  for (size_t t = 0; t < trees.size(); ++t) {
    std::ostringstream key;
    for (int v = 0; v + 1 < n; ++v)
      key << (trees[t].att[v].gap ? 'G' : 'L') << trees[t].att[v].k << '|';
    key << '#';
    for (int k = n - i + 1; k < n; ++k) key << pv[t].p[k][n] << ',';
    key << '#' << std::min(pv[t].p[n - i][n], j);
    auto [it, fresh] = ids.try_emplace(key.str(), (int)Q.rep.size());
    if (fresh) Q.rep.push_back((int)t);
    Q.cls[t] = it->second;
  }
  int m = Q.size();
  Q.leq.assign(m, std::vector<bool>(m, false));
  for (int c = 0; c < m; ++c) Q.leq[c][c] = true;
  for (size_t a = 0; a < trees.size(); ++a)
    for (size_t b = 0; b < trees.size(); ++b)
      if (tree_leq[a][b]) Q.leq[Q.cls[a]][Q.cls[b]] = true;
  for (int w = 0; w < m; ++w)
    for (int u = 0; u < m; ++u)
      if (Q.leq[u][w])
        for (int v = 0; v < m; ++v)
          if (Q.leq[w][v]) Q.leq[u][v] = true;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (Q.leq[u][v] && Q.leq[v][u])
        throw DoublingFailed("identification for (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") does not produce a poset");
  return Q;
}

int uf_find(std::vector<int>& p, int x) { return p[x] == x ? x : p[x] = uf_find(p, p[x]); }

}  // namespace

DoublingReport verify_doubling_sequence(const SComp& s) {
  DoublingReport report;
  for (int n = 2; n <= (int)s.size(); ++n) {
  SComp pre(s.begin(), s.begin() + n);
  auto trees = enumerate_kind(pre, Kind::Trees);
  std::vector<PositionVector> pv;
  for (const auto& t : trees) pv.push_back(positions(t));
  int N = (int)trees.size();
  std::vector<std::vector<bool>> tree_leq(N, std::vector<bool>(N, false));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      bool le = true;
      for (int i = 1; i <= n && le; ++i)
        for (int j = i + 1; j <= n && le; ++j)
          if (pv[a].p[i][j] > pv[b].p[i][j]) le = false;
      tree_leq[a][b] = le;
    }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= pre[n - i - 1]; ++j) {
      std::string step = "prefix " + std::to_string(n) + ", step (" + std::to_string(i) + ", " +
                         std::to_string(j) + "): ";
      QuotientPoset P = quotient_poset(trees, pv, tree_leq, i, j - 1);
      QuotientPoset Q = quotient_poset(trees, pv, tree_leq, i, j);
      std::vector<int> pi(Q.size());
      for (int t = 0; t < N; ++t) pi[Q.cls[t]] = P.cls[t];
      std::vector<std::vector<int>> fiber(P.size());
      for (int c = 0; c < Q.size(); ++c) fiber[pi[c]].push_back(c);
      std::vector<int> eps(Q.size(), 0);
      std::vector<bool> doubled(P.size(), false);
      for (int c = 0; c < P.size(); ++c) {
        if (fiber[c].size() == 1) continue;
        if (fiber[c].size() != 2)
          throw DoublingFailed(step + "class splits into " + std::to_string(fiber[c].size()) +
                               " parts");
        int f0 = fiber[c][0], f1 = fiber[c][1];
        if (!Q.leq[f0][f1] && !Q.leq[f1][f0])
          throw DoublingFailed(step + "split halves are incomparable");
        if (Q.leq[f1][f0]) std::swap(fiber[c][0], fiber[c][1]);
        eps[fiber[c][1]] = 1;
        doubled[c] = true;
      }
      std::vector<int> comp(P.size());
      std::iota(comp.begin(), comp.end(), 0);
      for (int c = 0; c < P.size(); ++c)
        for (int d = 0; d < P.size(); ++d) {
          if (c == d || !doubled[c] || !doubled[d] || !P.leq[c][d]) continue;
          if (!Q.leq[fiber[c][1]][fiber[d][0]])
            comp[uf_find(comp, c)] = uf_find(comp, d);
        }
      std::map<int, std::vector<int>> groups;
      for (int c = 0; c < P.size(); ++c)
        if (doubled[c]) groups[uf_find(comp, c)].push_back(c);
      for (auto& [root, members] : groups) {
        int lo = members[0], hi = members[0];
        for (int c : members) {
          if (P.leq[c][lo]) lo = c;
          if (P.leq[hi][c]) hi = c;
        }
        for (int c : members)
          if (!P.leq[lo][c] || !P.leq[c][hi])
            throw DoublingFailed(step + "doubled component has no extreme pair");
        for (int c = 0; c < P.size(); ++c) {
          bool inside = P.leq[lo][c] && P.leq[c][hi];
          bool member = std::find(members.begin(), members.end(), c) != members.end();
          if (inside != member)
            throw DoublingFailed(step + "doubled component is not an interval around class of " +
                                 trees[P.rep[lo]].key() + " .. " + trees[P.rep[hi]].key());
        }
      }
      for (int u = 0; u < Q.size(); ++u)
        for (int v = 0; v < Q.size(); ++v) {
          bool expect = P.leq[pi[u]][pi[v]];
          if (expect && doubled[pi[u]] && doubled[pi[v]] &&
              uf_find(comp, pi[u]) == uf_find(comp, pi[v]) && eps[u] > eps[v])
            expect = false;
          if (Q.leq[u][v] != expect)
            throw DoublingFailed(step + "order mismatch between " + trees[Q.rep[u]].key() +
                                 " and " + trees[Q.rep[v]].key());
        }
      report.steps.push_back({n, i, j, P.size(), Q.size(), (int)groups.size()});
    }
  }
  }
  return report;
}

}  // namespace sweak
