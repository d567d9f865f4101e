#include <sweak/congr.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include <sweak/errors.hpp>
#include <sweak/insert.hpp>

namespace sweak {

namespace {

bool has(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

bool within(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> with(std::vector<int> v, int x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  return v;
}

// Dense class ids (by first appearance) and the member lists per class.
std::pair<std::vector<int>, std::vector<std::vector<int>>> dense_classes(
    const FiniteLattice& L, const std::vector<int>& cls) {
  if ((int)cls.size() != L.size())
    throw InvalidInput("class assignment does not match the lattice size");
  std::map<int, int> remap;
  std::vector<int> dense(L.size());
  std::vector<std::vector<int>> members;
  for (int u = 0; u < L.size(); ++u) {
    auto [it, fresh] = remap.try_emplace(cls[u], (int)members.size());
    if (fresh) members.push_back({});
    dense[u] = it->second;
    members[it->second].push_back(u);
  }
  return {std::move(dense), std::move(members)};
}

// Bottom and top of a member list; false when either does not exist.
bool class_bounds(const FiniteLattice& L, const std::vector<int>& mem, int* lo_out, int* hi_out) {
  int lo = mem[0], hi = mem[0];
  for (int u : mem) {
    if (L.leq(u, lo)) lo = u;
    if (L.leq(hi, u)) hi = u;
  }
  for (int u : mem)
    if (!L.leq(lo, u) || !L.leq(u, hi)) return false;
  *lo_out = lo;
  *hi_out = hi;
  return true;
}

long long interval_size(const FiniteLattice& L, int lo, int hi) {
  long long count = 0;
  for (size_t w = 0; w < L.up[lo].size(); ++w)
    count += __builtin_popcountll(L.up[lo][w] & L.down[hi][w]);
  return count;
}

std::vector<std::vector<int>> cocovers_of(const FiniteLattice& L) {
  std::vector<std::vector<int>> co(L.size());
  for (int u = 0; u < L.size(); ++u)
    for (int v : L.covers[u]) co[v].push_back(u);
  return co;
}

}  // namespace

bool is_subarc(const SComp& s, const SArc& a, const SArc& b) {
  check_arc(s, a);
  check_arc(s, b);
  if (!(b.i <= a.i && a.j <= b.j)) return false;
  if (!within(a.A, b.A) || !within(a.B, b.B)) return false;
  if (s[a.j - 1] == 0 && a.j != b.j) return false;
  if (b.i == a.i && a.r != b.r) return false;
  if (b.i < a.i && !((has(b.A, a.i) && a.r == 1) || (has(b.B, a.i) && a.r == s[a.i - 1])))
    return false;
  return true;
}

std::vector<SArc> extensions(const SComp& s, const SArc& a) {
  check_arc(s, a);
  int n = (int)s.size();
  std::vector<SArc> out;
  if (s[a.j - 1] != 0) {
    for (int jp = a.j + 1; jp <= n; ++jp) {
      out.push_back({a.i, jp, with(a.A, a.j), a.B, a.r});
      out.push_back({a.i, jp, a.A, with(a.B, a.j), a.r});
      if (s[jp - 1] != 0) break;  // a further endpoint would trap jp inside
    }
  }
  int ip = a.i - 1;
  while (ip >= 1 && s[ip - 1] == 0) --ip;
  if (ip >= 1) {
    if (a.r == 1)
      for (int rp = 1; rp <= s[ip - 1]; ++rp)
        out.push_back({ip, a.j, with(a.A, a.i), a.B, rp});
    if (a.r == s[a.i - 1])
      for (int rp = 1; rp <= s[ip - 1]; ++rp)
        out.push_back({ip, a.j, a.A, with(a.B, a.i), rp});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ArcPoset subarc_poset(const SComp& s, long long cap) {
  ArcPoset P;
  P.arcs = all_arcs(s, cap);
  int m = (int)P.arcs.size();
  P.leq.assign(m, std::vector<bool>(m, false));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) P.leq[x][y] = is_subarc(s, P.arcs[x], P.arcs[y]);
  return P;
}

bool classes_are_intervals(const FiniteLattice& L, const std::vector<int>& cls,
                           std::string* why) {
  auto [dense, members] = dense_classes(L, cls);
  (void)dense;
  for (const auto& mem : members) {
    int lo = 0, hi = 0;
    if (!class_bounds(L, mem, &lo, &hi)) {
      if (why) *why = "class of " + L.labels[mem[0]] + " has no bottom or no top";
      return false;
    }
    if (interval_size(L, lo, hi) != (long long)mem.size()) {
      if (why)
        *why = "class of " + L.labels[mem[0]] + " misses elements of [" + L.labels[lo] +
               ", " + L.labels[hi] + "]";
      return false;
    }
  }
  return true;
}

bool projections_monotone(const FiniteLattice& L, const std::vector<int>& cls,
                          std::string* why) {
  auto [dense, members] = dense_classes(L, cls);
  int k = (int)members.size();
  std::vector<int> lo(k), hi(k);
  for (int c = 0; c < k; ++c)
    if (!class_bounds(L, members[c], &lo[c], &hi[c])) {
      if (why) *why = "class of " + L.labels[members[c][0]] + " has no bottom or no top";
      return false;
    }
  for (int u = 0; u < L.size(); ++u)
    for (int v : L.covers[u]) {
      if (!L.leq(lo[dense[u]], lo[dense[v]])) {
        if (why)
          *why = "bottom projection reverses the edge " + L.labels[u] + " < " + L.labels[v];
        return false;
      }
      if (!L.leq(hi[dense[u]], hi[dense[v]])) {
        if (why)
          *why = "top projection reverses the edge " + L.labels[u] + " < " + L.labels[v];
        return false;
      }
    }
  return true;
}

bool join_meet_compatible(const FiniteLattice& L, const std::vector<int>& cls,
                          std::string* why) {
  auto [dense, members] = dense_classes(L, cls);
  for (const auto& mem : members)
    for (size_t t = 1; t < mem.size(); ++t) {
      int x = mem[0], y = mem[t];
      for (int z = 0; z < L.size(); ++z) {
        int jx = L.join(x, z), jy = L.join(y, z);
        int mx = L.meet(x, z), my = L.meet(y, z);
        if (jx < 0 || jy < 0 || mx < 0 || my < 0) {
          if (why) *why = "the order is not a lattice";
          return false;
        }
        if (dense[jx] != dense[jy]) {
          if (why)
            *why = "joining " + L.labels[x] + " and " + L.labels[y] + " with " + L.labels[z] +
                   " lands in different classes";
          return false;
        }
        if (dense[mx] != dense[my]) {
          if (why)
            *why = "meeting " + L.labels[x] + " and " + L.labels[y] + " with " + L.labels[z] +
                   " lands in different classes";
          return false;
        }
      }
    }
  return true;
}

Congruence make_congruence(const FiniteLattice& L, const std::vector<int>& assignment) {
  std::string why;
  if (!classes_are_intervals(L, assignment, &why)) throw NotACongruence(why);
  if (!projections_monotone(L, assignment, &why)) throw NotACongruence(why);
  auto [dense, members] = dense_classes(L, assignment);
  int k = (int)members.size();
  std::vector<int> lo(k), hi(k), order(k);
  for (int c = 0; c < k; ++c) class_bounds(L, members[c], &lo[c], &hi[c]);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return lo[x] < lo[y]; });
  Congruence out;
  out.cls.assign(L.size(), -1);
  out.cls_min.resize(k);
  out.cls_max.resize(k);
  for (int rank = 0; rank < k; ++rank) {
    int c = order[rank];
    out.cls_min[rank] = lo[c];
    out.cls_max[rank] = hi[c];
    for (int u : members[c]) out.cls[u] = rank;
  }
  return out;
}

Congruence congruence_closure(const FiniteLattice& L,
                              const std::vector<std::pair<int, int>>& seeds) {
  int n = L.size();
  std::vector<int> par(n);
  std::iota(par.begin(), par.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (par[x] != x) x = par[x] = par[par[x]];
    return x;
  };
  std::vector<std::pair<int, int>> work;
  for (auto [a, b] : seeds) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexOutOfRange("seed pair outside the lattice");
    work.push_back({a, b});
  }
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    par[ra] = rb;
    for (int z = 0; z < n; ++z) {
      int ja = L.join(a, z), jb = L.join(b, z);
      int ma = L.meet(a, z), mb = L.meet(b, z);
      if (ja < 0 || jb < 0 || ma < 0 || mb < 0)
        throw InvalidInput("congruence closure needs a lattice");
      if (find(ja) != find(jb)) work.push_back({ja, jb});
      if (find(ma) != find(mb)) work.push_back({ma, mb});
    }
  }
  std::vector<int> assignment(n);
  for (int u = 0; u < n; ++u) assignment[u] = find(u);
  return make_congruence(L, assignment);
}

std::vector<std::vector<bool>> forcing_bruteforce(const SComp& s, long long cap) {
  auto arcs = all_arcs(s, cap);
  FiniteLattice L = sweak_lattice(s);
  std::map<std::string, int> id;
  for (int u = 0; u < L.size(); ++u) id[L.labels[u]] = u;
  int m = (int)arcs.size();
  std::vector<int> ji(m), ji_star(m);
  for (int x = 0; x < m; ++x) {
    Bush t = t_join(s, arcs[x]);
    Bush t_star = rotate(t, {arcs[x].i, arcs[x].j}, 'D');
    ji[x] = id.at(t.key());
    ji_star[x] = id.at(t_star.key());
  }
  std::vector<std::vector<bool>> forces(m, std::vector<bool>(m, false));
  for (int x = 0; x < m; ++x) {
    Congruence c = congruence_closure(L, {{ji_star[x], ji[x]}});
    for (int y = 0; y < m; ++y) forces[x][y] = c.cls[ji[y]] == c.cls[ji_star[y]];
  }
  return forces;
}

CongruenceLattice all_congruences(const SComp& s, int arc_cap) {
  CongruenceLattice out;
  out.arcs = all_arcs(s, arc_cap);
  int m = (int)out.arcs.size();
  if (m > 62) throw CapExceeded("number of arcs exceeds the down set encoding width");
  std::vector<uint64_t> pred(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && is_subarc(s, out.arcs[x], out.arcs[y])) pred[y] |= 1ull << x;
  // arcs sorted by span length form a linear extension of containment
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return out.arcs[x].j - out.arcs[x].i < out.arcs[y].j - out.arcs[y].i;
  });
  std::vector<uint64_t> masks;
  std::function<void(int, uint64_t)> rec = [&](int k, uint64_t cur) {
    if (k == m) {
      masks.push_back(cur);
      if ((long long)masks.size() > 5'000'000)
        throw CapExceeded("down set enumeration exceeds five million");
      return;
    }
    int x = order[k];
    rec(k + 1, cur);
    if ((cur & pred[x]) == pred[x]) rec(k + 1, cur | (1ull << x));
  };
  rec(0, 0);
  std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::map<uint64_t, int> idx;
  std::vector<std::string> labels;
  for (uint64_t d : masks) {
    idx[d] = (int)labels.size();
    std::string lab = "{";
    std::vector<int> members;
    for (int x = 0; x < m; ++x)
      if (d >> x & 1) {
        if (!members.empty()) lab += ",";
        lab += std::to_string(x);
        members.push_back(x);
      }
    lab += "}";
    labels.push_back(lab);
    out.downsets.push_back(std::move(members));
  }
  std::vector<IJ> edges;
  for (uint64_t d : masks)
    for (int x = 0; x < m; ++x)
      if (!(d >> x & 1) && (d & pred[x]) == pred[x])
        edges.push_back({idx[d], idx.at(d | (1ull << x))});
  out.lattice = make_finite_lattice(std::move(labels), edges);
  return out;
}

Congruence congruence_from_downset(const SComp& s, const FiniteLattice& L,
                                   const std::vector<SArc>& D) {
  auto arcs = all_arcs(s);
  std::vector<SArc> down = D;
  for (const SArc& a : down) check_arc(s, a);
  std::sort(down.begin(), down.end());
  down.erase(std::unique(down.begin(), down.end()), down.end());
  auto in_down = [&](const SArc& a) {
    return std::binary_search(down.begin(), down.end(), a);
  };
  for (const SArc& a : down)
    for (const SArc& b : arcs)
      if (!in_down(b) && is_subarc(s, b, a))
        throw NotADownSet("arc " + arc_repr(b) + " is contained in " + arc_repr(a) +
                          " but missing from the set");
  auto trees = enumerate_kind(s, Kind::Trees);
  if ((int)trees.size() != L.size())
    throw InvalidInput("lattice does not match the trees of s");
  std::map<std::string, int> id;
  for (int u = 0; u < L.size(); ++u) id[L.labels[u]] = u;
  std::vector<int> par(L.size());
  std::iota(par.begin(), par.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (par[x] != x) x = par[x] = par[par[x]];
    return x;
  };
  for (const Bush& t : trees) {
    auto it = id.find(t.key());
    if (it == id.end()) throw InvalidInput("lattice does not match the trees of s");
    int u = it->second;
    for (IJ a : ascents(t)) {
      Bush tp = rotate(t, a, 'A');
      if (!in_down(alpha_join(tp, a))) par[find(u)] = find(id.at(tp.key()));
    }
  }
  std::vector<int> assignment(L.size());
  for (int u = 0; u < L.size(); ++u) assignment[u] = find(u);
  return make_congruence(L, assignment);
}

FiniteLattice quotient(const FiniteLattice& L, const Congruence& c) {
  int k = c.classes();
  std::vector<std::string> labels(k);
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int x = 0; x < k; ++x) {
    labels[x] = L.labels[c.cls_min[x]];
    for (int y = 0; y < k; ++y) leq[x][y] = L.leq(c.cls_min[x], c.cls_min[y]);
  }
  return lattice_from_order(std::move(labels), leq);
}

std::vector<SArc> uncontracted_arcs(const SComp& s, const FiniteLattice& L,
                                    const Congruence& c, long long cap) {
  std::map<std::string, int> id;
  for (int u = 0; u < L.size(); ++u) id[L.labels[u]] = u;
  std::vector<SArc> out;
  for (const SArc& a : all_arcs(s, cap)) {
    Bush t = t_join(s, a);
    Bush t_star = rotate(t, {a.i, a.j}, 'D');
    if (c.cls[id.at(t.key())] != c.cls[id.at(t_star.key())]) out.push_back(a);
  }
  return out;
}

std::vector<SArc> sylvester_downset(const SComp& s, long long cap) {
  std::vector<SArc> out;
  for (const SArc& a : all_arcs(s, cap))
    if (a.B.empty()) out.push_back(a);
  return out;
}

std::vector<SArc> cambrian_downset(const SComp& s, const SArc& alpha, long long cap) {
  check_arc(s, alpha);
  std::vector<SArc> out;
  for (const SArc& a : all_arcs(s, cap))
    if (is_subarc(s, a, alpha)) out.push_back(a);
  return out;
}

std::vector<SArc> permutree_downset(const SComp& s, const std::map<int, Decoration>& dec,
                                    long long cap) {
  int n = (int)s.size();
  for (const auto& [k, d] : dec) {
    (void)d;
    if (k < 1 || k > n || s[k - 1] == 0)
      throw InvalidDecoration("node " + std::to_string(k) + " carries no decoration slot");
  }
  for (int k = 1; k <= n; ++k)
    if (s[k - 1] != 0 && !dec.count(k))
      throw InvalidDecoration("node " + std::to_string(k) + " is missing a decoration");
  auto blocks_right = [&](int k) {
    Decoration d = dec.at(k);
    return d == Decoration::Up || d == Decoration::UpDown;
  };
  auto blocks_left = [&](int k) {
    Decoration d = dec.at(k);
    return d == Decoration::Down || d == Decoration::UpDown;
  };
  std::vector<SArc> out;
  for (const SArc& a : all_arcs(s, cap)) {
    bool ok = true;
    for (int k : a.A)
      if (blocks_right(k)) ok = false;
    for (int k : a.B)
      if (blocks_left(k)) ok = false;
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<long long> cjc_fvector(const SComp& s, const std::vector<SArc>& D,
                                   long long cap) {
  int m = (int)D.size();
  for (const SArc& a : D) check_arc(s, a);
  if (m > 63) throw CapExceeded("more than 63 arcs in the set");
  {
    std::vector<SArc> copy = D;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
      throw InvalidInput("duplicate arc in the set");
  }
  std::vector<uint64_t> adj(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (noncrossing(D[x], D[y])) {
        adj[x] |= 1ull << y;
        adj[y] |= 1ull << x;
      }
  std::vector<long long> f(m + 1, 0);
  long long total = 0;
  std::function<void(uint64_t, int)> rec = [&](uint64_t cand, int size) {
    ++f[size];
    if (++total > cap) throw CapExceeded("face count exceeds cap " + std::to_string(cap));
    while (cand) {
      int x = __builtin_ctzll(cand);
      cand &= cand - 1;
      rec(cand & adj[x], size + 1);
    }
  };
  rec(m ? (~0ull >> (64 - m)) : 0, 0);
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

std::vector<std::vector<int>> cover_graph(const FiniteLattice& L) {
  std::vector<std::vector<int>> adj(L.size());
  for (int u = 0; u < L.size(); ++u)
    for (int v : L.covers[u]) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

namespace {

// One color-refinement pass with a dictionary shared by both graphs.
bool refine_colors(const std::vector<std::vector<int>>& a,
                   const std::vector<std::vector<int>>& b, std::vector<int>& ca,
                   std::vector<int>& cb, int* colors) {
  auto signature = [](const std::vector<std::vector<int>>& g, const std::vector<int>& c,
                      int u) {
    std::vector<int> nb;
    nb.reserve(g[u].size());
    for (int v : g[u]) nb.push_back(c[v]);
    std::sort(nb.begin(), nb.end());
    nb.push_back(c[u]);
    return nb;
  };
  std::map<std::vector<int>, int> dict;
  std::vector<int> na(a.size()), nb(b.size());
  for (size_t u = 0; u < a.size(); ++u)
    na[u] = dict.try_emplace(signature(a, ca, u), (int)dict.size()).first->second;
  for (size_t u = 0; u < b.size(); ++u)
    nb[u] = dict.try_emplace(signature(b, cb, u), (int)dict.size()).first->second;
  bool grew = (int)dict.size() > *colors;
  *colors = (int)dict.size();
  ca = std::move(na);
  cb = std::move(nb);
  return grew;
}

}  // namespace

bool graphs_isomorphic(const std::vector<std::vector<int>>& a,
                       const std::vector<std::vector<int>>& b) {
  int n = (int)a.size();
  if ((int)b.size() != n) return false;
  if (n == 0) return true;
  std::vector<int> ca(n, 0), cb(n, 0);
  int colors = 1;
  while (refine_colors(a, b, ca, cb, &colors)) {
    std::map<int, int> hist;
    for (int c : ca) ++hist[c];
    for (int c : cb) --hist[c];
    for (auto [c, d] : hist) {
      (void)c;
      if (d != 0) return false;
    }
  }
  int words = (n + 63) / 64;
  auto bits = [&](const std::vector<std::vector<int>>& g) {
    std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(words, 0));
    for (int u = 0; u < n; ++u)
      for (int v : g[u]) m[u][v >> 6] |= 1ull << (v & 63);
    return m;
  };
  auto ba = bits(a), bb = bits(b);
  std::vector<std::vector<int>> by_color_b;
  {
    std::map<int, int> slot;
    for (int v = 0; v < n; ++v) {
      auto [it, fresh] = slot.try_emplace(cb[v], (int)by_color_b.size());
      if (fresh) by_color_b.push_back({});
      by_color_b[it->second].push_back(v);
    }
    // order the vertices of a by ascending color-class size
    std::map<int, int> freq;
    for (int c : ca) ++freq[c];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return freq[ca[u]] < freq[ca[v]]; });
    std::vector<int> map_ab(n, -1), used(n, 0), mapped;
    std::function<bool(int)> rec = [&](int k) -> bool {
      if (k == n) return true;
      int u = order[k];
      auto it = slot.find(ca[u]);
      if (it == slot.end()) return false;
      for (int v : by_color_b[it->second]) {
        if (used[v]) continue;
        bool ok = true;
        for (int w : mapped)
          if (((ba[u][w >> 6] >> (w & 63)) & 1) !=
              ((bb[v][map_ab[w] >> 6] >> (map_ab[w] & 63)) & 1)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        map_ab[u] = v;
        used[v] = 1;
        mapped.push_back(u);
        if (rec(k + 1)) return true;
        mapped.pop_back();
        used[v] = 0;
        map_ab[u] = -1;
      }
      return false;
    };
    return rec(0);
  }
}

bool cellularly_regular(const FiniteLattice& L, long long cap) {
  auto co = cocovers_of(L);
  auto check_interval = [&](int lo, int hi, std::set<std::pair<int, int>>* seen) {
    if (!seen->insert({lo, hi}).second) return true;
    int want = -1;
    for (size_t w = 0; w < L.up[lo].size(); ++w) {
      uint64_t bitsw = L.up[lo][w] & L.down[hi][w];
      while (bitsw) {
        int u = (int)(w * 64) + __builtin_ctzll(bitsw);
        bitsw &= bitsw - 1;
        int d = 0;
        for (int v : L.covers[u])
          if (L.leq(lo, v) && L.leq(v, hi)) ++d;
        for (int v : co[u])
          if (L.leq(lo, v) && L.leq(v, hi)) ++d;
        if (want < 0) want = d;
        if (want != d) return false;
      }
    }
    return true;
  };
  std::set<std::pair<int, int>> seen;
  for (int pass = 0; pass < 2; ++pass) {
    const auto& nb = pass == 0 ? L.covers : co;
    for (int x = 0; x < L.size(); ++x) {
      int k = (int)nb[x].size();
      if (k == 0) continue;
      if (k >= 62 || (1LL << k) > cap)
        throw CapExceeded("cellular interval scan exceeds cap " + std::to_string(cap));
      std::vector<int> bound(1 << k, x);
      for (int mask = 1; mask < (1 << k); ++mask) {
        int t = __builtin_ctz(mask);
        int prev = bound[mask & (mask - 1)];
        int y = nb[x][t];
        int z = pass == 0 ? L.join(prev, y) : L.meet(prev, y);
        if (z < 0) throw InvalidInput("cellular intervals need a lattice");
        bound[mask] = z;
        bool ok = pass == 0 ? check_interval(x, z, &seen) : check_interval(z, x, &seen);
        if (!ok) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<int> downset_indices(const std::vector<SArc>& arcs, const std::vector<SArc>& D) {
  std::vector<int> out;
  for (const SArc& a : D) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
    out.push_back((int)(it - arcs.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool complement_minimals_unilateral(const SComp& s, const std::vector<SArc>& arcs,
                                    const std::vector<SArc>& D) {
  std::vector<SArc> sorted = D;
  std::sort(sorted.begin(), sorted.end());
  std::vector<const SArc*> missing;
  for (const SArc& a : arcs)
    if (!std::binary_search(sorted.begin(), sorted.end(), a)) missing.push_back(&a);
  for (const SArc* a : missing) {
    bool minimal = true;
    for (const SArc* b : missing)
      if (b != a && is_subarc(s, *b, *a)) minimal = false;
    if (minimal && !a->A.empty() && !a->B.empty()) return false;
  }
  return true;
}

std::string fvec_str(const std::vector<long long>& f) {
  std::string out = "(";
  for (size_t t = 0; t < f.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(f[t]);
  }
  return out + ")";
}

}  // namespace

ConjectureReport conjecture_report(const SComp& s, const std::string& family,
                                   long long cap) {
  if (family != "cambrian" && family != "permutree" && family != "regular")
    throw InvalidInput("unknown family: " + family);
  ConjectureReport rep;
  rep.family = family;
  rep.arcs = all_arcs(s, cap);
  FiniteLattice L = sweak_lattice(s);
  std::vector<std::vector<std::vector<int>>> graphs;
  auto summarize = [&](const std::string& name, const std::vector<SArc>& D) {
    Congruence c = congruence_from_downset(s, L, D);
    FiniteLattice Q = quotient(L, c);
    QuotientSummary row;
    row.name = name;
    row.downset = downset_indices(rep.arcs, D);
    row.cardinality = Q.size();
    row.fvector = cjc_fvector(s, D, cap);
    row.cellular_regular = cellularly_regular(Q, cap);
    row.unilateral_complement = complement_minimals_unilateral(s, rep.arcs, D);
    rep.rows.push_back(row);
    graphs.push_back(cover_graph(Q));
  };
  if (family == "cambrian") {
    for (const SArc& a : rep.arcs) summarize("cambrian" + arc_repr(a), cambrian_downset(s, a, cap));
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (size_t t = 0; t < rep.rows.size(); ++t)
      groups[{rep.arcs[t].i, rep.arcs[t].j}].push_back((int)t);
    for (const auto& [ij, rows] : groups) {
      bool card = true, fv = true, iso = true;
      for (int t : rows) {
        card = card && rep.rows[t].cardinality == rep.rows[rows[0]].cardinality;
        fv = fv && rep.rows[t].fvector == rep.rows[rows[0]].fvector;
        iso = iso && graphs_isomorphic(graphs[t], graphs[rows[0]]);
      }
      rep.notes.push_back("endpoints (" + std::to_string(ij.first) + "," +
                          std::to_string(ij.second) + "): " + std::to_string(rows.size()) +
                          " arcs; cardinality " + std::to_string(rep.rows[rows[0]].cardinality) +
                          " shared: " + (card ? "yes" : "no") +
                          "; f-vectors equal: " + (fv ? "yes" : "no") +
                          "; cover graphs isomorphic: " + (iso ? "yes" : "no"));
    }
  } else if (family == "permutree") {
    std::vector<int> nodes;
    for (int k = 1; k <= (int)s.size(); ++k)
      if (s[k - 1] != 0) nodes.push_back(k);
    int k = (int)nodes.size();
    if (k >= 62 || (1LL << k) > cap)
      throw CapExceeded("decoration scan exceeds cap " + std::to_string(cap));
    std::vector<std::string> names;
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::map<int, Decoration> dec;
      std::string name = "permutree(";
      for (int t = 0; t < k; ++t) {
        bool down = mask >> t & 1;
        dec[nodes[t]] = down ? Decoration::Down : Decoration::Up;
        name += (t ? "," : "");
        name += down ? "down" : "up";
      }
      name += ")";
      names.push_back(name);
      summarize(name, permutree_downset(s, dec, cap));
    }
    for (int mask = 0; mask < (1 << k); ++mask)
      for (int t = 0; t < k; ++t)
        if (!(mask >> t & 1)) {
          int other = mask | (1 << t);
          bool card = rep.rows[mask].cardinality == rep.rows[other].cardinality;
          bool fv = rep.rows[mask].fvector == rep.rows[other].fvector;
          bool iso = graphs_isomorphic(graphs[mask], graphs[other]);
          rep.notes.push_back(
              "flip node " + std::to_string(nodes[t]) + ": " + names[mask] + " vs " +
              names[other] + ": cardinality " + std::to_string(rep.rows[mask].cardinality) +
              " vs " + std::to_string(rep.rows[other].cardinality) +
              "; f-vector equal: " + (fv ? "yes" : "no") + (card ? "" : " (cardinality differs)") +
              "; cover graphs isomorphic: " + (iso ? "yes" : "no"));
        }
  } else {
    CongruenceLattice all = all_congruences(s);
    if ((long long)all.downsets.size() > cap)
      throw CapExceeded("congruence scan exceeds cap " + std::to_string(cap));
    bool agree = true;
    for (size_t t = 0; t < all.downsets.size(); ++t) {
      std::vector<SArc> D;
      for (int x : all.downsets[t]) D.push_back(all.arcs[x]);
      summarize("congruence " + all.lattice.labels[t], D);
      const QuotientSummary& row = rep.rows.back();
      agree = agree && row.cellular_regular == row.unilateral_complement;
      rep.notes.push_back(row.name + ": quotient of size " + std::to_string(row.cardinality) +
                          ", f-vector " + fvec_str(row.fvector) + "; cellularly regular: " +
                          (row.cellular_regular ? "yes" : "no") +
                          "; minimal missing arcs one-sided: " +
                          (row.unilateral_complement ? "yes" : "no"));
    }
    rep.notes.push_back(std::string("regularity matches one-sidedness on all ") +
                        std::to_string(all.downsets.size()) + " congruences: " +
                        (agree ? "yes" : "no"));
  }
  return rep;
}

}  // namespace sweak
