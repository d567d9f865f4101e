#include "sweak/bush.hpp"

#include <algorithm>
#include <sstream>

namespace sweak {

int Bush::rank() const {
  int r = 0;
  for (int j = 1; j <= n(); ++j) r += indeg(j) == 1;
  return r;
}

bool Bush::is_tree() const { return rank() == n(); }

int trunk_rank(const SComp& s) {
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) return (int)i + 1;
  return (int)s.size();
}

bool Bush::is_trunk() const {
  long long leaves = 1;
  for (int j = 1; j <= n(); ++j) {
    const Att& a = att[j - 1];
    if (leaves == 1) {
      if (a.gap || a.k != 1) return false;
      leaves += s[j - 1];
    } else {
      if (!a.gap) return false;
      leaves += s[j - 1] == 0 ? 0 : s[j - 1] - 1;
    }
  }
  return true;
}

long long Bush::leaf_count() const {
  long long c = 0;
  for (const auto& row : children)
    for (int t : row) c += t == 0;
  return c;
}

bool Bush::is_ancestor(int i, int j) const {
  if (i >= j) return false;
  std::vector<int> stack = {j};
  std::vector<char> seen(n() + 1, 0);
  seen[j] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : parents[v]) {
      if (e.node == i) return true;
      if (e.node > 0 && !seen[e.node]) {
        seen[e.node] = 1;
        stack.push_back(e.node);
      }
    }
  }
  return false;
}

std::vector<int> Bush::ancestors(int j) const {
  std::vector<char> seen(n() + 1, 0);
  std::vector<int> stack = {j};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : parents[v])
      if (e.node > 0 && !seen[e.node]) {
        seen[e.node] = 1;
        stack.push_back(e.node);
      }
  }
  std::vector<int> out;
  for (int v = 1; v < j; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::string Bush::key() const {
  std::ostringstream os;
  for (int j = 0; j < n(); ++j) {
    if (j) os << '|';
    os << (att[j].gap ? 'G' : 'L') << att[j].k;
  }
  return os.str();
}

Bush bush_from_key(const SComp& s, const std::string& key) {
  std::vector<Att> att;
  size_t p = 0;
  while (p < key.size()) {
    size_t q = key.find('|', p);
    if (q == std::string::npos) q = key.size();
    std::string tok = key.substr(p, q - p);
    if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'G'))
      throw InvalidInput("bad attachment token '" + tok + "'");
    int k = 0;
    try {
      k = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw InvalidInput("bad attachment token '" + tok + "'");
    }
    att.push_back(tok[0] == 'G' ? gap_at(k) : leaf_at(k));
    p = q + 1;
  }
  return build_bush(s, att);
}

bool operator==(const Bush& a, const Bush& b) { return a.s == b.s && a.att == b.att; }

bool operator<(const Bush& a, const Bush& b) {
  if (a.s != b.s) return a.s < b.s;
  return std::lexicographical_compare(a.att.begin(), a.att.end(), b.att.begin(), b.att.end());
}

Bush build_bush(const SComp& s, const std::vector<Att>& att) {
  int n = (int)s.size();
  if ((int)att.size() != n) throw InvalidInput("attachment sequence length != n");
  Bush b;
  b.s = s;
  b.att = att;
  b.children.assign(n + 1, {});
  b.parents.assign(n + 1, {});
  b.children[0] = {0};
  std::vector<Edge> leaves = {{0, 0}};
  for (int j = 1; j <= n; ++j) {
    const Att& a = att[j - 1];
    int L = (int)leaves.size();
    int nleaves;
    if (!a.gap) {
      if (a.k < 1 || a.k > L)
        throw IndexOutOfRange("node " + std::to_string(j) + ": leaf " + std::to_string(a.k) +
                              " of " + std::to_string(L));
      Edge e = leaves[a.k - 1];
      b.children[e.node][e.slot] = j;
      b.parents[j] = {e};
      nleaves = s[j - 1] + 1;
      b.children[j].assign(nleaves, 0);
      std::vector<Edge> mine;
      for (int t = 0; t < nleaves; ++t) mine.push_back({j, t});
      leaves.erase(leaves.begin() + (a.k - 1));
      leaves.insert(leaves.begin() + (a.k - 1), mine.begin(), mine.end());
    } else {
      if (a.k < 1 || a.k + 1 > L)
        throw IndexOutOfRange("node " + std::to_string(j) + ": gap " + std::to_string(a.k) +
                              " of " + std::to_string(L - 1));
      Edge e1 = leaves[a.k - 1], e2 = leaves[a.k];
      b.children[e1.node][e1.slot] = j;
      b.children[e2.node][e2.slot] = j;
      b.parents[j] = {e1, e2};
      nleaves = s[j - 1] == 0 ? 2 : s[j - 1] + 1;
      b.children[j].assign(nleaves, 0);
      std::vector<Edge> mine;
      for (int t = 0; t < nleaves; ++t) mine.push_back({j, t});
      leaves.erase(leaves.begin() + (a.k - 1), leaves.begin() + (a.k + 1));
      leaves.insert(leaves.begin() + (a.k - 1), mine.begin(), mine.end());
    }
  }
  return b;
}

std::vector<std::pair<int, int>> holes(const Bush& b) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= b.n(); ++j) {
    if (b.indeg(j) != 2) continue;
    int p = b.parents[j][0].node, q = b.parents[j][1].node;
    int best = 0;
    for (int i = std::min(p, q); i >= 1 && best == 0; --i)
      if ((i == p || b.is_ancestor(i, p)) && (i == q || b.is_ancestor(i, q))) best = i;
    out.push_back({best, j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, char>> zigzag_marks(const Bush& b, int j, char side) {
  std::vector<std::pair<int, char>> out;
  int cur = j;
  char cs = side;
  while (true) {
    out.push_back({cur, cs});
    int slot = cs == 'L' ? 0 : b.outdeg(cur) - 1;
    int t = b.children[cur][slot];
    if (t == 0) break;
    if (b.indeg(t) == 2 && b.parents[t][0].node != b.parents[t][1].node) cs = cs == 'L' ? 'R' : 'L';
    cur = t;
  }
  return out;
}

std::vector<int> zigzag(const Bush& b, int j, char side) {
  auto marks = zigzag_marks(b, j, side);
  std::vector<int> out;
  for (size_t t = 1; t < marks.size(); ++t) out.push_back(marks[t].first);
  return out;
}

std::vector<Edge> extreme_path(const Bush& b, int i, int j, char side, int required_parent) {
  int target = j;
  Edge final_edge{};
  bool has_final = false;
  if (required_parent >= 0) {
    if (required_parent >= b.indeg(j)) throw InvalidInput("required incoming edge out of range");
    final_edge = b.parents[j][required_parent];
    target = final_edge.node;
    has_final = true;
  }
  std::vector<Edge> path;
  int cur = i;
  while (cur != target) {
    int chosen = -1;
    int deg = b.outdeg(cur);
    for (int t = 0; t < deg; ++t) {
      int slot = side == 'L' ? t : deg - 1 - t;
      int child = b.children[cur][slot];
      if (child != 0 && (child == target || b.is_ancestor(child, target))) {
        chosen = slot;
        break;
      }
    }
    if (chosen < 0)
      throw NotAncestor(std::to_string(i) + " is not an ancestor of " + std::to_string(j));
    path.push_back({cur, chosen});
    cur = b.children[cur][chosen];
  }
  if (has_final) path.push_back(final_edge);
  return path;
}

int side_of(const Bush& b, const std::vector<Edge>& pi, int k) {
  // Exit slots along pi, extended above pi's start via leftmost parents.
  std::vector<int> slot_at(b.n() + 1, -1);
  for (const Edge& e : pi) slot_at[e.node] = e.slot;
  if (k <= b.n() && slot_at[k] >= 0) return 0;
  int cur = pi.empty() ? 0 : pi[0].node;
  // Node k can also coincide with the path's endpoint.
  if (!pi.empty()) {
    int endpoint = b.children[pi.back().node][pi.back().slot];
    if (k == endpoint) return 0;
  }
  while (cur != 0) {
    Edge up = b.parents[cur][0];
    if (slot_at[up.node] < 0) slot_at[up.node] = up.slot;
    cur = up.node;
  }
  cur = k;
  while (cur != 0) {
    Edge up = b.parents[cur][0];
    if (slot_at[up.node] >= 0) return up.slot < slot_at[up.node] ? -1 : +1;
    cur = up.node;
  }
  throw InvalidInput("side_of: no common node found");
}

namespace {

// Greatest ancestor i of j such that the extreme path from i to j uses the
// most extreme edge at every node except at i itself.
int walk_source(const Bush& b, int j, char side) {
  auto anc = b.ancestors(j);
  for (auto it = anc.rbegin(); it != anc.rend(); ++it) {
    int i = *it;
    auto pi = extreme_path(b, i, j, side);
    bool ok = true;
    for (size_t t = 0; t < pi.size(); ++t) {
      int extreme = side == 'L' ? 0 : b.outdeg(pi[t].node) - 1;
      bool is_extreme = pi[t].slot == extreme;
      if (t == 0 ? is_extreme : !is_extreme) {
        ok = false;
        break;
      }
    }
    if (ok) return i;
  }
  return 0;
}

std::vector<std::pair<int, int>> slope_pairs(const Bush& b, char side) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= b.n(); ++j) {
    if (b.indeg(j) != 1) continue;
    int i = walk_source(b, j, side);
    if (i == 0) continue;
    if (b.s[j - 1] != 0) {
      bool all2 = true;
      for (int k : zigzag(b, j, side))
        if (b.indeg(k) != 2) {
          all2 = false;
          break;
        }
      if (!all2) continue;
    }
    out.push_back({i, j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> ascents(const Bush& b) { return slope_pairs(b, 'L'); }
std::vector<std::pair<int, int>> descents(const Bush& b) { return slope_pairs(b, 'R'); }

}  // namespace sweak
