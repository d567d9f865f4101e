#include "sweak/lp.hpp"

#include <algorithm>
#include <map>

#include "sweak/errors.hpp"

namespace sweak {

namespace {

// Dictionary simplex with Bland's rule, exact arithmetic.
// Standard form: maximize c.y subject to A y <= b, y >= 0.
struct Simplex {
  int m, n;
  std::vector<int> B, N;               // labels of basic rows / nonbasic cols
  std::vector<std::vector<Rat>> coef;  // y_B[i] = rhs[i] + sum_j coef[i][j] * y_N[j]
  std::vector<Rat> rhs;
  std::vector<Rat> zc;  // objective: z = z0 + sum_j zc[j] * y_N[j]
  Rat z0 = 0;

  Simplex(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b)
      : m((int)b.size()), n(A.empty() ? 0 : (int)A[0].size()) {
    B.resize(m);
    N.resize(n);
    coef.assign(m, std::vector<Rat>(n));
    rhs = b;
    zc.assign(n, 0);
    for (int i = 0; i < m; ++i) {
      B[i] = n + i;
      for (int j = 0; j < n; ++j) coef[i][j] = -A[i][j];
    }
    for (int j = 0; j < n; ++j) N[j] = j;
  }

  void pivot(int r, int s) {
    Rat a = coef[r][s];
    int lb = B[r], ln = N[s];
    std::vector<Rat> row(n);
    Rat rr = -rhs[r] / a;
    for (int k = 0; k < n; ++k) row[k] = k == s ? Rat(1) / a : -coef[r][k] / a;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      Rat f = coef[i][s];
      if (f == 0) continue;
      rhs[i] += f * rr;
      for (int k = 0; k < n; ++k) coef[i][k] = (k == s ? 0 : coef[i][k]) + f * row[k];
    }
    Rat f = zc[s];
    if (f != 0) {
      z0 += f * rr;
      for (int k = 0; k < n; ++k) zc[k] = (k == s ? 0 : zc[k]) + f * row[k];
    }
    rhs[r] = rr;
    coef[r] = row;
    B[r] = ln;
    N[s] = lb;
  }

  // Returns false when unbounded.
  bool run() {
    while (true) {
      int s = -1;
      for (int j = 0; j < n; ++j)
        if (zc[j] > 0 && (s < 0 || N[j] < N[s])) s = j;
      if (s < 0) return true;
      int r = -1;
      Rat best = 0;
      for (int i = 0; i < m; ++i) {
        if (coef[i][s] >= 0) continue;
        Rat t = -rhs[i] / coef[i][s];
        if (r < 0 || t < best || (t == best && B[i] < B[r])) r = i, best = t;
      }
      if (r < 0) return false;
      pivot(r, s);
    }
  }
};

}  // namespace

LPResult lp_max(const std::vector<std::vector<Rat>>& Ain, const std::vector<Rat>& b,
                const std::vector<Rat>& cin) {
  int nf = (int)cin.size();
  int m = (int)b.size();
  // Split free variables: x_k = y_{2k} - y_{2k+1}.
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(2 * nf));
  for (int i = 0; i < m; ++i) {
    if ((int)Ain[i].size() != nf) throw InvalidInput("lp_max: ragged constraint matrix");
    for (int k = 0; k < nf; ++k) {
      A[i][2 * k] = Ain[i][k];
      A[i][2 * k + 1] = -Ain[i][k];
    }
  }
  Simplex sx(A, b);
  int n = 2 * nf;
  bool need_phase1 = false;
  int worst = -1;
  for (int i = 0; i < m; ++i)
    if (sx.rhs[i] < 0 && (worst < 0 || sx.rhs[i] < sx.rhs[worst])) worst = i, need_phase1 = true;
  if (need_phase1) {
    // Auxiliary variable x0 (label n+m) with +1 in every row; maximize -x0.
    for (int i = 0; i < m; ++i) sx.coef[i].push_back(1);
    sx.N.push_back(n + m);
    sx.zc.assign(n + 1, 0);
    sx.zc[n] = -1;
    sx.n = n + 1;
    sx.pivot(worst, n);
    if (!sx.run()) throw InvalidInput("lp_max: auxiliary problem unbounded");
    if (sx.z0 != 0) return {LPStatus::Infeasible, 0, {}};
    // Pivot the auxiliary variable out of the basis if needed, then drop it.
    for (int i = 0; i < sx.m; ++i)
      if (sx.B[i] == n + m) {
        int s = -1;
        for (int j = 0; j < sx.n; ++j)
          if (sx.coef[i][j] != 0 && sx.N[j] != n + m) {
            s = j;
            break;
          }
        if (s >= 0) sx.pivot(i, s);
        break;
      }
    int drop = -1;
    for (int i = 0; i < sx.m; ++i)
      if (sx.B[i] == n + m) drop = i;
    if (drop >= 0) {
      sx.coef.erase(sx.coef.begin() + drop);
      sx.rhs.erase(sx.rhs.begin() + drop);
      sx.B.erase(sx.B.begin() + drop);
      --sx.m;
    }
    int dropc = -1;
    for (int j = 0; j < sx.n; ++j)
      if (sx.N[j] == n + m) dropc = j;
    if (dropc >= 0) {
      for (auto& row : sx.coef) row.erase(row.begin() + dropc);
      sx.N.erase(sx.N.begin() + dropc);
      --sx.n;
    }
    // Restore the real objective through the current dictionary.
    sx.zc.assign(sx.n, 0);
    sx.z0 = 0;
    std::vector<Rat> cs(n);
    for (int k = 0; k < nf; ++k) {
      cs[2 * k] = cin[k];
      cs[2 * k + 1] = -cin[k];
    }
    for (int j = 0; j < sx.n; ++j)
      if (sx.N[j] < n) sx.zc[j] += cs[sx.N[j]];
    for (int i = 0; i < sx.m; ++i)
      if (sx.B[i] < n && cs[sx.B[i]] != 0) {
        sx.z0 += cs[sx.B[i]] * sx.rhs[i];
        for (int j = 0; j < sx.n; ++j) sx.zc[j] += cs[sx.B[i]] * sx.coef[i][j];
      }
  } else {
    for (int j = 0; j < n; ++j) {
      int k = j / 2;
      sx.zc[j] = j % 2 == 0 ? cin[k] : -cin[k];
    }
  }
  if (!sx.run()) return {LPStatus::Unbounded, 0, {}};
  std::vector<Rat> y(n + m, 0);
  for (int i = 0; i < sx.m; ++i)
    if (sx.B[i] < n + m) y[sx.B[i]] = sx.rhs[i];
  std::vector<Rat> x(nf);
  for (int k = 0; k < nf; ++k) x[k] = y[2 * k] - y[2 * k + 1];
  return {LPStatus::Optimal, sx.z0, x};
}

bool in_convex_hull(const std::vector<std::vector<Rat>>& pts, const std::vector<Rat>& p) {
  if (pts.empty()) return false;
  int d = (int)p.size();
  int V = (int)pts.size();
  // Feasibility of: sum_v lam_v pts[v] = p, sum lam = 1, lam >= 0.
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> row(V);
    for (int v = 0; v < V; ++v) row[v] = pts[v][i];
    A.push_back(row);
    b.push_back(p[i]);
    for (auto& e : row) e = -e;
    A.push_back(row);
    b.push_back(-p[i]);
  }
  std::vector<Rat> ones(V, 1);
  A.push_back(ones);
  b.push_back(1);
  for (auto& e : ones) e = -1;
  A.push_back(ones);
  b.push_back(-1);
  for (int v = 0; v < V; ++v) {
    std::vector<Rat> row(V, 0);
    row[v] = -1;
    A.push_back(row);
    b.push_back(0);
  }
  std::vector<Rat> zero(V, 0);
  return lp_max(A, b, zero).status == LPStatus::Optimal;
}

std::vector<int> extreme_points(const std::vector<std::vector<Rat>>& pts) {
  std::map<std::vector<Rat>, int> first;
  std::vector<int> uniq;
  for (int v = 0; v < (int)pts.size(); ++v)
    if (!first.count(pts[v])) {
      first[pts[v]] = v;
      uniq.push_back(v);
    }
  std::vector<int> out;
  for (int v : uniq) {
    std::vector<std::vector<Rat>> others;
    for (int w : uniq)
      if (w != v) others.push_back(pts[w]);
    if (others.empty() || !in_convex_hull(others, pts[v])) out.push_back(v);
  }
  return out;
}

}  // namespace sweak
