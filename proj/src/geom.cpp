#include "sweak/geom.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "sweak/errors.hpp"
#include "sweak/insert.hpp"
#include "sweak/lattice.hpp"
#include "sweak/congr.hpp"
#include "sweak/lp.hpp"

namespace sweak {

namespace {

Rat dot(const std::vector<long long>& a, const std::vector<Rat>& x) {
  Rat v = 0;
  for (size_t k = 0; k < a.size(); ++k) v += Rat(a[k]) * x[k];
  return v;
}

// Rows of A x <= b equivalent to P; eq rows are split in two.
void hp_rows(const HPolyhedron& P, std::vector<std::vector<Rat>>& A, std::vector<Rat>& b) {
  for (const LinCon& c : P.cons) {
    std::vector<Rat> row(c.a.begin(), c.a.end());
    A.push_back(row);
    b.push_back(c.b);
    if (c.eq) {
      for (Rat& v : row) v = -v;
      A.push_back(row);
      b.push_back(-Rat(c.b));
    }
  }
}

LPResult hp_max(const HPolyhedron& P, const std::vector<Rat>& obj) {
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  hp_rows(P, A, b);
  return lp_max(A, b, obj);
}

// Inequality indices (into P.cons) tight on all of P.
std::vector<int> hp_forced(const HPolyhedron& P) {
  std::vector<int> out;
  for (int k = 0; k < (int)P.cons.size(); ++k) {
    if (P.cons[k].eq) continue;
    std::vector<Rat> obj(P.n);
    for (int t = 0; t < P.n; ++t) obj[t] = -Rat(P.cons[k].a[t]);
    LPResult r = hp_max(P, obj);
    if (r.status == LPStatus::Optimal && r.value == -Rat(P.cons[k].b)) out.push_back(k);
  }
  return out;
}

int rank_of(std::vector<std::vector<Rat>> M) {
  int rows = (int)M.size();
  if (rows == 0) return 0;
  int cols = (int)M[0].size(), rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || M[r][c] == 0) continue;
      Rat f = M[r][c] / M[rank][c];
      for (int t = c; t < cols; ++t) M[r][t] -= f * M[rank][t];
    }
    ++rank;
  }
  return rank;
}

HPolyhedron with_tight(const HPolyhedron& P, const std::vector<int>& tight) {
  HPolyhedron F = P;
  for (int k : tight) F.cons[k].eq = true;
  return F;
}

}  // namespace

bool hp_is_empty(const HPolyhedron& P) {
  return hp_max(P, std::vector<Rat>(P.n, 0)).status == LPStatus::Infeasible;
}

bool hp_contains(const HPolyhedron& P, const std::vector<Rat>& x) {
  if ((int)x.size() != P.n) throw DimensionMismatch("point dimension != ambient dimension");
  for (const LinCon& c : P.cons) {
    Rat v = dot(c.a, x);
    if (c.eq ? v != c.b : v > c.b) return false;
  }
  return true;
}

bool hp_subset(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.n != Q.n) throw DimensionMismatch("cells of different ambient dimension");
  if (hp_is_empty(P)) return true;
  for (const LinCon& c : Q.cons) {
    std::vector<Rat> obj(P.n);
    for (int t = 0; t < P.n; ++t) obj[t] = c.a[t];
    LPResult hi = hp_max(P, obj);
    if (hi.status != LPStatus::Optimal || hi.value > c.b) return false;
    if (c.eq) {
      for (Rat& v : obj) v = -v;
      LPResult lo = hp_max(P, obj);
      if (lo.status != LPStatus::Optimal || -lo.value < c.b) return false;
    }
  }
  return true;
}

int hp_dim(const HPolyhedron& P) {
  if (hp_is_empty(P)) return -1;
  std::vector<std::vector<Rat>> normals;
  auto push = [&](const std::vector<long long>& a) {
    normals.emplace_back(a.begin(), a.end());
  };
  for (const LinCon& c : P.cons)
    if (c.eq) push(c.a);
  for (int k : hp_forced(P)) push(P.cons[k].a);
  return P.n - rank_of(std::move(normals));
}

std::vector<Rat> hp_relint(const HPolyhedron& P) {
  std::vector<int> forced = hp_forced(P);
  std::set<int> is_forced(forced.begin(), forced.end());
  // Maximize the common slack t of the non-forced inequalities, capped at 1.
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  for (int k = 0; k < (int)P.cons.size(); ++k) {
    const LinCon& c = P.cons[k];
    std::vector<Rat> row(c.a.begin(), c.a.end());
    row.push_back(c.eq || is_forced.count(k) ? Rat(0) : Rat(1));
    A.push_back(row);
    b.push_back(c.b);
    if (c.eq || is_forced.count(k)) {
      for (Rat& v : row) v = -v;
      A.push_back(row);
      b.push_back(-Rat(c.b));
    }
  }
  std::vector<Rat> cap(P.n + 1, 0);
  cap[P.n] = 1;
  A.push_back(cap);
  b.push_back(1);
  std::vector<Rat> obj(P.n + 1, 0);
  obj[P.n] = 1;
  LPResult r = lp_max(A, b, obj);
  if (r.status != LPStatus::Optimal) throw InvalidInput("relative interior of empty cell");
  r.x.resize(P.n);
  return r.x;
}

std::vector<HPolyhedron> hp_faces(const HPolyhedron& P) {
  if (hp_is_empty(P)) return {};
  std::vector<std::vector<int>> tights = {hp_forced(P)};
  std::map<std::vector<int>, size_t> seen = {{tights[0], 0}};
  for (size_t t = 0; t < tights.size(); ++t) {
    std::vector<int> cur = tights[t];
    std::set<int> in(cur.begin(), cur.end());
    for (int k = 0; k < (int)P.cons.size(); ++k) {
      if (P.cons[k].eq || in.count(k)) continue;
      std::vector<int> next = cur;
      next.push_back(k);
      HPolyhedron F = with_tight(P, next);
      if (hp_is_empty(F)) continue;
      std::vector<int> closed = hp_forced(F);
      for (int e : next) closed.push_back(e);
      std::sort(closed.begin(), closed.end());
      closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
      if (!seen.count(closed)) {
        seen[closed] = tights.size();
        tights.push_back(closed);
      }
    }
  }
  std::vector<HPolyhedron> out;
  out.reserve(tights.size());
  for (const std::vector<int>& t : tights) out.push_back(with_tight(P, t));
  return out;
}

bool hp_is_face(const HPolyhedron& F, const HPolyhedron& P) {
  if (F.n != P.n) throw DimensionMismatch("cells of different ambient dimension");
  if (hp_is_empty(F) || hp_is_empty(P)) return false;
  if (!hp_subset(F, P)) return false;
  std::vector<Rat> z = hp_relint(F);
  std::vector<int> tight;
  for (int k = 0; k < (int)P.cons.size(); ++k)
    if (!P.cons[k].eq && dot(P.cons[k].a, z) == P.cons[k].b) tight.push_back(k);
  HPolyhedron G = with_tight(P, tight);
  return hp_subset(G, F);
}

HPolyhedron hp_of_dbm(const DBM& d) {
  HPolyhedron P;
  P.n = d.n;
  if (d.empty) {
    // 0 <= -1: canonical empty system.
    P.cons.push_back({std::vector<long long>(d.n, 0), -1, false});
    return P;
  }
  auto as_int = [](const Rat& v) {
    if (denominator(v) != 1) throw InvalidInput("cell bound is not an integer");
    return (long long)numerator(v);
  };
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      if (i == j || d.c[i][j].inf) continue;
      bool pinned = !d.c[j][i].inf && d.c[i][j].v + d.c[j][i].v == 0;
      if (pinned && i > j) continue;
      LinCon c;
      c.a.assign(d.n, 0);
      c.a[i] = 1;
      c.a[j] = -1;
      c.b = as_int(d.c[i][j].v);
      c.eq = pinned;
      P.cons.push_back(c);
    }
  return P;
}

SShard shard(const SComp& s, const SArc& a) {
  check_arc(s, a);
  int n = (int)s.size();
  SShard sh;
  sh.arc = a;
  DBM d = DBM::top(n);
  auto rhs_below = [&](int m) {
    long long v = a.r - 1;
    for (int k : a.B)
      if (k < m) v += std::max(0, s[k - 1] - 1);
    return v;
  };
  d.add_eq(a.i - 1, a.j - 1, Rat(rhs_below(a.j)));
  for (int m : a.A) d.add_lower(a.i - 1, m - 1, Rat(rhs_below(m)));
  for (int m : a.B) d.add_upper(a.i - 1, m - 1, Rat(rhs_below(m)));
  d.close();
  sh.poly = d;
  sh.hp.n = n;
  auto row = [&](int to, long long b, bool eq, bool flip) {
    LinCon c;
    c.a.assign(n, 0);
    c.a[a.i - 1] = flip ? -1 : 1;
    c.a[to - 1] = flip ? 1 : -1;
    c.b = flip ? -b : b;
    c.eq = eq;
    sh.hp.cons.push_back(c);
  };
  row(a.j, rhs_below(a.j), true, false);
  for (int m : a.A) row(m, -rhs_below(m), false, true);  // x_i - x_m >= rhs
  for (int m : a.B) row(m, rhs_below(m), false, false);  // x_i - x_m <= rhs
  return sh;
}

std::vector<Bush> shard_bushes(const SComp& s, const SArc& a, long long cap) {
  check_arc(s, a);
  std::vector<Bush> out;
  for_each_kind(
      s, Kind::Bushes,
      [&](const Bush& b) {
        auto hs = holes(b);
        if (!std::count(hs.begin(), hs.end(), std::make_pair(a.i, a.j))) return;
        std::vector<Edge> pi = extreme_path(b, a.i, a.j, 'R', 0);
        if (b.outdeg(a.i) - 1 - pi[0].slot != a.r) return;
        for (int m : a.A)
          if (side_of(b, pi, m) > 0) return;
        for (int m : a.B)
          if (side_of(b, pi, m) <= 0) return;
        out.push_back(b);
      },
      cap);
  return out;
}

int cell_index(const PolyhedralComplex& C, const DBM& d) {
  std::string k = d.key();
  for (int x = 0; x < (int)C.cells.size(); ++x)
    if (C.cells[x].poly.key() == k) return x;
  return -1;
}

namespace {

// Fills faces_of and maximal from the cells.
void finish_complex(PolyhedralComplex& C) {
  int m = (int)C.cells.size();
  C.faces_of.assign(m, {});
  std::vector<bool> is_face_of_other(m, false);
  for (int k = 0; k < m; ++k)
    for (int f = 0; f < m; ++f) {
      if (f == k || C.cells[f].dim > C.cells[k].dim) continue;
      if (dbm_is_face(C.cells[f].poly, C.cells[k].poly)) {
        C.faces_of[k].push_back(f);
        is_face_of_other[f] = true;
      }
    }
  C.maximal.clear();
  for (int k = 0; k < m; ++k)
    if (!is_face_of_other[k]) C.maximal.push_back(k);
}

}  // namespace

PolyhedralComplex foam(const SComp& s, long long cap) {
  PolyhedralComplex C;
  C.n = (int)s.size();
  C.complete = true;
  std::set<std::string> seen;
  for_each_kind(
      s, Kind::Bushes,
      [&](const Bush& b) {
        PCell cell;
        cell.poly = fiber_hrep(b);
        cell.poly.close();
        cell.dim = dbm_dim(cell.poly);
        cell.label = b.key();
        if (!seen.insert(cell.poly.key()).second)
          throw InvalidInput("two bushes share a closed fiber");
        C.cells.push_back(std::move(cell));
      },
      cap);
  finish_complex(C);
  return C;
}

PolyhedralComplex quotient_foam(const SComp& s, const std::vector<SArc>& D, long long cap) {
  FiniteLattice L = sweak_lattice(s);
  Congruence c = congruence_from_downset(s, L, D);
  std::vector<Bush> trees = enumerate_kind(s, Kind::Trees, cap);
  int n = (int)s.size();
  std::vector<DBM> fibers;
  fibers.reserve(trees.size());
  for (const Bush& t : trees) {
    fibers.push_back(fiber_hrep(t));
    fibers.back().close();
  }

  PolyhedralComplex C;
  C.n = n;
  C.complete = true;
  std::map<std::string, int> index;
  for (int q = 0; q < c.classes(); ++q) {
    DBM glued;
    glued.empty = true;
    for (int u = 0; u < (int)trees.size(); ++u)
      if (c.cls[u] == q) glued = dbm_hull(glued, fibers[u]);
    for (int u = 0; u < (int)trees.size(); ++u) {
      if (c.cls[u] == q) continue;
      DBM I = dbm_intersect(glued, fibers[u]);
      if (!I.empty && dbm_dim(I) == n)
        throw NotACongruence("glued cells overlap a foreign chamber");
    }
    PCell cell;
    cell.poly = glued;
    cell.dim = n;
    cell.label = L.labels[c.cls_min[q]];
    index[glued.key()] = (int)C.cells.size();
    C.cells.push_back(std::move(cell));
  }
  for (int q = 0, top = (int)C.cells.size(); q < top; ++q)
    for (const DBM& f : dbm_faces(C.cells[q].poly)) {
      std::string k = f.key();
      if (index.count(k)) continue;
      PCell cell;
      cell.poly = f;
      cell.dim = dbm_dim(f);
      cell.label = k;
      index[k] = (int)C.cells.size();
      C.cells.push_back(std::move(cell));
    }
  finish_complex(C);
  return C;
}

bool complex_axioms(const PolyhedralComplex& C, int samples, unsigned seed, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::set<std::string> keys;
  for (const PCell& cell : C.cells) keys.insert(cell.poly.key());
  for (int k = 0; k < (int)C.cells.size(); ++k)
    for (const DBM& f : dbm_faces(C.cells[k].poly))
      if (!keys.count(f.key()))
        return fail("cell " + std::to_string(k) + " has a face outside the complex");
  for (int x = 0; x < (int)C.cells.size(); ++x)
    for (int y = x + 1; y < (int)C.cells.size(); ++y) {
      DBM I = dbm_intersect(C.cells[x].poly, C.cells[y].poly);
      if (I.empty) continue;
      if (!keys.count(I.key()) || !dbm_is_face(I, C.cells[x].poly) ||
          !dbm_is_face(I, C.cells[y].poly))
        return fail("cells " + std::to_string(x) + " and " + std::to_string(y) +
                    " do not meet along a common face");
    }
  if (C.complete) {
    // Coordinates shifted by reciprocals of distinct primes never make an
    // integer difference, so samples avoid every wall.
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    if (C.n > 10) return fail("sampling supports ambient dimension at most 10");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coin(-8, 8);
    for (int t = 0; t < samples; ++t) {
      std::vector<Rat> x(C.n);
      for (int i = 0; i < C.n; ++i) x[i] = Rat(coin(rng)) + Rat(1, primes[i]);
      int hits = 0;
      for (int k : C.maximal)
        if (dbm_contains(C.cells[k].poly, x)) ++hits;
      if (hits != 1)
        return fail("sampled point lies in " + std::to_string(hits) + " maximal cells");
    }
  }
  return true;
}

std::vector<Rat> omega_direction(int n) {
  std::vector<Rat> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = 2 * i - n - 1;
  return w;
}

DualGraph dual_graph(const PolyhedralComplex& C, const std::vector<Rat>& omega) {
  if (!C.complete) throw NotComplete("dual graph requires a complete complex");
  if ((int)omega.size() != C.n) throw DimensionMismatch("direction dimension != ambient dimension");
  DualGraph G;
  for (int k : C.maximal) G.labels.push_back(C.cells[k].label);
  int m = (int)C.maximal.size();
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      const DBM& px = C.cells[C.maximal[x]].poly;
      const DBM& py = C.cells[C.maximal[y]].poly;
      DBM F = dbm_intersect(px, py);
      if (F.empty || dbm_dim(F) != C.n - 1) continue;
      // The unique pair pinned on the wall but on neither side.
      int wa = -1, wb = -1;
      for (int i = 0; i < C.n && wa < 0; ++i)
        for (int j = i + 1; j < C.n; ++j) {
          auto pinned = [&](const DBM& d) {
            return !d.c[i][j].inf && !d.c[j][i].inf && d.c[i][j].v + d.c[j][i].v == 0;
          };
          if (pinned(F) && !pinned(px) && !pinned(py)) {
            wa = i;
            wb = j;
            break;
          }
        }
      if (wa < 0) throw InvalidInput("facet carries no separating wall");
      Rat wall = F.c[wa][wb].v;
      Rat side = omega[wa] - omega[wb];
      if (side == 0) throw InvalidInput("direction does not orient this wall");
      std::vector<Rat> zx = dbm_relint(px);
      bool x_up = (zx[wa] - zx[wb] > wall) == (side < 0);
      G.edges.push_back(x_up ? std::make_pair(y, x) : std::make_pair(x, y));
    }
  return G;
}

DualGraph dual_graph(const PolyhedralComplex& C) { return dual_graph(C, omega_direction(C.n)); }

}  // namespace sweak
