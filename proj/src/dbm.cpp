#include "sweak/dbm.hpp"

#include <map>
#include <sstream>

namespace sweak {

void DBM::close() {
  if (empty) return;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (c[i][k].inf) continue;
      for (int j = 0; j < n; ++j) c[i][j] = ext_min(c[i][j], ext_add(c[i][k], c[k][j]));
    }
  for (int i = 0; i < n; ++i)
    if (ext_less(c[i][i], ExtRat::of(0))) {
      empty = true;
      return;
    }
}

std::string DBM::key() const {
  if (empty) return "<empty>";
  std::ostringstream os;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) os << (c[i][j].inf ? "*" : c[i][j].v.str()) << ";";
  return os.str();
}

bool dbm_equal(const DBM& a, const DBM& b) {
  if (a.empty || b.empty) return a.empty == b.empty;
  if (a.n != b.n) throw DimensionMismatch("comparing cells of different ambient dimension");
  return a.c == b.c;
}

bool dbm_subset(const DBM& a, const DBM& b) {
  if (a.empty) return true;
  if (b.empty) return false;
  if (a.n != b.n) throw DimensionMismatch("comparing cells of different ambient dimension");
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (ext_less(b.c[i][j], a.c[i][j])) return false;
  return true;
}

DBM dbm_intersect(const DBM& a, const DBM& b) {
  if (a.n != b.n) throw DimensionMismatch("intersecting cells of different ambient dimension");
  if (a.empty) return a;
  if (b.empty) return b;
  DBM r = a;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) r.c[i][j] = ext_min(r.c[i][j], b.c[i][j]);
  r.close();
  return r;
}

DBM dbm_hull(const DBM& a, const DBM& b) {
  if (a.empty) return b;
  if (b.empty) return a;
  if (a.n != b.n) throw DimensionMismatch("hull of cells of different ambient dimension");
  DBM r = a;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) r.c[i][j] = ext_max(r.c[i][j], b.c[i][j]);
  r.close();
  return r;
}

bool dbm_contains(const DBM& d, const std::vector<Rat>& x) {
  if (d.empty) return false;
  if ((int)x.size() != d.n) throw DimensionMismatch("point dimension != cell dimension");
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (!d.c[i][j].inf && x[i] - x[j] > d.c[i][j].v) return false;
  return true;
}

namespace {

bool tight(const DBM& d, int i, int j) {
  return !d.c[i][j].inf && !d.c[j][i].inf && d.c[i][j].v + d.c[j][i].v == 0;
}

}  // namespace

int dbm_dim(const DBM& d) {
  if (d.empty) throw InvalidInput("dimension of empty cell");
  std::vector<int> cls(d.n, -1);
  int k = 0;
  for (int i = 0; i < d.n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = k;
    for (int j = i + 1; j < d.n; ++j)
      if (tight(d, i, j)) cls[j] = k;
    ++k;
  }
  return k;
}

std::vector<Rat> dbm_relint(const DBM& d) {
  if (d.empty) throw InvalidInput("relative interior of empty cell");
  // Shrink every non-forced finite bound a bit, retrying with smaller
  // steps until the system stays consistent, then read off potentials.
  Rat eps = 1;
  bool have = false;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      if (i == j || d.c[i][j].inf || d.c[j][i].inf || tight(d, i, j)) continue;
      Rat slack = (d.c[i][j].v + d.c[j][i].v) / 3;
      if (!have || slack < eps) eps = slack, have = true;
    }
  while (true) {
    DBM t = d;
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j)
        if (i != j && !t.c[i][j].inf && !tight(d, i, j)) t.c[i][j].v -= eps;
    t.close();
    if (!t.empty) {
      // Bellman-Ford potentials: x_i = shortest distance from a virtual
      // source with 0-arcs to every node, arcs j -> i of weight c[i][j].
      std::vector<Rat> x(t.n, 0);
      for (int it = 0; it < t.n; ++it)
        for (int i = 0; i < t.n; ++i)
          for (int j = 0; j < t.n; ++j)
            if (!t.c[i][j].inf && x[j] + t.c[i][j].v < x[i]) x[i] = x[j] + t.c[i][j].v;
      return x;
    }
    eps /= 2;
  }
}

bool dbm_contains_relint(const DBM& d, const std::vector<Rat>& x) {
  if (!dbm_contains(d, x)) return false;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (i != j && !d.c[i][j].inf && !tight(d, i, j) && x[i] - x[j] == d.c[i][j].v) return false;
  return true;
}

DBM dbm_face_at(const DBM& p, const std::vector<Rat>& z) {
  if (!dbm_contains(p, z)) throw InvalidInput("point not in cell");
  DBM f = p;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (!p.c[i][j].inf && z[i] - z[j] == p.c[i][j].v) f.add_lower(i, j, p.c[i][j].v);
  f.close();
  return f;
}

bool dbm_is_face(const DBM& f, const DBM& p) {
  if (f.empty || p.empty) return false;
  if (!dbm_subset(f, p)) return false;
  return dbm_equal(dbm_face_at(p, dbm_relint(f)), f);
}

std::vector<DBM> dbm_faces(const DBM& p) {
  if (p.empty) return {};
  std::vector<DBM> out = {p};
  std::map<std::string, size_t> seen = {{p.key(), 0}};
  for (size_t t = 0; t < out.size(); ++t) {
    DBM cur = out[t];
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j) {
        if (cur.c[i][j].inf || tight(cur, i, j)) continue;
        DBM g = cur;
        g.add_lower(i, j, cur.c[i][j].v);
        g.close();
        if (g.empty) continue;
        auto k = g.key();
        if (!seen.count(k)) {
          seen[k] = out.size();
          out.push_back(g);
        }
      }
  }
  return out;
}

}  // namespace sweak
