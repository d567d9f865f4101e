#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace sweak {

// Rational extended with +infinity.
struct ExtRat {
  bool inf = true;
  Rat v = 0;
  static ExtRat infinity() { return {true, 0}; }
  static ExtRat of(const Rat& r) { return {false, r}; }
};
inline bool operator==(const ExtRat& a, const ExtRat& b) {
  return a.inf == b.inf && (a.inf || a.v == b.v);
}
inline bool ext_less(const ExtRat& a, const ExtRat& b) {
  if (b.inf) return !a.inf;
  if (a.inf) return false;
  return a.v < b.v;
}
inline ExtRat ext_add(const ExtRat& a, const ExtRat& b) {
  if (a.inf || b.inf) return ExtRat::infinity();
  return ExtRat::of(a.v + b.v);
}
inline ExtRat ext_min(const ExtRat& a, const ExtRat& b) { return ext_less(a, b) ? a : b; }
inline ExtRat ext_max(const ExtRat& a, const ExtRat& b) { return ext_less(a, b) ? b : a; }

// Polyhedron { x in R^n : x_i - x_j <= c[i][j] }, 0-indexed coordinates.
// After close(), c is the canonical (all-pairs tightest) form, or empty set.
struct DBM {
  int n = 0;
  bool empty = false;
  std::vector<std::vector<ExtRat>> c;

  static DBM top(int n) {
    DBM d;
    d.n = n;
    d.c.assign(n, std::vector<ExtRat>(n, ExtRat::infinity()));
    for (int i = 0; i < n; ++i) d.c[i][i] = ExtRat::of(0);
    return d;
  }
  void add_upper(int i, int j, const Rat& v) { c[i][j] = ext_min(c[i][j], ExtRat::of(v)); }
  void add_lower(int i, int j, const Rat& v) { add_upper(j, i, -v); }
  void add_eq(int i, int j, const Rat& v) {
    add_upper(i, j, v);
    add_lower(i, j, v);
  }
  void close();
  std::string key() const;
};

bool dbm_equal(const DBM& a, const DBM& b);        // closed forms
bool dbm_subset(const DBM& a, const DBM& b);       // closed forms
DBM dbm_intersect(const DBM& a, const DBM& b);     // closed result
DBM dbm_hull(const DBM& a, const DBM& b);          // smallest DBM containing both (closed inputs)
bool dbm_contains(const DBM& d, const std::vector<Rat>& x);

// Dimension of a closed nonempty DBM = number of classes of coordinates
// under the "pinned together" relation (counts the common translation line;
// the whole space has dimension n).
int dbm_dim(const DBM& d);

// Point with every non-forced inequality strict.
std::vector<Rat> dbm_relint(const DBM& d);

// Is x in the relative interior (every non-forced inequality strict)?
bool dbm_contains_relint(const DBM& d, const std::vector<Rat>& x);

// Smallest face of p containing z (z must lie in p).
DBM dbm_face_at(const DBM& p, const std::vector<Rat>& z);

bool dbm_is_face(const DBM& f, const DBM& p);

// All nonempty faces of p, including p itself.
std::vector<DBM> dbm_faces(const DBM& p);

}  // namespace sweak
