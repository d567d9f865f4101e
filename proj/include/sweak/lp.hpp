#pragma once

#include <vector>

#include "rational.hpp"

namespace sweak {

enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPResult {
  LPStatus status;
  Rat value;            // optimal objective value when Optimal
  std::vector<Rat> x;   // an optimal point when Optimal
};

// maximize c.x subject to A x <= b, x free.
LPResult lp_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                const std::vector<Rat>& c);

// Is p in conv(pts)?
bool in_convex_hull(const std::vector<std::vector<Rat>>& pts, const std::vector<Rat>& p);

// Indices of the extreme points of pts (vertices of conv(pts)).
std::vector<int> extreme_points(const std::vector<std::vector<Rat>>& pts);

}  // namespace sweak
