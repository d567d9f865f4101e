#pragma once

#include <functional>
#include <vector>

#include "bush.hpp"

namespace sweak {

enum class Kind { Trees, Trunks, Bushes };

inline constexpr long long kDefaultCap = 1000000;

// Number of objects of the given kind (product formulas for trees and
// trunks; recursive sweep for bushes).
long long count_kind(const SComp& s, Kind kind);

// All objects of the given kind. Trees are ordered lexicographically by
// their leaf-index sequence, trunks by their gap-index sequence, bushes by
// a planar sweep (leaf 1, gap 1, leaf 2, gap 2, ...) at every step.
// Throws CapExceeded if the count exceeds cap.
std::vector<Bush> enumerate_kind(const SComp& s, Kind kind, long long cap = kDefaultCap);

void for_each_kind(const SComp& s, Kind kind, const std::function<void(const Bush&)>& fn,
                   long long cap = kDefaultCap);

// Tree with leaf-index sequence p (p[j-1] in [1, S_{j-1}]).
Bush tree_from_indices(const SComp& s, const std::vector<int>& p);

// Trunk with gap-index sequence q (q[j-1] in [1, T_{j-1}-1]; ignored while
// only one leaf is available).
Bush trunk_from_indices(const SComp& s, const std::vector<int>& q);

}  // namespace sweak
