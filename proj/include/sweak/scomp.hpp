#pragma once

#include <algorithm>
#include <vector>

namespace sweak {

// A weak composition s = (s_1, ..., s_n), entries >= 0.
using SComp = std::vector<int>;

// Leaf capacity: S_0 = 1, S_j = 1 + sum_{i<=j} s_i.
inline std::vector<long long> cap_leaves(const SComp& s) {
  std::vector<long long> S(s.size() + 1, 1);
  for (size_t j = 1; j <= s.size(); ++j) S[j] = S[j - 1] + s[j - 1];
  return S;
}

// Gap capacity: T_0 = 1, T_j = 2 - [s_1 = ... = s_j = 0] + sum_{i<=j} max(0, s_i - 1).
inline std::vector<long long> cap_gaps(const SComp& s) {
  std::vector<long long> T(s.size() + 1, 1);
  bool all_zero = true;
  long long acc = 0;
  for (size_t j = 1; j <= s.size(); ++j) {
    all_zero = all_zero && s[j - 1] == 0;
    acc += std::max(0, s[j - 1] - 1);
    T[j] = 2 - (all_zero ? 1 : 0) + acc;
  }
  return T;
}

}  // namespace sweak
