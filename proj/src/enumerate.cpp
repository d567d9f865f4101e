#include "sweak/enumerate.hpp"

#include <climits>
#include <map>

namespace sweak {

namespace {

long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > LLONG_MAX / b) return LLONG_MAX;
  return a * b;
}

long long sat_add(long long a, long long b) {
  if (a > LLONG_MAX - b) return LLONG_MAX;
  return a + b;
}

long long next_leaves(const SComp& s, int j, long long L, bool gap) {
  if (!gap) return L + s[j - 1];
  return L + (s[j - 1] == 0 ? 0 : s[j - 1] - 1);
}

long long count_bushes_from(const SComp& s, int j, long long L,
                            std::map<std::pair<int, long long>, long long>& memo) {
  if (j > (int)s.size()) return 1;
  auto it = memo.find({j, L});
  if (it != memo.end()) return it->second;
  long long total = sat_mul(L, count_bushes_from(s, j + 1, next_leaves(s, j, L, false), memo));
  if (L >= 2)
    total = sat_add(total,
                    sat_mul(L - 1, count_bushes_from(s, j + 1, next_leaves(s, j, L, true), memo)));
  memo[{j, L}] = total;
  return total;
}

}  // namespace

long long count_kind(const SComp& s, Kind kind) {
  if (kind == Kind::Trees) {
    auto S = cap_leaves(s);
    long long c = 1;
    for (size_t j = 1; j <= s.size(); ++j) c = sat_mul(c, S[j - 1]);
    return c;
  }
  if (kind == Kind::Trunks) {
    auto T = cap_gaps(s);
    long long c = 1;
    for (size_t j = 1; j <= s.size(); ++j) c = sat_mul(c, std::max(1LL, T[j - 1] - 1));
    return c;
  }
  std::map<std::pair<int, long long>, long long> memo;
  return count_bushes_from(s, 1, 1, memo);
}

void for_each_kind(const SComp& s, Kind kind, const std::function<void(const Bush&)>& fn,
                   long long cap) {
  long long total = count_kind(s, kind);
  if (total > cap)
    throw CapExceeded("enumeration would produce " + std::to_string(total) +
                      " objects, cap is " + std::to_string(cap));
  int n = (int)s.size();
  std::vector<Att> att(n);
  // Planar sweep at each step: leaf 1, gap 1, leaf 2, gap 2, ..., leaf L.
  std::function<void(int, long long)> rec = [&](int j, long long L) {
    if (j > n) {
      fn(build_bush(s, att));
      return;
    }
    for (int k = 1; k <= (int)L; ++k) {
      if (kind != Kind::Trunks || L == 1) {
        att[j - 1] = leaf_at(k);
        if (kind != Kind::Trunks || k == 1) rec(j + 1, next_leaves(s, j, L, false));
      }
      if (k < (int)L && kind != Kind::Trees) {
        att[j - 1] = gap_at(k);
        rec(j + 1, next_leaves(s, j, L, true));
      }
    }
  };
  rec(1, 1);
}

std::vector<Bush> enumerate_kind(const SComp& s, Kind kind, long long cap) {
  std::vector<Bush> out;
  for_each_kind(s, kind, [&](const Bush& b) { out.push_back(b); }, cap);
  return out;
}

Bush tree_from_indices(const SComp& s, const std::vector<int>& p) {
  if (p.size() != s.size()) throw InvalidInput("index sequence length != n");
  std::vector<Att> att(s.size());
  for (size_t j = 0; j < s.size(); ++j) att[j] = leaf_at(p[j]);
  return build_bush(s, att);
}

Bush trunk_from_indices(const SComp& s, const std::vector<int>& q) {
  if (q.size() != s.size()) throw InvalidInput("index sequence length != n");
  std::vector<Att> att(s.size());
  long long L = 1;
  for (size_t j = 0; j < s.size(); ++j) {
    att[j] = L == 1 ? leaf_at(1) : gap_at(q[j]);
    L = next_leaves(s, (int)j + 1, L, L != 1);
  }
  return build_bush(s, att);
}

}  // namespace sweak
