#include "vak/partitions.hpp"

#include <algorithm>

namespace vak {

namespace {

void gen(int n, int max_part, std::vector<int>& cur,
         std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    cur.push_back(first);
    gen(n - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n, int max_part) {
  if (n < 0) return {};
  if (max_part < 0) max_part = n;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  if (max_part == 0) return {};
  gen(n, max_part, cur, out);
  return out;
}

std::vector<std::vector<int>> partitions_exact_parts(int n, int k) {
  std::vector<std::vector<int>> out;
  for (auto& p : partitions_of(n))
    if (static_cast<int>(p.size()) == k) out.push_back(p);
  return out;
}

std::vector<std::vector<int>> partitions_max_parts(int n, int k) {
  std::vector<std::vector<int>> out;
  for (auto& p : partitions_of(n))
    if (static_cast<int>(p.size()) <= k) out.push_back(p);
  return out;
}

long long partition_count(int n) {
  if (n < 0) return 0;
  // Euler's pentagonal recurrence.
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) s += sign * p[m - g1];
      if (g2 <= m) s += sign * p[m - g2];
    }
    p[m] = s;
  }
  return p[n];
}

}  // namespace vak
