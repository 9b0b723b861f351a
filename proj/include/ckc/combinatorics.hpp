#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace ckc {

/// C(n, r), saturating at UINT64_MAX.
inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

/// sum_{i <= r} C(n, i), saturating.
inline std::uint64_t subsets_up_to(int n, int r) {
  std::uint64_t total = 0;
  for (int i = 0; i <= r && i <= n; ++i) {
    const std::uint64_t c = binomial(n, i);
    if (c > std::numeric_limits<std::uint64_t>::max() - total) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total += c;
  }
  return total;
}

/// Calls visit(subset) for every size-`size` subset of `pool`, as ascending
/// position lists mapped through pool, in lexicographic order. Stops early
/// and returns true once visit returns true.
template <class Visit>
bool for_each_subset(const std::vector<int>& pool, int size, Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  if (size < 0 || size > n) return false;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  std::vector<int> subset(size);
  for (;;) {
    for (int i = 0; i < size; ++i) subset[i] = pool[idx[i]];
    if (visit(subset)) return true;
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == n - size + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

inline std::vector<int> iota_points(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace ckc
