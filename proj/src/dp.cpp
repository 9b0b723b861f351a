#include "ckc/dp.hpp"

#include <algorithm>

#include "ckc/combinatorics.hpp"
#include "ckc/errors.hpp"

namespace ckc {

std::optional<DpSelection> dp_solve(const DpProgram& prog) {
  const int q = static_cast<int>(prog.weights.size());
  const int rows = static_cast<int>(prog.demands.size());
  CKC_ENSURE(static_cast<int>(prog.a.size()) == rows, "dp program shape mismatch");
  const int cap = std::clamp(prog.capacity, 0, q);

  // Mixed-radix encoding of residual demand vectors (M_1..M_rows).
  std::vector<long> stride(rows + 1, 1);
  for (int l = 0; l < rows; ++l) stride[l + 1] = stride[l] * (prog.demands[l] + 1);
  const long states = stride[rows];
  const long full = [&] {
    long idx = 0;
    for (int l = 0; l < rows; ++l) idx += prog.demands[l] * stride[l];
    return idx;
  }();

  const long width = states * (cap + 1);
  auto slot = [&](long s, int j) { return s * (cap + 1) + j; };
  std::vector<Rational> prev(static_cast<std::size_t>(width));
  std::vector<char> prev_ok(static_cast<std::size_t>(width), 0);
  for (int j = 0; j <= cap; ++j) prev_ok[slot(0, j)] = 1;
  std::vector<Rational> cur(static_cast<std::size_t>(width));
  std::vector<char> cur_ok(static_cast<std::size_t>(width));
  std::vector<std::vector<char>> take(q, std::vector<char>(static_cast<std::size_t>(width), 0));
  std::vector<std::vector<long>> after(q, std::vector<long>(static_cast<std::size_t>(states)));

  Rational candidate;
  for (int i = 0; i < q; ++i) {
    for (long s = 0; s < states; ++s) {
      long pred = 0;
      for (int l = 0; l < rows; ++l) {
        const long level = (s / stride[l]) % (prog.demands[l] + 1);
        const long rest = std::max(level - prog.a[l][i], 0L);
        pred += rest * stride[l];
      }
      after[i][s] = pred;
    }
    for (long s = 0; s < states; ++s) {
      for (int j = 0; j <= cap; ++j) {
        const long here = slot(s, j);
        cur_ok[here] = prev_ok[here];
        if (prev_ok[here]) cur[here] = prev[here];
        if (j == 0) continue;
        const long from = slot(after[i][s], j - 1);
        if (!prev_ok[from]) continue;
        candidate = prog.weights[i] + prev[from];
        if (!cur_ok[here] || candidate > cur[here]) {
          cur[here] = candidate;
          cur_ok[here] = 1;
          take[i][here] = 1;
        }
      }
    }
    std::swap(prev, cur);
    std::swap(prev_ok, cur_ok);
  }

  if (!prev_ok[slot(full, cap)]) return std::nullopt;
  DpSelection sel;
  sel.value = prev[slot(full, cap)];
  sel.chosen.assign(q, 0);
  long s = full;
  int j = cap;
  for (int i = q - 1; i >= 0; --i) {
    if (take[i][slot(s, j)]) {
      sel.chosen[i] = 1;
      s = after[i][s];
      --j;
    }
  }
  return sel;
}

FewOutsideResult find_few_outside(const Instance& inst, const Rational& r2,
                                  std::span<const int> S, int beta,
                                  const AlphaRequirement* alpha) {
  FewOutsideResult result;
  if (beta < 0) return result;
  const int n = inst.size();
  const int reach = inst.rank_at_most(r2);

  std::vector<PointMask> near(S.size());
  PointMask claimed(n, 0);
  for (std::size_t i = 0; i < S.size(); ++i) {
    near[i] = ball_mask_at_rank(inst, std::span<const int>(&S[i], 1), reach);
    for (int u = 0; u < n; ++u) {
      if (!near[i][u]) continue;
      CKC_ENSURE(!claimed[u], "balls around S overlap at radius r2");
      claimed[u] = 1;
    }
  }

  std::vector<int> outside;
  {
    PointMask in_s(n, 0);
    for (int s : S) in_s[s] = 1;
    for (int u = 0; u < n; ++u) {
      if (!in_s[u]) outside.push_back(u);
    }
  }

  const auto& colors = inst.colors();
  auto attempt = [&](const std::vector<int>& Q) -> bool {
    const PointMask by_q = ball_mask_at_rank(inst, Q, reach);
    DpProgram prog;
    for (const auto& c : colors) {
      long already = 0;
      for (int u : c.members) already += by_q[u];
      const long residual = c.demand - already;
      if (residual <= 0) continue;  // redundant row
      std::vector<long> row(S.size(), 0);
      for (std::size_t i = 0; i < S.size(); ++i) {
        for (int u : c.members) row[i] += near[i][u] && !by_q[u];
      }
      prog.a.push_back(std::move(row));
      prog.demands.push_back(residual);
    }
    prog.weights.assign(S.size(), Rational(0));
    Rational base = 0;
    if (alpha != nullptr) {
      for (int u = 0; u < n; ++u) {
        if (by_q[u]) base += alpha->alpha[u];
      }
      for (std::size_t i = 0; i < S.size(); ++i) {
        for (int u = 0; u < n; ++u) {
          if (near[i][u] && !by_q[u]) prog.weights[i] += alpha->alpha[u];
        }
      }
    }
    prog.capacity = std::min<int>(inst.k() - static_cast<int>(Q.size()), static_cast<int>(S.size()));
    ++result.dp_calls;
    auto sel = dp_solve(prog);
    if (!sel) return false;
    if (alpha != nullptr && base + sel->value < alpha->threshold) return false;
    std::vector<int> centers = Q;
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (sel->chosen[i]) centers.push_back(S[i]);
    }
    centers = normalized(std::move(centers));
    CKC_ENSURE(check_feasible(inst, centers, r2).feasible,
               "few-outside solution fails the coverage check");
    if (alpha != nullptr) {
      const PointMask cov = ball_mask_at_rank(inst, centers, reach);
      Rational mass = 0;
      for (int u = 0; u < n; ++u) {
        if (cov[u]) mass += alpha->alpha[u];
      }
      CKC_ENSURE(mass >= alpha->threshold, "few-outside solution misses the alpha threshold");
    }
    result.centers = std::move(centers);
    return true;
  };

  const int max_outside = std::min(beta, inst.k());
  for (int size = 0; size <= max_outside; ++size) {
    if (for_each_subset(outside, size, attempt)) break;
  }
  return result;
}

}  // namespace ckc
