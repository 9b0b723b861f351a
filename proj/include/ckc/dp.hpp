#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ckc/instance.hpp"

namespace ckc {

/// max w.z  s.t.  a_l . z >= m_l for every row l,  sum z <= capacity,  z binary.
struct DpProgram {
  std::vector<Rational> weights;      // q entries, >= 0
  std::vector<std::vector<long>> a;   // rows x q, entries >= 0
  std::vector<long> demands;          // one per row, >= 0
  int capacity = 0;
};

struct DpSelection {
  std::vector<char> chosen;  // q flags
  Rational value;
};

/// Exact solution by dynamic programming over (item prefix, residual demand
/// vector, items used). Residual demands are clamped at zero, so the table
/// has prod_l (m_l + 1) demand states regardless of how large a_l(i) gets.
/// Among optimal vectors, items are only taken when strictly better than
/// skipping them (scanning from the last item backwards). Returns nullopt
/// when no binary vector is feasible.
std::optional<DpSelection> dp_solve(const DpProgram& prog);

/// Extra requirement for find_few_outside: alpha(B(C, r2)) >= threshold.
struct AlphaRequirement {
  std::span<const Rational> alpha;
  Rational threshold;
};

struct FewOutsideResult {
  std::optional<std::vector<int>> centers;  // ascending
  long dp_calls = 0;
};

/// Looks for C = Q ∪ W with Q ⊆ X \ S, |Q| <= beta, W ⊆ S, |C| <= k meeting
/// every color demand at radius r2 (and `alpha` when given). Guesses Q by
/// size, then lexicographically; for each guess a DP picks W on the residual
/// demands, maximizing the alpha mass W adds beyond B(Q, r2) in the weighted
/// form. The r2-balls around S must be pairwise disjoint (checked).
FewOutsideResult find_few_outside(const Instance& inst, const Rational& r2,
                                  std::span<const int> S, int beta,
                                  const AlphaRequirement* alpha = nullptr);

}  // namespace ckc
