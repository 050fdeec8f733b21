#pragma once

#include "repstab/induction.hpp"

namespace repstab {

// Graded Betti numbers b_d = dim H^d(G;Q), finite by construction; b_0 = 1.
struct GradedBetti {
  std::vector<long> b;

  GradedBetti() : b{1} {}
  explicit GradedBetti(std::vector<long> betti);

  long at(int d) const;
  int top() const { return static_cast<int>(b.size()) - 1; }

  static GradedBetti integers() { return GradedBetti({1, 1}); }
  static GradedBetti free_group(int k);
  static GradedBetti surface_group(int genus);
  static GradedBetti finite_group() { return GradedBetti({1}); }

  bool operator==(const GradedBetti& o) const = default;
};

// Partitions of q whose parts d all have b_d > 0, in descending
// lexicographic order.
std::vector<Partition> degree_tuple_partitions(const GradedBetti& betti, int q);

// V_alpha = Ind_H^{S_l} of the tensor block: on a block of m equal-degree-d
// factors, sigma acts with character b_d^{#cycles(sigma)} * sign(sigma)^d.
IrrDecomposition block_character(const Partition& alpha, const GradedBetti& betti);

// S_n-decomposition of H^q(G^n;Q): sum over alpha of
// induce_product(block_character(alpha), trivial on S_{n-l}).
IrrDecomposition hq_of_power(const GradedBetti& betti, int q, int n);

// [t^q] (sum_d b_d t^d)^n
Integer hq_dimension_gf(const GradedBetti& betti, int q, int n);

// q-th exterior power of the permutation representation, via the alternating
// cycle-index identity: sum_q chi(sigma) t^q = prod_{cycles k} (1 - (-t)^k).
IrrDecomposition exterior_power_perm(int q, int n);

// Stable description with stable_from = 2q, verified on [2q, horizon].
StableDecomposition stable_hq_of_power(const GradedBetti& betti, int q, int horizon = -1);

}  // namespace repstab
