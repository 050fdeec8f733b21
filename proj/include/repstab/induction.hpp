#pragma once

#include "repstab/characters.hpp"

namespace repstab {

// Horizontal-strip enumeration (combinatorial route).
IrrDecomposition pieri(const Partition& lambda, int m);

// Branching rule: remove one corner box.
IrrDecomposition restrict_rep(const Partition& mu);

// Character of Ind_{S_p x S_q}^{S_{p+q}} (A boxtimes B), computed classwise:
// psi(C) = n!/(p! q! |C|) * sum over splits C = C1 u C2 of |C1||C2| chi_A(C1) chi_B(C2).
ClassFunction induced_character(const IrrDecomposition& a, const IrrDecomposition& b);

// Character-theoretic route, independent of pieri.
IrrDecomposition induce_product(const IrrDecomposition& a, const IrrDecomposition& b);

// Description independent of n: unpadded label -> multiplicity, valid for
// every n >= stable_from.
struct StableDecomposition {
  int stable_from = 0;
  MultiplicityMap entries;

  IrrDecomposition realize(int n) const;
  bool operator==(const StableDecomposition& o) const = default;
};

// Stable form of Ind_{S_l x S_{n-l}}^{S_n}(v boxtimes Q) with stable_from = 2l,
// verified against pieri for n in [2l, horizon]. horizon < 0 picks
// max(2l + 4, 10).
StableDecomposition stable_induced_decomposition(const IrrDecomposition& v, int horizon = -1);

}  // namespace repstab
