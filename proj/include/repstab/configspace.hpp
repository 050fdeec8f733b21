#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "repstab/linalg.hpp"
#include "repstab/stability.hpp"

namespace repstab {

struct ArnoldOptions {
  // cap on the monomial space dimension for the dense relation-space reduction
  long long dense_cap = 20000;
  // cap on the monomial space dimension for cohomology work (normal-form route)
  long long monomial_cap = 2000000;
};

// H^*(C_n(R^2);Q) in the Arnold presentation: generators w_{ij} (i<j, degree 1,
// index C(j,2)+i so same-max generators are consecutive), triple relations
// w_ab w_bc - w_ac w_bc - w_ab w_ac = 0 in canonical sorted-product form.
// Monomials are bitmask-encoded subsets of generators. The straightening rule
// w_ac w_bc -> w_ab w_bc - w_ab w_ac (a<b<c) rewrites any monomial with a
// repeated column maximum; its fixed points ("distinct-max" monomials) descend
// to a basis of the quotient once the certificate below has checked that every
// relation multiple straightens to zero.
class ArnoldAlgebra {
 public:
  using Mask = std::uint64_t;
  // straightened expansion: distinct-max monomial -> integer coefficient
  using NormalForm = std::unordered_map<Mask, long long>;

  static ArnoldAlgebra& of(int n);

  int n() const { return n_; }
  int gen_count() const { return gens_; }
  std::pair<int, int> gen_pair(int g) const { return {gi_[g], gj_[g]}; }
  int gen_index(int i, int j) const;  // i < j, 0-based points

  // q-subsets in lexicographic order on the sorted index tuple; normative.
  const std::vector<Mask>& monomials(int q);

  bool distinct_max(Mask m) const;
  long long distinct_max_count(int q);

  // image of a sorted monomial under a point relabeling, with the Koszul sign
  // from re-sorting; sigma is 0-based
  std::pair<Mask, int> act(const std::vector<int>& sigma, Mask m) const;

  const NormalForm& normal_form(Mask m);

  // Straightens r_{abc} ^ m for every triple and every (q-2)-monomial m and
  // checks the result is zero: proves that the straightening span equals the
  // degree-q relation space and that the distinct-max monomials are a basis.
  bool certify(int q);

  // dim H^q = number of distinct-max monomials, valid once certify(q) passed
  long long certified_dim(int q);

 private:
  explicit ArnoldAlgebra(int n);
  int n_, gens_;
  std::vector<int> gi_, gj_;
  std::vector<Mask> blockmask_;  // j -> generators with max j
  std::vector<std::vector<Mask>> monomials_;
  std::vector<char> certified_;
  std::unordered_map<Mask, NormalForm> nf_;
};

// Dense row-reduced basis of the degree-q relation ideal component, inside the
// monomial coordinate space. Memory-cached per (n,q) and mirrored to the disk
// cache when one is configured. FeasibilityExceeded above opts.dense_cap.
const EchelonBasis& arnold_relation_space(int n, int q, const ArnoldOptions& opts = {});

// Signed permutation matrix of sigma on the degree-q monomial basis.
MatrixQ arnold_action_matrix(int n, int q, const std::vector<int>& sigma);

struct ArnoldCohomology {
  int n = 0;
  int q = 0;
  long long dim = 0;
  ClassFunction character;
  IrrDecomposition decomposition;
};

// Exact S_n-equivariant H^q(C_n(R^2);Q): dimension from the certified
// distinct-max basis, character as (trace on monomials) - (trace on the
// relation subspace via its exact projector).
ArnoldCohomology arnold_cohomology(int n, int q, const ArnoldOptions& opts = {});

// Per-n decompositions for fixed q over [n_min, n_max].
DecompositionSequence arnold_stability_scan(int q, int n_min, int n_max,
                                            const ArnoldOptions& opts = {});

// dim H^q for q = 0..n-1, each certified
std::vector<long long> arnold_betti(int n, const ArnoldOptions& opts = {});

// coefficients of prod_{k=1}^{n-1} (1 + k t)
std::vector<Integer> poincare_coefficients(int n);

}  // namespace repstab
