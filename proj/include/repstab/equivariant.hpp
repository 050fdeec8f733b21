#pragma once

#include <optional>
#include <vector>

#include "repstab/characters.hpp"
#include "repstab/linalg.hpp"

namespace repstab {

// Formal Q-linear combination of words in the G-generators; letter k >= 0 is
// generator k, letter ~k (= -k-1) its inverse.
struct AlgebraElement {
  std::vector<std::pair<Rational, std::vector<int>>> terms;

  static AlgebraElement zero() { return {}; }
  static AlgebraElement one() { return {{{Rational(1), {}}}}; }
  static AlgebraElement gen(int k) { return {{{Rational(1), {k}}}}; }
  static AlgebraElement gen_inv(int k) { return {{{Rational(1), {~k}}}}; }
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  friend AlgebraElement operator*(const Rational& c, AlgebraElement e);
};

// Concrete vector space with the S_n-action given by adjacent transposition
// matrices and an optional commuting G-action given by generator matrices.
// Coxeter relations and commutation are validated eagerly at construction.
class ExplicitRep {
 public:
  ExplicitRep(int n, std::vector<MatrixQ> s_gens, std::vector<MatrixQ> g_gens = {});

  int n() const { return n_; }
  Eigen::Index dim() const { return dim_; }
  bool has_g_action() const { return !g_.empty(); }
  const std::vector<MatrixQ>& s_gens() const { return s_; }
  const std::vector<MatrixQ>& g_gens() const { return g_; }

  // product of adjacent transposition matrices along a word for sigma (0-based)
  MatrixQ sn_matrix(const std::vector<int>& sigma) const;
  MatrixQ class_matrix(const Partition& type) const;  // canonical representative
  MatrixQ evaluate(const AlgebraElement& e) const;    // through the G-action

  ClassFunction character() const;

  static ExplicitRep permutation(int n);                    // Q^n
  static ExplicitRep trivial(int n);                        // Q
  static ExplicitRep sign_tensor(const ExplicitRep& v);     // s_i -> -s_i
  static ExplicitRep direct_sum(const ExplicitRep& a, const ExplicitRep& b);
  // attach a G-action to an existing S_n skeleton (validated)
  ExplicitRep with_g_action(std::vector<MatrixQ> g_gens) const;
  // explicit dimension, for shapes the matrices alone cannot pin down
  // (n <= 1, zero-dimensional summands); validated like the constructor
  static ExplicitRep raw(int n, Eigen::Index dim, std::vector<MatrixQ> s_gens,
                         std::vector<MatrixQ> g_gens = {});

 private:
  ExplicitRep() = default;
  void validate() const;

  int n_;
  Eigen::Index dim_;
  std::vector<MatrixQ> s_;
  std::vector<MatrixQ> g_;
  mutable std::vector<std::optional<MatrixQ>> g_inv_;
};

struct SubspaceDecomp {
  long long dim = 0;
  ClassFunction character;
  IrrDecomposition decomposition;
};

// fixed subspace of every G-generator, with its S_n-structure
SubspaceDecomp invariants(const ExplicitRep& v);

struct EquivariantComplex {
  std::vector<ExplicitRep> terms;
  // differentials[p]: terms[p] -> terms[p+1]
  std::vector<MatrixQ> differentials;
};

// boundaries[p] is the (d_p x d_{p+1}) group-algebra matrix of the resolution
// boundary E_{p+1} -> E_p; applying Hom_G(-, v) transposes it and evaluates
// each entry through the G-action, giving a complex with terms v^{d_p}.
EquivariantComplex complex_from_resolution(const std::vector<int>& ranks,
                                           const std::vector<std::vector<std::vector<AlgebraElement>>>& boundaries,
                                           const ExplicitRep& v);

// H^p = ker(delta_p) / im(delta_{p-1})
SubspaceDecomp cohomology(const EquivariantComplex& c, int p);

long long euler_characteristic_terms(const EquivariantComplex& c);
ClassFunction euler_character_terms(const EquivariantComplex& c);

struct KerImCoker {
  SubspaceDecomp ker, im, coker;
};

// f: dom -> cod commuting with both actions (checked)
KerImCoker ker_im_coker(const ExplicitRep& dom, const ExplicitRep& cod, const MatrixQ& f);

// Averages seed over S_n (and over nothing else; the G-actions of the test
// pool are trivial) to produce an equivariant map dom -> cod.
MatrixQ reynolds_average(const ExplicitRep& dom, const ExplicitRep& cod, const MatrixQ& seed);

}  // namespace repstab
