#pragma once

#include <map>
#include <string>
#include <vector>

#include "repstab/partition.hpp"

namespace repstab {

// Exact-rational class function on S_n, values indexed by the canonical
// (reverse-lexicographic) cycle type order.
struct ClassFunction {
  int n = 0;
  std::vector<Rational> values;

  const Rational& at(const Partition& type) const;
  Rational& at(const Partition& type);

  static ClassFunction zero(int n);
  bool operator==(const ClassFunction& o) const = default;
};

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(const Rational& c, const ClassFunction& a);

Rational inner_product(const ClassFunction& a, const ClassFunction& b);

class CharacterTable {
 public:
  // Memoized per n; consults the on-disk cache when one is configured.
  static const CharacterTable& of(int n);
  // Always recomputes; used to validate cache entries.
  static CharacterTable compute(int n);

  int n() const { return n_; }
  const std::vector<Partition>& labels() const;  // = partitions_of(n)
  const std::vector<Integer>& row(const Partition& lambda) const;
  const Integer& value(const Partition& lambda, const Partition& type) const;

  bool operator==(const CharacterTable& o) const;

 private:
  int n_ = 0;
  std::vector<std::vector<Integer>> rows_;  // row i = labels()[i], canonical class order
  friend CharacterTable character_table_from_rows(int, std::vector<std::vector<Integer>>);
};

CharacterTable character_table_from_rows(int n, std::vector<std::vector<Integer>> rows);

ClassFunction irreducible_character(const Partition& lambda);
ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);
ClassFunction permutation_character(int n);  // fixed points
ClassFunction regular_character(int n);

// Representation up to isomorphism: partition of n -> multiplicity > 0.
struct IrrDecomposition {
  int n = 0;
  MultiplicityMap entries;

  IrrDecomposition() = default;
  explicit IrrDecomposition(int n) : n(n) {}
  IrrDecomposition(int n, MultiplicityMap e);

  void add(const Partition& lambda, long long mult);
  long long mult(const Partition& lambda) const;
  Integer dim() const;
  ClassFunction character() const;
  // Drop each label's first row. Total on partitions of n >= 1.
  MultiplicityMap unpadded() const;
  std::string str() const;

  bool operator==(const IrrDecomposition& o) const = default;
};

IrrDecomposition operator+(const IrrDecomposition& a, const IrrDecomposition& b);

IrrDecomposition decompose(const ClassFunction& chi);
long long tensor_trivial_multiplicity(const Partition& lambda, const Partition& mu);

IrrDecomposition trivial_rep(int n);

}  // namespace repstab
