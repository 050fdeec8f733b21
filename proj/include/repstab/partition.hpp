#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "repstab/error.hpp"
#include "repstab/rational.hpp"

namespace repstab {

// Weakly decreasing list of positive integers; the empty list is the unique
// partition of 0. Canonical form is enforced at construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  // 0-based; 0 beyond the last row.
  int part(int i) const;
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  // Hook length formula; weight() = n.
  Integer irrep_dim() const;

  std::string str() const;  // "(3,1)", "()"

  bool operator==(const Partition& o) const = default;
  // Lexicographic on parts, shorter prefix first.
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  std::vector<int> parts_;
};

// Normative output order: weight first, then lexicographic on parts.
struct SizeLexLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

using MultiplicityMap = std::map<Partition, long long, SizeLexLess>;

Partition pad(const Partition& lambda, int n);
Partition unpad(const Partition& mu);

// Reverse-lexicographic: (n) first, (1^n) last. Canonical index order for
// conjugacy classes and character table rows.
const std::vector<Partition>& partitions_of(int n);

// sign of any permutation with the given cycle type
int class_sign(const Partition& type);

struct ClassList {
  int n = 0;
  std::vector<Partition> types;  // reverse-lexicographic
  std::vector<Integer> sizes;
  Integer group_order;
  int index_of(const Partition& type) const;
};

const ClassList& class_list(int n);
Integer class_size(const Partition& type);

}  // namespace repstab
