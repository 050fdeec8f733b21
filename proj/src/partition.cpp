#include "repstab/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace repstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int col = 0; col < first(); ++col) {
    int rows = 0;
    for (int p : parts_)
      if (p > col) ++rows;
    c.push_back(rows);
  }
  return Partition(std::move(c));
}

Integer Partition::irrep_dim() const {
  Integer hooks(1);
  Partition conj = conjugate();
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[static_cast<size_t>(i)]; ++j)
      hooks *= (parts_[static_cast<size_t>(i)] - j) + (conj.part(j) - i) - 1;
  Integer d = factorial(weight());
  mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), hooks.get_mpz_t());
  return d;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(), o.parts_.begin(),
                                                o.parts_.end());
}

bool SizeLexLess::operator()(const Partition& a, const Partition& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a < b;
}

Partition pad(const Partition& lambda, int n) {
  int head = n - lambda.weight();
  if (head < lambda.first())
    throw PaddingRange("pad: " + lambda.str() + " needs n >= " +
                       std::to_string(lambda.weight() + lambda.first()) + ", got " +
                       std::to_string(n));
  if (head == 0) return lambda;  // only possible for lambda = (), n = 0
  std::vector<int> parts{head};
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

Partition unpad(const Partition& mu) {
  if (mu.empty()) throw EmptyPartition("unpad: partition of 0 has no first row");
  return Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
}

namespace {

void gen_partitions(int n, int cap, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int k = std::min(n, cap); k >= 1; --k) {
    acc.push_back(k);
    gen_partitions(n - k, k, acc, out);
    acc.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

int class_sign(const Partition& type) {
  return ((type.weight() - type.length()) % 2 == 0) ? 1 : -1;
}

Integer class_size(const Partition& type) {
  // n! / prod(k^{e_k} e_k!)
  Integer denom(1);
  const auto& parts = type.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int mult = static_cast<int>(j - i);
    Integer kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(mult));
    denom *= kpow * factorial(mult);
    i = j;
  }
  Integer s = factorial(type.weight());
  mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), denom.get_mpz_t());
  return s;
}

int ClassList::index_of(const Partition& type) const {
  auto it = std::find(types.begin(), types.end(), type);
  if (it == types.end())
    throw std::invalid_argument("not a cycle type of " + std::to_string(n) + ": " + type.str());
  return static_cast<int>(it - types.begin());
}

const ClassList& class_list(int n) {
  static std::map<int, ClassList> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    ClassList cl;
    cl.n = n;
    cl.types = partitions_of(n);
    cl.group_order = factorial(n);
    Integer total(0);
    for (const auto& t : cl.types) {
      cl.sizes.push_back(class_size(t));
      total += cl.sizes.back();
    }
    if (total != cl.group_order) throw std::logic_error("class sizes do not sum to n!");
    it = cache.emplace(n, std::move(cl)).first;
  }
  return it->second;
}

}  // namespace repstab
