#include "repstab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "repstab/cache.hpp"
#include "repstab/serialize.hpp"

namespace repstab {

const Rational& ClassFunction::at(const Partition& type) const {
  return values[static_cast<size_t>(class_list(n).index_of(type))];
}

Rational& ClassFunction::at(const Partition& type) {
  return values[static_cast<size_t>(class_list(n).index_of(type))];
}

ClassFunction ClassFunction::zero(int n) {
  return ClassFunction{n, std::vector<Rational>(class_list(n).types.size(), Rational(0))};
}

namespace {

void require_same_degree(const ClassFunction& a, const ClassFunction& b) {
  if (a.n != b.n)
    throw DegreeMismatch("class functions on S_" + std::to_string(a.n) + " and S_" +
                         std::to_string(b.n));
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_degree(a, b);
  ClassFunction r = a;
  for (size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  require_same_degree(a, b);
  ClassFunction r = a;
  for (size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
  return r;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_degree(a, b);
  ClassFunction r = a;
  for (size_t i = 0; i < r.values.size(); ++i) r.values[i] *= b.values[i];
  return r;
}

ClassFunction operator*(const Rational& c, const ClassFunction& a) {
  ClassFunction r = a;
  for (auto& v : r.values) v *= c;
  return r;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_degree(a, b);
  const ClassList& cl = class_list(a.n);
  Rational s(0);
  for (size_t i = 0; i < cl.types.size(); ++i) s += Rational(cl.sizes[i]) * a.values[i] * b.values[i];
  return s / Rational(cl.group_order);
}

// --- Murnaghan-Nakayama ---

namespace {

// beta numbers lam_i + (L-1-i), strictly decreasing
std::vector<int> beta_set(const std::vector<int>& lam) {
  int L = static_cast<int>(lam.size());
  std::vector<int> b(lam.begin(), lam.end());
  for (int i = 0; i < L; ++i) b[static_cast<size_t>(i)] += L - 1 - i;
  return b;
}

std::vector<int> partition_from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  int L = static_cast<int>(b.size());
  std::vector<int> lam;
  for (int i = 0; i < L; ++i) {
    int p = b[static_cast<size_t>(i)] - (L - 1 - i);
    if (p > 0) lam.push_back(p);
  }
  return lam;
}

struct MNColumn {
  const std::vector<int>& cycles;
  std::map<std::pair<std::vector<int>, size_t>, Integer> memo;

  Integer eval(const std::vector<int>& lam, size_t i) {
    if (lam.empty()) return Integer(1);
    auto key = std::make_pair(lam, i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int k = cycles[i];
    std::vector<int> b = beta_set(lam);
    Integer total(0);
    for (size_t j = 0; j < b.size(); ++j) {
      int target = b[j] - k;
      if (target < 0) continue;
      bool occupied = false;
      int height = 0;
      for (size_t t = 0; t < b.size(); ++t) {
        if (t == j) continue;
        if (b[t] == target) occupied = true;
        if (b[t] > target && b[t] < b[j]) ++height;
      }
      if (occupied) continue;
      std::vector<int> nb = b;
      nb[j] = target;
      Integer sub = eval(partition_from_beta(std::move(nb)), i + 1);
      if (height % 2)
        total -= sub;
      else
        total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

CharacterTable character_table_from_rows(int n, std::vector<std::vector<Integer>> rows) {
  CharacterTable t;
  t.n_ = n;
  t.rows_ = std::move(rows);
  return t;
}

CharacterTable CharacterTable::compute(int n) {
  const auto& labels = partitions_of(n);
  const auto& classes = class_list(n).types;
  std::vector<std::vector<Integer>> rows(labels.size(),
                                         std::vector<Integer>(classes.size(), Integer(0)));
  for (size_t c = 0; c < classes.size(); ++c) {
    MNColumn col{classes[c].parts(), {}};
    for (size_t r = 0; r < labels.size(); ++r) rows[r][c] = col.eval(labels[r].parts(), 0);
  }
  return character_table_from_rows(n, std::move(rows));
}

const CharacterTable& CharacterTable::of(int n) {
  static std::map<int, CharacterTable> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(n);
  if (it != registry.end()) return it->second;

  const std::string key = "chartab/" + std::to_string(n);
  if (auto cached = CacheStore::global().get(key)) {
    Json j = Json::parse(*cached, nullptr, /*allow_exceptions=*/false);
    if (!j.is_discarded()) {
      if (auto t = character_table_from_json(j); t && t->n() == n)
        return registry.emplace(n, std::move(*t)).first->second;
    }
  }
  CharacterTable t = compute(n);
  CacheStore::global().put(key, character_table_to_json(t).dump(2) + "\n");
  return registry.emplace(n, std::move(t)).first->second;
}

const std::vector<Partition>& CharacterTable::labels() const { return partitions_of(n_); }

const std::vector<Integer>& CharacterTable::row(const Partition& lambda) const {
  const auto& ls = labels();
  auto it = std::find(ls.begin(), ls.end(), lambda);
  if (it == ls.end())
    throw std::invalid_argument("not a partition of " + std::to_string(n_) + ": " + lambda.str());
  return rows_[static_cast<size_t>(it - ls.begin())];
}

const Integer& CharacterTable::value(const Partition& lambda, const Partition& type) const {
  return row(lambda)[static_cast<size_t>(class_list(n_).index_of(type))];
}

bool CharacterTable::operator==(const CharacterTable& o) const {
  return n_ == o.n_ && rows_ == o.rows_;
}

ClassFunction irreducible_character(const Partition& lambda) {
  int n = lambda.weight();
  const auto& row = CharacterTable::of(n).row(lambda);
  ClassFunction chi = ClassFunction::zero(n);
  for (size_t i = 0; i < row.size(); ++i) chi.values[i] = Rational(row[i]);
  return chi;
}

ClassFunction trivial_character(int n) {
  ClassFunction chi = ClassFunction::zero(n);
  for (auto& v : chi.values) v = 1;
  return chi;
}

ClassFunction sign_character(int n) {
  ClassFunction chi = ClassFunction::zero(n);
  const auto& types = class_list(n).types;
  for (size_t i = 0; i < types.size(); ++i) chi.values[i] = class_sign(types[i]);
  return chi;
}

ClassFunction permutation_character(int n) {
  ClassFunction chi = ClassFunction::zero(n);
  const auto& types = class_list(n).types;
  for (size_t i = 0; i < types.size(); ++i) {
    int fixed = 0;
    for (int p : types[i].parts())
      if (p == 1) ++fixed;
    chi.values[i] = fixed;
  }
  return chi;
}

ClassFunction regular_character(int n) {
  ClassFunction chi = ClassFunction::zero(n);
  chi.at(Partition(std::vector<int>(static_cast<size_t>(n), 1))) = Rational(factorial(n));
  return chi;
}

// --- decompositions ---

IrrDecomposition::IrrDecomposition(int n, MultiplicityMap e) : n(n), entries(std::move(e)) {
  for (const auto& [lambda, m] : entries) {
    if (lambda.weight() != n)
      throw std::invalid_argument("entry " + lambda.str() + " in a decomposition on S_" +
                                  std::to_string(n));
    if (m <= 0) throw std::invalid_argument("multiplicities must be positive");
  }
}

void IrrDecomposition::add(const Partition& lambda, long long mult) {
  if (mult == 0) return;
  if (lambda.weight() != n)
    throw std::invalid_argument("entry " + lambda.str() + " in a decomposition on S_" +
                                std::to_string(n));
  const long long next = this->mult(lambda) + mult;
  if (next < 0) throw std::invalid_argument("negative multiplicity at " + lambda.str());
  if (next == 0)
    entries.erase(lambda);
  else
    entries[lambda] = next;
}

long long IrrDecomposition::mult(const Partition& lambda) const {
  auto it = entries.find(lambda);
  return it == entries.end() ? 0 : it->second;
}

Integer IrrDecomposition::dim() const {
  Integer d(0);
  for (const auto& [lambda, m] : entries) d += Integer(static_cast<long>(m)) * lambda.irrep_dim();
  return d;
}

ClassFunction IrrDecomposition::character() const {
  ClassFunction chi = ClassFunction::zero(n);
  const CharacterTable& t = CharacterTable::of(n);
  for (const auto& [lambda, m] : entries) {
    const auto& row = t.row(lambda);
    for (size_t i = 0; i < row.size(); ++i) chi.values[i] += Rational(static_cast<long>(m)) * Rational(row[i]);
  }
  return chi;
}

MultiplicityMap IrrDecomposition::unpadded() const {
  MultiplicityMap u;
  for (const auto& [lambda, m] : entries) u[unpad(lambda)] += m;
  return u;
}

std::string IrrDecomposition::str() const {
  std::ostringstream os;
  os << '{';
  bool fst = true;
  for (const auto& [lambda, m] : entries) {
    if (!fst) os << ", ";
    fst = false;
    os << lambda.str() << ":" << m;
  }
  os << '}';
  return os.str();
}

IrrDecomposition operator+(const IrrDecomposition& a, const IrrDecomposition& b) {
  if (a.n != b.n)
    throw DegreeMismatch("adding decompositions on S_" + std::to_string(a.n) + " and S_" +
                         std::to_string(b.n));
  IrrDecomposition r = a;
  for (const auto& [lambda, m] : b.entries) r.add(lambda, m);
  return r;
}

IrrDecomposition decompose(const ClassFunction& chi) {
  const int n = chi.n;
  const ClassList& cl = class_list(n);
  const CharacterTable& t = CharacterTable::of(n);
  IrrDecomposition dec(n);
  for (const auto& lambda : t.labels()) {
    const auto& row = t.row(lambda);
    Rational ip(0);
    for (size_t i = 0; i < row.size(); ++i)
      ip += Rational(cl.sizes[i]) * chi.values[i] * Rational(row[i]);
    ip /= Rational(cl.group_order);
    if (ip == 0) continue;
    if (ip.get_den() != 1 || ip < 0)
      throw NotACharacter("inner product with " + lambda.str() + " is " + rational_to_string(ip));
    if (!ip.get_num().fits_slong_p()) throw std::overflow_error("multiplicity overflow");
    dec.add(lambda, ip.get_num().get_si());
  }
  return dec;
}

long long tensor_trivial_multiplicity(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw DegreeMismatch("tensor_trivial_multiplicity: " + lambda.str() + " vs " + mu.str());
  int n = lambda.weight();
  const ClassList& cl = class_list(n);
  const CharacterTable& t = CharacterTable::of(n);
  const auto& ra = t.row(lambda);
  const auto& rb = t.row(mu);
  Rational s(0);
  for (size_t i = 0; i < ra.size(); ++i) s += Rational(cl.sizes[i] * ra[i] * rb[i]);
  s /= Rational(cl.group_order);
  if (s.get_den() != 1 || s < 0)
    throw std::logic_error("non-integral trivial-isotypic multiplicity");
  return s.get_num().get_si();
}

IrrDecomposition trivial_rep(int n) {
  IrrDecomposition d(n);
  d.add(n == 0 ? Partition() : Partition({n}), 1);
  return d;
}

}  // namespace repstab
