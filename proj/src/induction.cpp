#include "repstab/induction.hpp"

#include <algorithm>

namespace repstab {

namespace {

void pieri_rows(const Partition& lambda, int row, int rem, std::vector<int>& mu,
                IrrDecomposition& out) {
  int L = lambda.length();
  if (row > L) {
    if (rem == 0) {
      std::vector<int> parts;
      for (int p : mu)
        if (p > 0) parts.push_back(p);
      out.add(Partition(parts), 1);
    }
    return;
  }
  int base = lambda.part(row);
  int cap = row == 0 ? rem : std::min(rem, lambda.part(row - 1) - base);
  for (int add = 0; add <= cap; ++add) {
    mu.push_back(base + add);
    pieri_rows(lambda, row + 1, rem - add, mu, out);
    mu.pop_back();
  }
}

}  // namespace

IrrDecomposition pieri(const Partition& lambda, int m) {
  if (m < 0) throw std::invalid_argument("pieri: negative strip size");
  IrrDecomposition out(lambda.weight() + m);
  std::vector<int> mu;
  pieri_rows(lambda, 0, m, mu, out);
  return out;
}

IrrDecomposition restrict_rep(const Partition& mu) {
  if (mu.weight() == 0) throw RangeError("restrict_rep: nothing below S_0");
  IrrDecomposition out(mu.weight() - 1);
  for (int i = 0; i < mu.length(); ++i) {
    if (mu.part(i) - 1 < mu.part(i + 1)) continue;  // not a corner
    std::vector<int> parts = mu.parts();
    parts[static_cast<size_t>(i)] -= 1;
    if (parts[static_cast<size_t>(i)] == 0) parts.pop_back();
    out.add(Partition(parts), 1);
  }
  return out;
}

namespace {

// distinct splits of the multiset `type` into a sub-multiset of weight p and
// its complement
struct SplitEnum {
  std::vector<std::pair<int, int>> runs;  // (value, count), descending values
  int p;
  std::vector<int> take;  // chosen count per run

  template <typename F>
  void walk(size_t r, int rem, F&& emit) {
    if (r == runs.size()) {
      if (rem == 0) emit(take);
      return;
    }
    auto [v, c] = runs[r];
    int hi = std::min(c, rem / v);
    for (int k = 0; k <= hi; ++k) {
      take.push_back(k);
      walk(r + 1, rem - k * v, emit);
      take.pop_back();
    }
  }
};

Partition from_runs(const std::vector<std::pair<int, int>>& runs, const std::vector<int>& counts) {
  std::vector<int> parts;
  for (size_t r = 0; r < runs.size(); ++r)
    parts.insert(parts.end(), static_cast<size_t>(counts[r]), runs[r].first);
  return Partition(parts);
}

}  // namespace

ClassFunction induced_character(const IrrDecomposition& a, const IrrDecomposition& b) {
  const int p = a.n, q = b.n, n = p + q;
  const ClassFunction chi_a = a.character();
  const ClassFunction chi_b = b.character();
  const ClassList& cl = class_list(n);
  const Rational scale_num = Rational(factorial(n)) / Rational(factorial(p) * factorial(q));

  ClassFunction psi = ClassFunction::zero(n);
  for (size_t ci = 0; ci < cl.types.size(); ++ci) {
    const Partition& type = cl.types[ci];
    std::vector<std::pair<int, int>> runs;
    for (int v : type.parts()) {
      if (!runs.empty() && runs.back().first == v)
        ++runs.back().second;
      else
        runs.emplace_back(v, 1);
    }
    Rational sum(0);
    SplitEnum e{runs, p, {}};
    e.walk(0, p, [&](const std::vector<int>& counts) {
      std::vector<int> co(counts.size());
      for (size_t r = 0; r < runs.size(); ++r) co[r] = runs[r].second - counts[r];
      Partition c1 = from_runs(runs, counts);
      Partition c2 = from_runs(runs, co);
      Rational term = Rational(class_size(c1) * class_size(c2));
      term *= chi_a.at(c1) * chi_b.at(c2);
      sum += term;
    });
    psi.values[ci] = scale_num / Rational(cl.sizes[ci]) * sum;
  }
  return psi;
}

IrrDecomposition induce_product(const IrrDecomposition& a, const IrrDecomposition& b) {
  return decompose(induced_character(a, b));
}

IrrDecomposition StableDecomposition::realize(int n) const {
  if (n < stable_from)
    throw RangeError("realize: n=" + std::to_string(n) + " below stable range " +
                     std::to_string(stable_from));
  IrrDecomposition out(n);
  for (const auto& [lambda, m] : entries) out.add(pad(lambda, n), m);
  return out;
}

StableDecomposition stable_induced_decomposition(const IrrDecomposition& v, int horizon) {
  const int l = v.n;
  if (horizon < 0) horizon = std::max(2 * l + 4, 10);
  if (horizon < 2 * l + 1)
    throw HorizonTooSmall("horizon " + std::to_string(horizon) +
                          " cannot confirm constancy from " + std::to_string(2 * l));

  auto at_n = [&](int n) {
    IrrDecomposition d(n);
    for (const auto& [lambda, m] : v.entries) {
      IrrDecomposition strips = pieri(lambda, n - l);
      for (const auto& [mu, s] : strips.entries) d.add(mu, m * s);
    }
    return d;
  };

  StableDecomposition out;
  out.stable_from = 2 * l;
  // unpadding needs at least one row; the verification loop still covers 2l
  out.entries = at_n(std::max(2 * l, 1)).unpadded();
  for (int n = 2 * l; n <= horizon; ++n) {
    if (!(out.realize(n) == at_n(n)))
      throw std::logic_error("stable form failed verification at n=" + std::to_string(n));
  }
  return out;
}

}  // namespace repstab
