#include "repstab/kuenneth.hpp"

#include <algorithm>

namespace repstab {

namespace {

Integer ipow(long base, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

GradedBetti::GradedBetti(std::vector<long> betti) : b(std::move(betti)) {
  if (b.empty() || b[0] != 1) throw std::invalid_argument("Betti numbers must start with b_0 = 1");
  for (long v : b)
    if (v < 0) throw std::invalid_argument("negative Betti number");
  while (b.size() > 1 && b.back() == 0) b.pop_back();
}

long GradedBetti::at(int d) const {
  if (d < 0 || d >= static_cast<int>(b.size())) return 0;
  return b[static_cast<size_t>(d)];
}

GradedBetti GradedBetti::free_group(int k) {
  if (k < 0) throw std::invalid_argument("free group rank must be nonnegative");
  return GradedBetti({1, k});
}

GradedBetti GradedBetti::surface_group(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  return GradedBetti({1, 2L * genus, 1});
}

std::vector<Partition> degree_tuple_partitions(const GradedBetti& betti, int q) {
  if (q < 0) throw std::invalid_argument("negative degree");
  std::vector<Partition> out;
  for (const Partition& alpha : partitions_of(q)) {
    bool ok = true;
    for (int d : alpha.parts())
      if (betti.at(d) == 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(alpha);
  }
  return out;
}

IrrDecomposition block_character(const Partition& alpha, const GradedBetti& betti) {
  std::vector<std::pair<int, int>> runs;  // (degree d, count m), descending d
  for (int d : alpha.parts()) {
    if (!runs.empty() && runs.back().first == d)
      ++runs.back().second;
    else
      runs.emplace_back(d, 1);
  }

  IrrDecomposition acc = trivial_rep(0);
  for (auto [d, m] : runs) {
    const long bd = betti.at(d);
    if (bd == 0)
      throw BettiMismatch("degree " + std::to_string(d) + " has vanishing cohomology");
    const auto& types = class_list(m).types;
    ClassFunction psi = ClassFunction::zero(m);
    for (size_t i = 0; i < types.size(); ++i) {
      Rational v = Rational(ipow(bd, types[i].length()));
      if (d % 2 && class_sign(types[i]) < 0) v = -v;
      psi.values[i] = v;
    }
    acc = induce_product(acc, decompose(psi));
  }
  return acc;
}

IrrDecomposition hq_of_power(const GradedBetti& betti, int q, int n) {
  if (q < 0 || n < 0) throw std::invalid_argument("hq_of_power: negative argument");
  IrrDecomposition out(n);
  for (const Partition& alpha : degree_tuple_partitions(betti, q)) {
    const int l = alpha.length();
    if (l > n) continue;
    IrrDecomposition term = induce_product(block_character(alpha, betti), trivial_rep(n - l));
    for (const auto& [lambda, m] : term.entries) out.add(lambda, m);
  }
  return out;
}

Integer hq_dimension_gf(const GradedBetti& betti, int q, int n) {
  if (q < 0 || n < 0) throw std::invalid_argument("hq_dimension_gf: negative argument");
  std::vector<Integer> poly{Integer(1)};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next(static_cast<size_t>(q) + 1, Integer(0));
    for (size_t a = 0; a < poly.size(); ++a) {
      if (poly[a] == 0) continue;
      for (int d = 0; d <= betti.top() && a + static_cast<size_t>(d) <= static_cast<size_t>(q); ++d)
        next[a + static_cast<size_t>(d)] += poly[a] * betti.at(d);
    }
    poly = std::move(next);
  }
  return static_cast<size_t>(q) < poly.size() ? poly[static_cast<size_t>(q)] : Integer(0);
}

IrrDecomposition exterior_power_perm(int q, int n) {
  if (q < 0 || q > n)
    throw RangeError("exterior power degree " + std::to_string(q) + " outside [0, " +
                     std::to_string(n) + "]");
  const auto& types = class_list(n).types;
  ClassFunction chi = ClassFunction::zero(n);
  for (size_t i = 0; i < types.size(); ++i) {
    // prod over cycles k of (1 - (-t)^k), truncated past t^q
    std::vector<Integer> poly{Integer(1)};
    for (int k : types[i].parts()) {
      std::vector<Integer> next(std::min(poly.size() + static_cast<size_t>(k),
                                         static_cast<size_t>(q) + 1),
                                Integer(0));
      const Integer sgn = (k % 2 == 0) ? Integer(-1) : Integer(1);
      for (size_t a = 0; a < poly.size(); ++a) {
        if (a < next.size()) next[a] += poly[a];
        if (a + static_cast<size_t>(k) < next.size())
          next[a + static_cast<size_t>(k)] += sgn * poly[a];
      }
      poly = std::move(next);
    }
    if (static_cast<size_t>(q) < poly.size()) chi.values[i] = Rational(poly[static_cast<size_t>(q)]);
  }
  return decompose(chi);
}

StableDecomposition stable_hq_of_power(const GradedBetti& betti, int q, int horizon) {
  if (q < 0) throw std::invalid_argument("negative degree");
  if (horizon < 0) horizon = std::max(2 * q + 4, 10);
  if (horizon < 2 * q + 1)
    throw HorizonTooSmall("horizon " + std::to_string(horizon) +
                          " cannot confirm constancy from " + std::to_string(2 * q));

  StableDecomposition out;
  out.stable_from = 2 * q;
  // unpadding needs at least one row; the verification loop still covers 2q
  out.entries = hq_of_power(betti, q, std::max(2 * q, 1)).unpadded();
  for (int n = 2 * q; n <= horizon; ++n) {
    if (!(out.realize(n) == hq_of_power(betti, q, n)))
      throw std::logic_error("stable form failed verification at n=" + std::to_string(n));
  }
  return out;
}

}  // namespace repstab
