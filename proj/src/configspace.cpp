#include "repstab/configspace.hpp"

#include <array>
#include <bit>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "repstab/cache.hpp"
#include "repstab/serialize.hpp"

namespace repstab {

namespace {

using Mask = ArnoldAlgebra::Mask;

inline int popc(Mask m) { return std::popcount(m); }
inline Mask below(int g) { return (Mask(1) << g) - 1; }

// sign of sorting g into the ascending product m (prepend convention);
// 0 when g already occurs
inline int wedge_sign(Mask m, int g) {
  if ((m >> g) & 1) return 0;
  return (popc(m & below(g)) & 1) ? -1 : 1;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("straightening coefficient overflow");
  return r;
}

long long apply_sign(int sign, long long v) {
  if (sign > 0) return v;
  if (v == std::numeric_limits<long long>::min())
    throw std::overflow_error("straightening coefficient overflow");
  return -v;
}

std::vector<int> class_representative(const Partition& type) {
  std::vector<int> sigma;
  int start = 0;
  for (int k : type.parts()) {
    for (int t = 0; t < k; ++t) sigma.push_back(start + (t + 1) % k);
    start += k;
  }
  return sigma;
}

}  // namespace

ArnoldAlgebra::ArnoldAlgebra(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative point count");
  gens_ = n * (n - 1) / 2;
  if (gens_ > 63)
    throw FeasibilityExceeded("C(n,2) generators exceed 64-bit masks at n=" + std::to_string(n));
  gi_.resize(static_cast<size_t>(gens_));
  gj_.resize(static_cast<size_t>(gens_));
  blockmask_.assign(static_cast<size_t>(std::max(n, 1)), 0);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int g = j * (j - 1) / 2 + i;
      gi_[static_cast<size_t>(g)] = i;
      gj_[static_cast<size_t>(g)] = j;
      blockmask_[static_cast<size_t>(j)] |= Mask(1) << g;
    }
}

ArnoldAlgebra& ArnoldAlgebra::of(int n) {
  static std::map<int, std::unique_ptr<ArnoldAlgebra>> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(n);
  if (it == registry.end())
    it = registry.emplace(n, std::unique_ptr<ArnoldAlgebra>(new ArnoldAlgebra(n))).first;
  return *it->second;
}

int ArnoldAlgebra::gen_index(int i, int j) const {
  if (!(0 <= i && i < j && j < n_))
    throw std::invalid_argument("bad generator pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
  return j * (j - 1) / 2 + i;
}

const std::vector<Mask>& ArnoldAlgebra::monomials(int q) {
  if (q < 0) throw std::invalid_argument("negative degree");
  if (static_cast<size_t>(q) >= monomials_.size()) monomials_.resize(static_cast<size_t>(q) + 1);
  auto& vec = monomials_[static_cast<size_t>(q)];
  if (!vec.empty() || q > gens_) return vec;
  if (q == 0) {
    vec.push_back(0);
    return vec;
  }
  std::vector<int> idx(static_cast<size_t>(q));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask m = 0;
    for (int g : idx) m |= Mask(1) << g;
    vec.push_back(m);
    int i = q - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == gens_ - q + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int t = i + 1; t < q; ++t) idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
  }
  return vec;
}

bool ArnoldAlgebra::distinct_max(Mask m) const {
  for (int j = 2; j < n_; ++j)
    if (popc(m & blockmask_[static_cast<size_t>(j)]) >= 2) return false;
  return true;
}

long long ArnoldAlgebra::distinct_max_count(int q) {
  long long c = 0;
  for (Mask m : monomials(q))
    if (distinct_max(m)) ++c;
  return c;
}

std::pair<Mask, int> ArnoldAlgebra::act(const std::vector<int>& sigma, Mask m) const {
  if (static_cast<int>(sigma.size()) != n_)
    throw std::invalid_argument("permutation on " + std::to_string(sigma.size()) +
                                " points acting on C_" + std::to_string(n_));
  int img[64];
  int len = 0;
  for (Mask t = m; t; t &= t - 1) {
    int g = std::countr_zero(t);
    int a = sigma[static_cast<size_t>(gi_[static_cast<size_t>(g)])];
    int b = sigma[static_cast<size_t>(gj_[static_cast<size_t>(g)])];
    if (a > b) std::swap(a, b);
    img[len++] = b * (b - 1) / 2 + a;
  }
  int inv = 0;
  Mask r = 0;
  for (int x = 0; x < len; ++x) {
    for (int y = x + 1; y < len; ++y)
      if (img[x] > img[y]) ++inv;
    r |= Mask(1) << img[x];
  }
  return {r, (inv & 1) ? -1 : 1};
}

const ArnoldAlgebra::NormalForm& ArnoldAlgebra::normal_form(Mask m) {
  auto it = nf_.find(m);
  if (it != nf_.end()) return it->second;

  int jclash = -1;
  for (int j = n_ - 1; j >= 2; --j)
    if (popc(m & blockmask_[static_cast<size_t>(j)]) >= 2) {
      jclash = j;
      break;
    }

  NormalForm out;
  if (jclash < 0) {
    out.emplace(m, 1);
  } else {
    const Mask blk = m & blockmask_[static_cast<size_t>(jclash)];
    const int g1 = std::countr_zero(blk);              // w_ac
    const int g2 = std::countr_zero(blk & (blk - 1));  // w_bc
    const int a = gi_[static_cast<size_t>(g1)];
    const int b = gi_[static_cast<size_t>(g2)];
    const Mask rest = m & ~((Mask(1) << g1) | (Mask(1) << g2));
    const int s = popc(rest & below(g1)) + popc(rest & below(g2));
    const int e = (s & 1) ? -1 : 1;
    const int gab = gen_index(a, b);

    // m = e * w_ac^w_bc^rest = e * (w_ab^w_bc - w_ab^w_ac)^rest
    const std::array<std::array<int, 3>, 2> terms{{{gab, g2, e}, {gab, g1, -e}}};
    for (const auto& [x, y, c0] : terms) {
      const int sy = wedge_sign(rest, y);
      if (sy == 0) continue;
      const Mask m1 = rest | (Mask(1) << y);
      const int sx = wedge_sign(m1, x);
      if (sx == 0) continue;
      const NormalForm& sub = normal_form(m1 | (Mask(1) << x));
      const int coeff = c0 * sx * sy;
      for (const auto& [k, v] : sub) {
        long long& slot = out[k];
        slot = checked_add(slot, apply_sign(coeff, v));
      }
    }
    for (auto it2 = out.begin(); it2 != out.end();)
      it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
  }
  return nf_.emplace(m, std::move(out)).first->second;
}

bool ArnoldAlgebra::certify(int q) {
  if (q < 0) throw std::invalid_argument("negative degree");
  if (static_cast<size_t>(q) >= certified_.size()) certified_.resize(static_cast<size_t>(q) + 1, 0);
  if (certified_[static_cast<size_t>(q)]) return true;

  if (q >= 2) {
    const auto& rests = monomials(q - 2);
    for (int c = 2; c < n_; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) {
          const int gab = gen_index(a, b);
          const int gac = gen_index(a, c);
          const int gbc = gen_index(b, c);
          // r = w_ab^w_bc - w_ac^w_bc - w_ab^w_ac
          const std::array<std::array<int, 3>, 3> terms{
              {{gab, gbc, 1}, {gac, gbc, -1}, {gab, gac, -1}}};
          for (Mask m : rests) {
            NormalForm acc;
            for (const auto& [x, y, c0] : terms) {
              const int sy = wedge_sign(m, y);
              if (sy == 0) continue;
              const Mask m1 = m | (Mask(1) << y);
              const int sx = wedge_sign(m1, x);
              if (sx == 0) continue;
              const NormalForm& sub = normal_form(m1 | (Mask(1) << x));
              const int coeff = c0 * sx * sy;
              for (const auto& [k, v] : sub) {
                long long& slot = acc[k];
                slot = checked_add(slot, apply_sign(coeff, v));
              }
            }
            for (const auto& [k, v] : acc)
              if (v != 0) return false;
          }
        }
  }
  certified_[static_cast<size_t>(q)] = 1;
  return true;
}

long long ArnoldAlgebra::certified_dim(int q) {
  if (!certify(q))
    throw std::logic_error("straightening certificate failed at n=" + std::to_string(n_) +
                           ", q=" + std::to_string(q));
  return distinct_max_count(q);
}

const EchelonBasis& arnold_relation_space(int n, int q, const ArnoldOptions& opts) {
  static std::map<std::pair<int, int>, std::unique_ptr<EchelonBasis>> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(n, q);
  if (auto it = registry.find(key); it != registry.end()) return *it->second;

  ArnoldAlgebra& alg = ArnoldAlgebra::of(n);
  if (q < 0) throw std::invalid_argument("negative degree");
  if (binomial(alg.gen_count(), q) > static_cast<long>(opts.dense_cap))
    throw FeasibilityExceeded("degree-" + std::to_string(q) + " monomial space of C_" +
                              std::to_string(n) + " exceeds the dense cap");
  const auto& monos = alg.monomials(q);
  const Eigen::Index dim = static_cast<Eigen::Index>(monos.size());

  const std::string ckey = "arnold_rel/" + std::to_string(n) + "_" + std::to_string(q);
  if (auto cached = CacheStore::global().get(ckey)) {
    Json j = Json::parse(*cached, nullptr, false);
    if (!j.is_discarded())
      if (auto b = echelon_from_json(j, n, q); b && b->cols() == dim)
        return *registry.emplace(key, std::make_unique<EchelonBasis>(std::move(*b)))
                    .first->second;
  }

  std::unordered_map<Mask, Eigen::Index> col;
  col.reserve(monos.size());
  for (Eigen::Index i = 0; i < dim; ++i) col.emplace(monos[static_cast<size_t>(i)], i);

  auto basis = std::make_unique<EchelonBasis>(dim);
  if (q >= 2) {
    const auto& rests = alg.monomials(q - 2);
    for (int c = 2; c < n; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) {
          const int gab = alg.gen_index(a, b);
          const int gac = alg.gen_index(a, c);
          const int gbc = alg.gen_index(b, c);
          const std::array<std::array<int, 3>, 3> terms{
              {{gab, gbc, 1}, {gac, gbc, -1}, {gab, gac, -1}}};
          for (Mask m : rests) {
            RowVectorQ row = RowVectorQ::Zero(dim);
            bool touched = false;
            for (const auto& [x, y, c0] : terms) {
              const int sy = wedge_sign(m, y);
              if (sy == 0) continue;
              const Mask m1 = m | (Mask(1) << y);
              const int sx = wedge_sign(m1, x);
              if (sx == 0) continue;
              row[col.at(m1 | (Mask(1) << x))] += c0 * sx * sy;
              touched = true;
            }
            if (touched) basis->insert(std::move(row));
          }
        }
  }
  CacheStore::global().put(ckey, echelon_to_json(*basis, n, q).dump() + "\n");
  return *registry.emplace(key, std::move(basis)).first->second;
}

MatrixQ arnold_action_matrix(int n, int q, const std::vector<int>& sigma) {
  ArnoldAlgebra& alg = ArnoldAlgebra::of(n);
  const auto& monos = alg.monomials(q);
  const Eigen::Index dim = static_cast<Eigen::Index>(monos.size());
  std::unordered_map<Mask, Eigen::Index> col;
  col.reserve(monos.size());
  for (Eigen::Index i = 0; i < dim; ++i) col.emplace(monos[static_cast<size_t>(i)], i);

  MatrixQ mat = MatrixQ::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    auto [im, sign] = alg.act(sigma, monos[static_cast<size_t>(k)]);
    mat(col.at(im), k) = sign;
  }
  return mat;
}

ArnoldCohomology arnold_cohomology(int n, int q, const ArnoldOptions& opts) {
  if (n < 0 || q < 0) throw std::invalid_argument("arnold_cohomology: negative argument");
  ArnoldAlgebra& alg = ArnoldAlgebra::of(n);
  if (binomial(alg.gen_count(), q) > static_cast<long>(opts.monomial_cap))
    throw FeasibilityExceeded("degree-" + std::to_string(q) + " monomial space of C_" +
                              std::to_string(n) + " exceeds the monomial cap");

  ArnoldCohomology out;
  out.n = n;
  out.q = q;
  out.dim = alg.certified_dim(q);

  // basis monomials of the quotient
  std::vector<Mask> nbc;
  for (Mask m : alg.monomials(q))
    if (alg.distinct_max(m)) nbc.push_back(m);

  const ClassList& cl = class_list(n);
  ClassFunction chi = ClassFunction::zero(n);
  for (size_t ci = 0; ci < cl.types.size(); ++ci) {
    const std::vector<int> sigma = class_representative(cl.types[ci]);
    Integer trace(0);
    for (Mask k : nbc) {
      auto [im, sign] = alg.act(sigma, k);
      const ArnoldAlgebra::NormalForm& expansion = alg.normal_form(im);
      auto f = expansion.find(k);
      if (f == expansion.end()) continue;
      trace += sign > 0 ? Integer(static_cast<long>(f->second)) : Integer(static_cast<long>(-f->second));
    }
    chi.values[ci] = Rational(trace);
  }
  if (chi.at(Partition(std::vector<int>(static_cast<size_t>(n), 1))) != Rational(static_cast<long>(out.dim)))
    throw std::logic_error("quotient trace disagrees with the certified basis count");

  out.character = chi;
  out.decomposition = decompose(chi);
  return out;
}

DecompositionSequence arnold_stability_scan(int q, int n_min, int n_max,
                                            const ArnoldOptions& opts) {
  if (n_min < 0 || q < 0) throw std::invalid_argument("arnold_stability_scan: negative argument");
  if (n_max < n_min) throw WindowTooShort("empty window [" + std::to_string(n_min) + "," +
                                          std::to_string(n_max) + "]");
  DecompositionSequence seq;
  seq.n_min = n_min;
  seq.provenance = "arnold:q=" + std::to_string(q);
  for (int n = n_min; n <= n_max; ++n)
    seq.decs.push_back(arnold_cohomology(n, q, opts).decomposition);
  return seq;
}

std::vector<long long> arnold_betti(int n, const ArnoldOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative point count");
  ArnoldAlgebra& alg = ArnoldAlgebra::of(n);
  std::vector<long long> betti;
  for (int q = 0; q <= std::max(n - 1, 0); ++q) {
    if (binomial(alg.gen_count(), q) > static_cast<long>(opts.monomial_cap))
      throw FeasibilityExceeded("degree-" + std::to_string(q) + " monomial space of C_" +
                                std::to_string(n) + " exceeds the monomial cap");
    betti.push_back(alg.certified_dim(q));
  }
  return betti;
}

std::vector<Integer> poincare_coefficients(int n) {
  if (n < 0) throw std::invalid_argument("negative point count");
  std::vector<Integer> c{Integer(1)};
  for (int k = 1; k < n; ++k) {
    std::vector<Integer> next(c.size() + 1, Integer(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] += Integer(k) * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace repstab
