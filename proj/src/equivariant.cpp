#include "repstab/equivariant.hpp"

#include <algorithm>
#include <numeric>

namespace repstab {

namespace {

bool same_matrix(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  MatrixQ d = a - b;
  return is_zero(d);
}

std::optional<MatrixQ> exact_inverse(const MatrixQ& m) {
  const Eigen::Index d = m.rows();
  MatrixQ a = m;
  MatrixQ inv = identityQ(d);
  for (Eigen::Index col = 0; col < d; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < d; ++r)
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      a.row(col).swap(a.row(piv));
      inv.row(col).swap(inv.row(piv));
    }
    const Rational lead = a(col, col);
    a.row(col) /= lead;
    inv.row(col) /= lead;
    for (Eigen::Index r = 0; r < d; ++r) {
      if (r == col) continue;
      const Rational f = a(r, col);
      if (is_zero(f)) continue;
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
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

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [c, w] : o.terms) r.terms.emplace_back(-c, w);
  return r;
}

AlgebraElement operator*(const Rational& c, AlgebraElement e) {
  for (auto& [coeff, w] : e.terms) coeff *= c;
  return e;
}

void ExplicitRep::validate() const {
  if (n_ < 0) throw std::invalid_argument("negative symmetric group degree");
  if (static_cast<int>(s_.size()) != std::max(n_ - 1, 0))
    throw std::invalid_argument("expected " + std::to_string(std::max(n_ - 1, 0)) +
                                " transposition matrices, got " + std::to_string(s_.size()));
  for (const auto& m : s_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("transposition matrix shape mismatch");
  for (const auto& m : g_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("G-generator shape mismatch");

  const MatrixQ id = identityQ(dim_);
  for (size_t i = 0; i < s_.size(); ++i) {
    MatrixQ sq = s_[i] * s_[i];
    if (!same_matrix(sq, id))
      throw std::invalid_argument("s_" + std::to_string(i) + " is not an involution");
  }
  for (size_t i = 0; i + 1 < s_.size(); ++i) {
    MatrixQ lhs = s_[i] * s_[i + 1] * s_[i];
    MatrixQ rhs = s_[i + 1] * s_[i] * s_[i + 1];
    if (!same_matrix(lhs, rhs))
      throw std::invalid_argument("braid relation fails at s_" + std::to_string(i));
  }
  for (size_t i = 0; i < s_.size(); ++i)
    for (size_t j = i + 2; j < s_.size(); ++j) {
      MatrixQ lhs = s_[i] * s_[j];
      MatrixQ rhs = s_[j] * s_[i];
      if (!same_matrix(lhs, rhs))
        throw std::invalid_argument("distant transpositions s_" + std::to_string(i) + ", s_" +
                                    std::to_string(j) + " do not commute");
    }
  for (size_t k = 0; k < g_.size(); ++k)
    for (size_t i = 0; i < s_.size(); ++i) {
      MatrixQ lhs = g_[k] * s_[i];
      MatrixQ rhs = s_[i] * g_[k];
      if (!same_matrix(lhs, rhs))
        throw NonCommuting("g_" + std::to_string(k) + " does not commute with s_" +
                           std::to_string(i));
    }
}

ExplicitRep::ExplicitRep(int n, std::vector<MatrixQ> s_gens, std::vector<MatrixQ> g_gens)
    : n_(n), s_(std::move(s_gens)), g_(std::move(g_gens)) {
  if (!s_.empty())
    dim_ = s_[0].rows();
  else if (!g_.empty())
    dim_ = g_[0].rows();
  else
    throw std::invalid_argument("dimension is ambiguous without matrices; use raw()");
  g_inv_.resize(g_.size());
  validate();
}

ExplicitRep ExplicitRep::raw(int n, Eigen::Index dim, std::vector<MatrixQ> s_gens,
                             std::vector<MatrixQ> g_gens) {
  ExplicitRep v;
  v.n_ = n;
  v.dim_ = dim;
  v.s_ = std::move(s_gens);
  v.g_ = std::move(g_gens);
  v.g_inv_.resize(v.g_.size());
  v.validate();
  return v;
}

MatrixQ ExplicitRep::sn_matrix(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != n_)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  for (int v : sigma) {
    if (v < 0 || v >= n_ || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
  std::vector<int> arr = sigma;
  MatrixQ m = identityQ(dim_);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < n_; ++j)
      if (arr[static_cast<size_t>(j)] > arr[static_cast<size_t>(j + 1)]) {
        std::swap(arr[static_cast<size_t>(j)], arr[static_cast<size_t>(j + 1)]);
        m = s_[static_cast<size_t>(j)] * m;
        moved = true;
      }
  }
  return m;
}

MatrixQ ExplicitRep::class_matrix(const Partition& type) const {
  if (type.weight() != n_)
    throw std::invalid_argument("cycle type " + type.str() + " on S_" + std::to_string(n_));
  return sn_matrix(class_representative(type));
}

namespace {

const MatrixQ& g_inverse(const std::vector<MatrixQ>& g,
                         std::vector<std::optional<MatrixQ>>& cache, size_t k) {
  if (!cache[k]) {
    auto inv = exact_inverse(g[k]);
    if (!inv) throw std::invalid_argument("G-generator " + std::to_string(k) + " is singular");
    cache[k] = std::move(*inv);
  }
  return *cache[k];
}

}  // namespace

MatrixQ ExplicitRep::evaluate(const AlgebraElement& e) const {
  MatrixQ res = MatrixQ::Zero(dim_, dim_);
  for (const auto& [coeff, word] : e.terms) {
    MatrixQ w = identityQ(dim_);
    for (int letter : word) {
      const size_t k = static_cast<size_t>(letter >= 0 ? letter : ~letter);
      if (k >= g_.size())
        throw std::invalid_argument("word uses G-generator " + std::to_string(k) +
                                    " but the representation has " + std::to_string(g_.size()));
      w = w * (letter >= 0 ? g_[k] : g_inverse(g_, g_inv_, k));
    }
    res += coeff * w;
  }
  return res;
}

ClassFunction ExplicitRep::character() const {
  ClassFunction chi = ClassFunction::zero(n_);
  const auto& types = class_list(n_).types;
  for (size_t i = 0; i < types.size(); ++i) {
    MatrixQ m = class_matrix(types[i]);
    Rational tr(0);
    for (Eigen::Index d = 0; d < dim_; ++d) tr += m(d, d);
    chi.values[i] = tr;
  }
  return chi;
}

ExplicitRep ExplicitRep::permutation(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<MatrixQ> s;
  for (int i = 0; i + 1 < n; ++i) {
    MatrixQ m = identityQ(n);
    m(i, i) = 0;
    m(i + 1, i + 1) = 0;
    m(i, i + 1) = 1;
    m(i + 1, i) = 1;
    s.push_back(std::move(m));
  }
  return raw(n, n, std::move(s));
}

ExplicitRep ExplicitRep::trivial(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<MatrixQ> s(static_cast<size_t>(std::max(n - 1, 0)), identityQ(1));
  return raw(n, 1, std::move(s));
}

ExplicitRep ExplicitRep::sign_tensor(const ExplicitRep& v) {
  std::vector<MatrixQ> s;
  for (const auto& m : v.s_) {
    MatrixQ neg = -m;
    s.push_back(std::move(neg));
  }
  return raw(v.n_, v.dim_, std::move(s), v.g_);
}

ExplicitRep ExplicitRep::direct_sum(const ExplicitRep& a, const ExplicitRep& b) {
  if (a.n_ != b.n_)
    throw DegreeMismatch("direct sum over S_" + std::to_string(a.n_) + " and S_" +
                         std::to_string(b.n_));
  if (a.g_.size() != b.g_.size())
    throw std::invalid_argument("direct sum of representations with different G-generator counts");
  auto block = [&](const MatrixQ& x, const MatrixQ& y) {
    MatrixQ m = MatrixQ::Zero(a.dim_ + b.dim_, a.dim_ + b.dim_);
    m.topLeftCorner(a.dim_, a.dim_) = x;
    m.bottomRightCorner(b.dim_, b.dim_) = y;
    return m;
  };
  std::vector<MatrixQ> s, g;
  for (size_t i = 0; i < a.s_.size(); ++i) s.push_back(block(a.s_[i], b.s_[i]));
  for (size_t k = 0; k < a.g_.size(); ++k) g.push_back(block(a.g_[k], b.g_[k]));
  return raw(a.n_, a.dim_ + b.dim_, std::move(s), std::move(g));
}

ExplicitRep ExplicitRep::with_g_action(std::vector<MatrixQ> g_gens) const {
  return raw(n_, dim_, s_, std::move(g_gens));
}

namespace {

// character of the subspace spanned by the rows of `basis`, which must be
// stable under every class representative of v
SubspaceDecomp subspace_decomp(const ExplicitRep& v, const EchelonBasis& basis) {
  SubspaceDecomp out;
  out.dim = static_cast<long long>(basis.rank());
  ClassFunction chi = ClassFunction::zero(v.n());
  const auto& types = class_list(v.n()).types;
  for (size_t i = 0; i < types.size(); ++i) {
    MatrixQ m = v.class_matrix(types[i]);
    MatrixQ mt = m.transpose();
    chi.values[i] = basis.restricted_trace(mt);
  }
  out.character = chi;
  out.decomposition = decompose(chi);
  return out;
}

}  // namespace

SubspaceDecomp invariants(const ExplicitRep& v) {
  if (!v.has_g_action()) throw std::invalid_argument("invariants: no G-action attached");
  const auto& g = v.g_gens();
  MatrixQ stacked(v.dim() * static_cast<Eigen::Index>(g.size()), v.dim());
  for (size_t k = 0; k < g.size(); ++k) {
    MatrixQ diff = g[k] - identityQ(v.dim());
    stacked.middleRows(static_cast<Eigen::Index>(k) * v.dim(), v.dim()) = diff;
  }
  return subspace_decomp(v, kernel_space(stacked));
}

namespace {

ExplicitRep rep_power(const ExplicitRep& v, int d) {
  std::vector<MatrixQ> s;
  const Eigen::Index dim = v.dim() * d;
  for (const auto& m : v.s_gens()) {
    MatrixQ big = MatrixQ::Zero(dim, dim);
    for (int c = 0; c < d; ++c) big.block(c * v.dim(), c * v.dim(), v.dim(), v.dim()) = m;
    s.push_back(std::move(big));
  }
  return ExplicitRep::raw(v.n(), dim, std::move(s));
}

}  // namespace

EquivariantComplex complex_from_resolution(
    const std::vector<int>& ranks,
    const std::vector<std::vector<std::vector<AlgebraElement>>>& boundaries,
    const ExplicitRep& v) {
  if (ranks.empty()) throw std::invalid_argument("empty resolution");
  for (int r : ranks)
    if (r < 0) throw std::invalid_argument("negative resolution rank");
  if (boundaries.size() + 1 != ranks.size())
    throw std::invalid_argument("expected " + std::to_string(ranks.size() - 1) +
                                " boundary matrices, got " + std::to_string(boundaries.size()));

  const Eigen::Index D = v.dim();
  EquivariantComplex c;
  for (int r : ranks) c.terms.push_back(rep_power(v, r));

  for (size_t p = 0; p + 1 < ranks.size(); ++p) {
    const auto& bd = boundaries[p];
    const int rows = ranks[p], cols = ranks[p + 1];
    if (static_cast<int>(bd.size()) != rows)
      throw std::invalid_argument("boundary " + std::to_string(p) + " row count mismatch");
    MatrixQ delta = MatrixQ::Zero(D * cols, D * rows);
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(bd[static_cast<size_t>(i)].size()) != cols)
        throw std::invalid_argument("boundary " + std::to_string(p) + " column count mismatch");
      for (int j = 0; j < cols; ++j) {
        MatrixQ entry = v.evaluate(bd[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        delta.block(D * j, D * i, D, D) = entry;
      }
    }
    c.differentials.push_back(std::move(delta));
  }

  for (size_t p = 0; p + 1 < c.differentials.size(); ++p) {
    MatrixQ comp = c.differentials[p + 1] * c.differentials[p];
    if (!is_zero(comp))
      throw NotAComplex("composite of consecutive differentials at position " +
                        std::to_string(p) + " is nonzero");
  }
  return c;
}

SubspaceDecomp cohomology(const EquivariantComplex& c, int p) {
  if (p < 0 || static_cast<size_t>(p) >= c.terms.size())
    throw std::invalid_argument("cohomological degree out of range");
  const ExplicitRep& term = c.terms[static_cast<size_t>(p)];

  EchelonBasis ker(term.dim());
  if (static_cast<size_t>(p) < c.differentials.size()) {
    ker = kernel_space(c.differentials[static_cast<size_t>(p)]);
  } else {
    for (Eigen::Index i = 0; i < term.dim(); ++i) {
      RowVectorQ e = RowVectorQ::Zero(term.dim());
      e[i] = 1;
      ker.insert(std::move(e));
    }
  }

  EchelonBasis im(term.dim());
  if (p > 0) im = column_space(c.differentials[static_cast<size_t>(p - 1)]);

  SubspaceDecomp kd = subspace_decomp(term, ker);
  SubspaceDecomp id = subspace_decomp(term, im);
  SubspaceDecomp out;
  out.dim = kd.dim - id.dim;
  out.character = kd.character - id.character;
  out.decomposition = decompose(out.character);
  return out;
}

long long euler_characteristic_terms(const EquivariantComplex& c) {
  long long e = 0;
  for (size_t p = 0; p < c.terms.size(); ++p)
    e += (p % 2 ? -1 : 1) * static_cast<long long>(c.terms[p].dim());
  return e;
}

ClassFunction euler_character_terms(const EquivariantComplex& c) {
  if (c.terms.empty()) throw std::invalid_argument("empty complex");
  ClassFunction e = ClassFunction::zero(c.terms[0].n());
  for (size_t p = 0; p < c.terms.size(); ++p) {
    ClassFunction chi = c.terms[p].character();
    e = (p % 2) ? e - chi : e + chi;
  }
  return e;
}

KerImCoker ker_im_coker(const ExplicitRep& dom, const ExplicitRep& cod, const MatrixQ& f) {
  if (dom.n() != cod.n())
    throw DegreeMismatch("map between representations of S_" + std::to_string(dom.n()) +
                         " and S_" + std::to_string(cod.n()));
  if (f.rows() != cod.dim() || f.cols() != dom.dim())
    throw std::invalid_argument("map shape mismatch");
  for (size_t i = 0; i < dom.s_gens().size(); ++i) {
    MatrixQ lhs = f * dom.s_gens()[i];
    MatrixQ rhs = cod.s_gens()[i] * f;
    if (!same_matrix(lhs, rhs))
      throw NotEquivariant("map fails to commute with s_" + std::to_string(i));
  }
  if (dom.g_gens().size() != cod.g_gens().size())
    throw NotEquivariant("G-generator counts differ");
  for (size_t k = 0; k < dom.g_gens().size(); ++k) {
    MatrixQ lhs = f * dom.g_gens()[k];
    MatrixQ rhs = cod.g_gens()[k] * f;
    if (!same_matrix(lhs, rhs))
      throw NotEquivariant("map fails to commute with g_" + std::to_string(k));
  }

  KerImCoker out;
  out.ker = subspace_decomp(dom, kernel_space(f));
  out.im = subspace_decomp(cod, column_space(f));
  out.coker.dim = static_cast<long long>(cod.dim()) - out.im.dim;
  out.coker.character = cod.character() - out.im.character;
  out.coker.decomposition = decompose(out.coker.character);
  return out;
}

MatrixQ reynolds_average(const ExplicitRep& dom, const ExplicitRep& cod, const MatrixQ& seed) {
  if (dom.n() != cod.n())
    throw DegreeMismatch("averaging between representations of different symmetric groups");
  if (seed.rows() != cod.dim() || seed.cols() != dom.dim())
    throw std::invalid_argument("seed shape mismatch");
  const int n = dom.n();
  // Walk S_n by adjacent swaps (Steinhaus-Johnson-Trotter), so each group
  // element costs two generator products instead of a word rebuild.
  const size_t sz = static_cast<size_t>(std::max(n, 0));
  std::vector<int> val(sz), dir(sz, -1), pos(sz);
  std::iota(val.begin(), val.end(), 0);
  std::iota(pos.begin(), pos.end(), 0);
  MatrixQ left = identityQ(cod.dim());    // rho_cod(sigma)
  MatrixQ right = identityQ(dom.dim());   // rho_dom(sigma^{-1})
  MatrixQ acc = seed;                     // identity term
  Integer order(1);
  while (true) {
    int mobile = -1, mp = -1;
    for (int v = 0; v < n; ++v) {
      int p = pos[static_cast<size_t>(v)];
      int q = p + dir[static_cast<size_t>(v)];
      if (q < 0 || q >= n) continue;
      if (val[static_cast<size_t>(q)] < v && v > mobile) {
        mobile = v;
        mp = p;
      }
    }
    if (mobile < 0) break;
    const int j = std::min(mp, mp + dir[static_cast<size_t>(mobile)]);
    const int other = val[static_cast<size_t>(j + (mp == j ? 1 : 0))];
    std::swap(val[static_cast<size_t>(j)], val[static_cast<size_t>(j + 1)]);
    std::swap(pos[static_cast<size_t>(mobile)], pos[static_cast<size_t>(other)]);
    for (int v = mobile + 1; v < n; ++v) dir[static_cast<size_t>(v)] = -dir[static_cast<size_t>(v)];
    // sigma -> sigma s_j, so rho(sigma^{-1}) picks up s_j on the left
    left = left * cod.s_gens()[static_cast<size_t>(j)];
    right = dom.s_gens()[static_cast<size_t>(j)] * right;
    acc += left * seed * right;
    order += 1;
  }
  MatrixQ out = acc / Rational(order);
  return out;
}

}  // namespace repstab
