#include <doctest.h>

#include "repstab/equivariant.hpp"

using namespace repstab;

namespace {

MultiplicityMap mm(std::initializer_list<std::pair<Partition, long long>> xs) {
  MultiplicityMap m;
  for (const auto& [p, c] : xs) m[p] = c;
  return m;
}

MatrixQ matq(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = static_cast<Eigen::Index>(rows.begin()->size());
  MatrixQ m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

// dim 2n: S_n permutes the n coordinate blocks, g swaps within each block
ExplicitRep regular_per_coordinate(int n) {
  const Eigen::Index d = 2 * n;
  std::vector<MatrixQ> s;
  for (int i = 0; i + 1 < n; ++i) {
    MatrixQ m = MatrixQ::Zero(d, d);
    for (int b = 0; b < n; ++b) {
      int target = b == i ? i + 1 : (b == i + 1 ? i : b);
      m(2 * target, 2 * b) = 1;
      m(2 * target + 1, 2 * b + 1) = 1;
    }
    s.push_back(std::move(m));
  }
  MatrixQ g = MatrixQ::Zero(d, d);
  for (int b = 0; b < n; ++b) {
    g(2 * b, 2 * b + 1) = 1;
    g(2 * b + 1, 2 * b) = 1;
  }
  return ExplicitRep::raw(n, d, std::move(s), {std::move(g)});
}

}  // namespace

TEST_CASE("construction validates the Coxeter relations") {
  CHECK_THROWS_AS(ExplicitRep(2, {matq({{1, 1}, {0, 1}})}), std::invalid_argument);

  // involutions failing the braid relation
  MatrixQ s0 = matq({{0, 1}, {1, 0}});
  MatrixQ s1 = matq({{1, 0}, {0, -1}});
  CHECK_THROWS_AS(ExplicitRep(3, {s0, s1}), std::invalid_argument);

  // wrong generator count
  CHECK_THROWS_AS(ExplicitRep(4, {s0}), std::invalid_argument);

  // G-generator must commute with the S_n action
  CHECK_THROWS_AS(ExplicitRep(2, {s0}, {matq({{1, 0}, {0, 2}})}), NonCommuting);
  CHECK_NOTHROW(ExplicitRep(2, {s0}, {matq({{2, 0}, {0, 2}})}));

  CHECK_THROWS_AS(ExplicitRep(1, {}, {}), std::invalid_argument);  // ambiguous dim
  CHECK_NOTHROW(ExplicitRep::raw(1, 3, {}, {}));
  CHECK(ExplicitRep::raw(0, 2, {}).dim() == 2);
}

TEST_CASE("named representations have the right characters") {
  for (int n = 2; n <= 5; ++n) {
    ExplicitRep perm = ExplicitRep::permutation(n);
    CHECK(perm.character() == permutation_character(n));
    CHECK(ExplicitRep::trivial(n).character() == trivial_character(n));
    ExplicitRep signPerm = ExplicitRep::sign_tensor(perm);
    CHECK(signPerm.character() == sign_character(n) * permutation_character(n));
    ExplicitRep sum = ExplicitRep::direct_sum(perm, ExplicitRep::trivial(n));
    CHECK(sum.character() == permutation_character(n) + trivial_character(n));
    CHECK(sum.dim() == n + 1);
  }
}

TEST_CASE("sn_matrix follows the left action convention") {
  ExplicitRep perm = ExplicitRep::permutation(3);
  MatrixQ m = perm.sn_matrix({1, 2, 0});
  // e_i -> e_{sigma(i)}
  CHECK(m(1, 0) == 1);
  CHECK(m(2, 1) == 1);
  CHECK(m(0, 2) == 1);
  CHECK(m == perm.s_gens()[0] * perm.s_gens()[1]);

  CHECK(perm.sn_matrix({0, 1, 2}) == identityQ(3));
  CHECK_THROWS_AS(perm.sn_matrix({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm.sn_matrix({0, 1}), std::invalid_argument);

  for (const auto& type : class_list(4).types) {
    ExplicitRep p4 = ExplicitRep::permutation(4);
    MatrixQ cm = p4.class_matrix(type);
    Rational tr(0);
    for (Eigen::Index i = 0; i < 4; ++i) tr += cm(i, i);
    CHECK(tr == p4.character().at(type));
  }
}

TEST_CASE("algebra elements evaluate through the G-action") {
  ExplicitRep v = ExplicitRep::trivial(2).with_g_action({matq({{2}})});
  CHECK(v.evaluate(AlgebraElement::gen(0))(0, 0) == 2);
  CHECK(v.evaluate(AlgebraElement::gen_inv(0))(0, 0) == Rational(1, 2));

  AlgebraElement gsq{{{Rational(1), {0, 0}}}};
  CHECK(v.evaluate(gsq)(0, 0) == 4);

  AlgebraElement aff = AlgebraElement::gen(0) + Rational(2) * AlgebraElement::one();
  CHECK(v.evaluate(aff)(0, 0) == 4);
  CHECK(v.evaluate(AlgebraElement::zero())(0, 0) == 0);

  CHECK_THROWS_AS(v.evaluate(AlgebraElement::gen(1)), std::invalid_argument);

  ExplicitRep sing = ExplicitRep::trivial(2).with_g_action({matq({{0}})});
  CHECK_THROWS_AS(sing.evaluate(AlgebraElement::gen_inv(0)), std::invalid_argument);
}

TEST_CASE("invariants of explicit G-actions") {
  // trivial action fixes everything
  ExplicitRep fixed = ExplicitRep::permutation(3).with_g_action({identityQ(3)});
  SubspaceDecomp all = invariants(fixed);
  CHECK(all.dim == 3);
  CHECK(all.decomposition.entries == mm({{Partition{3}, 1}, {Partition{2, 1}, 1}}));

  // negated action fixes nothing
  MatrixQ neg = Rational(-1) * identityQ(3);
  ExplicitRep negated = ExplicitRep::permutation(3).with_g_action({neg});
  CHECK(invariants(negated).dim == 0);

  // block swaps fix the block sums: a copy of the permutation rep
  for (int n = 2; n <= 4; ++n) {
    SubspaceDecomp inv = invariants(regular_per_coordinate(n));
    CHECK(inv.dim == n);
    CHECK(inv.character == permutation_character(n));
  }

  CHECK_THROWS_AS(invariants(ExplicitRep::permutation(3)), std::invalid_argument);
}

TEST_CASE("resolution of Z with the trivial action") {
  AlgebraElement gm1 = AlgebraElement::gen(0) - AlgebraElement::one();
  for (int n = 2; n <= 4; ++n) {
    ExplicitRep fixed = ExplicitRep::permutation(n).with_g_action({identityQ(n)});
    EquivariantComplex c = complex_from_resolution({1, 1}, {{{gm1}}}, fixed);
    REQUIRE(c.differentials.size() == 1);
    CHECK(is_zero(c.differentials[0]));
    for (int p = 0; p <= 1; ++p) {
      SubspaceDecomp h = cohomology(c, p);
      CHECK(h.decomposition.unpadded() == mm({{Partition{}, 1}, {Partition{1}, 1}}));
    }
  }
}

TEST_CASE("resolution of Z with the sign action on the line") {
  AlgebraElement gm1 = AlgebraElement::gen(0) - AlgebraElement::one();
  MatrixQ neg = Rational(-1) * identityQ(1);
  ExplicitRep line = ExplicitRep::trivial(3).with_g_action({neg});
  EquivariantComplex c = complex_from_resolution({1, 1}, {{{gm1}}}, line);
  CHECK(c.differentials[0] == Rational(-2) * identityQ(1));
  CHECK(cohomology(c, 0).dim == 0);
  CHECK(cohomology(c, 1).dim == 0);
}

TEST_CASE("periodic resolution of Z/2") {
  AlgebraElement gm1 = AlgebraElement::gen(0) - AlgebraElement::one();
  AlgebraElement gp1 = AlgebraElement::gen(0) + AlgebraElement::one();
  for (int n = 2; n <= 4; ++n) {
    ExplicitRep v = regular_per_coordinate(n);
    EquivariantComplex c = complex_from_resolution({1, 1, 1}, {{{gm1}}, {{gp1}}}, v);
    SubspaceDecomp h0 = cohomology(c, 0);
    SubspaceDecomp inv = invariants(v);
    CHECK(h0.dim == inv.dim);
    CHECK(h0.character == inv.character);
    CHECK(h0.decomposition == inv.decomposition);
    CHECK(cohomology(c, 1).dim == 0);
  }
}

TEST_CASE("differentials must compose to zero") {
  AlgebraElement gm1 = AlgebraElement::gen(0) - AlgebraElement::one();
  MatrixQ neg = Rational(-1) * identityQ(1);
  ExplicitRep line = ExplicitRep::trivial(2).with_g_action({neg});
  CHECK_THROWS_AS(complex_from_resolution({1, 1, 1}, {{{gm1}}, {{gm1}}}, line), NotAComplex);
}

TEST_CASE("cohomology degree bounds") {
  ExplicitRep fixed = ExplicitRep::trivial(2).with_g_action({identityQ(1)});
  AlgebraElement zero = AlgebraElement::zero();
  EquivariantComplex c = complex_from_resolution({1, 1}, {{{zero}}}, fixed);
  CHECK_THROWS_AS(cohomology(c, -1), std::invalid_argument);
  CHECK_THROWS_AS(cohomology(c, 2), std::invalid_argument);
}

TEST_CASE("kernel image cokernel of equivariant maps") {
  // augmentation Q^n -> Q
  for (int n = 2; n <= 5; ++n) {
    ExplicitRep dom = ExplicitRep::permutation(n);
    ExplicitRep cod = ExplicitRep::trivial(n);
    MatrixQ f = MatrixQ::Ones(1, n);
    KerImCoker k = ker_im_coker(dom, cod, f);
    CHECK(k.ker.dim == n - 1);
    CHECK(k.ker.decomposition.unpadded() == mm({{Partition{1}, 1}}));
    CHECK(k.im.decomposition.unpadded() == mm({{Partition{}, 1}}));
    CHECK(k.coker.dim == 0);

    // rank-nullity and character additivity on both sides
    CHECK(k.ker.dim + k.im.dim == dom.dim());
    CHECK(k.ker.character + k.im.character == dom.character());
    CHECK(k.im.character + k.coker.character == cod.character());
  }

  ExplicitRep p3 = ExplicitRep::permutation(3);
  KerImCoker zero = ker_im_coker(p3, p3, MatrixQ::Zero(3, 3));
  CHECK(zero.ker.dim == 3);
  CHECK(zero.im.dim == 0);
  CHECK(zero.coker.decomposition.entries == mm({{Partition{3}, 1}, {Partition{2, 1}, 1}}));

  KerImCoker ident = ker_im_coker(p3, p3, identityQ(3));
  CHECK(ident.ker.dim == 0);
  CHECK(ident.coker.dim == 0);
  CHECK(ident.im.dim == 3);

  CHECK_THROWS_AS(ker_im_coker(p3, p3, matq({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})),
                  NotEquivariant);
  CHECK_THROWS_AS(ker_im_coker(p3, ExplicitRep::permutation(4), MatrixQ::Zero(4, 3)),
                  DegreeMismatch);
  CHECK_THROWS_AS(ker_im_coker(p3, p3, MatrixQ::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("euler characteristics of a complex") {
  AlgebraElement gm1 = AlgebraElement::gen(0) - AlgebraElement::one();
  AlgebraElement gp1 = AlgebraElement::gen(0) + AlgebraElement::one();
  ExplicitRep v = regular_per_coordinate(3);
  EquivariantComplex c = complex_from_resolution({1, 1, 1}, {{{gm1}}, {{gp1}}}, v);

  CHECK(euler_characteristic_terms(c) == 6);
  long long viaCoh = 0;
  ClassFunction chi = ClassFunction::zero(3);
  for (int p = 0; p <= 2; ++p) {
    SubspaceDecomp h = cohomology(c, p);
    viaCoh += (p % 2 ? -1 : 1) * h.dim;
    chi = (p % 2) ? chi - h.character : chi + h.character;
  }
  CHECK(euler_characteristic_terms(c) == viaCoh);
  CHECK(euler_character_terms(c) == chi);
}

TEST_CASE("reynolds averaging produces equivariant maps") {
  ExplicitRep dom = ExplicitRep::permutation(4);
  ExplicitRep cod = ExplicitRep::direct_sum(ExplicitRep::trivial(4),
                                            ExplicitRep::sign_tensor(ExplicitRep::permutation(4)));
  MatrixQ seed = MatrixQ::Zero(cod.dim(), dom.dim());
  long fill = 0;
  for (Eigen::Index i = 0; i < seed.rows(); ++i)
    for (Eigen::Index j = 0; j < seed.cols(); ++j) seed(i, j) = Rational((fill++ % 5) - 2);
  MatrixQ avg = reynolds_average(dom, cod, seed);
  CHECK_NOTHROW(ker_im_coker(dom, cod, avg));

  // averaging is a projection: equivariant maps are fixed
  CHECK(reynolds_average(dom, cod, avg) == avg);

  // averaging the identity over matching actions returns it
  CHECK(reynolds_average(dom, dom, identityQ(4)) == identityQ(4));
}
