#include <doctest.h>

#include "repstab/characters.hpp"

using namespace repstab;

namespace {

MultiplicityMap mm(std::initializer_list<std::pair<Partition, long long>> xs) {
  MultiplicityMap m;
  for (const auto& [p, c] : xs) m[p] = c;
  return m;
}

}  // namespace

TEST_CASE("Murnaghan-Nakayama values") {
  // S_3, classes (3), (2,1), (1,1,1)
  const CharacterTable& t3 = CharacterTable::of(3);
  CHECK(t3.row(Partition{2, 1}) == std::vector<Integer>{-1, 0, 2});
  CHECK(t3.row(Partition{3}) == std::vector<Integer>{1, 1, 1});
  CHECK(t3.row(Partition{1, 1, 1}) == std::vector<Integer>{1, -1, 1});

  // S_4, classes (4), (3,1), (2,2), (2,1,1), (1^4)
  const CharacterTable& t4 = CharacterTable::of(4);
  CHECK(t4.row(Partition{3, 1}) == std::vector<Integer>{-1, 0, -1, 1, 3});
  CHECK(t4.row(Partition{2, 2}) == std::vector<Integer>{0, -1, 2, 0, 2});
  CHECK(t4.value(Partition{2, 1, 1}, Partition{2, 2}) == -1);
  CHECK(t4.value(Partition{4}, Partition{4}) == 1);
  CHECK(t4.value(Partition{1, 1, 1, 1}, Partition{4}) == -1);
}

TEST_CASE("row and column orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    const ClassList& cl = class_list(n);
    const auto& labels = partitions_of(n);
    const CharacterTable& t = CharacterTable::of(n);
    for (size_t a = 0; a < labels.size(); ++a)
      for (size_t b = a; b < labels.size(); ++b) {
        Integer dot = 0;
        for (size_t c = 0; c < cl.types.size(); ++c)
          dot += cl.sizes[c] * t.row(labels[a])[c] * t.row(labels[b])[c];
        CHECK(dot == (a == b ? cl.group_order : Integer(0)));
      }
  }
}

TEST_CASE("named characters match table rows") {
  for (int n = 0; n <= 6; ++n) {
    const ClassList& cl = class_list(n);
    ClassFunction triv = trivial_character(n);
    ClassFunction sgn = sign_character(n);
    ClassFunction perm = permutation_character(n);
    ClassFunction reg = regular_character(n);
    for (size_t c = 0; c < cl.types.size(); ++c) {
      CHECK(triv.values[c] == 1);
      CHECK(sgn.values[c] == class_sign(cl.types[c]));
      // fixed points = number of 1-cycles
      long fixed = 0;
      for (int part : cl.types[c].parts())
        if (part == 1) ++fixed;
      CHECK(perm.values[c] == fixed);
      CHECK(reg.values[c] == (cl.types[c] == Partition(std::vector<int>(n, 1))
                                  ? Rational(factorial(n))
                                  : Rational(0)));
    }
  }
  CHECK(irreducible_character(Partition{2, 1}).at(Partition{2, 1}) == 0);
  CHECK(irreducible_character(Partition{2, 1}).at(Partition{3}) == -1);
}

TEST_CASE("decompose named representations") {
  IrrDecomposition perm4 = decompose(permutation_character(4));
  CHECK(perm4.entries == mm({{Partition{4}, 1}, {Partition{3, 1}, 1}}));

  IrrDecomposition reg3 = decompose(regular_character(3));
  CHECK(reg3.entries ==
        mm({{Partition{3}, 1}, {Partition{2, 1}, 2}, {Partition{1, 1, 1}, 1}}));
  CHECK(reg3.dim() == 6);

  for (const auto& lam : partitions_of(5)) {
    IrrDecomposition d = decompose(irreducible_character(lam));
    CHECK(d.entries == mm({{lam, 1}}));
  }
}

TEST_CASE("decompose inverts character") {
  for (int n = 2; n <= 6; ++n) {
    IrrDecomposition d(n);
    const auto& labels = partitions_of(n);
    d.add(labels[0], 2);
    d.add(labels[labels.size() / 2], 1);
    d.add(labels.back(), 3);
    CHECK(decompose(d.character()) == d);
    CHECK(d.character().at(Partition(std::vector<int>(n, 1))) == Rational(d.dim()));
  }
}

TEST_CASE("decompose rejects non-characters") {
  ClassFunction half = Rational(1, 2) * trivial_character(3);
  CHECK_THROWS_AS(decompose(half), NotACharacter);

  ClassFunction neg = trivial_character(3) - regular_character(3);
  CHECK_THROWS_AS(decompose(neg), NotACharacter);

  ClassFunction wrong = trivial_character(3);
  wrong.values[0] = 7;  // integral but no irreducible expansion
  CHECK_THROWS_AS(decompose(wrong), NotACharacter);
}

TEST_CASE("inner product checks degrees") {
  CHECK_THROWS_AS(inner_product(trivial_character(3), trivial_character(4)), DegreeMismatch);
  CHECK(inner_product(trivial_character(4), permutation_character(4)) == 1);
  CHECK(inner_product(regular_character(4), irreducible_character(Partition{3, 1})) == 3);
}

TEST_CASE("IrrDecomposition bookkeeping") {
  IrrDecomposition d(4);
  d.add(Partition{3, 1}, 2);
  d.add(Partition{4}, 1);
  d.add(Partition{3, 1}, -2);  // cancels, entry removed
  CHECK(d.mult(Partition{3, 1}) == 0);
  CHECK(d.entries == mm({{Partition{4}, 1}}));
  CHECK_THROWS_AS(d.add(Partition{4}, -5), std::invalid_argument);
  CHECK_THROWS_AS(d.add(Partition{3}, 1), std::invalid_argument);

  IrrDecomposition e(4);
  e.add(Partition{2, 2}, 1);
  e.add(Partition{4}, 2);
  IrrDecomposition s = d + e;
  CHECK(s.entries == mm({{Partition{2, 2}, 1}, {Partition{4}, 3}}));

  CHECK(s.unpadded() == mm({{Partition{2}, 1}, {Partition{}, 3}}));
}

TEST_CASE("trivial multiplicity in a tensor square is the Kronecker delta") {
  CHECK(tensor_trivial_multiplicity(Partition{2, 1}, Partition{2, 1}) == 1);
  CHECK(tensor_trivial_multiplicity(Partition{3}, Partition{3}) == 1);
  CHECK(tensor_trivial_multiplicity(Partition{3}, Partition{2, 1}) == 0);
  CHECK(tensor_trivial_multiplicity(Partition{2, 1}, Partition{1, 1, 1}) == 0);
  CHECK_THROWS_AS(tensor_trivial_multiplicity(Partition{2}, Partition{2, 1}), DegreeMismatch);
}

TEST_CASE("table recompute matches memoized") {
  for (int n = 0; n <= 6; ++n) CHECK(CharacterTable::of(n) == CharacterTable::compute(n));
}

TEST_CASE("tiny group edges") {
  const CharacterTable& t0 = CharacterTable::of(0);
  CHECK(t0.labels().size() == 1);
  CHECK(t0.row(Partition{}) == std::vector<Integer>{1});

  const CharacterTable& t1 = CharacterTable::of(1);
  CHECK(t1.row(Partition{1}) == std::vector<Integer>{1});

  IrrDecomposition d0 = decompose(trivial_character(0));
  CHECK(d0.entries == mm({{Partition{}, 1}}));
  CHECK(trivial_rep(0).dim() == 1);
}
