#include <doctest.h>

#include "repstab/configspace.hpp"
#include "repstab/kuenneth.hpp"
#include "repstab/stability.hpp"

using namespace repstab;

namespace {

MultiplicityMap mm(std::initializer_list<std::pair<Partition, long long>> xs) {
  MultiplicityMap m;
  for (const auto& [p, c] : xs) m[p] = c;
  return m;
}

DecompositionSequence hq_window(const GradedBetti& b, int q, int n_min, int n_max) {
  DecompositionSequence seq;
  seq.n_min = n_min;
  seq.provenance = "kuenneth";
  for (int n = n_min; n <= n_max; ++n) seq.decs.push_back(hq_of_power(b, q, n));
  return seq;
}

}  // namespace

TEST_CASE("constant windows stabilize at their start") {
  DecompositionSequence seq;
  seq.n_min = 3;
  for (int n = 3; n <= 6; ++n) seq.decs.push_back(trivial_rep(n));
  StabilityReport rep = detect_stability(seq);
  CHECK(rep.observed_onset == 3);
  CHECK(rep.stable_entries == mm({{Partition{}, 1}}));
  CHECK(rep.monotone_violations.empty());
  CHECK(rep.n_min == 3);
  CHECK(rep.n_max == 6);
  CHECK(rep.per_n.size() == 4);
}

TEST_CASE("a lone tail point is not an onset") {
  DecompositionSequence seq;
  seq.n_min = 2;
  seq.decs.push_back(trivial_rep(2));
  IrrDecomposition sgn(3);
  sgn.add(Partition{1, 1, 1}, 1);
  seq.decs.push_back(sgn);
  StabilityReport rep = detect_stability(seq);
  CHECK(!rep.observed_onset.has_value());
}

TEST_CASE("windows shorter than two points are rejected") {
  DecompositionSequence empty;
  empty.n_min = 1;
  CHECK_THROWS_AS(detect_stability(empty), WindowTooShort);

  DecompositionSequence single;
  single.n_min = 1;
  single.decs.push_back(trivial_rep(1));
  CHECK_THROWS_AS(detect_stability(single), WindowTooShort);
}

TEST_CASE("second cohomology of powers of Z stabilizes at three") {
  DecompositionSequence seq = hq_window(GradedBetti::integers(), 2, 2, 10);
  StabilityReport rep = detect_stability(seq);
  CHECK(rep.observed_onset == 3);
  CHECK(rep.stable_entries == mm({{Partition{1, 1}, 1}, {Partition{1}, 1}}));
  CHECK(rep.monotone_violations.empty());
  // the window itself: sign rep at n = 2, stable pattern afterwards
  CHECK(rep.per_n[0] == mm({{Partition{1}, 1}}));
  CHECK(rep.per_n[1] == mm({{Partition{1, 1}, 1}, {Partition{1}, 1}}));
}

TEST_CASE("first arnold cohomology stabilizes at four") {
  DecompositionSequence seq = arnold_stability_scan(1, 3, 7);
  StabilityReport rep = detect_stability(seq);
  CHECK(rep.observed_onset == 4);
  CHECK(rep.stable_entries ==
        mm({{Partition{}, 1}, {Partition{1}, 1}, {Partition{2}, 1}}));
  CHECK(rep.monotone_violations.empty());
}

TEST_CASE("dropping multiplicities are flagged") {
  DecompositionSequence seq;
  seq.n_min = 3;
  IrrDecomposition a(3);
  a.add(Partition{2, 1}, 1);
  seq.decs.push_back(a);
  IrrDecomposition b(4);
  b.add(Partition{4}, 1);
  seq.decs.push_back(b);

  auto violations = check_multiplicity_monotone(seq);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].lambda == Partition{1});
  CHECK(violations[0].n == 3);
  CHECK(violations[0].before == 1);
  CHECK(violations[0].after == 0);

  StabilityReport rep = detect_stability(seq);
  CHECK(rep.monotone_violations.size() == 1);
  CHECK(!rep.observed_onset.has_value());
}

TEST_CASE("guarantee comparison") {
  DecompositionSequence seq = hq_window(GradedBetti::integers(), 2, 2, 10);
  StabilityReport rep = detect_stability(seq);

  GuaranteeComparison at4 = compare_to_guarantee(rep, 4);
  CHECK(at4.pass);
  CHECK(at4.slack == 1);

  GuaranteeComparison tight = compare_to_guarantee(rep, 3);
  CHECK(tight.pass);
  CHECK(tight.slack == 0);

  // onset 3 with n_min 2 exceeds a guarantee of 2
  GuaranteeComparison low = compare_to_guarantee(rep, 2);
  CHECK(!low.pass);

  CHECK_THROWS_AS(compare_to_guarantee(rep, 9), InsufficientWindow);
}

TEST_CASE("onsets clamped to the window start pass") {
  // a degree-zero generator stabilizes below any unpadded window
  DecompositionSequence seq;
  seq.n_min = 1;
  for (int n = 1; n <= 5; ++n) seq.decs.push_back(trivial_rep(n));
  StabilityReport rep = detect_stability(seq);
  CHECK(rep.observed_onset == 1);
  GuaranteeComparison cmp = compare_to_guarantee(rep, 0);
  CHECK(cmp.pass);
  CHECK(!cmp.slack.has_value());  // true onset may lie below the window
}

TEST_CASE("missing onsets fail any guarantee") {
  DecompositionSequence seq;
  seq.n_min = 2;
  seq.decs.push_back(trivial_rep(2));
  IrrDecomposition sgn(3);
  sgn.add(Partition{1, 1, 1}, 1);
  seq.decs.push_back(sgn);
  IrrDecomposition tr4(4);
  tr4.add(Partition{4}, 1);
  seq.decs.push_back(tr4);
  IrrDecomposition sgn5(5);
  sgn5.add(Partition{1, 1, 1, 1, 1}, 1);
  seq.decs.push_back(sgn5);
  StabilityReport rep = detect_stability(seq);
  REQUIRE(!rep.observed_onset.has_value());
  GuaranteeComparison cmp = compare_to_guarantee(rep, 3);
  CHECK(!cmp.pass);
}

TEST_CASE("with_guarantee stamps the verdict") {
  DecompositionSequence seq = hq_window(GradedBetti::integers(), 2, 2, 10);
  StabilityReport pass = with_guarantee(detect_stability(seq), 4);
  CHECK(pass.verdict == "PASS");
  CHECK(pass.guaranteed == 4);

  StabilityReport fail = with_guarantee(detect_stability(seq), 2);
  CHECK(fail.verdict == "FAIL");
}

TEST_CASE("detected stable entries match the stable generator") {
  IrrDecomposition v(2);
  v.add(Partition{1, 1}, 1);
  StableDecomposition sd = stable_induced_decomposition(v);

  DecompositionSequence seq;
  seq.n_min = 4;
  for (int n = 4; n <= 12; ++n) seq.decs.push_back(pieri(Partition{1, 1}, n - 2));
  StabilityReport rep = detect_stability(seq);
  CHECK(rep.stable_entries == sd.entries);
  REQUIRE(rep.observed_onset.has_value());
  CHECK(*rep.observed_onset <= sd.stable_from);
}
