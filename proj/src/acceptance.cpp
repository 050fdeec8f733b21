#include "repstab/acceptance.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "repstab/configspace.hpp"
#include "repstab/equivariant.hpp"
#include "repstab/serialize.hpp"

namespace repstab {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << "s";
  return os.str();
}

// body returns "" on pass, a diagnostic on failure; budget_s <= 0 means no gate
void run_criterion(std::ostream& out, int idx, const std::string& what, double budget_s,
                   const std::function<std::string()>& body, int& failures) {
  const auto t0 = Clock::now();
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  if (detail.empty() && budget_s > 0 && dt > budget_s)
    detail = "runtime " + fmt_seconds(dt) + " exceeds the " + fmt_seconds(budget_s) + " budget";
  out << "criterion " << idx << ": " << (detail.empty() ? "PASS" : "FAIL") << " ("
      << fmt_seconds(dt) << ") " << what << "\n";
  if (!detail.empty()) {
    out << "  " << detail << "\n";
    ++failures;
  }
}

std::string entries_str(const MultiplicityMap& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [lambda, mult] : m) {
    if (!first) os << ", ";
    first = false;
    os << lambda.str() << ":" << mult;
  }
  os << "}";
  return os.str();
}

Partition column(int q) { return Partition(std::vector<int>(static_cast<size_t>(q), 1)); }

std::string criterion_two_row() {
  const GradedBetti zb({1, 1});
  for (int q = 1; q <= 4; ++q) {
    MultiplicityMap want;
    want[column(q)] = 1;
    want[column(q - 1)] = 1;
    for (int n = 2 * q; n <= 12; ++n) {
      MultiplicityMap got = hq_of_power(zb, q, n).unpadded();
      if (got != want)
        return "hq((1,1), q=" + std::to_string(q) + ", n=" + std::to_string(n) + ") = " +
               entries_str(got) + ", expected " + entries_str(want);
    }
  }
  return "";
}

std::string criterion_exterior_oracle() {
  const GradedBetti zb({1, 1});
  for (int n = 0; n <= 10; ++n)
    for (int q = 0; q <= n; ++q) {
      IrrDecomposition a = hq_of_power(zb, q, n);
      IrrDecomposition b = exterior_power_perm(q, n);
      if (!(a == b))
        return "hq((1,1), q=" + std::to_string(q) + ", n=" + std::to_string(n) +
               ") disagrees with the exterior-power oracle: " + a.str() + " vs " + b.str();
    }
  return "";
}

std::string criterion_pieri_cross() {
  for (int l = 0; l <= 5; ++l)
    for (const Partition& lambda : partitions_of(l))
      for (int m = 0; l + m <= 9; ++m) {
        IrrDecomposition combinatorial = pieri(lambda, m);
        IrrDecomposition v(l, {{lambda, 1}});
        IrrDecomposition character_route = induce_product(v, trivial_rep(m));
        if (!(combinatorial == character_route))
          return "pieri(" + lambda.str() + ", " + std::to_string(m) + ") = " +
                 combinatorial.str() + " but the induced-character route gives " +
                 character_route.str();
      }
  return "";
}

std::string criterion_induced_range() {
  for (int l = 0; l <= 4; ++l)
    for (const Partition& lambda : partitions_of(l)) {
      DecompositionSequence seq;
      seq.n_min = l + 1;
      seq.provenance = "induced:" + lambda.str();
      IrrDecomposition v(l, {{lambda, 1}});
      for (int n = l + 1; n <= 12; ++n) seq.decs.push_back(induce_product(v, trivial_rep(n - l)));
      StabilityReport rep = detect_stability(seq);
      if (!rep.observed_onset)
        return "no stabilization observed for lambda=" + lambda.str() + " on [" +
               std::to_string(l + 1) + ",12]";
      const int onset = *rep.observed_onset;
      if (onset > 2 * l && onset != seq.n_min)
        return "lambda=" + lambda.str() + " stabilizes at n=" + std::to_string(onset) +
               ", beyond the guaranteed 2l=" + std::to_string(2 * l);
      if (!rep.monotone_violations.empty())
        return "multiplicity monotonicity fails for lambda=" + lambda.str() + " at n=" +
               std::to_string(rep.monotone_violations.front().n);
    }
  return "";
}

std::string criterion_product_range() {
  const std::vector<std::vector<long>> presets = {{1, 1}, {1, 2}, {1, 2, 1}, {1, 4, 1}};
  for (const auto& p : presets) {
    const GradedBetti betti(p);
    for (int q = 0; q <= 3; ++q) {
      DecompositionSequence seq;
      seq.n_min = 1;
      for (int n = 1; n <= 12; ++n) seq.decs.push_back(hq_of_power(betti, q, n));
      for (int n = 1; n <= 12; ++n)
        if (seq.at(n).dim() != hq_dimension_gf(betti, q, n))
          return "dimension vs generating function mismatch at q=" + std::to_string(q) +
                 ", n=" + std::to_string(n);
      StabilityReport rep = detect_stability(seq);
      if (!rep.observed_onset) return "no stabilization observed at q=" + std::to_string(q);
      const int onset = *rep.observed_onset;
      if (onset > 2 * q && onset != seq.n_min)
        return "onset " + std::to_string(onset) + " beyond 2q=" + std::to_string(2 * q) +
               " for preset of top degree " + std::to_string(betti.top());
    }
  }
  return "";
}

std::string criterion_transfer() {
  for (int n = 0; n <= 7; ++n) {
    const auto& labels = partitions_of(n);
    for (const Partition& lambda : labels)
      for (const Partition& mu : labels) {
        const long long want = lambda == mu ? 1 : 0;
        if (tensor_trivial_multiplicity(lambda, mu) != want)
          return "tensor_trivial_multiplicity(" + lambda.str() + ", " + mu.str() +
                 ") != " + std::to_string(want);
      }
  }
  return "";
}

std::string criterion_configuration() {
  for (int n = 3; n <= 8; ++n) {
    std::vector<long long> dims = arnold_betti(n);
    std::vector<Integer> want = poincare_coefficients(n);
    if (dims.size() != want.size()) return "betti length mismatch at n=" + std::to_string(n);
    for (size_t q = 0; q < dims.size(); ++q)
      if (Integer(static_cast<long>(dims[q])) != want[q])
        return "dim H^" + std::to_string(q) + "(C_" + std::to_string(n) +
               ") = " + std::to_string(dims[q]) + ", Poincare polynomial says " +
               want[q].get_str();
  }
  StabilityReport r1 = detect_stability(arnold_stability_scan(1, 3, 8));
  if (!r1.observed_onset || *r1.observed_onset != 4)
    return "q=1 scan onset is not 4";
  const MultiplicityMap want1 = {{Partition(), 1}, {Partition({1}), 1}, {Partition({2}), 1}};
  if (r1.stable_entries != want1)
    return "q=1 stable entries " + entries_str(r1.stable_entries) + ", expected " +
           entries_str(want1);
  if (!r1.monotone_violations.empty()) return "q=1 scan has monotonicity violations";
  StabilityReport r2 = detect_stability(arnold_stability_scan(2, 3, 9));
  if (!r2.observed_onset || *r2.observed_onset > 8)
    return "q=2 scan over n <= 9 fails to stabilize by n=8";
  return "";
}

ExplicitRep regular_per_coordinate(int n) {
  const Eigen::Index dim = 2 * n;
  std::vector<MatrixQ> s;
  for (int k = 0; k + 1 < n; ++k) {
    MatrixQ m = MatrixQ::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
      const int t = i == k ? k + 1 : (i == k + 1 ? k : i);
      m(2 * t, 2 * i) = 1;
      m(2 * t + 1, 2 * i + 1) = 1;
    }
    s.push_back(std::move(m));
  }
  MatrixQ g = MatrixQ::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    g(2 * i, 2 * i + 1) = 1;
    g(2 * i + 1, 2 * i) = 1;
  }
  return ExplicitRep::raw(n, dim, std::move(s), {std::move(g)});
}

std::string criterion_equivariant() {
  const AlgebraElement g = AlgebraElement::gen(0);
  const AlgebraElement gm1 = g - AlgebraElement::one();
  const AlgebraElement gp1 = g + AlgebraElement::one();
  const MultiplicityMap perm_labels = {{Partition(), 1}, {Partition({1}), 1}};

  for (int n = 2; n <= 4; ++n) {
    ExplicitRep fixed = ExplicitRep::permutation(n).with_g_action({identityQ(n)});
    EquivariantComplex c1 = complex_from_resolution({1, 1}, {{{gm1}}}, fixed);
    if (!is_zero(c1.differentials[0])) return "trivial-action differential is nonzero";
    SubspaceDecomp h0 = cohomology(c1, 0);
    SubspaceDecomp h1 = cohomology(c1, 1);
    if (h0.decomposition.unpadded() != perm_labels || h1.decomposition.unpadded() != perm_labels)
      return "free-abelian example: H^0/H^1 are not the permutation representation at n=" +
             std::to_string(n);

    ExplicitRep flipped =
        ExplicitRep::permutation(n).with_g_action({MatrixQ(-identityQ(n))});
    EquivariantComplex c2 = complex_from_resolution({1, 1}, {{{gm1}}}, flipped);
    MatrixQ want = -2 * identityQ(n);
    MatrixQ diff = c2.differentials[0] - want;
    if (!is_zero(diff)) return "sign-action differential is not -2I";
    if (cohomology(c2, 0).dim != 0 || cohomology(c2, 1).dim != 0)
      return "sign-action example has nonvanishing cohomology";

    ExplicitRep reg = regular_per_coordinate(n);
    EquivariantComplex c3 = complex_from_resolution({1, 1, 1}, {{{gm1}}, {{gp1}}}, reg);
    SubspaceDecomp inv = invariants(reg);
    SubspaceDecomp r0 = cohomology(c3, 0);
    if (r0.dim != inv.dim || !(r0.decomposition == inv.decomposition))
      return "periodic example: H^0 disagrees with the direct invariants at n=" +
             std::to_string(n);
    if (cohomology(c3, 1).dim != 0)
      return "periodic example: H^1 is nonzero over the rationals";
  }

  std::mt19937 rng(240817);
  std::uniform_int_distribution<int> entry(-2, 2);
  auto pool = [](int n) {
    std::vector<ExplicitRep> reps;
    reps.push_back(ExplicitRep::permutation(n));
    reps.push_back(ExplicitRep::trivial(n));
    reps.push_back(ExplicitRep::sign_tensor(ExplicitRep::trivial(n)));
    reps.push_back(ExplicitRep::sign_tensor(ExplicitRep::permutation(n)));
    return reps;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<ExplicitRep> reps = pool(n);
    std::uniform_int_distribution<size_t> pick(0, reps.size() - 1);
    auto assemble = [&]() {
      ExplicitRep r = reps[pick(rng)];
      if (n <= 4) r = ExplicitRep::direct_sum(r, reps[pick(rng)]);
      return r;
    };
    ExplicitRep dom = assemble();
    ExplicitRep cod = assemble();
    MatrixQ seed(cod.dim(), dom.dim());
    for (Eigen::Index r = 0; r < seed.rows(); ++r)
      for (Eigen::Index c = 0; c < seed.cols(); ++c) seed(r, c) = entry(rng);
    MatrixQ f = reynolds_average(dom, cod, seed);
    KerImCoker kic = ker_im_coker(dom, cod, f);
    const std::string tag = " (trial " + std::to_string(trial) + ", n=" + std::to_string(n) + ")";
    if (kic.ker.dim + kic.im.dim != dom.dim()) return "rank-nullity fails" + tag;
    IrrDecomposition dom_dec = decompose(dom.character());
    IrrDecomposition cod_dec = decompose(cod.character());
    if (!(kic.ker.decomposition + kic.im.decomposition == dom_dec))
      return "ker + im does not refine the domain decomposition" + tag;
    if (!(kic.im.decomposition + kic.coker.decomposition == cod_dec))
      return "im + coker does not refine the codomain decomposition" + tag;
    EquivariantComplex two;
    two.terms = {dom, cod};
    two.differentials = {f};
    SubspaceDecomp h0 = cohomology(two, 0);
    SubspaceDecomp h1 = cohomology(two, 1);
    if (h0.dim != kic.ker.dim || !(h0.decomposition == kic.ker.decomposition))
      return "H^0 of the two-term complex differs from ker" + tag;
    if (h1.dim != kic.coker.dim || !(h1.decomposition == kic.coker.decomposition))
      return "H^1 of the two-term complex differs from coker" + tag;
    if (euler_characteristic_terms(two) != h0.dim - h1.dim)
      return "Euler characteristic identity fails" + tag;
    ClassFunction euler = euler_character_terms(two);
    ClassFunction coh = h0.character - h1.character;
    if (!(euler == coh)) return "Euler character identity fails" + tag;
  }
  return "";
}

std::string criterion_character_infrastructure() {
  for (int n = 0; n <= 8; ++n) {
    const CharacterTable& t = CharacterTable::of(n);
    const ClassList& cl = class_list(n);
    const auto& labels = t.labels();
    const int id = cl.index_of(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
    Integer dim_sq(0);
    for (size_t i = 0; i < labels.size(); ++i) {
      const auto& ri = t.row(labels[i]);
      if (ri[static_cast<size_t>(id)] != labels[i].irrep_dim())
        return "hook-length formula disagrees with the table at " + labels[i].str();
      dim_sq += ri[static_cast<size_t>(id)] * ri[static_cast<size_t>(id)];
      for (size_t j = i; j < labels.size(); ++j) {
        const auto& rj = t.row(labels[j]);
        Integer s(0);
        for (size_t c = 0; c < cl.types.size(); ++c) s += cl.sizes[c] * ri[c] * rj[c];
        const Integer want = i == j ? cl.group_order : Integer(0);
        if (s != want)
          return "orthogonality fails for (" + labels[i].str() + ", " + labels[j].str() +
                 ") at n=" + std::to_string(n);
      }
    }
    if (dim_sq != cl.group_order)
      return "sum of squared dimensions misses n! at n=" + std::to_string(n);
  }
  const auto t0 = Clock::now();
  CharacterTable big = CharacterTable::compute(12);
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  Integer dim_sq(0);
  const ClassList& cl = class_list(12);
  const int id = cl.index_of(Partition(std::vector<int>(12, 1)));
  for (const Partition& lambda : big.labels()) {
    const Integer& d = big.row(lambda)[static_cast<size_t>(id)];
    dim_sq += d * d;
  }
  if (dim_sq != cl.group_order) return "S_12 table fails the dimension identity";
  if (dt > 60.0) return "S_12 table took " + fmt_seconds(dt) + ", budget is 60s";
  return "";
}

std::string criterion_fixture(const std::string& golden_dir) {
  const std::string path = golden_dir + "/h2_fixture.json";
  std::ifstream f(path);
  if (!f) return "missing recorded fixture " + path;
  Json j = Json::parse(f, nullptr, false);
  if (j.is_discarded()) return "fixture is not valid JSON";
  if (!j.contains("computed") || j["computed"] != false)
    return "fixture must be marked computed:false (recorded data, out of desk scale)";
  const MultiplicityMap want = {{Partition(), 2}, {Partition({1}), 1}};
  if (entries_from_json(j.at("entries")) != want)
    return "fixture entries drifted from the recorded decomposition";
  return "";
}

}  // namespace

int run_acceptance(std::ostream& out, const std::string& golden_dir) {
  int failures = 0;
  run_criterion(out, 1, "two-row reproduction for the free-abelian tower, q <= 4, n <= 12",
                30.0, criterion_two_row, failures);
  run_criterion(out, 2, "Kuenneth vs exterior-power oracle, 0 <= q <= n <= 10", 60.0,
                criterion_exterior_oracle, failures);
  run_criterion(out, 3, "Pieri strips vs induced characters, |lambda| <= 5, |lambda|+m <= 9",
                0, criterion_pieri_cross, failures);
  run_criterion(out, 4, "induced towers stabilize by 2l with monotone multiplicities, l <= 4",
                0, criterion_induced_range, failures);
  run_criterion(out, 5, "product towers stabilize by 2q; dimensions match the generating function",
                0, criterion_product_range, failures);
  run_criterion(out, 6, "tensor-trivial multiplicity is the Kronecker delta, n <= 7", 0,
                criterion_transfer, failures);
  run_criterion(out, 7, "configuration spaces: certified dims, q=1 onset 4, q=2 onset <= 8",
                300.0, criterion_configuration, failures);
  run_criterion(out, 8, "resolution complexes and 100 randomized equivariant maps, n <= 6", 0,
                criterion_equivariant, failures);
  run_criterion(out, 9, "character tables: orthogonality, dimensions, hooks; S_12 under 60s", 0,
                criterion_character_infrastructure, failures);
  run_criterion(out, 10, "recorded two-row-plus-line fixture asserted as data", 0,
                [&] { return criterion_fixture(golden_dir); }, failures);
  return failures;
}

}  // namespace repstab
