#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "repstab/acceptance.hpp"
#include "repstab/cache.hpp"
#include "repstab/configspace.hpp"
#include "repstab/serialize.hpp"

using namespace repstab;

namespace {

long long ll(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value exceeds 64 bits: " + v.get_str());
  return static_cast<long long>(v.get_si());
}

void emit(const std::string& format, const Json& payload, const MultiplicityMap& entries) {
  if (format == "json")
    std::cout << payload.dump(2) << "\n";
  else if (format == "csv")
    std::cout << entries_to_csv(entries);
  else
    std::cout << entries_to_table(entries);
}

std::vector<Rational> parse_values(const std::string& s) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok =
        s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(rational_from_string(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  Json j = Json::parse(f, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument(path + " is not valid JSON");
  return j;
}

int degree_of(const MultiplicityMap& m, int override_n, const char* which) {
  if (override_n >= 0) return override_n;
  if (m.empty())
    throw std::invalid_argument(std::string("--") + which +
                                " is empty; pass --n" + which + " to fix its degree");
  return m.begin()->first.weight();
}

std::string report_table(const StabilityReport& r) {
  std::ostringstream os;
  os << "window      [" << r.n_min << ", " << r.n_max << "]\n";
  os << "onset       ";
  if (r.observed_onset)
    os << *r.observed_onset << "\n";
  else
    os << "not observed\n";
  if (r.guaranteed) os << "guaranteed  " << *r.guaranteed << "\n";
  if (r.verdict) os << "verdict     " << *r.verdict << "\n";
  if (!r.monotone_violations.empty())
    os << "monotone violations: " << r.monotone_violations.size() << "\n";
  os << entries_to_table(r.stable_entries);
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repstab: exact decompositions of symmetric group representations and their stabilization"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string cache_dir;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "directory for on-disk caches");

  // decompose
  auto* cmd_decompose =
      app.add_subcommand("decompose", "decompose a class function into irreducibles");
  int dec_n = 0;
  std::string dec_character, dec_values;
  cmd_decompose->add_option("--n", dec_n, "symmetric group degree")->required();
  cmd_decompose->add_option("--character", dec_character,
                            "trivial | sign | permutation | regular");
  cmd_decompose->add_option("--values", dec_values,
                            "comma-separated exact values in canonical class order");

  // induce
  auto* cmd_induce = app.add_subcommand(
      "induce", "induce a product of representations to the full symmetric group");
  std::string ind_a, ind_b;
  int ind_na = -1, ind_nb = -1, ind_horizon = -1;
  bool ind_stable = false;
  cmd_induce->add_option("--a", ind_a, "left factor, e.g. 2.1:1,1.1.1:2")->required();
  cmd_induce->add_option("--b", ind_b, "right factor (default: empty)");
  cmd_induce->add_option("--na", ind_na, "degree of --a when it has no entries");
  cmd_induce->add_option("--nb", ind_nb, "degree of --b when it has no entries");
  cmd_induce->add_flag("--stable", ind_stable,
                       "emit the stable decomposition of Ind(a x trivial) instead");
  cmd_induce->add_option("--horizon", ind_horizon, "verification horizon for --stable");

  // pieri
  auto* cmd_pieri = app.add_subcommand("pieri", "multiply by a trivial row (horizontal strips)");
  std::string pieri_lambda;
  int pieri_m = 0;
  cmd_pieri->add_option("--lambda", pieri_lambda, "partition, parts joined by '.'");
  cmd_pieri->add_option("--m", pieri_m, "size of the trivial factor")->required();

  // kuenneth
  auto* cmd_kuenneth =
      app.add_subcommand("kuenneth", "S_n-decomposition of H^q of an n-fold power");
  std::string ku_betti;
  int ku_q = 0, ku_n = -1, ku_horizon = -1;
  bool ku_stable = false;
  cmd_kuenneth->add_option("--betti", ku_betti, "graded Betti numbers, e.g. 1,2,1")->required();
  cmd_kuenneth->add_option("--q", ku_q, "cohomological degree")->required();
  cmd_kuenneth->add_option("--n", ku_n, "number of factors");
  cmd_kuenneth->add_flag("--stable", ku_stable, "emit the stable decomposition instead");
  cmd_kuenneth->add_option("--horizon", ku_horizon, "verification horizon for --stable");

  // arnold
  auto* cmd_arnold =
      app.add_subcommand("arnold", "cohomology of planar configuration spaces");
  int ar_n = -1, ar_q = 0, ar_nmin = 3, ar_nmax = 8;
  bool ar_scan = false;
  cmd_arnold->add_option("--n", ar_n, "number of points");
  cmd_arnold->add_option("--q", ar_q, "cohomological degree")->required();
  cmd_arnold->add_flag("--scan", ar_scan, "emit one decomposition per n over a window");
  cmd_arnold->add_option("--n-min", ar_nmin, "scan window start")->capture_default_str();
  cmd_arnold->add_option("--n-max", ar_nmax, "scan window end")->capture_default_str();

  // stability
  auto* cmd_stability =
      app.add_subcommand("stability", "detect stabilization of a decomposition tower");
  std::string st_generator, st_betti, st_lambda;
  int st_q = 0, st_guarantee = 0, st_nmin = -1, st_nmax = -1;
  cmd_stability
      ->add_option("--generator", st_generator, "kuenneth | arnold | induced")
      ->required()
      ->check(CLI::IsMember({"kuenneth", "arnold", "induced", "pieri"}));
  cmd_stability->add_option("--betti", st_betti, "graded Betti numbers (kuenneth)");
  cmd_stability->add_option("--q", st_q, "cohomological degree (kuenneth, arnold)");
  cmd_stability->add_option("--lambda", st_lambda, "partition (induced)");
  auto* st_guarantee_opt =
      cmd_stability->add_option("--guarantee", st_guarantee, "range to compare against");
  cmd_stability->add_option("--n-min", st_nmin, "window start");
  cmd_stability->add_option("--n-max", st_nmax, "window end");

  // equivariant
  auto* cmd_equivariant = app.add_subcommand(
      "equivariant", "cohomology of an explicit equivariant complex, or invariants");
  std::string eq_complex, eq_rep;
  int eq_p = -1;
  bool eq_invariants = false;
  cmd_equivariant->add_option("--complex", eq_complex, "complex JSON file");
  cmd_equivariant->add_option("--p", eq_p, "single cohomological degree");
  cmd_equivariant->add_option("--rep", eq_rep, "representation JSON file");
  cmd_equivariant->add_flag("--invariants", eq_invariants,
                            "compute G-invariants of --rep");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the acceptance suite");
  const char* env_golden = std::getenv("REPSTAB_GOLDEN_DIR");
  std::string golden_dir = env_golden ? env_golden : "tests/golden";
  cmd_verify->add_option("--golden-dir", golden_dir, "recorded fixture directory")
      ->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (!cache_dir.empty()) CacheStore::global().set_dir(cache_dir);

    if (cmd_decompose->parsed()) {
      if (dec_character.empty() == dec_values.empty())
        throw std::invalid_argument("pass exactly one of --character and --values");
      ClassFunction chi;
      if (!dec_character.empty()) {
        if (dec_character == "trivial")
          chi = trivial_character(dec_n);
        else if (dec_character == "sign")
          chi = sign_character(dec_n);
        else if (dec_character == "permutation" || dec_character == "perm")
          chi = permutation_character(dec_n);
        else if (dec_character == "regular")
          chi = regular_character(dec_n);
        else
          throw std::invalid_argument("unknown character '" + dec_character + "'");
      } else {
        chi = ClassFunction::zero(dec_n);
        std::vector<Rational> vals = parse_values(dec_values);
        if (vals.size() != chi.values.size())
          throw std::invalid_argument("expected " + std::to_string(chi.values.size()) +
                                      " class values for n=" + std::to_string(dec_n));
        chi.values = std::move(vals);
      }
      IrrDecomposition d = decompose(chi);
      Json payload{{"n", d.n}, {"dim", ll(d.dim())}, {"decomposition", entries_to_json(d.entries)}};
      emit(format, payload, d.entries);
      return 0;
    }

    if (cmd_induce->parsed()) {
      MultiplicityMap amap = parse_multiplicity_map(ind_a);
      IrrDecomposition a(degree_of(amap, ind_na, "a"), amap);
      if (ind_stable) {
        if (!ind_b.empty())
          throw std::invalid_argument("--stable describes Ind(a x trivial); drop --b");
        StableDecomposition s = stable_induced_decomposition(a, ind_horizon);
        Json payload = stable_to_json(s);
        if (format == "table")
          std::cout << "stable_from " << s.stable_from << "\n" << entries_to_table(s.entries);
        else
          emit(format, payload, s.entries);
        return 0;
      }
      MultiplicityMap bmap = parse_multiplicity_map(ind_b);
      IrrDecomposition b(degree_of(bmap, ind_nb, "b"), bmap);
      IrrDecomposition d = induce_product(a, b);
      Json payload{{"n", d.n}, {"dim", ll(d.dim())}, {"decomposition", entries_to_json(d.entries)}};
      emit(format, payload, d.entries);
      return 0;
    }

    if (cmd_pieri->parsed()) {
      if (pieri_m < 0) throw std::invalid_argument("--m must be nonnegative");
      IrrDecomposition d = pieri(parse_partition(pieri_lambda), pieri_m);
      Json payload{{"n", d.n}, {"dim", ll(d.dim())}, {"decomposition", entries_to_json(d.entries)}};
      emit(format, payload, d.entries);
      return 0;
    }

    if (cmd_kuenneth->parsed()) {
      GradedBetti betti = parse_betti(ku_betti);
      if (ku_stable) {
        StableDecomposition s = stable_hq_of_power(betti, ku_q, ku_horizon);
        if (format == "table")
          std::cout << "stable_from " << s.stable_from << "\n" << entries_to_table(s.entries);
        else
          emit(format, stable_to_json(s), s.entries);
        return 0;
      }
      if (ku_n < 0) throw std::invalid_argument("--n is required without --stable");
      IrrDecomposition d = hq_of_power(betti, ku_q, ku_n);
      MultiplicityMap labels = d.unpadded();
      Json payload{{"betti", Json(betti.b)},
                   {"q", ku_q},
                   {"n", ku_n},
                   {"dim", ll(d.dim())},
                   {"decomposition", entries_to_json(labels)}};
      emit(format, payload, labels);
      return 0;
    }

    if (cmd_arnold->parsed()) {
      if (ar_scan) {
        DecompositionSequence seq = arnold_stability_scan(ar_q, ar_nmin, ar_nmax);
        if (format == "json") {
          std::cout << arnold_scan_to_json(seq).dump(2) << "\n";
        } else if (format == "csv") {
          std::cout << "n,lambda,mult\n";
          for (int n = seq.n_min; n <= seq.n_max(); ++n)
            for (const auto& [lambda, mult] : seq.at(n).entries) {
              std::cout << n << ',';
              const auto& parts = lambda.parts();
              for (size_t i = 0; i < parts.size(); ++i) std::cout << (i ? " " : "") << parts[i];
              std::cout << ',' << mult << '\n';
            }
        } else {
          for (int n = seq.n_min; n <= seq.n_max(); ++n) {
            std::cout << "n=" << n << " dim=" << ll(seq.at(n).dim()) << "\n"
                      << entries_to_table(seq.at(n).entries);
          }
        }
        return 0;
      }
      if (ar_n < 0) throw std::invalid_argument("--n is required without --scan");
      // keep the relation-space cache warm where the dense reduction is feasible
      try {
        arnold_relation_space(ar_n, ar_q);
      } catch (const FeasibilityExceeded&) {
      }
      ArnoldCohomology c = arnold_cohomology(ar_n, ar_q);
      emit(format, arnold_to_json(c), c.decomposition.entries);
      return 0;
    }

    if (cmd_stability->parsed()) {
      DecompositionSequence seq;
      int implied = 0;
      if (st_generator == "kuenneth") {
        if (st_betti.empty()) throw std::invalid_argument("kuenneth generator needs --betti");
        GradedBetti betti = parse_betti(st_betti);
        implied = 2 * st_q;
        const int n_min = st_nmin >= 0 ? st_nmin : 1;
        const int guarantee = st_guarantee_opt->count() ? st_guarantee : implied;
        const int n_max = st_nmax >= 0 ? st_nmax : std::max(guarantee + 4, 10);
        seq.n_min = n_min;
        seq.provenance = "kuenneth:q=" + std::to_string(st_q);
        for (int n = n_min; n <= n_max; ++n) seq.decs.push_back(hq_of_power(betti, st_q, n));
      } else if (st_generator == "arnold") {
        implied = 4 * st_q;
        const int n_min = st_nmin >= 0 ? st_nmin : 3;
        const int guarantee = st_guarantee_opt->count() ? st_guarantee : implied;
        const int n_max = st_nmax >= 0 ? st_nmax : std::max(guarantee + 4, 10);
        seq = arnold_stability_scan(st_q, n_min, n_max);
      } else {
        Partition lambda = parse_partition(st_lambda);
        const int l = lambda.weight();
        implied = 2 * l;
        const int n_min = st_nmin >= 0 ? st_nmin : l + 1;
        if (n_min < l)
          throw std::invalid_argument("window must start at n >= |lambda|");
        const int guarantee = st_guarantee_opt->count() ? st_guarantee : implied;
        const int n_max = st_nmax >= 0 ? st_nmax : std::max(guarantee + 4, 10);
        IrrDecomposition v(l, {{lambda, 1}});
        seq.n_min = n_min;
        seq.provenance = "induced:" + lambda.str();
        for (int n = n_min; n <= n_max; ++n)
          seq.decs.push_back(induce_product(v, trivial_rep(n - l)));
      }
      StabilityReport report = detect_stability(seq);
      if (st_guarantee_opt->count()) report = with_guarantee(report, st_guarantee);
      if (format == "table")
        std::cout << report_table(report);
      else if (format == "csv")
        std::cout << entries_to_csv(report.stable_entries);
      else
        std::cout << report_to_json(report).dump(2) << "\n";
      return report.verdict && *report.verdict == "FAIL" ? 3 : 0;
    }

    if (cmd_equivariant->parsed()) {
      if (eq_invariants || !eq_rep.empty()) {
        if (eq_rep.empty()) throw std::invalid_argument("--invariants needs --rep FILE");
        ExplicitRep v = rep_from_json(read_json_file(eq_rep));
        SubspaceDecomp inv = invariants(v);
        Json payload{{"n", v.n()},
                     {"dim", inv.dim},
                     {"decomposition", entries_to_json(inv.decomposition.entries)}};
        emit(format, payload, inv.decomposition.entries);
        return 0;
      }
      if (eq_complex.empty()) throw std::invalid_argument("pass --complex FILE or --rep FILE");
      EquivariantComplex c = complex_from_json(read_json_file(eq_complex));
      auto one = [&](int p) {
        SubspaceDecomp h = cohomology(c, p);
        return Json{{"p", p},
                    {"dim", h.dim},
                    {"decomposition", entries_to_json(h.decomposition.entries)}};
      };
      if (eq_p >= 0) {
        SubspaceDecomp h = cohomology(c, eq_p);
        emit(format, one(eq_p), h.decomposition.entries);
        return 0;
      }
      Json all = Json::array();
      for (int p = 0; p < static_cast<int>(c.terms.size()); ++p) all.push_back(one(p));
      if (format == "json") {
        std::cout << all.dump(2) << "\n";
      } else {
        for (const auto& j : all) {
          std::cout << "p=" << j.at("p").get<int>() << " dim=" << j.at("dim").get<long long>()
                    << "\n"
                    << entries_to_table(entries_from_json(j.at("decomposition")));
        }
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      const int failures = run_acceptance(std::cout, golden_dir);
      if (failures) std::cout << failures << " criteria failed\n";
      return failures ? 1 : 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
