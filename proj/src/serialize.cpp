#include "repstab/serialize.hpp"

#include <charconv>
#include <sstream>

namespace repstab {

namespace {

int parse_int(std::string_view tok) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw std::invalid_argument("bad integer '" + std::string(tok) + "'");
  return v;
}

long long parse_ll(std::string_view tok) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw std::invalid_argument("bad integer '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

std::string partition_label(const Partition& p) { return partition_json(p).dump(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(parts);
}

long long ll_of(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value too large for JSON: " + v.get_str());
  return static_cast<long long>(v.get_si());
}

}  // namespace

Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "e") return Partition();
  std::vector<int> parts;
  for (std::string_view tok : split(s, '.')) parts.push_back(parse_int(tok));
  return Partition(parts);
}

MultiplicityMap parse_multiplicity_map(const std::string& s) {
  MultiplicityMap out;
  if (s.empty()) return out;
  for (std::string_view entry : split(s, ',')) {
    size_t colon = entry.rfind(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("entry '" + std::string(entry) + "' is missing ':mult'");
    Partition lambda = parse_partition(std::string(entry.substr(0, colon)));
    long long m = parse_ll(entry.substr(colon + 1));
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    if (m > 0) out[lambda] += m;
  }
  return out;
}

GradedBetti parse_betti(const std::string& s) {
  std::vector<long> b;
  for (std::string_view tok : split(s, ',')) b.push_back(parse_ll(tok));
  return GradedBetti(b);
}

Json entries_to_json(const MultiplicityMap& entries) {
  Json arr = Json::array();
  for (const auto& [lambda, m] : entries)
    arr.push_back(Json{{"lambda", partition_json(lambda)}, {"mult", m}});
  return arr;
}

MultiplicityMap entries_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("entries must be a JSON array");
  MultiplicityMap out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("lambda") || !e.contains("mult") ||
        !e["mult"].is_number_integer())
      throw std::invalid_argument("entries need 'lambda' and an integer 'mult'");
    Partition lambda = partition_from_json(e["lambda"]);
    long long m = e["mult"].get<long long>();
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    if (m > 0) out[lambda] += m;
  }
  return out;
}

Json decomposition_to_json(const IrrDecomposition& d) {
  return Json{{"n", d.n}, {"entries", entries_to_json(d.entries)}};
}

Json stable_to_json(const StableDecomposition& s) {
  return Json{{"stable_from", s.stable_from}, {"entries", entries_to_json(s.entries)}};
}

std::string entries_to_table(const MultiplicityMap& entries) {
  size_t w = 6;
  for (const auto& [lambda, m] : entries) w = std::max(w, lambda.str().size());
  std::ostringstream os;
  os << "lambda" << std::string(w - 6 + 2, ' ') << "mult\n";
  for (const auto& [lambda, m] : entries) {
    const std::string label = lambda.str();
    os << label << std::string(w - label.size() + 2, ' ') << m << '\n';
  }
  return os.str();
}

std::string entries_to_csv(const MultiplicityMap& entries) {
  std::ostringstream os;
  os << "lambda,mult\n";
  for (const auto& [lambda, m] : entries) {
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
    os << ',' << m << '\n';
  }
  return os.str();
}

Json character_table_to_json(const CharacterTable& t) {
  const int n = t.n();
  const ClassList& cl = class_list(n);
  Json j;
  j["version"] = 1;
  j["n"] = n;
  Json classes = Json::array();
  for (const auto& type : cl.types) classes.push_back(partition_json(type));
  j["classes"] = classes;
  Json sizes = Json::array();
  for (const auto& s : cl.sizes) sizes.push_back(ll_of(s));
  j["class_sizes"] = sizes;
  Json rows = Json::object();
  for (const auto& lambda : t.labels()) {
    Json row = Json::array();
    for (const auto& v : t.row(lambda)) row.push_back(ll_of(v));
    rows[partition_label(lambda)] = row;
  }
  j["rows"] = rows;
  return j;
}

std::optional<CharacterTable> character_table_from_json(const Json& j) {
  try {
    if (!j.is_object() || j.at("version") != 1) return std::nullopt;
    const int n = j.at("n").get<int>();
    if (n < 0) return std::nullopt;
    const ClassList& cl = class_list(n);
    const Json& classes = j.at("classes");
    if (!classes.is_array() || classes.size() != cl.types.size()) return std::nullopt;
    for (size_t i = 0; i < cl.types.size(); ++i)
      if (!(partition_from_json(classes[i]) == cl.types[i])) return std::nullopt;
    const Json& sizes = j.at("class_sizes");
    if (!sizes.is_array() || sizes.size() != cl.sizes.size()) return std::nullopt;
    for (size_t i = 0; i < cl.sizes.size(); ++i)
      if (Integer(static_cast<long>(sizes[i].get<long long>())) != cl.sizes[i]) return std::nullopt;
    const Json& rows = j.at("rows");
    const auto& labels = partitions_of(n);
    if (!rows.is_object() || rows.size() != labels.size()) return std::nullopt;
    const int id_class = cl.index_of(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
    std::vector<std::vector<Integer>> values;
    for (const auto& lambda : labels) {
      const Json& row = rows.at(partition_label(lambda));
      if (!row.is_array() || row.size() != cl.types.size()) return std::nullopt;
      std::vector<Integer> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) return std::nullopt;
        r.emplace_back(static_cast<long>(v.get<long long>()));
      }
      if (r[id_class] != lambda.irrep_dim()) return std::nullopt;
      values.push_back(std::move(r));
    }
    return character_table_from_rows(n, std::move(values));
  } catch (...) {
    return std::nullopt;
  }
}

Json echelon_to_json(const EchelonBasis& b, int n, int q) {
  Json j;
  j["version"] = 1;
  j["n"] = n;
  j["q"] = q;
  j["cols"] = static_cast<long long>(b.cols());
  std::vector<long long> pivots;
  for (Eigen::Index p : b.pivots()) pivots.push_back(static_cast<long long>(p));
  std::sort(pivots.begin(), pivots.end());
  j["pivots"] = pivots;
  const MatrixQ m = b.matrix();
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

std::optional<EchelonBasis> echelon_from_json(const Json& j, int n, int q) {
  try {
    if (!j.is_object() || j.at("version") != 1) return std::nullopt;
    if (j.at("n").get<int>() != n || j.at("q").get<int>() != q) return std::nullopt;
    const Eigen::Index cols = j.at("cols").get<long long>();
    if (cols < 0) return std::nullopt;
    const Json& rows = j.at("rows");
    const Json& pivots = j.at("pivots");
    if (!rows.is_array() || !pivots.is_array() || rows.size() != pivots.size())
      return std::nullopt;
    EchelonBasis b(cols);
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) return std::nullopt;
      RowVectorQ v(cols);
      for (Eigen::Index c = 0; c < cols; ++c)
        v[c] = rational_from_string(row[static_cast<size_t>(c)].get<std::string>());
      if (!b.insert(std::move(v))) return std::nullopt;
    }
    for (size_t i = 0; i < b.pivots().size(); ++i)
      if (static_cast<long long>(b.pivots()[i]) != pivots[i].get<long long>())
        return std::nullopt;
    return b;
  } catch (...) {
    return std::nullopt;
  }
}

Json report_to_json(const StabilityReport& r) {
  Json j;
  j["window"] = Json::array({r.n_min, r.n_max});
  j["observed_onset"] = r.observed_onset ? Json(*r.observed_onset) : Json(nullptr);
  j["guaranteed"] = r.guaranteed ? Json(*r.guaranteed) : Json(nullptr);
  j["verdict"] = r.verdict ? Json(*r.verdict) : Json(nullptr);
  j["entries"] = entries_to_json(r.stable_entries);
  Json per = Json::array();
  for (size_t i = 0; i < r.per_n.size(); ++i)
    per.push_back(Json{{"n", r.n_min + static_cast<int>(i)},
                       {"entries", entries_to_json(r.per_n[i])}});
  j["per_n"] = per;
  return j;
}

Json arnold_to_json(const ArnoldCohomology& c) {
  return Json{{"n", c.n},
              {"q", c.q},
              {"dim", c.dim},
              {"decomposition", entries_to_json(c.decomposition.entries)}};
}

Json arnold_scan_to_json(const DecompositionSequence& seq) {
  Json arr = Json::array();
  for (int n = seq.n_min; n <= seq.n_max(); ++n) {
    const IrrDecomposition& d = seq.at(n);
    arr.push_back(Json{{"n", n},
                       {"dim", ll_of(d.dim())},
                       {"decomposition", entries_to_json(d.entries)}});
  }
  return arr;
}

Json matrix_to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

MatrixQ matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return MatrixQ(0, 0);
  if (!j[0].is_array()) throw std::invalid_argument("matrix rows must be arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  MatrixQ m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& v = row[static_cast<size_t>(c)];
      if (v.is_number_integer())
        m(r, c) = Rational(static_cast<long>(v.get<long long>()));
      else if (v.is_string())
        m(r, c) = rational_from_string(v.get<std::string>());
      else
        throw std::invalid_argument("matrix entries must be integers or 'p/q' strings");
    }
  }
  return m;
}

namespace {

std::vector<MatrixQ> matrices_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of matrices");
  std::vector<MatrixQ> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

Json matrices_to_json(const std::vector<MatrixQ>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(matrix_to_json(m));
  return arr;
}

}  // namespace

ExplicitRep rep_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("representation must be a JSON object");
  const int n = j.at("n").get<int>();
  std::vector<MatrixQ> s = matrices_from_json(j.at("sn_gens"));
  std::vector<MatrixQ> g;
  if (j.contains("g_gens")) g = matrices_from_json(j.at("g_gens"));
  Eigen::Index dim;
  if (j.contains("dim"))
    dim = j.at("dim").get<long long>();
  else if (!s.empty())
    dim = s[0].rows();
  else if (!g.empty())
    dim = g[0].rows();
  else
    throw std::invalid_argument("representation needs a dim field or at least one matrix");
  return ExplicitRep::raw(n, dim, std::move(s), std::move(g));
}

Json rep_to_json(const ExplicitRep& v) {
  return Json{{"n", v.n()},
              {"dim", static_cast<long long>(v.dim())},
              {"sn_gens", matrices_to_json(v.s_gens())},
              {"g_gens", matrices_to_json(v.g_gens())}};
}

EquivariantComplex complex_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("complex must be a JSON object");
  const Json& terms = j.at("terms");
  const Json& sn = j.at("sn_gens");
  if (!terms.is_array() || !sn.is_array() || terms.size() != sn.size())
    throw std::invalid_argument("terms and sn_gens must be parallel arrays");
  const Json* gg = j.contains("g_gens") ? &j.at("g_gens") : nullptr;
  if (gg && (!gg->is_array() || gg->size() != terms.size()))
    throw std::invalid_argument("g_gens must parallel terms");

  int n;
  if (j.contains("n"))
    n = j.at("n").get<int>();
  else if (!terms.empty() && !sn[0].empty())
    n = static_cast<int>(sn[0].size()) + 1;
  else
    throw std::invalid_argument("complex needs an n field");

  EquivariantComplex c;
  for (size_t p = 0; p < terms.size(); ++p) {
    const Eigen::Index dim = terms[p].get<long long>();
    std::vector<MatrixQ> s = matrices_from_json(sn[p]);
    std::vector<MatrixQ> g;
    if (gg) g = matrices_from_json((*gg)[p]);
    c.terms.push_back(ExplicitRep::raw(n, dim, std::move(s), std::move(g)));
  }

  const Json& diffs = j.at("differentials");
  if (!diffs.is_array() || diffs.size() + 1 != c.terms.size())
    throw std::invalid_argument("expected one differential per adjacent pair of terms");
  for (size_t p = 0; p < diffs.size(); ++p) {
    MatrixQ d = matrix_from_json(diffs[p]);
    if (d.rows() != c.terms[p + 1].dim() || d.cols() != c.terms[p].dim())
      throw std::invalid_argument("differential " + std::to_string(p) + " shape mismatch");
    for (size_t i = 0; i < c.terms[p].s_gens().size(); ++i) {
      MatrixQ lhs = d * c.terms[p].s_gens()[i];
      MatrixQ rhs = c.terms[p + 1].s_gens()[i] * d;
      MatrixQ diff = lhs - rhs;
      if (!is_zero(diff))
        throw NotEquivariant("differential " + std::to_string(p) +
                             " fails to commute with the symmetric group action");
    }
    c.differentials.push_back(std::move(d));
  }
  for (size_t p = 0; p + 1 < c.differentials.size(); ++p) {
    MatrixQ comp = c.differentials[p + 1] * c.differentials[p];
    if (!is_zero(comp))
      throw NotAComplex("composite of differentials " + std::to_string(p) + "," +
                        std::to_string(p + 1) + " is nonzero");
  }
  return c;
}

Json complex_to_json(const EquivariantComplex& c) {
  if (c.terms.empty()) throw std::invalid_argument("empty complex");
  Json j;
  j["n"] = c.terms[0].n();
  Json dims = Json::array();
  Json sn = Json::array();
  Json gg = Json::array();
  for (const auto& t : c.terms) {
    dims.push_back(static_cast<long long>(t.dim()));
    sn.push_back(matrices_to_json(t.s_gens()));
    gg.push_back(matrices_to_json(t.g_gens()));
  }
  j["terms"] = dims;
  j["sn_gens"] = sn;
  j["g_gens"] = gg;
  Json diffs = Json::array();
  for (const auto& d : c.differentials) diffs.push_back(matrix_to_json(d));
  j["differentials"] = diffs;
  return j;
}

}  // namespace repstab
