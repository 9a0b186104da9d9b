#include "b0/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "b0/corpus.hpp"
#include "b0/structure.hpp"

namespace b0 {

namespace {

using nlohmann::json;

std::string star_label(int tstar) { return "t" + std::to_string(tstar) + "*"; }
std::string tail_label(int l) { return "t" + std::to_string(l); }

std::string group_name(const std::vector<Int>& invariants) {
  if (invariants.empty()) return "1";
  std::string s;
  for (const Int& d : invariants) {
    if (!s.empty()) s += " x ";
    s += "C" + d.get_str();
  }
  return s;
}

std::string join_ints(const std::vector<Int>& v, const char* sep = " ") {
  std::string s;
  for (const Int& d : v) {
    if (!s.empty()) s += sep;
    s += d.get_str();
  }
  return s;
}

// t9^2 t11 = 1 from a tail exponent row.
std::string row_to_relation(const IntVec& v) {
  std::string s;
  for (Eigen::Index l = 0; l < v.size(); ++l) {
    if (v(l) == 0) continue;
    if (!s.empty()) s += ' ';
    s += tail_label(static_cast<int>(l) + 1);
    if (v(l) != 1) s += "^" + v(l).get_str();
  }
  return (s.empty() ? "1" : s) + " = 1";
}

// Word over the CP extension's generators, with the central generators
// printed under their t* names.
std::string cp_word_to_string(const Word& w, int n,
                              const std::vector<int>& tstar_index) {
  if (w.empty()) return "1";
  std::string s;
  for (const Factor& f : w) {
    if (!s.empty()) s += '*';
    s += f.gen <= n ? "g" + std::to_string(f.gen)
                    : star_label(tstar_index[f.gen - n - 1]);
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

std::string cp_gen_name(int g, int n, const std::vector<int>& tstar_index) {
  return g <= n ? "g" + std::to_string(g) : star_label(tstar_index[g - n - 1]);
}

void print_presentation(std::ostringstream& os, const PcPresentation& p,
                        int base_n, const std::vector<int>& tstar_index,
                        const char* indent) {
  for (int i = 1; i <= p.n; ++i) {
    os << indent << cp_gen_name(i, base_n, tstar_index) << "^" << p.orders[i - 1]
       << " = " << cp_word_to_string(p.power_rhs[i - 1], base_n, tstar_index)
       << '\n';
    for (int j = 1; j < i; ++j)
      if (const Word* w = p.comm(i, j))
        os << indent << "[" << cp_gen_name(i, base_n, tstar_index) << ","
           << cp_gen_name(j, base_n, tstar_index)
           << "] = " << cp_word_to_string(*w, base_n, tstar_index) << '\n';
  }
}

void print_matrix(std::ostringstream& os, const IntMat& t) {
  const int m = static_cast<int>(t.cols());
  std::vector<size_t> width(m);
  for (int l = 0; l < m; ++l) {
    width[l] = tail_label(l + 1).size();
    for (Eigen::Index r = 0; r < t.rows(); ++r)
      width[l] = std::max(width[l], t(r, l).get_str().size());
  }
  os << " ";
  for (int l = 0; l < m; ++l) {
    std::string h = tail_label(l + 1);
    os << ' ' << std::string(width[l] - h.size(), ' ') << h;
  }
  os << '\n';
  for (Eigen::Index r = 0; r < t.rows(); ++r) {
    os << " ";
    for (int l = 0; l < m; ++l) {
      std::string c = t(r, l) == 0 ? "." : t(r, l).get_str();
      os << ' ' << std::string(width[l] - c.size(), ' ') << c;
    }
    os << '\n';
  }
}

std::string element_factor_to_string(const GroupElement& x,
                                     const GroupElement& y) {
  return "[" + element_to_string(x) + ", " + element_to_string(y) + "]";
}

// Tailed relations in tail order: for each generator the power relation,
// then its stored commutators.
void print_tailed(std::ostringstream& os, const TailedPresentation& tp) {
  const PcPresentation& p = tp.base;
  for (int i = 1; i <= p.n; ++i) {
    os << "  g" << i << "^" << p.orders[i - 1] << " = ";
    if (!p.power_rhs[i - 1].empty())
      os << word_to_string(p.power_rhs[i - 1]) << "*";
    os << tail_label(tp.tail_of_power(i)) << '\n';
    for (int j = 1; j < i; ++j) {
      int l = tp.tail_of_comm(i, j);
      if (l == 0) continue;
      os << "  [g" << i << ",g" << j << "] = ";
      if (const Word* w = p.comm(i, j); w && !w->empty())
        os << word_to_string(*w) << "*";
      os << tail_label(l) << '\n';
    }
  }
}

const char* check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::TripleAssoc: return "tripleAssoc";
    case CheckKind::LeftPower: return "leftPower";
    case CheckKind::RightPower: return "rightPower";
    case CheckKind::SelfPower: return "selfPower";
  }
  return "?";
}

json vec_to_json(const IntVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).get_str());
  return a;
}

json mat_to_json(const IntMat& t) {
  json a = json::array();
  for (Eigen::Index r = 0; r < t.rows(); ++r)
    a.push_back(vec_to_json(t.row(r).transpose()));
  return a;
}

json ints_to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& d : v) a.push_back(d.get_str());
  return a;
}

json provenance_to_json(const RelationProvenance& from,
                        const PcPresentation& p) {
  json j;
  if (from.kind == RelationProvenance::Kind::Consistency) {
    j["kind"] = "consistency";
    j["check"] = describe(from.check, p);
    j["checkKind"] = check_kind_name(from.check.kind);
    j["k"] = from.check.k;
    j["j"] = from.check.j;
    j["i"] = from.check.i;
  } else {
    j["kind"] = "commuting";
    j["x"] = element_to_string(from.x);
    j["y"] = element_to_string(from.y);
  }
  return j;
}

json expression_to_json(const CommutatorExpression& e) {
  json factors = json::array();
  for (const auto& f : e.gen_factors)
    factors.push_back({{"i", f.i}, {"j", f.j}, {"sign", f.sign}});
  for (const auto& f : e.elem_factors)
    factors.push_back(
        {{"x", element_to_string(f.x)}, {"y", element_to_string(f.y)}});
  return factors;
}

json expansions_to_json(const B0Result& r) {
  json j = json::object();
  for (Eigen::Index l = 0; l < r.expansions.rows(); ++l) {
    json terms = json::array();
    for (Eigen::Index c = 0; c < r.expansions.cols(); ++c)
      if (r.expansions(l, c) != 0)
        terms.push_back(
            {r.tstar_index[static_cast<size_t>(c)], r.expansions(l, c).get_str()});
    if (!terms.empty())
      j[tail_label(static_cast<int>(l) + 1)] = std::move(terms);
  }
  return j;
}

std::string expansion_rhs(const B0Result& r, Eigen::Index l) {
  std::string s;
  for (Eigen::Index c = 0; c < r.expansions.cols(); ++c) {
    const Int& e = r.expansions(l, c);
    if (e == 0) continue;
    if (!s.empty()) s += ' ';
    s += star_label(r.tstar_index[static_cast<size_t>(c)]);
    if (e != 1) s += "^" + e.get_str();
  }
  return s;
}

std::string render_text(const GroupReport& r) {
  const PcPresentation& p = r.b0.presentation;
  const TailedPresentation& tp = r.b0.tailed;
  std::ostringstream os;

  os << "Group " << (p.name.empty() ? "G" : p.name);
  if (r.family) os << " (family " << *r.family << ")";
  os << ": " << p.n << " generators, order " << p.order().get_str() << "\n\n";

  os << "Presentation:\n";
  print_presentation(os, p, p.n, {}, "  ");

  os << "\nTailed relations (" << tp.m << " tails):\n";
  print_tailed(os, tp);

  os << "\nConsistency relations (new rows only):\n";
  if (r.table.consistency.empty()) os << "  none\n";
  for (const RelationRow& row : r.table.consistency)
    os << "  " << describe(row.from.check, p) << "  =>  "
       << row_to_relation(row.v) << '\n';

  os << "\nCommuting-pair relations (new rows only):\n";
  if (r.table.commuting.empty()) os << "  none\n";
  for (const RelationRow& row : r.table.commuting)
    os << "  " << element_factor_to_string(row.from.x, row.from.y) << "  =>  "
       << row_to_relation(row.v) << '\n';

  os << "\nRelation lattice (Hermite normal form, " << r.b0.hnf_basis.rows()
     << " x " << tp.m << "):\n";
  if (r.b0.hnf_basis.rows() == 0) os << "  (zero lattice)\n";
  else print_matrix(os, r.b0.hnf_basis);

  os << "\nElementary divisors: "
     << (r.b0.divisors.empty() ? "none" : join_ints(r.b0.divisors)) << '\n';
  os << "Free rank: " << r.b0.free_rank << '\n';

  os << "\nB0(G) = " << group_name(r.b0.b0) << '\n';
  for (size_t c = 0; c < r.b0.tstar_index.size(); ++c)
    os << "  generator " << star_label(r.b0.tstar_index[c]) << " of order "
       << r.b0.b0[c].get_str() << '\n';

  if (!r.b0.b0.empty()) {
    os << "\nTail expansions (nontrivial):\n";
    bool any = false;
    for (Eigen::Index l = 0; l < r.b0.expansions.rows(); ++l) {
      std::string rhs = expansion_rhs(r.b0, l);
      if (rhs.empty()) continue;
      any = true;
      os << "  " << tail_label(static_cast<int>(l) + 1) << " = " << rhs << '\n';
    }
    if (!any) os << "  none\n";

    os << "\nCP central extension (order " << r.b0.cp.order().get_str()
       << "):\n";
    print_presentation(os, r.b0.cp, p.n, r.b0.tstar_index, "  ");

    os << "\nNonuniversal commutator relations:\n";
    for (size_t c = 0; c < r.words.size(); ++c)
      os << "  " << star_label(r.b0.tstar_index[c]) << " = "
         << expression_to_string(r.words[c].expr) << '\n';
  }

  os << "\nSchur multiplier M(G) = " << group_name(r.schur.invariants)
     << " (free rank " << r.schur.free_rank << "); |B0| divides |M(G)|\n";
  os << "Checks: commuting pairs lift ("
     << (r.cp_ok ? "pass" : "FAIL") << "); |[E,E]| = |[G,G]| * |B0| ("
     << (r.ext_square_ok ? "pass" : "FAIL") << ")\n";
  return os.str();
}

json report_to_json(const GroupReport& r) {
  const PcPresentation& p = r.b0.presentation;
  json j;
  j["family"] = r.family ? json(*r.family) : json(nullptr);
  j["name"] = p.name;
  j["n"] = p.n;
  j["m"] = r.b0.tailed.m;
  json rows = json::array();
  for (const RelationRow& row : r.b0.rows)
    rows.push_back({{"vector", vec_to_json(row.v)},
                    {"provenance", provenance_to_json(row.from, p)}});
  j["rows"] = std::move(rows);
  j["hnf"] = mat_to_json(r.b0.hnf_basis);
  j["divisors"] = ints_to_json(r.b0.divisors);
  j["freeRank"] = r.b0.free_rank;
  j["b0"] = ints_to_json(r.b0.b0);
  j["expansions"] = expansions_to_json(r.b0);
  j["cpPresentation"] = json::parse(serialize(r.b0.cp, Format::Json));
  json words = json::array();
  for (size_t c = 0; c < r.words.size(); ++c)
    words.push_back(
        {{"target", star_label(r.b0.tstar_index[c])},
         {"regime", r.words[c].regime == WordSearchResult::Regime::GeneratorPairs
                        ? "generatorPairs"
                        : "arbitraryPairs"},
         {"expression", expression_to_string(r.words[c].expr)},
         {"factors", expression_to_json(r.words[c].expr)}});
  j["generatorWords"] = std::move(words);
  j["schur"] = {{"divisors", ints_to_json(r.schur.divisors)},
                {"freeRank", r.schur.free_rank}};
  j["checks"] = {{"cp", r.cp_ok}, {"extSquare", r.ext_square_ok}};
  return j;
}

std::string render_csv(const GroupReport& r) {
  const PcPresentation& p = r.b0.presentation;
  std::ostringstream os;
  os << "name,family,n,m,free_rank,divisors,b0,schur,cp_check,ext_square_check\n";
  os << p.name << ',' << (r.family ? std::to_string(*r.family) : "") << ','
     << p.n << ',' << r.b0.tailed.m << ',' << r.b0.free_rank << ','
     << join_ints(r.b0.divisors) << ',' << join_ints(r.b0.b0) << ','
     << join_ints(r.schur.invariants) << ',' << (r.cp_ok ? "pass" : "fail")
     << ',' << (r.ext_square_ok ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace

ReportFormat parse_report_format(const std::string& s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown format: " + s +
                              " (expected text, json or csv)");
}

std::string expression_to_string(const CommutatorExpression& e) {
  std::string s;
  for (const auto& f : e.gen_factors) {
    if (!s.empty()) s += ' ';
    s += "[g" + std::to_string(f.i) + ",g" + std::to_string(f.j) + "]";
    if (f.sign < 0) s += "^-1";
  }
  for (const auto& f : e.elem_factors) {
    if (!s.empty()) s += ' ';
    s += element_factor_to_string(f.x, f.y);
  }
  return s.empty() ? "1" : s;
}

GroupReport build_report(const PcPresentation& p, const PipelineOptions& options,
                         int max_word_len) {
  GroupReport r;
  r.b0 = compute_b0(p, options);
  r.schur = compute_schur(p);
  r.cp_ok = cp_check(p, r.b0.cp);
  Int derived = static_cast<Int>(derived_subgroup(p).size());
  Int b0_order = 1;
  for (const Int& d : r.b0.b0) b0_order *= d;
  r.ext_square_ok = exterior_square_order(r.b0.cp) == derived * b0_order;
  r.table = novel_rows(r.b0.tailed, options.mode);
  for (size_t c = 0; c < r.b0.b0.size(); ++c)
    r.words.push_back(
        b0_generator_word(r.b0, static_cast<int>(c), max_word_len));
  return r;
}

std::string render(const GroupReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return render_text(r);
    case ReportFormat::Json: return report_to_json(r).dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(r);
  }
  return {};
}

SchurReport build_schur_report(const PcPresentation& p) {
  SchurReport r;
  r.presentation = p;
  r.schur = compute_schur(p);
  r.b0 = compute_b0(p).b0;
  return r;
}

std::string render(const SchurReport& r, ReportFormat format) {
  const PcPresentation& p = r.presentation;
  Int b0_order = 1, schur_order = 1;
  for (const Int& d : r.b0) b0_order *= d;
  for (const Int& d : r.schur.invariants) schur_order *= d;
  switch (format) {
    case ReportFormat::Text: {
      std::ostringstream os;
      os << "Group " << (p.name.empty() ? "G" : p.name);
      if (r.family) os << " (family " << *r.family << ")";
      os << ": " << p.n << " generators, order " << p.order().get_str()
         << "\n\n";
      os << "Fully tailed profile: " << r.schur.m << " tails\n";
      os << "Elementary divisors: "
         << (r.schur.divisors.empty() ? "none" : join_ints(r.schur.divisors))
         << '\n';
      os << "Free rank: " << r.schur.free_rank << '\n';
      os << "M(G) = " << group_name(r.schur.invariants) << '\n';
      os << "B0(G) = " << group_name(r.b0) << "; |B0| = " << b0_order.get_str()
         << " divides |M(G)| = " << schur_order.get_str() << '\n';
      return os.str();
    }
    case ReportFormat::Json: {
      json j;
      j["family"] = r.family ? json(*r.family) : json(nullptr);
      j["name"] = p.name;
      j["n"] = p.n;
      j["m"] = r.schur.m;
      j["divisors"] = ints_to_json(r.schur.divisors);
      j["freeRank"] = r.schur.free_rank;
      j["invariants"] = ints_to_json(r.schur.invariants);
      j["b0"] = ints_to_json(r.b0);
      return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "name,family,n,m,free_rank,divisors,invariants,b0\n";
      os << p.name << ',' << (r.family ? std::to_string(*r.family) : "") << ','
         << p.n << ',' << r.schur.m << ',' << r.schur.free_rank << ','
         << join_ints(r.schur.divisors) << ',' << join_ints(r.schur.invariants)
         << ',' << join_ints(r.b0) << '\n';
      return os.str();
    }
  }
  return {};
}

CorpusRunResult run_corpus(CommutingMode mode) {
  CorpusRunResult out;
  out.all_match = true;
  for (const CorpusEntry& e : corpus()) {
    auto t0 = std::chrono::steady_clock::now();
    B0Result r = compute_b0(e.presentation, PipelineOptions{mode});
    auto t1 = std::chrono::steady_clock::now();
    CorpusRunResult::Row row;
    row.family = e.family;
    if (e.catalog_id > 0) row.gap_id = e.catalog_id;
    row.m = e.m;
    row.b0 = r.b0;
    row.expected = e.b0;
    row.match = r.b0 == e.b0;
    row.seconds = std::chrono::duration<double>(t1 - t0).count();
    out.total_seconds += row.seconds;
    out.all_match = out.all_match && row.match;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string render(const CorpusRunResult& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: {
      std::ostringstream os;
      int matches = 0;
      for (const auto& row : r.rows) {
        matches += row.match;
        os << "family " << row.family << "  m=" << row.m
           << "  B0 = " << group_name(row.b0) << "  expected "
           << group_name(row.expected) << "  "
           << (row.match ? "ok" : "MISMATCH") << '\n';
      }
      os << "\nNontrivial families:\n";
      for (const auto& row : r.rows)
        if (!row.expected.empty() || !row.b0.empty()) {
          os << "  family " << row.family;
          if (row.gap_id) os << " (id " << *row.gap_id << ")";
          os << ": " << group_name(row.b0) << '\n';
        }
      os << '\n'
         << matches << "/" << r.rows.size() << " match\n"
         << "catalog metadata: " << kCatalogNontrivialCount << " of "
         << kCatalogGroupCount
         << " groups of this order lie in nontrivial families\n";
      return os.str();
    }
    case ReportFormat::Json: {
      json families = json::array();
      for (const auto& row : r.rows)
        families.push_back({{"family", row.family},
                            {"gapId", row.gap_id ? json(*row.gap_id) : json(nullptr)},
                            {"m", row.m},
                            {"b0", ints_to_json(row.b0)},
                            {"expected", ints_to_json(row.expected)},
                            {"match", row.match}});
      json j;
      j["families"] = std::move(families);
      j["allMatch"] = r.all_match;
      j["catalog"] = {{"groups", kCatalogGroupCount},
                      {"nontrivialGroups", kCatalogNontrivialCount}};
      return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "family,gap_id,m,b0,expected,match\n";
      for (const auto& row : r.rows)
        os << row.family << ','
           << (row.gap_id ? std::to_string(*row.gap_id) : "") << ',' << row.m
           << ',' << join_ints(row.b0) << ',' << join_ints(row.expected) << ','
           << (row.match ? "1" : "0") << '\n';
      return os.str();
    }
  }
  return {};
}

}  // namespace b0
