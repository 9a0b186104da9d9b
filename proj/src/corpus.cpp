#include "b0/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <regex>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "b0/corpus_data.hpp"

namespace b0 {

namespace {

using nlohmann::json;

// Overlap descriptions are tabulated as strings like
//   "g_{4}^2 g_{2} = g_{4} (g_{4} g_{2})"      (left power)
//   "g_{2} g_{1}^{2} = (g_{2} g_{1}) g_{1}"     (right power)
//   "g_{3}(g_{2} g_{1}) = (g_{3} g_{2}) g_{1}"  (triple overlap)
//   "g_{1}^{2} g_{1} = g_{1} g_{1}^{2}"         (self power)
CheckId parse_check(const std::string& s) {
  static const std::regex triple(
      R"(^g_\{(\d+)\}\(g_\{(\d+)\} g_\{(\d+)\}\) = .*)");
  static const std::regex left_or_self(
      R"(^g_\{(\d+)\}\^\{?\d+\}? g_\{(\d+)\} = .*)");
  static const std::regex right(
      R"(^g_\{(\d+)\} g_\{(\d+)\}\^\{?\d+\}? = .*)");
  std::smatch mm;
  if (std::regex_match(s, mm, triple))
    return {CheckKind::TripleAssoc, std::stoi(mm[1]), std::stoi(mm[2]),
            std::stoi(mm[3])};
  if (std::regex_match(s, mm, left_or_self)) {
    int j = std::stoi(mm[1]), i = std::stoi(mm[2]);
    if (j == i) return {CheckKind::SelfPower, 0, 0, i};
    return {CheckKind::LeftPower, 0, j, i};
  }
  if (std::regex_match(s, mm, right))
    return {CheckKind::RightPower, 0, std::stoi(mm[1]), std::stoi(mm[2])};
  throw std::runtime_error("unrecognized overlap description: " + s);
}

Word word_from_json(const json& jw) {
  Word w;
  for (const auto& f : jw) w.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
  return w;
}

IntVec vec_from_json(const json& jv, int m) {
  if (static_cast<int>(jv.size()) != m)
    throw std::runtime_error("tabulated vector has wrong length");
  IntVec v(m);
  for (int i = 0; i < m; ++i) v(i) = Int(jv.at(i).get<long>());
  return v;
}

GroupElement element_from_gens(const PcPresentation& p,
                               const std::vector<int>& gens) {
  GroupElement x = identity(p);
  int prev = 0;
  for (int g : gens) {
    if (g <= prev || g > p.n)
      throw std::runtime_error("tabulated element is not in normal form");
    x.exps[g - 1] = 1;
    prev = g;
  }
  return x;
}

PcPresentation presentation_from_json(const json& jp, std::string name) {
  PcPresentation p;
  p.name = std::move(name);
  p.n = jp.at("n").get<int>();
  for (const auto& e : jp.at("orders")) p.orders.push_back(e.get<int>());
  p.power_rhs.resize(p.n);
  for (const auto& [key, jw] : jp.at("powers").items())
    p.power_rhs[std::stoi(key) - 1] = word_from_json(jw);
  for (const auto& [key, jw] : jp.at("comms").items()) {
    auto comma = key.find(',');
    int i = std::stoi(key.substr(0, comma));
    int j = std::stoi(key.substr(comma + 1));
    p.comm_rhs[{i, j}] = word_from_json(jw);
  }
  check_well_formed(p);
  return p;
}

CorpusEntry build_entry(const json& jf, const std::string& pc_text) {
  CorpusEntry e;
  e.family = jf.at("family").get<int>();
  if (!jf.at("gap_id").is_null()) e.catalog_id = jf.at("gap_id").get<int>();
  e.presentation = parse_presentation(pc_text);
  e.m = jf.at("m").get<int>();
  const int n = e.presentation.n;

  for (const auto& d : jf.at("b0")) e.b0.push_back(Int(d.get<long>()));
  const json& jd = jf.at("printed_divisors");
  if (jd.is_array()) {
    for (const auto& d : jd) e.reference_divisors.push_back(Int(d.get<long>()));
  } else if (jd.is_string()) {  // every divisor is a unit
    e.reference_divisors.assign(e.m - n, Int(1));
  }  // null: no relations at all

  for (const auto& jr : jf.at("printed_consistency"))
    e.reference_consistency.emplace_back(
        parse_check(jr.at("check").get<std::string>()),
        vec_from_json(jr.at("vector"), e.m));
  for (const auto& jr : jf.at("printed_commuting")) {
    CorpusEntry::CommutingRow row;
    row.x = element_from_gens(e.presentation, jr.at("x").get<std::vector<int>>());
    row.y = element_from_gens(e.presentation, jr.at("y").get<std::vector<int>>());
    row.v = vec_from_json(jr.at("vector"), e.m);
    e.reference_commuting.push_back(std::move(row));
  }

  const json& jt = jf.at("printed_T");
  e.reference_t = IntMat(jt.is_null() ? 0 : static_cast<Eigen::Index>(jt.size()),
                         e.m);
  if (!jt.is_null())
    for (Eigen::Index r = 0; r < e.reference_t.rows(); ++r)
      e.reference_t.row(r) = vec_from_json(jt.at(r), e.m).transpose();

  if (e.b0.empty()) {
    e.reference_transition = IntMat(0, 0);
    e.reference_expansions = IntMat(e.m, 0);
    return e;
  }

  for (size_t k = 0; k < e.reference_divisors.size(); ++k)
    if (e.reference_divisors[k] > 1)
      e.reference_tstar.push_back(static_cast<int>(k) + 1);

  const json& jtr = jf.at("transition");
  e.reference_transition = IntMat(e.m, e.m);
  for (int r = 0; r < e.m; ++r)
    e.reference_transition.row(r) = vec_from_json(jtr.at(r), e.m).transpose();

  const int nb = static_cast<int>(e.b0.size());
  e.reference_expansions = IntMat::Zero(e.m, nb);
  for (const auto& [tail, terms] : jf.at("expansions").items()) {
    for (const auto& term : terms) {
      int snf_pos = term.at(0).get<int>();
      auto it = std::find(e.reference_tstar.begin(), e.reference_tstar.end(),
                          snf_pos);
      if (it == e.reference_tstar.end())
        throw std::runtime_error("expansion hits a unit divisor position");
      e.reference_expansions(std::stoi(tail) - 1,
                             it - e.reference_tstar.begin()) =
          Int(term.at(1).get<long>());
    }
  }

  e.reference_cp = presentation_from_json(jf.at("cp"),
                                          e.presentation.name + ".cp");
  e.reference_tstar_gen.resize(nb);
  for (const auto& [k, gen] : jf.at("cp").at("tstar_gen").items()) {
    auto it = std::find(e.reference_tstar.begin(), e.reference_tstar.end(),
                        std::stoi(k));
    if (it == e.reference_tstar.end())
      throw std::runtime_error("extension generator for a unit divisor");
    e.reference_tstar_gen[it - e.reference_tstar.begin()] = gen.get<int>();
  }

  for (const auto& jw : jf.at("words")) {
    CorpusEntry::WordSpec w;
    int target = jw.at("target").get<int>();
    auto it = std::find(e.reference_tstar.begin(), e.reference_tstar.end(),
                        target);
    if (it == e.reference_tstar.end())
      throw std::runtime_error("word targets a unit divisor position");
    w.component = static_cast<int>(it - e.reference_tstar.begin());
    for (const auto& f : jw.at("factors"))
      w.expr.gen_factors.push_back(
          {f.at(0).get<int>(), f.at(1).get<int>(), f.at(2).get<int>()});
    e.reference_words.push_back(std::move(w));
  }
  return e;
}

struct CorpusStore {
  std::vector<CorpusFile> files;
  std::vector<CorpusEntry> entries;
  std::uint64_t checksum = 0;
};

const CorpusStore& store() {
  static const CorpusStore s = [] {
    CorpusStore out;
    std::uint64_t h = 14695981039346656037ull;
    auto feed = [&h](const char* bytes) {
      for (const char* p = bytes; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull;
      }
    };
    for (int i = 0; i < detail::kCorpusFileCount; ++i) {
      const detail::CorpusFileData& f = detail::kCorpusFiles[i];
      feed(f.name);
      feed(f.text);
      out.files.push_back({f.name, f.text});
    }
    feed(detail::kExpectedJson);
    out.checksum = h;

    json doc = json::parse(detail::kExpectedJson);
    if (doc.at("groups_of_order_128").get<int>() != kCatalogGroupCount ||
        doc.at("groups_with_nontrivial_b0").get<int>() !=
            kCatalogNontrivialCount)
      throw std::runtime_error("corpus catalogue totals changed");
    const json& fams = doc.at("families");
    if (static_cast<int>(fams.size()) != detail::kCorpusFileCount)
      throw std::runtime_error("corpus table and file bundle disagree");
    char name[32];
    for (const auto& jf : fams) {
      int family = jf.at("family").get<int>();
      std::snprintf(name, sizeof name, "family_%03d.pc", family);
      auto it = std::find_if(out.files.begin(), out.files.end(),
                             [&](const CorpusFile& f) { return f.name == name; });
      if (it == out.files.end())
        throw std::runtime_error(std::string("missing bundle file ") + name);
      out.entries.push_back(build_entry(jf, it->text));
    }
    return out;
  }();
  return s;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() { return store().entries; }

const CorpusEntry& corpus_entry(int family) {
  const std::vector<CorpusEntry>& all = corpus();
  if (family < 1 || family > static_cast<int>(all.size()))
    throw std::out_of_range("corpus family index out of range");
  const CorpusEntry& e = all[family - 1];
  if (e.family != family)
    throw std::logic_error("corpus entries out of order");
  return e;
}

const std::vector<CorpusFile>& corpus_files() { return store().files; }

std::uint64_t corpus_checksum() { return store().checksum; }

}  // namespace b0
