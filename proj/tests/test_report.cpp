#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include <json.hpp>

#include "b0/corpus.hpp"
#include "b0/report.hpp"

using namespace b0;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const GroupReport& report_of(int family) {
  static std::map<int, GroupReport> cache;
  auto it = cache.find(family);
  if (it == cache.end()) {
    GroupReport r = build_report(corpus_entry(family).presentation);
    r.family = family;
    it = cache.emplace(family, std::move(r)).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_report_format("text") == ReportFormat::Text);
  CHECK(parse_report_format("json") == ReportFormat::Json);
  CHECK(parse_report_format("csv") == ReportFormat::Csv);
  CHECK_THROWS_AS(parse_report_format("yaml"), std::invalid_argument);
}

TEST_CASE("expression rendering") {
  CommutatorExpression e;
  CHECK(expression_to_string(e) == "1");
  e.gen_factors = {{3, 1, 1}, {3, 2, -1}, {4, 2, 1}};
  CHECK(expression_to_string(e) == "[g3,g1] [g3,g2]^-1 [g4,g2]");
  CommutatorExpression f;
  f.elem_factors.push_back(
      {GroupElement{{1, 1, 0}}, GroupElement{{0, 0, 1}}});
  CHECK(expression_to_string(f) == "[g1*g2, g3]");
}

TEST_CASE("text report walks through a nontrivial group") {
  std::string text = render(report_of(16), ReportFormat::Text);
  CHECK(contains(text, "Group family-016 (family 16): 7 generators, order 128"));
  CHECK(contains(text, "Tailed relations (12 tails):"));
  CHECK(contains(text, "[g3,g2] = g6*g7*t6"));
  // the consistency table, in report order
  CHECK(contains(text, "g4^2 g2 = g4 (g4 g2)  =>  t9^2 t11 = 1"));
  CHECK(contains(text, "g2 g1^2 = (g2 g1) g1  =>  t3^2 t7 t8 t11 = 1"));
  CHECK(contains(text, "Commuting-pair relations (new rows only):\n  none"));
  CHECK(contains(text, "Hermite normal form, 5 x 12"));
  CHECK(contains(text, "Elementary divisors: 1 1 1 1 2"));
  CHECK(contains(text, "Free rank: 7"));
  CHECK(contains(text, "B0(G) = C2"));
  CHECK(contains(text, "generator t5* of order 2"));
  CHECK(contains(text, "t5 = t5*"));
  CHECK(contains(text, "CP central extension (order 256):"));
  CHECK(contains(text, "[g3,g1] = g7*t5*"));
  CHECK(contains(text, "t5*^2 = 1"));
  CHECK(contains(text, "\n  t5* = [g"));
  CHECK(contains(text, "commuting pairs lift (pass)"));
  CHECK(contains(text, "|[E,E]| = |[G,G]| * |B0| (pass)"));
}

TEST_CASE("text report for a trivial multiplier and a rank-two one") {
  std::string one = render(report_of(1), ReportFormat::Text);
  CHECK(contains(one, "B0(G) = 1"));
  CHECK(!contains(one, "CP central extension"));  // no torsion generators

  std::string thirty = render(report_of(30), ReportFormat::Text);
  CHECK(contains(thirty, "B0(G) = C2 x C2"));
  CHECK(contains(thirty, "CP central extension (order 512):"));
}

TEST_CASE("json schema") {
  std::string text = render(report_of(16), ReportFormat::Json);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["family"] == 16);
  CHECK(j["name"] == "family-016");
  CHECK(j["n"] == 7);
  CHECK(j["m"] == 12);
  CHECK(j["freeRank"] == 7);
  CHECK(j["b0"] == nlohmann::json::array({"2"}));
  CHECK(j["divisors"].size() == 5);
  CHECK(j["hnf"].size() == 5);
  CHECK(j["hnf"][0].size() == 12);
  CHECK(j["rows"].size() >= 6);
  for (const auto& row : j["rows"]) {
    CHECK(row.contains("vector"));
    std::string kind = row["provenance"]["kind"];
    CHECK((kind == "consistency" || kind == "commuting"));
  }
  CHECK(j["expansions"].contains("t5"));
  CHECK(j["cpPresentation"]["n"] == 8);
  CHECK(j["generatorWords"].size() == 1);
  CHECK(j["generatorWords"][0]["target"] == "t5*");
  CHECK(j["schur"]["freeRank"] == 7);
  CHECK(j["checks"]["cp"] == true);
  CHECK(j["checks"]["extSquare"] == true);

  // deterministic: rendering twice is byte-identical
  CHECK(render(report_of(16), ReportFormat::Json) == text);
}

TEST_CASE("csv summary") {
  std::string text = render(report_of(30), ReportFormat::Csv);
  CHECK(contains(
      text, "name,family,n,m,free_rank,divisors,b0,schur,cp_check,"
            "ext_square_check"));
  CHECK(contains(text, "family-030,30,7,12,7,1 1 1 2 2,2 2,"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("schur report") {
  SchurReport r = build_schur_report(corpus_entry(16).presentation);
  r.family = 16;
  std::string text = render(r, ReportFormat::Text);
  CHECK(contains(text, "Fully tailed profile: 28 tails"));
  CHECK(contains(text, "M(G) = C2 x C2"));
  CHECK(contains(text, "B0(G) = C2; |B0| = 2 divides |M(G)| = 4"));

  nlohmann::json j =
      nlohmann::json::parse(render(r, ReportFormat::Json));
  CHECK(j["m"] == 28);
  CHECK(j["invariants"] == nlohmann::json::array({"2", "2"}));

  // hand-checkable small case: the Klein four-group has M(G) = C2
  PcPresentation klein;
  klein.n = 2;
  klein.orders = {2, 2};
  klein.power_rhs = {{}, {}};
  SchurReport k = build_schur_report(klein);
  CHECK(k.schur.invariants == std::vector<Int>{2});
  CHECK(contains(render(k, ReportFormat::Text), "M(G) = C2"));
}

TEST_CASE("corpus runner") {
  CorpusRunResult r = run_corpus();
  REQUIRE(r.rows.size() == 115);
  CHECK(r.all_match);
  int nontrivial = 0;
  for (const auto& row : r.rows) nontrivial += !row.b0.empty();
  CHECK(nontrivial == 11);

  std::string text = render(r, ReportFormat::Text);
  CHECK(contains(text, "115/115 match"));
  CHECK(contains(text, "family 30 (id 1544): C2 x C2"));
  CHECK(contains(text, "230 of 2328"));

  std::string csv = render(r, ReportFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 116);
  CHECK(contains(csv, "16,227,12,2,2,1"));

  nlohmann::json j = nlohmann::json::parse(render(r, ReportFormat::Json));
  CHECK(j["allMatch"] == true);
  CHECK(j["families"].size() == 115);
  CHECK(j["catalog"]["groups"] == 2328);
}
