#pragma once

#include <optional>
#include <string>
#include <vector>

#include "b0/pipeline.hpp"

namespace b0 {

enum class ReportFormat { Text, Json, Csv };

// "text" | "json" | "csv"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& s);

// Everything a single-group report prints.
struct GroupReport {
  std::optional<int> family;  // set when the input is a bundled family
  B0Result b0;
  SchurResult schur;
  bool cp_ok = false;
  bool ext_square_ok = false;
  NovelRows table;                      // the rows a text report lists
  std::vector<WordSearchResult> words;  // one per B0 generator
};

GroupReport build_report(const PcPresentation& p,
                         const PipelineOptions& options = {},
                         int max_word_len = 4);

// Text mirrors the tabulated walkthrough of one group: presentation, tailed
// relations, consistency and commuting rows with their provenance, the
// lattice basis, divisors, B0, expansions, the CP extension, and one
// commutator word per B0 generator.  Json is a stable machine schema; csv
// is a one-row summary.
std::string render(const GroupReport& r, ReportFormat format);

struct SchurReport {
  std::optional<int> family;
  PcPresentation presentation;
  SchurResult schur;
  std::vector<Int> b0;  // for the divisibility remark
};

SchurReport build_schur_report(const PcPresentation& p);
std::string render(const SchurReport& r, ReportFormat format);

// "[g3,g1] [g3,g2]^-1 [g4,g2]" or "[g1*g2, g3]" for element factors;
// the empty expression renders as "1".
std::string expression_to_string(const CommutatorExpression& e);

// --- corpus runner ------------------------------------------------------

struct CorpusRunResult {
  struct Row {
    int family = 0;
    std::optional<int> gap_id;
    int m = 0;
    std::vector<Int> b0;        // computed invariants
    std::vector<Int> expected;  // bundled invariants
    bool match = false;
    double seconds = 0;
  };
  std::vector<Row> rows;  // by family
  bool all_match = false;
  double total_seconds = 0;
};

CorpusRunResult run_corpus(CommutingMode mode = CommutingMode::Default);

// Text: one line per family plus a summary block of the nontrivial
// families; csv: header + one row per family; json: the same data.
std::string render(const CorpusRunResult& r, ReportFormat format);

}  // namespace b0
