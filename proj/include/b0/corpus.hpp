#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "b0/engine.hpp"
#include "b0/intmat.hpp"
#include "b0/pipeline.hpp"
#include "b0/presentation.hpp"

namespace b0 {

// Catalogue totals behind the bundled corpus: the number of groups of order
// 128 overall, and how many of them have nontrivial B0.  The corpus itself
// holds one representative presentation per isoclinism family.
inline constexpr int kCatalogGroupCount = 2328;
inline constexpr int kCatalogNontrivialCount = 230;

// One corpus group together with the independently tabulated results the
// pipeline is expected to reproduce (fields prefixed reference_).
struct CorpusEntry {
  int family = 0;      // 1-based corpus index
  int catalog_id = 0;  // small-group library number of the representative
  PcPresentation presentation;
  int m = 0;  // tail count of the B0 profile

  std::vector<Int> b0;                  // invariant factors > 1
  std::vector<Int> reference_divisors;  // full divisor list, units included

  // Nonzero relation rows as tabulated, keyed by the overlap they came from.
  std::vector<std::pair<CheckId, IntVec>> reference_consistency;
  struct CommutingRow {
    GroupElement x, y;
    IntVec v;
  };
  std::vector<CommutingRow> reference_commuting;
  IntMat reference_t;  // reduced relation matrix (possibly 0 x m)

  // Populated only when b0 is nontrivial.
  IntMat reference_transition;  // m x m basis change; column k expands t*_k
  IntMat reference_expansions;  // m x |b0| torsion coordinates of each tail
  std::vector<int> reference_tstar;  // 1-based SNF positions of the b0 part
  std::optional<PcPresentation> reference_cp;
  std::vector<int> reference_tstar_gen;  // cp generator per b0 component
  struct WordSpec {
    int component = 0;  // index into b0 / reference_tstar_gen
    CommutatorExpression expr;
  };
  std::vector<WordSpec> reference_words;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(int family);

// Raw bundled presentation sources (grammar text), e.g. for CLI tests.
struct CorpusFile {
  std::string name;
  std::string text;
};
const std::vector<CorpusFile>& corpus_files();

// FNV-1a over every embedded byte; pinned in tests to guard the bundle.
std::uint64_t corpus_checksum();

}  // namespace b0
