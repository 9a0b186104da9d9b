#pragma once

#include <optional>
#include <string>
#include <vector>

#include "b0/engine.hpp"
#include "b0/lattice.hpp"
#include "b0/structure.hpp"

namespace b0 {

// How commuting-pair relations are harvested: Default pairs each conjugacy
// class representative with a generating set of its centralizer; AllPairs
// runs every ordered commuting pair of the group (slow cross-check).
enum class CommutingMode { Default, AllPairs };

struct RelationProvenance {
  enum class Kind { Consistency, Commuting } kind;
  CheckId check;     // Consistency rows
  GroupElement x, y;  // Commuting rows: the commuting pair [x,y]
};

struct RelationRow {
  IntVec v;
  RelationProvenance from;
};

// One row per overlap check of the tailed presentation: the tail vector of
// (collected side) - (relation-substituted side).  The group parts agree,
// so the difference is a pure tail vector.
std::vector<RelationRow> consistency_relations(const TailedPresentation& tp);

// Tail vectors t([x,y]) for commuting pairs (x,y) of the base group.
std::vector<RelationRow> commuting_relations(const TailedPresentation& tp,
                                             CommutingMode mode);

// The scan rows that genuinely extend the relation lattice, listed the way a
// report prints them: associativity checks before power checks, deepest
// generator indices first, then the commuting-pair rows in scan order.  Each
// selected row lies outside the lattice spanned by its predecessors, and
// together they span the same lattice as the full scans.
struct NovelRows {
  std::vector<RelationRow> consistency;
  std::vector<RelationRow> commuting;
};
NovelRows novel_rows(const TailedPresentation& tp,
                     CommutingMode mode = CommutingMode::Default);

// Thrown when the relation lattice does not leave a free abelian quotient
// of rank n; indicates a harvesting or input defect, not bad input syntax.
struct FreeRankMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct B0Result {
  PcPresentation presentation;
  TailedPresentation tailed;       // default tail profile, m tails
  std::vector<RelationRow> rows;   // harvested, zero rows and duplicates dropped
  IntMat t;                        // the rows as a matrix (rows x m)
  IntMat hnf_basis;                // canonical basis of the relation lattice
  std::vector<Int> divisors;       // nonzero elementary divisors
  int free_rank = 0;               // always n
  std::vector<Int> b0;             // divisors > 1: the invariants of B0(G)
  std::vector<int> tstar_index;    // 1-based diagonal positions of b0 entries
  // expansions(l, c): coefficient of the c-th surviving generator in the
  // image of tail l+1, reduced mod b0[c]
  IntMat expansions;
  PcPresentation cp;               // central extension on n + b0.size() gens
};

struct PipelineOptions {
  CommutingMode mode = CommutingMode::Default;
};

// Full B0 pipeline: harvest relations, take Smith invariants, build the
// commutativity-preserving central extension.  Throws FreeRankMismatch
// when the free rank is not n, InconsistentPresentation on bad input.
B0Result compute_b0(const PcPresentation& p, const PipelineOptions& options = {});

struct SchurResult {
  int m = 0;                    // n + n(n-1)/2 tails
  std::vector<Int> divisors;    // nonzero elementary divisors
  int free_rank = 0;            // always n
  std::vector<Int> invariants;  // divisors > 1: abelian invariants of M(G)
};

// Schur multiplier from the fully tailed presentation (every relation,
// including trivial commutators, carries a tail); consistency rows only.
SchurResult compute_schur(const PcPresentation& p);

// True when every commuting pair of g lifts (with zero tail part) to a
// commuting pair of the extension e.  e must extend g: same leading n
// generators, extra generators central.
bool cp_check(const PcPresentation& g, const PcPresentation& e);

// Order of the derived subgroup of the extension; the defining law is
// |[E,E]| = |[G,G]| * |B0(G)|.
Int exterior_square_order(const PcPresentation& e);

// A product of commutators multiplying out to a target element.
struct CommutatorExpression {
  struct GenFactor {
    int i, j;  // j < i, generator indices
    int sign;  // +1 or -1
  };
  struct ElemFactor {
    GroupElement x, y;  // [x,y] of arbitrary elements
  };
  // exactly one of the two is populated
  std::vector<GenFactor> gen_factors;
  std::vector<ElemFactor> elem_factors;
};

struct WordSearchResult {
  enum class Regime { GeneratorPairs, ArbitraryPairs };
  Regime regime = Regime::GeneratorPairs;
  CommutatorExpression expr;
};

// Shortest product of generator-pair commutators [g_i,g_j]^{+-1} (i > j)
// in the extension r.cp that equals the c-th B0 generator (0-based c).
// Breadth-first, ties broken by the enumeration order (i, then j, then
// sign +1 before -1).  Falls back to commutators of arbitrary extension
// elements; throws WordNotFound if both regimes exhaust max_len.
WordSearchResult b0_generator_word(const B0Result& r, int c, int max_len = 4);

// Evaluates expr in the extension e and compares with target.
bool verify_expression(const PcPresentation& e, const CommutatorExpression& expr,
                       const GroupElement& target);

}  // namespace b0
