#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "b0/pipeline.hpp"

using namespace b0;

namespace {

const char* kGroup16 = R"(pcgroup 7
name sample-128
orders 2 2 2 2 2 2 2
g1^2 = g5
[g2,g1] = g4
[g3,g1] = g7
[g3,g2] = g6*g7
g4^2 = g6
[g4,g1] = g6
[g4,g2] = g6
g5^2 = g7
)";

const char* kV4 = "pcgroup 2\norders 2 2\n";
const char* kD8 = "pcgroup 3\norders 2 2 2\ng2^2 = g3\n[g2,g1] = g3\n";
const char* kQ8 =
    "pcgroup 3\norders 2 2 2\ng1^2 = g3\ng2^2 = g3\n[g2,g1] = g3\n";
const char* kC8 = "pcgroup 3\norders 2 2 2\ng1^2 = g2\ng2^2 = g3\n";

std::vector<Int> ints(const std::vector<int>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("Klein four-group: trivial B0 but Schur multiplier C2") {
  PcPresentation p = parse_presentation(kV4);
  B0Result r = compute_b0(p);
  CHECK(r.tailed.m == 2);
  CHECK(r.rows.empty());  // abelian: every harvested row is zero
  CHECK(r.divisors.empty());
  CHECK(r.free_rank == 2);
  CHECK(r.b0.empty());
  CHECK(r.cp == p);  // no new generators

  SchurResult s = compute_schur(p);
  CHECK(s.m == 3);
  CHECK(s.free_rank == 2);
  CHECK(s.invariants == ints({2}));  // the full tail profile is essential
}

TEST_CASE("small groups with known multipliers") {
  // cyclic groups have trivial multiplier and trivial B0
  PcPresentation c8 = parse_presentation(kC8);
  CHECK(compute_schur(c8).invariants.empty());
  CHECK(compute_b0(c8).b0.empty());

  // M(D8) = C2, M(Q8) = 1; both have trivial B0
  PcPresentation d8 = parse_presentation(kD8);
  CHECK(compute_schur(d8).invariants == ints({2}));
  CHECK(compute_b0(d8).b0.empty());

  PcPresentation q8 = parse_presentation(kQ8);
  CHECK(compute_schur(q8).invariants.empty());
  CHECK(compute_b0(q8).b0.empty());
}

TEST_CASE("order-128 sample: B0 = C2 end to end") {
  PcPresentation p = parse_presentation(kGroup16);
  B0Result r = compute_b0(p);
  CHECK(r.tailed.m == 12);
  CHECK(r.divisors == ints({1, 1, 1, 1, 2}));
  CHECK(r.free_rank == 7);
  CHECK(r.b0 == ints({2}));
  CHECK(r.tstar_index == std::vector<int>{5});

  // With the basis fixed by diagonalizing the canonical lattice basis, the
  // quotient sends the [g3,g1] tail (number 5) to the torsion generator.
  // (Other splittings -- e.g. tail 6 -> t* -- describe equally valid
  // extensions; the choice is pinned down here so it stays reproducible.)
  IntVec expect = IntVec::Zero(12);
  expect(4) = 1;
  CHECK(r.expansions.col(0) == expect);

  // extension: one extra central generator of order 2
  CHECK(r.cp.n == 8);
  CHECK(r.cp.orders.back() == 2);
  CHECK(r.cp.name == "sample-128.cp");
  REQUIRE(r.cp.comm(3, 1) != nullptr);
  CHECK(*r.cp.comm(3, 1) == Word{{7, 1}, {8, 1}});
  CHECK(*r.cp.comm(3, 2) == Word{{6, 1}, {7, 1}});  // unchanged
  CHECK(*r.cp.comm(2, 1) == Word{{4, 1}});          // unchanged
  CHECK(r.cp.power_rhs[0] == Word{{5, 1}});
  CHECK(r.cp.power_rhs[7].empty());
  CHECK(r.cp.order() == 256);

  CHECK(cp_check(p, r.cp));
  // |[E,E]| = |[G,G]| * |B0|
  Int der_g = exterior_square_order(p);
  Int der_e = exterior_square_order(r.cp);
  CHECK(der_g == 8);
  CHECK(der_e == der_g * 2);

  // the nonuniversal relation as a commutator word
  WordSearchResult w = b0_generator_word(r, 0);
  CHECK(w.regime == WordSearchResult::Regime::GeneratorPairs);
  CHECK_FALSE(w.expr.gen_factors.empty());
  CHECK(verify_expression(r.cp, w.expr, generator(r.cp, 8)));

  // the known length-3 expression for this group
  CommutatorExpression paper;
  paper.gen_factors = {{3, 1, +1}, {3, 2, -1}, {4, 2, +1}};
  CHECK(verify_expression(r.cp, paper, generator(r.cp, 8)));
  CHECK(static_cast<int>(w.expr.gen_factors.size()) <= 3);

  // a wrong target must not verify
  CHECK_FALSE(verify_expression(r.cp, paper, generator(r.cp, 7)));
}

TEST_CASE("commuting-pair harvesting modes agree on the lattice") {
  for (const char* src : {kV4, kD8, kQ8, kGroup16}) {
    PcPresentation p = parse_presentation(src);
    B0Result def = compute_b0(p, {CommutingMode::Default});
    B0Result all = compute_b0(p, {CommutingMode::AllPairs});
    CHECK(def.hnf_basis == all.hnf_basis);
    CHECK(def.b0 == all.b0);
    CHECK(def.divisors == all.divisors);
    // expansions are a function of the lattice, not of the harvested rows
    CHECK(def.expansions == all.expansions);
    CHECK(def.cp == all.cp);
  }
}

TEST_CASE("row provenance and matrix shape") {
  PcPresentation p = parse_presentation(kGroup16);
  B0Result r = compute_b0(p);
  REQUIRE(!r.rows.empty());
  CHECK(r.t.rows() == static_cast<Eigen::Index>(r.rows.size()));
  CHECK(r.t.cols() == 12);
  std::set<std::vector<Int>> seen;
  bool saw_consistency = false, saw_commuting = false;
  for (const RelationRow& row : r.rows) {
    CHECK_FALSE(is_zero_vec(row.v));
    std::vector<Int> key(row.v.data(), row.v.data() + row.v.size());
    CHECK(seen.insert(key).second);  // no duplicates survive
    if (row.from.kind == RelationProvenance::Kind::Consistency)
      saw_consistency = true;
    else {
      saw_commuting = true;
      // the recorded pair really commutes
      CHECK(multiply(p, row.from.x, row.from.y) ==
            multiply(p, row.from.y, row.from.x));
    }
    CHECK(lattice_contains(r.hnf_basis, row.v));
  }
  CHECK(saw_consistency);
}

TEST_CASE("tailed products associate modulo the consistency lattice") {
  PcPresentation p = parse_presentation(kGroup16);
  TailedPresentation tp = build_tailed(p);
  std::vector<RelationRow> cons = consistency_relations(tp);
  IntMat t(static_cast<Eigen::Index>(cons.size()), tp.m);
  for (size_t i = 0; i < cons.size(); ++i)
    t.row(static_cast<Eigen::Index>(i)) = cons[i].v.transpose();
  IntMat basis = hnf(t);

  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> pick(0, 127);
  for (int iter = 0; iter < 60; ++iter) {
    TailedElement a = lift(tp, element_at(p, pick(rng)));
    TailedElement b = lift(tp, element_at(p, pick(rng)));
    TailedElement c = lift(tp, element_at(p, pick(rng)));
    TailedElement left = t_multiply(tp, t_multiply(tp, a, b), c);
    TailedElement right = t_multiply(tp, a, t_multiply(tp, b, c));
    CHECK(left.g == right.g);
    CHECK(lattice_contains(basis, IntVec(left.tails - right.tails)));
  }
}

TEST_CASE("free-rank violations are reported as pipeline failures") {
  // consistent presentation, but a doctored relation matrix cannot happen
  // through the public pipeline; exercise the guard via quotient shape
  PcPresentation p = parse_presentation(kV4);
  B0Result r = compute_b0(p);
  CHECK(r.free_rank == p.n);
}
