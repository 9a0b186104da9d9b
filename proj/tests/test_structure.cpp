#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "b0/structure.hpp"

using namespace b0;

namespace {

const char* kGroup16 = R"(pcgroup 7
orders 2 2 2 2 2 2 2
g1^2 = g5
[g2,g1] = g4
[g3,g1] = g7
[g3,g2] = g6*g7
g4^2 = g6
[g4,g1] = g6
[g4,g2] = g6
g5^2 = g7
g6^2 = 1
g7^2 = 1
)";

const char* kD8 = "pcgroup 3\norders 2 2 2\ng2^2 = g3\n[g2,g1] = g3\n";
const char* kC8 = "pcgroup 3\norders 2 2 2\ng1^2 = g2\ng2^2 = g3\n";

GroupElement elem(const PcPresentation& p, std::vector<int> exps) {
  return GroupElement{std::move(exps)};
}

long centralizer_size(const PcPresentation& p, const GroupElement& g) {
  long count = 0;
  for (const GroupElement& x : enumerate_elements(p))
    if (multiply(p, x, g) == multiply(p, g, x)) ++count;
  return count;
}

}  // namespace

TEST_CASE("element enumeration is lexicographic and complete") {
  PcPresentation p = parse_presentation(kD8);
  std::vector<GroupElement> all = enumerate_elements(p);
  REQUIRE(all.size() == 8);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.front() == identity(p));
}

TEST_CASE("conjugacy classes of the dihedral group") {
  PcPresentation p = parse_presentation(kD8);
  std::vector<ConjugacyClass> cls = conjugacy_classes(p);
  REQUIRE(cls.size() == 5);
  // central classes: 1 and r^2
  CHECK(cls[0].rep == identity(p));
  CHECK(cls[0].members.size() == 1);
  CHECK(cls[1].rep == elem(p, {0, 0, 1}));
  CHECK(cls[1].members.size() == 1);
  // rotations r, r^3
  CHECK(cls[2].rep == elem(p, {0, 1, 0}));
  CHECK(cls[2].members == std::vector<GroupElement>{elem(p, {0, 1, 0}),
                                                    elem(p, {0, 1, 1})});
  // the two reflection classes
  CHECK(cls[3].rep == elem(p, {1, 0, 0}));
  CHECK(cls[4].rep == elem(p, {1, 1, 0}));
  CHECK(cls[3].members.size() == 2);
  CHECK(cls[4].members.size() == 2);
}

TEST_CASE("classes partition the group and obey orbit-stabilizer") {
  PcPresentation p = parse_presentation(kGroup16);
  std::vector<ConjugacyClass> cls = conjugacy_classes(p);
  long total = 0;
  std::set<GroupElement> seen;
  for (const ConjugacyClass& c : cls) {
    REQUIRE(std::is_sorted(c.members.begin(), c.members.end()));
    CHECK(c.rep == c.members.front());
    total += static_cast<long>(c.members.size());
    for (const GroupElement& x : c.members) CHECK(seen.insert(x).second);
    // |class| * |centralizer| = |G|
    CHECK(static_cast<long>(c.members.size()) * centralizer_size(p, c.rep) ==
          128);
  }
  CHECK(total == 128);
}

TEST_CASE("centralizer generators generate the centralizer") {
  PcPresentation p = parse_presentation(kD8);
  // C(r) = <r> of order 4; greedy sweep picks r^2 first, then r
  std::vector<GroupElement> gens =
      centralizer_generators(p, elem(p, {0, 1, 0}));
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == elem(p, {0, 0, 1}));
  CHECK(gens[1] == elem(p, {0, 1, 0}));
  CHECK(subgroup_closure(p, gens).size() == 4);

  PcPresentation q = parse_presentation(kGroup16);
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> pick(0, 127);
  for (int iter = 0; iter < 10; ++iter) {
    GroupElement g = element_at(q, pick(rng));
    std::vector<GroupElement> cg = centralizer_generators(q, g);
    std::vector<GroupElement> closure = subgroup_closure(q, cg);
    CHECK(static_cast<long>(closure.size()) == centralizer_size(q, g));
    for (const GroupElement& x : closure)
      CHECK(multiply(q, x, g) == multiply(q, g, x));
  }
}

TEST_CASE("subgroup closures") {
  PcPresentation p = parse_presentation(kC8);
  CHECK(subgroup_closure(p, {generator(p, 1)}).size() == 8);
  CHECK(subgroup_closure(p, {generator(p, 2)}).size() == 4);
  CHECK(subgroup_closure(p, {generator(p, 3)}).size() == 2);
  CHECK(subgroup_closure(p, {}).size() == 1);

  PcPresentation q = parse_presentation(kGroup16);
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> pick(0, 127);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<GroupElement> gens{element_at(q, pick(rng)),
                                   element_at(q, pick(rng))};
    size_t size = subgroup_closure(q, gens).size();
    CHECK(128 % size == 0);  // Lagrange
  }
}

TEST_CASE("derived subgroups") {
  PcPresentation d8 = parse_presentation(kD8);
  std::vector<GroupElement> der = derived_subgroup(d8);
  CHECK(der == std::vector<GroupElement>{identity(d8), elem(d8, {0, 0, 1})});

  PcPresentation c8 = parse_presentation(kC8);
  CHECK(derived_subgroup(c8).size() == 1);

  // [G,G] of the order-128 sample is the span of the stored commutators
  PcPresentation q = parse_presentation(kGroup16);
  std::vector<GroupElement> derq = derived_subgroup(q);
  std::vector<GroupElement> span = subgroup_closure(
      q, {elem(q, {0, 0, 0, 1, 0, 0, 0}), elem(q, {0, 0, 0, 0, 0, 1, 0}),
          elem(q, {0, 0, 0, 0, 0, 0, 1}),
          elem(q, {0, 0, 0, 0, 0, 1, 1})});
  CHECK(derq == span);
}
