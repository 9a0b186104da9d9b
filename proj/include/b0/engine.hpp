#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "b0/intmat.hpp"
#include "b0/presentation.hpp"

namespace b0 {

// Normal form g1^{a1} ... gn^{an} with a_i in [0, e_i).  Comparisons are
// lexicographic on the exponent vector.
struct GroupElement {
  std::vector<int> exps;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity(const PcPresentation& p);
GroupElement generator(const PcPresentation& p, int i);  // 1-based
GroupElement element_from_word(const PcPresentation& p, const Word& w);
std::string element_to_string(const GroupElement& a);  // "1" or "g1*g3^2..."

// Collection from the left: the leftmost violation (overflow g_i^{x>=e_i}
// or descent g_u g_v with u > v) is rewritten by the matching relation
// until the word is normal.
GroupElement multiply(const PcPresentation& p, const GroupElement& a,
                      const GroupElement& b);
GroupElement invert(const PcPresentation& p, const GroupElement& a);
GroupElement power(const PcPresentation& p, const GroupElement& a, long k);
// b^{-1} a b
GroupElement conjugate(const PcPresentation& p, const GroupElement& a,
                       const GroupElement& b);
// a^{-1} b^{-1} a b
GroupElement commutator(const PcPresentation& p, const GroupElement& a,
                        const GroupElement& b);
long element_order(const PcPresentation& p, const GroupElement& a);

// Rank of the normal form in lexicographic enumeration order, and back.
// Only valid when the group order fits in a long.
long element_index(const PcPresentation& p, const GroupElement& a);
GroupElement element_at(const PcPresentation& p, long index);

// --- consistency -------------------------------------------------------

enum class CheckKind {
  TripleAssoc,  // g_k (g_j g_i) = (g_k g_j) g_i,        k > j > i
  LeftPower,    // g_j^{e_j} g_i = g_j^{e_j-1} (g_j g_i), j > i
  RightPower,   // g_j g_i^{e_i} = (g_j g_i) g_i^{e_i-1}, j > i
  SelfPower     // g_i^{e_i} g_i = g_i g_i^{e_i}
};

struct CheckId {
  CheckKind kind;
  int k = 0, j = 0, i = 0;
  friend auto operator<=>(const CheckId&, const CheckId&) = default;
};

std::string describe(const CheckId& id, const PcPresentation& p);

// Every overlap check for p, in a fixed order: triples (k,j,i ascending),
// then left-power, right-power, and self-power overlaps.
std::vector<CheckId> consistency_checks(const PcPresentation& p);

struct ValidationFailure {
  CheckId check;
  GroupElement lhs, rhs;  // the two collected sides that disagree
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationFailure> failures;
};

// Runs every overlap check by collecting both sides in the group.
ValidationReport validate(const PcPresentation& p);

struct InconsistentPresentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// check_well_formed + validate; throws InconsistentPresentation.
void ensure_consistent(const PcPresentation& p);

// --- central tails -----------------------------------------------------

// The same presentation with a fresh central generator t_l appended to the
// rhs of selected relations.  Tail numbering interleaves by generator:
// for each i, first the power relation of g_i, then [g_i,g_j] for j
// ascending.  In the default profile only stored (nontrivial) commutator
// relations are tailed; the full profile tails every pair, including
// trivial commutators.
struct TailedPresentation {
  PcPresentation base;
  int m = 0;
  std::vector<int> power_tail;                   // 1-based tail ids
  std::map<std::pair<int, int>, int> comm_tail;  // tailed pairs only
  bool tails_all_pairs = false;

  int tail_of_power(int i) const { return power_tail[i - 1]; }
  int tail_of_comm(int i, int j) const {
    auto it = comm_tail.find({i, j});
    return it == comm_tail.end() ? 0 : it->second;
  }
};

TailedPresentation build_tailed(const PcPresentation& p);
TailedPresentation build_tailed_full(const PcPresentation& p);

// Element of the tailed extension: a normal form in the g's plus an
// integer exponent vector over the central tails.
struct TailedElement {
  GroupElement g;
  IntVec tails;  // size m
};

TailedElement t_identity(const TailedPresentation& tp);
TailedElement lift(const TailedPresentation& tp, const GroupElement& a);
// g_i^e as a tailed element (requires 0 <= e < e_i, no collection involved)
TailedElement t_generator_power(const TailedPresentation& tp, int i, int e);
TailedElement t_multiply(const TailedPresentation& tp, const TailedElement& a,
                         const TailedElement& b);
// Inverse with exact cancellation: t_multiply(a, t_invert(a)) is the
// identity with a zero tail vector.
TailedElement t_invert(const TailedPresentation& tp, const TailedElement& a);
// a^{-1} b^{-1} a b; the tail part is independent of the tail components
// of a and b (they cancel), so it is well defined on lifts.
TailedElement t_commutator(const TailedPresentation& tp,
                           const TailedElement& a, const TailedElement& b);

}  // namespace b0
