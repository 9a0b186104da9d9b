#pragma once

#include <vector>

#include "b0/engine.hpp"

namespace b0 {

// Brute-force subgroup machinery.  All routines enumerate elements and are
// guarded against groups whose order exceeds kMaxEnumerable.
inline constexpr long kMaxEnumerable = 1L << 20;

// All elements in lexicographic order of their exponent vectors.
std::vector<GroupElement> enumerate_elements(const PcPresentation& p);

struct ConjugacyClass {
  GroupElement rep;                   // lexicographically least member
  std::vector<GroupElement> members;  // lexicographic order
};

// Classes ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const PcPresentation& p);

// Greedy generating set of the centralizer of g: sweep all elements in
// lexicographic order and keep those that centralize g and properly grow
// the subgroup generated so far.
std::vector<GroupElement> centralizer_generators(const PcPresentation& p,
                                                 const GroupElement& g);

// The subgroup generated by gens, in lexicographic order.
std::vector<GroupElement> subgroup_closure(const PcPresentation& p,
                                           const std::vector<GroupElement>& gens);

// Closure of { [x,y] : x,y in G }, in lexicographic order.
std::vector<GroupElement> derived_subgroup(const PcPresentation& p);

}  // namespace b0
