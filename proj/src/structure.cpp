#include "b0/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace b0 {

namespace {

long checked_order(const PcPresentation& p) {
  Int o = p.order();
  if (o > kMaxEnumerable)
    throw std::invalid_argument("group too large to enumerate");
  return o.get_si();
}

std::vector<GroupElement> all_inverses(const PcPresentation& p,
                                       const std::vector<GroupElement>& elems) {
  std::vector<GroupElement> inv(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) inv[i] = invert(p, elems[i]);
  return inv;
}

}  // namespace

std::vector<GroupElement> enumerate_elements(const PcPresentation& p) {
  const long n = checked_order(p);
  std::vector<GroupElement> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(element_at(p, i));
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const PcPresentation& p) {
  const long n = checked_order(p);
  const std::vector<GroupElement> elems = enumerate_elements(p);
  const std::vector<GroupElement> inv = all_inverses(p, elems);
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> classes;
  for (long i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ConjugacyClass cls;
    cls.rep = elems[i];
    for (long x = 0; x < n; ++x) {
      GroupElement c = multiply(p, multiply(p, inv[x], cls.rep), elems[x]);
      long idx = element_index(p, c);
      if (!seen[idx]) {
        seen[idx] = true;
        cls.members.push_back(std::move(c));
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<GroupElement> subgroup_closure(
    const PcPresentation& p, const std::vector<GroupElement>& gens) {
  const long n = checked_order(p);
  std::vector<bool> in(n, false);
  std::vector<GroupElement> members{identity(p)};
  in[element_index(p, members[0])] = true;
  // orbit of the identity under right multiplication by the generators
  for (size_t head = 0; head < members.size(); ++head) {
    for (const GroupElement& g : gens) {
      GroupElement next = multiply(p, members[head], g);
      long idx = element_index(p, next);
      if (!in[idx]) {
        in[idx] = true;
        members.push_back(std::move(next));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<GroupElement> centralizer_generators(const PcPresentation& p,
                                                 const GroupElement& g) {
  const long n = checked_order(p);
  std::vector<GroupElement> gens;
  std::vector<bool> have(n, false);
  have[element_index(p, identity(p))] = true;
  long have_count = 1;
  for (long i = 0; i < n; ++i) {
    GroupElement x = element_at(p, i);
    if (have[element_index(p, x)]) continue;
    if (multiply(p, x, g) != multiply(p, g, x)) continue;
    gens.push_back(x);
    std::vector<GroupElement> closure = subgroup_closure(p, gens);
    for (const GroupElement& m : closure) have[element_index(p, m)] = true;
    have_count = static_cast<long>(closure.size());
    if (have_count == n) break;
  }
  return gens;
}

std::vector<GroupElement> derived_subgroup(const PcPresentation& p) {
  const long n = checked_order(p);
  const std::vector<GroupElement> elems = enumerate_elements(p);
  const std::vector<GroupElement> inv = all_inverses(p, elems);
  std::vector<bool> seen(n, false);
  std::vector<GroupElement> comms;
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      // [a,b] = a^{-1} b^{-1} a b
      GroupElement c = multiply(
          p, multiply(p, multiply(p, inv[a], inv[b]), elems[a]), elems[b]);
      long idx = element_index(p, c);
      if (!seen[idx]) {
        seen[idx] = true;
        comms.push_back(std::move(c));
      }
    }
  }
  return subgroup_closure(p, comms);
}

}  // namespace b0
