#include "b0/engine.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace b0 {

GroupElement identity(const PcPresentation& p) {
  return GroupElement{std::vector<int>(p.n, 0)};
}

GroupElement generator(const PcPresentation& p, int i) {
  GroupElement g = identity(p);
  g.exps.at(i - 1) = 1;
  return g;
}

std::string element_to_string(const GroupElement& a) {
  Word w;
  for (size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i]) w.push_back({static_cast<int>(i) + 1, a.exps[i]});
  return word_to_string(w);
}

namespace {

struct Letter {
  int gen;
  int exp;
};

void push_element(std::vector<Letter>& w, const GroupElement& a) {
  for (size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i]) w.push_back({static_cast<int>(i) + 1, a.exps[i]});
}

void push_word(std::vector<Letter>& w, const Word& word) {
  for (const Factor& f : word) w.push_back({f.gen, f.exp});
}

// Collection from the left.  Rewrites the leftmost violation:
//   overflow  (i,x) with x >= e_i      ->  (i,x-e_i) w_i
//   descent   (u,xu)(v,xv) with u > v  ->  (u,xu-1)(v,1)(u,1) w_uv (v,xv-1)
// dropping zero-exponent letters.  When tp/tails are given, every
// application of a tailed relation bumps the matching tail coordinate.
GroupElement collect(const PcPresentation& p, std::vector<Letter> w,
                     const TailedPresentation* tp, IntVec* tails) {
  std::vector<Letter> repl;
  size_t pos = 0;
  while (pos < w.size()) {
    if (pos + 1 < w.size() && w[pos].gen == w[pos + 1].gen) {
      w[pos].exp += w[pos + 1].exp;
      w.erase(w.begin() + pos + 1);
      continue;
    }
    const int i = w[pos].gen;
    if (w[pos].exp >= p.orders[i - 1]) {
      if (tp && tails) (*tails)(tp->tail_of_power(i) - 1) += 1;
      w[pos].exp -= p.orders[i - 1];
      repl.clear();
      push_word(repl, p.power_rhs[i - 1]);
      if (w[pos].exp == 0) {
        w.erase(w.begin() + pos);
        w.insert(w.begin() + pos, repl.begin(), repl.end());
        pos = pos ? pos - 1 : 0;
      } else {
        w.insert(w.begin() + pos + 1, repl.begin(), repl.end());
      }
      continue;
    }
    if (pos + 1 < w.size() && i > w[pos + 1].gen) {
      const int u = i, v = w[pos + 1].gen;
      if (tp && tails) {
        if (int id = tp->tail_of_comm(u, v)) (*tails)(id - 1) += 1;
      }
      const Word* rhs = p.comm(u, v);
      const int xu = w[pos].exp, xv = w[pos + 1].exp;
      repl.clear();
      if (xu > 1) repl.push_back({u, xu - 1});
      repl.push_back({v, 1});
      repl.push_back({u, 1});
      if (rhs) push_word(repl, *rhs);
      if (xv > 1) repl.push_back({v, xv - 1});
      w.erase(w.begin() + pos, w.begin() + pos + 2);
      w.insert(w.begin() + pos, repl.begin(), repl.end());
      pos = pos ? pos - 1 : 0;
      continue;
    }
    ++pos;
  }
  GroupElement g = identity(p);
  for (const Letter& l : w) g.exps[l.gen - 1] = l.exp;
  return g;
}

GroupElement collect_pair(const PcPresentation& p, const GroupElement& a,
                          const GroupElement& b) {
  std::vector<Letter> w;
  w.reserve(a.exps.size() * 2);
  push_element(w, a);
  push_element(w, b);
  return collect(p, std::move(w), nullptr, nullptr);
}

}  // namespace

GroupElement element_from_word(const PcPresentation& p, const Word& word) {
  std::vector<Letter> w;
  push_word(w, word);
  return collect(p, std::move(w), nullptr, nullptr);
}

GroupElement multiply(const PcPresentation& p, const GroupElement& a,
                      const GroupElement& b) {
  return collect_pair(p, a, b);
}

GroupElement invert(const PcPresentation& p, const GroupElement& a) {
  const GroupElement e = identity(p);
  GroupElement prev = e, cur = a;
  while (cur != e) {
    prev = cur;
    cur = multiply(p, cur, a);
  }
  return prev;  // a^{ord(a)-1}
}

GroupElement power(const PcPresentation& p, const GroupElement& a, long k) {
  if (k < 0) return power(p, invert(p, a), -k);
  GroupElement acc = identity(p), base = a;
  unsigned long kk = static_cast<unsigned long>(k);
  while (kk) {
    if (kk & 1) acc = multiply(p, acc, base);
    base = multiply(p, base, base);
    kk >>= 1;
  }
  return acc;
}

GroupElement conjugate(const PcPresentation& p, const GroupElement& a,
                       const GroupElement& b) {
  return multiply(p, multiply(p, invert(p, b), a), b);
}

GroupElement commutator(const PcPresentation& p, const GroupElement& a,
                        const GroupElement& b) {
  return multiply(p, multiply(p, multiply(p, invert(p, a), invert(p, b)), a),
                  b);
}

long element_order(const PcPresentation& p, const GroupElement& a) {
  const GroupElement e = identity(p);
  GroupElement cur = a;
  long ord = 1;
  while (cur != e) {
    cur = multiply(p, cur, a);
    ++ord;
  }
  return ord;
}

long element_index(const PcPresentation& p, const GroupElement& a) {
  long idx = 0;
  for (int i = 0; i < p.n; ++i) idx = idx * p.orders[i] + a.exps[i];
  return idx;
}

GroupElement element_at(const PcPresentation& p, long index) {
  GroupElement g = identity(p);
  for (int i = p.n - 1; i >= 0; --i) {
    g.exps[i] = static_cast<int>(index % p.orders[i]);
    index /= p.orders[i];
  }
  return g;
}

// --- consistency -------------------------------------------------------

std::vector<CheckId> consistency_checks(const PcPresentation& p) {
  std::vector<CheckId> out;
  for (int k = 3; k <= p.n; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i)
        out.push_back({CheckKind::TripleAssoc, k, j, i});
  for (int j = 2; j <= p.n; ++j)
    for (int i = 1; i < j; ++i)
      out.push_back({CheckKind::LeftPower, 0, j, i});
  for (int j = 2; j <= p.n; ++j)
    for (int i = 1; i < j; ++i)
      out.push_back({CheckKind::RightPower, 0, j, i});
  for (int i = 1; i <= p.n; ++i)
    out.push_back({CheckKind::SelfPower, 0, 0, i});
  return out;
}

std::string describe(const CheckId& id, const PcPresentation& p) {
  auto g = [](int i) { return "g" + std::to_string(i); };
  auto gp = [&](int i, int e) {
    return e == 1 ? g(i) : g(i) + "^" + std::to_string(e);
  };
  std::ostringstream os;
  switch (id.kind) {
    case CheckKind::TripleAssoc:
      os << g(id.k) << " (" << g(id.j) << " " << g(id.i) << ") = (" << g(id.k)
         << " " << g(id.j) << ") " << g(id.i);
      break;
    case CheckKind::LeftPower:
      os << gp(id.j, p.orders[id.j - 1]) << " " << g(id.i) << " = "
         << gp(id.j, p.orders[id.j - 1] - 1) << " (" << g(id.j) << " "
         << g(id.i) << ")";
      break;
    case CheckKind::RightPower:
      os << g(id.j) << " " << gp(id.i, p.orders[id.i - 1]) << " = (" << g(id.j)
         << " " << g(id.i) << ") " << gp(id.i, p.orders[id.i - 1] - 1);
      break;
    case CheckKind::SelfPower:
      os << gp(id.i, p.orders[id.i - 1]) << " " << g(id.i) << " = " << g(id.i)
         << " " << gp(id.i, p.orders[id.i - 1]);
      break;
  }
  return os.str();
}

namespace {

GroupElement gen_power(const PcPresentation& p, int i, int e) {
  GroupElement g = identity(p);
  g.exps[i - 1] = e;  // requires e < e_i
  return g;
}

// The two sides of an overlap check, collected in the plain group.
std::pair<GroupElement, GroupElement> check_sides(const PcPresentation& p,
                                                  const CheckId& c) {
  auto gen1 = [&](int i) { return generator(p, i); };
  switch (c.kind) {
    case CheckKind::TripleAssoc:
      return {multiply(p, gen1(c.k), multiply(p, gen1(c.j), gen1(c.i))),
              multiply(p, multiply(p, gen1(c.k), gen1(c.j)), gen1(c.i))};
    case CheckKind::LeftPower: {
      GroupElement lhs =
          multiply(p, element_from_word(p, p.power_rhs[c.j - 1]), gen1(c.i));
      GroupElement rhs =
          multiply(p, gen_power(p, c.j, p.orders[c.j - 1] - 1),
                   multiply(p, gen1(c.j), gen1(c.i)));
      return {lhs, rhs};
    }
    case CheckKind::RightPower: {
      GroupElement lhs =
          multiply(p, gen1(c.j), element_from_word(p, p.power_rhs[c.i - 1]));
      GroupElement rhs = multiply(p, multiply(p, gen1(c.j), gen1(c.i)),
                                  gen_power(p, c.i, p.orders[c.i - 1] - 1));
      return {lhs, rhs};
    }
    case CheckKind::SelfPower:
    default: {
      GroupElement w = element_from_word(p, p.power_rhs[c.i - 1]);
      return {multiply(p, w, gen1(c.i)), multiply(p, gen1(c.i), w)};
    }
  }
}

}  // namespace

ValidationReport validate(const PcPresentation& p) {
  check_well_formed(p);
  ValidationReport r;
  for (const CheckId& c : consistency_checks(p)) {
    auto [lhs, rhs] = check_sides(p, c);
    if (lhs != rhs) {
      r.ok = false;
      r.failures.push_back({c, lhs, rhs});
    }
  }
  return r;
}

void ensure_consistent(const PcPresentation& p) {
  ValidationReport r = validate(p);
  if (!r.ok) {
    const ValidationFailure& f = r.failures.front();
    throw InconsistentPresentation(
        "inconsistent presentation: " + describe(f.check, p) + " collects to " +
        element_to_string(f.lhs) + " vs " + element_to_string(f.rhs) + " (" +
        std::to_string(r.failures.size()) + " failing checks)");
  }
}

// --- central tails -----------------------------------------------------

namespace {

TailedPresentation build_tails(const PcPresentation& p, bool all_pairs) {
  ensure_consistent(p);
  TailedPresentation tp;
  tp.base = p;
  tp.tails_all_pairs = all_pairs;
  tp.power_tail.assign(p.n, 0);
  int next = 0;
  for (int i = 1; i <= p.n; ++i) {
    tp.power_tail[i - 1] = ++next;
    for (int j = 1; j < i; ++j) {
      if (all_pairs || p.comm(i, j)) tp.comm_tail[{i, j}] = ++next;
    }
  }
  tp.m = next;
  return tp;
}

}  // namespace

TailedPresentation build_tailed(const PcPresentation& p) {
  return build_tails(p, false);
}

TailedPresentation build_tailed_full(const PcPresentation& p) {
  return build_tails(p, true);
}

TailedElement t_identity(const TailedPresentation& tp) {
  return {identity(tp.base), IntVec::Zero(tp.m)};
}

TailedElement lift(const TailedPresentation& tp, const GroupElement& a) {
  return {a, IntVec::Zero(tp.m)};
}

TailedElement t_generator_power(const TailedPresentation& tp, int i, int e) {
  assert(e >= 0 && e < tp.base.orders[i - 1]);
  TailedElement t = t_identity(tp);
  t.g.exps[i - 1] = e;
  return t;
}

TailedElement t_multiply(const TailedPresentation& tp, const TailedElement& a,
                         const TailedElement& b) {
  std::vector<Letter> w;
  w.reserve(a.g.exps.size() * 2);
  push_element(w, a.g);
  push_element(w, b.g);
  TailedElement r;
  r.tails = a.tails + b.tails;
  r.g = collect(tp.base, std::move(w), &tp, &r.tails);
  return r;
}

TailedElement t_invert(const TailedPresentation& tp, const TailedElement& a) {
  TailedElement y = lift(tp, invert(tp.base, a.g));
  TailedElement prod = t_multiply(tp, a, y);
  assert(prod.g == identity(tp.base));
  y.tails = -prod.tails;
  return y;
}

TailedElement t_commutator(const TailedPresentation& tp,
                           const TailedElement& a, const TailedElement& b) {
  TailedElement r = t_multiply(tp, t_invert(tp, a), t_invert(tp, b));
  r = t_multiply(tp, r, a);
  r = t_multiply(tp, r, b);
  return r;
}

}  // namespace b0
