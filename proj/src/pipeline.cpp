#include "b0/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

namespace b0 {

namespace {

// g_i^{e_i} with the power relation substituted: the rhs word as a plain
// normal form plus one bump of the power tail.
TailedElement power_substituted(const TailedPresentation& tp, int i) {
  TailedElement t = t_identity(tp);
  for (const Factor& f : tp.base.power_rhs[i - 1]) t.g.exps[f.gen - 1] = f.exp;
  t.tails(tp.tail_of_power(i) - 1) = 1;
  return t;
}

// The two evaluations compared by an overlap check, as tailed elements.
// first = relation-substituted side, second = collected side.
std::pair<TailedElement, TailedElement> t_check_sides(
    const TailedPresentation& tp, const CheckId& c) {
  const std::vector<int>& e = tp.base.orders;
  auto gen = [&](int i) { return t_generator_power(tp, i, 1); };
  auto mul = [&](const TailedElement& a, const TailedElement& b) {
    return t_multiply(tp, a, b);
  };
  switch (c.kind) {
    case CheckKind::TripleAssoc:
      return {mul(gen(c.k), mul(gen(c.j), gen(c.i))),
              mul(mul(gen(c.k), gen(c.j)), gen(c.i))};
    case CheckKind::LeftPower:
      return {mul(power_substituted(tp, c.j), gen(c.i)),
              mul(t_generator_power(tp, c.j, e[c.j - 1] - 1),
                  mul(gen(c.j), gen(c.i)))};
    case CheckKind::RightPower:
      return {mul(gen(c.j), power_substituted(tp, c.i)),
              mul(mul(gen(c.j), gen(c.i)),
                  t_generator_power(tp, c.i, e[c.i - 1] - 1))};
    case CheckKind::SelfPower:
    default:
      return {mul(power_substituted(tp, c.i), gen(c.i)),
              mul(gen(c.i), power_substituted(tp, c.i))};
  }
}

}  // namespace

std::vector<RelationRow> consistency_relations(const TailedPresentation& tp) {
  std::vector<RelationRow> rows;
  for (const CheckId& c : consistency_checks(tp.base)) {
    auto [substituted, collected] = t_check_sides(tp, c);
    if (substituted.g != collected.g)
      throw InconsistentPresentation("overlap check has distinct group parts: " +
                                     describe(c, tp.base));
    RelationRow row;
    row.v = collected.tails - substituted.tails;
    row.from.kind = RelationProvenance::Kind::Consistency;
    row.from.check = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RelationRow> commuting_relations(const TailedPresentation& tp,
                                             CommutingMode mode) {
  const PcPresentation& p = tp.base;
  std::vector<RelationRow> rows;
  auto add_row = [&](const GroupElement& x, const GroupElement& y,
                     const TailedElement& comm) {
    if (comm.g != identity(p))
      throw std::logic_error("commutator of a commuting pair is not central");
    RelationRow row;
    row.v = comm.tails;
    row.from.kind = RelationProvenance::Kind::Commuting;
    row.from.x = x;
    row.from.y = y;
    rows.push_back(std::move(row));
  };

  if (mode == CommutingMode::Default) {
    for (const ConjugacyClass& cls : conjugacy_classes(p)) {
      TailedElement rep = lift(tp, cls.rep);
      for (const GroupElement& y : centralizer_generators(p, cls.rep))
        add_row(cls.rep, y, t_commutator(tp, rep, lift(tp, y)));
    }
    return rows;
  }

  const std::vector<GroupElement> elems = enumerate_elements(p);
  std::vector<GroupElement> inv(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) inv[i] = invert(p, elems[i]);
  // t_invert with the group inverse precomputed
  auto t_inv = [&](size_t i) {
    TailedElement y = lift(tp, inv[i]);
    TailedElement prod = t_multiply(tp, lift(tp, elems[i]), y);
    y.tails = -prod.tails;
    return y;
  };
  std::vector<TailedElement> tinv(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) tinv[i] = t_inv(i);
  for (size_t a = 0; a < elems.size(); ++a) {
    for (size_t b = 0; b < elems.size(); ++b) {
      if (multiply(p, elems[a], elems[b]) != multiply(p, elems[b], elems[a]))
        continue;
      TailedElement c = t_multiply(tp, tinv[a], tinv[b]);
      c = t_multiply(tp, c, lift(tp, elems[a]));
      c = t_multiply(tp, c, lift(tp, elems[b]));
      add_row(elems[a], elems[b], c);
    }
  }
  return rows;
}

NovelRows novel_rows(const TailedPresentation& tp, CommutingMode mode) {
  std::vector<RelationRow> cons = consistency_relations(tp);
  // Report order: associativity checks, then left-, right- and self-power
  // checks, each block listing the deepest generator indices first.
  std::stable_sort(cons.begin(), cons.end(),
                   [](const RelationRow& a, const RelationRow& b) {
                     const CheckId &x = a.from.check, &y = b.from.check;
                     if (x.kind != y.kind) return x.kind < y.kind;
                     return std::tie(y.k, y.j, y.i) < std::tie(x.k, x.j, x.i);
                   });

  NovelRows out;
  IntMat cur(0, tp.m);
  auto keep = [&](const RelationRow& row, std::vector<RelationRow>& into) {
    if (is_zero_vec(row.v)) return;
    if (cur.rows() > 0 && lattice_contains(cur, row.v)) return;
    into.push_back(row);
    IntMat ext(cur.rows() + 1, tp.m);
    if (cur.rows() > 0) ext << cur, row.v.transpose();
    else ext.row(0) = row.v;
    cur = hnf(ext);
  };
  for (const RelationRow& row : cons) keep(row, out.consistency);
  for (const RelationRow& row : commuting_relations(tp, mode))
    keep(row, out.commuting);
  return out;
}

namespace {

std::vector<RelationRow> harvest(const TailedPresentation& tp,
                                 CommutingMode mode) {
  std::vector<RelationRow> all = consistency_relations(tp);
  std::vector<RelationRow> comm = commuting_relations(tp, mode);
  std::move(comm.begin(), comm.end(), std::back_inserter(all));
  // drop zero rows and exact duplicates, keeping the first occurrence
  std::vector<RelationRow> kept;
  std::set<std::vector<Int>> seen;
  for (RelationRow& row : all) {
    if (is_zero_vec(row.v)) continue;
    std::vector<Int> key(row.v.data(), row.v.data() + row.v.size());
    if (!seen.insert(std::move(key)).second) continue;
    kept.push_back(std::move(row));
  }
  return kept;
}

IntMat rows_to_matrix(const std::vector<RelationRow>& rows, int m) {
  IntMat t(static_cast<Eigen::Index>(rows.size()), m);
  for (size_t i = 0; i < rows.size(); ++i)
    t.row(static_cast<Eigen::Index>(i)) = rows[i].v.transpose();
  return t;
}

Word expansion_word(const IntMat& expansions, int tail_id, int n) {
  Word w;
  for (Eigen::Index c = 0; c < expansions.cols(); ++c) {
    const Int& e = expansions(tail_id - 1, c);
    if (e != 0) w.push_back({n + 1 + static_cast<int>(c),
                             static_cast<int>(e.get_si())});
  }
  return w;
}

}  // namespace

B0Result compute_b0(const PcPresentation& p, const PipelineOptions& options) {
  B0Result r;
  r.presentation = p;
  r.tailed = build_tailed(p);  // validates p
  const int m = r.tailed.m;

  r.rows = harvest(r.tailed, options.mode);
  r.t = rows_to_matrix(r.rows, m);
  r.hnf_basis = hnf(r.t);

  // Diagonalize the canonical basis rather than the raw rows: the transform
  // then depends only on the lattice, so tail expansions cannot vary with
  // row harvest order or the commuting-pair mode.
  SnfResult snf = snf_with_transforms(r.hnf_basis);
  const Eigen::Index diag = std::min(snf.s.rows(), snf.s.cols());
  for (Eigen::Index k = 0; k < diag; ++k) {
    if (snf.s(k, k) == 0) continue;
    r.divisors.push_back(snf.s(k, k));
    if (snf.s(k, k) > 1) {
      r.b0.push_back(snf.s(k, k));
      r.tstar_index.push_back(static_cast<int>(k) + 1);
    }
  }
  r.free_rank = m - static_cast<int>(r.divisors.size());
  if (r.free_rank != p.n)
    throw FreeRankMismatch("relation lattice leaves free rank " +
                           std::to_string(r.free_rank) + ", expected " +
                           std::to_string(p.n));

  // tail expansions in the quotient: tail l = sum_c v(l, k_c) tstar_c
  const int nb = static_cast<int>(r.b0.size());
  r.expansions = IntMat::Zero(m, nb);
  for (int l = 0; l < m; ++l)
    for (int c = 0; c < nb; ++c)
      r.expansions(l, c) =
          floor_mod(snf.v(l, r.tstar_index[c] - 1), r.b0[c]);

  // the commutativity-preserving central extension
  r.cp = p;
  if (!p.name.empty()) r.cp.name = p.name + ".cp";
  r.cp.n = p.n + nb;
  for (int c = 0; c < nb; ++c) {
    if (r.b0[c] > std::numeric_limits<int>::max())
      throw std::overflow_error("B0 invariant exceeds generator order limit");
    r.cp.orders.push_back(static_cast<int>(r.b0[c].get_si()));
    r.cp.power_rhs.push_back({});
  }
  for (int i = 1; i <= p.n; ++i) {
    Word ext = expansion_word(r.expansions, r.tailed.tail_of_power(i), p.n);
    Word& rhs = r.cp.power_rhs[i - 1];
    rhs.insert(rhs.end(), ext.begin(), ext.end());
  }
  for (const auto& [key, tail_id] : r.tailed.comm_tail) {
    Word ext = expansion_word(r.expansions, tail_id, p.n);
    if (ext.empty()) continue;
    Word& rhs = r.cp.comm_rhs[key];  // stored comms only in default profile
    rhs.insert(rhs.end(), ext.begin(), ext.end());
  }
  ensure_consistent(r.cp);
  return r;
}

SchurResult compute_schur(const PcPresentation& p) {
  TailedPresentation tp = build_tailed_full(p);
  std::vector<RelationRow> rows = consistency_relations(tp);
  std::vector<RelationRow> kept;
  std::set<std::vector<Int>> seen;
  for (RelationRow& row : rows) {
    if (is_zero_vec(row.v)) continue;
    std::vector<Int> key(row.v.data(), row.v.data() + row.v.size());
    if (seen.insert(std::move(key)).second) kept.push_back(std::move(row));
  }
  SchurResult r;
  r.m = tp.m;
  QuotientInvariants q = quotient_invariants(tp.m, rows_to_matrix(kept, tp.m));
  r.divisors = std::move(q.divisors);
  r.free_rank = q.free_rank;
  if (r.free_rank != p.n)
    throw FreeRankMismatch("full-tail lattice leaves free rank " +
                           std::to_string(r.free_rank) + ", expected " +
                           std::to_string(p.n));
  for (const Int& d : r.divisors)
    if (d > 1) r.invariants.push_back(d);
  return r;
}

bool cp_check(const PcPresentation& g, const PcPresentation& e) {
  if (e.n < g.n) throw std::invalid_argument("extension has fewer generators");
  for (int i = 0; i < g.n; ++i)
    if (e.orders[i] != g.orders[i])
      throw std::invalid_argument("extension does not match base orders");
  const std::vector<GroupElement> elems = enumerate_elements(g);
  auto lift_to_e = [&](const GroupElement& x) {
    GroupElement y = identity(e);
    std::copy(x.exps.begin(), x.exps.end(), y.exps.begin());
    return y;
  };
  for (const GroupElement& x : elems) {
    for (const GroupElement& y : elems) {
      if (multiply(g, x, y) != multiply(g, y, x)) continue;
      GroupElement ex = lift_to_e(x), ey = lift_to_e(y);
      if (multiply(e, ex, ey) != multiply(e, ey, ex)) return false;
    }
  }
  return true;
}

Int exterior_square_order(const PcPresentation& e) {
  return Int(static_cast<long>(derived_subgroup(e).size()));
}

namespace {

struct Edge {
  GroupElement value;
  CommutatorExpression::GenFactor gen;
  CommutatorExpression::ElemFactor elem;
  bool generator_regime;
};

// Shortest product of the edge values reaching target from the identity;
// breadth-first with edges tried in order, so ties resolve to the earliest
// edge sequence.  Returns the edge index chain or empty on failure.
std::vector<int> bfs_product(const PcPresentation& e,
                             const std::vector<Edge>& edges,
                             const GroupElement& target, int max_len) {
  const long n = e.order().get_si();
  std::vector<int> dist(n, -1), via(n, -1);
  std::vector<long> prev(n, -1);
  const long start = element_index(e, identity(e));
  const long goal = element_index(e, target);
  dist[start] = 0;
  std::queue<long> q;
  q.push(start);
  while (!q.empty() && dist[goal] < 0) {
    long u = q.front();
    q.pop();
    if (dist[u] >= max_len) continue;
    GroupElement ue = element_at(e, u);
    for (size_t k = 0; k < edges.size(); ++k) {
      long w = element_index(e, multiply(e, ue, edges[k].value));
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      prev[w] = u;
      via[w] = static_cast<int>(k);
      if (w == goal) break;
      q.push(w);
    }
  }
  if (dist[goal] < 0) return {};
  std::vector<int> chain;
  for (long at = goal; at != start; at = prev[at]) chain.push_back(via[at]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

WordSearchResult b0_generator_word(const B0Result& r, int c, int max_len) {
  const PcPresentation& e = r.cp;
  const int n = r.presentation.n;
  const GroupElement target = generator(e, n + 1 + c);

  std::vector<Edge> edges;
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      GroupElement v = commutator(e, generator(e, i), generator(e, j));
      if (v == identity(e)) continue;
      edges.push_back({v, {i, j, +1}, {}, true});
      edges.push_back({invert(e, v), {i, j, -1}, {}, true});
    }
  }
  std::vector<int> chain = bfs_product(e, edges, target, max_len);
  WordSearchResult out;
  if (!chain.empty()) {
    out.regime = WordSearchResult::Regime::GeneratorPairs;
    for (int k : chain) out.expr.gen_factors.push_back(edges[k].gen);
    return out;
  }

  // fall back to commutators of arbitrary extension elements; the value
  // set is closed under inversion ([x,y]^{-1} = [y,x]), so no signs
  edges.clear();
  std::set<GroupElement> recorded;
  const std::vector<GroupElement> elems = enumerate_elements(e);
  for (const GroupElement& x : elems) {
    for (const GroupElement& y : elems) {
      GroupElement v = commutator(e, x, y);
      if (v == identity(e) || !recorded.insert(v).second) continue;
      edges.push_back({v, {}, {x, y}, false});
    }
  }
  chain = bfs_product(e, edges, target, max_len);
  if (chain.empty())
    throw WordNotFound("no commutator word of length <= " +
                       std::to_string(max_len) + " reaches the generator");
  out.regime = WordSearchResult::Regime::ArbitraryPairs;
  for (int k : chain) out.expr.elem_factors.push_back(edges[k].elem);
  return out;
}

bool verify_expression(const PcPresentation& e,
                       const CommutatorExpression& expr,
                       const GroupElement& target) {
  GroupElement acc = identity(e);
  for (const auto& f : expr.gen_factors) {
    GroupElement v = commutator(e, generator(e, f.i), generator(e, f.j));
    if (f.sign < 0) v = invert(e, v);
    acc = multiply(e, acc, v);
  }
  for (const auto& f : expr.elem_factors)
    acc = multiply(e, acc, commutator(e, f.x, f.y));
  return acc == target;
}

}  // namespace b0
