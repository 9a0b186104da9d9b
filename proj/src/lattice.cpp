#include "b0/lattice.hpp"

#include <stdexcept>

namespace b0 {

IntMat hnf(const IntMat& a) {
  IntMat h = a;
  const Eigen::Index rows = h.rows(), cols = h.cols();
  Eigen::Index p = 0;  // next pivot row
  for (Eigen::Index c = 0; c < cols && p < rows; ++c) {
    // Euclid down column c until at most one nonzero remains at row p.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = p; i < rows; ++i) {
        if (h(i, c) != 0 && (best < 0 || cmp_abs(h(i, c), h(best, c)) < 0))
          best = i;
      }
      if (best < 0) break;  // no pivot in this column
      if (best != p) h.row(p).swap(h.row(best));
      bool cleared = true;
      for (Eigen::Index i = p + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(p, c));
        if (q != 0) h.row(i) -= q * h.row(p);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(p, c) != 0) {
      if (h(p, c) < 0) h.row(p) = -h.row(p);
      for (Eigen::Index i = 0; i < p; ++i) {
        Int q = floor_div(h(i, c), h(p, c));
        if (q != 0) h.row(i) -= q * h.row(p);
      }
      ++p;
    }
  }
  IntMat out = h.topRows(p);
  return out;
}

bool lattice_contains(const IntMat& hnf_basis, const IntVec& v) {
  if (v.size() != hnf_basis.cols())
    throw std::invalid_argument("lattice_contains: dimension mismatch");
  IntVec w = v;
  for (Eigen::Index r = 0; r < hnf_basis.rows(); ++r) {
    Eigen::Index c = 0;
    while (c < hnf_basis.cols() && hnf_basis(r, c) == 0) ++c;
    if (c == hnf_basis.cols())
      throw std::invalid_argument("lattice_contains: zero row in basis");
    if (w(c) == 0) continue;
    if (!divides(hnf_basis(r, c), w(c))) return false;
    w -= exact_div(w(c), hnf_basis(r, c)) * hnf_basis.row(r).transpose();
  }
  return is_zero_vec(w);
}

namespace {

// Least |nonzero| entry of s[t.., t..]; ties broken by smallest row, then
// smallest column.  Returns false when the submatrix is zero.
bool find_pivot(const IntMat& s, Eigen::Index t, Eigen::Index& pi,
                Eigen::Index& pj) {
  pi = -1;
  pj = -1;
  for (Eigen::Index i = t; i < s.rows(); ++i) {
    for (Eigen::Index j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      if (pi < 0 || cmp_abs(s(i, j), s(pi, pj)) < 0) {
        pi = i;
        pj = j;
      }
    }
  }
  return pi >= 0;
}

}  // namespace

SnfResult snf_with_transforms(const IntMat& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SnfResult r{IntMat::Identity(rows, rows), a, IntMat::Identity(cols, cols)};
  IntMat& s = r.s;
  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      Eigen::Index pi, pj;
      if (!find_pivot(s, t, pi, pj)) {
        return r;  // remaining submatrix is zero
      }
      if (pi != t) {
        s.row(t).swap(s.row(pi));
        r.u.row(t).swap(r.u.row(pi));
      }
      if (pj != t) {
        s.col(t).swap(s.col(pj));
        r.v.col(t).swap(r.v.col(pj));
      }
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Int q = floor_div(s(i, t), s(t, t));
        if (q != 0) {
          s.row(i) -= q * s.row(t);
          r.u.row(i) -= q * r.u.row(t);
        }
        if (s(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Int q = floor_div(s(t, j), s(t, t));
        if (q != 0) {
          s.col(j) -= q * s.col(t);
          r.v.col(j) -= q * r.v.col(t);
        }
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot is the lone nonzero in its row and column; enforce that it
      // divides everything that comes later.
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t + 1; i < rows && bi < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (!divides(s(t, t), s(i, j))) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      (void)bj;
      if (bi >= 0) {
        s.row(t) += s.row(bi);
        r.u.row(t) += r.u.row(bi);
        continue;
      }
      if (s(t, t) < 0) {
        s.row(t) = -s.row(t);
        r.u.row(t) = -r.u.row(t);
      }
      break;
    }
  }
  return r;
}

QuotientInvariants quotient_invariants(int m, const IntMat& rows) {
  QuotientInvariants q;
  if (rows.rows() == 0) {
    q.free_rank = m;
    return q;
  }
  if (rows.cols() != m)
    throw std::invalid_argument("quotient_invariants: column count != m");
  SnfResult s = snf_with_transforms(rows);
  const Eigen::Index steps = std::min(s.s.rows(), s.s.cols());
  for (Eigen::Index k = 0; k < steps; ++k) {
    if (s.s(k, k) != 0) q.divisors.push_back(s.s(k, k));
  }
  q.free_rank = m - static_cast<int>(q.divisors.size());
  return q;
}

}  // namespace b0
