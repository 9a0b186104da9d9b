#pragma once

#include <vector>

#include "b0/intmat.hpp"

namespace b0 {

// Row-style Hermite normal form of the lattice spanned by the rows of a:
// pivots positive, entries above each pivot reduced into [0, pivot), zero
// rows dropped.  The result is the canonical basis of the row lattice, so
// two row sets span the same lattice iff their HNFs are equal.
IntMat hnf(const IntMat& a);

// Membership test for the row lattice of an HNF basis (output of hnf()).
bool lattice_contains(const IntMat& hnf_basis, const IntVec& v);

struct SnfResult {
  IntMat u;  // rows x rows, unimodular
  IntMat s;  // diagonal, nonnegative, each entry divides the next
  IntMat v;  // cols x cols, unimodular
};

// Smith normal form with transforms: u * a * v == s.  Pivoting picks the
// least |nonzero| entry of the working submatrix (ties: smallest row, then
// column index); divisibility violations are fixed by adding the offending
// row to the pivot row and re-reducing.
SnfResult snf_with_transforms(const IntMat& a);

struct QuotientInvariants {
  std::vector<Int> divisors;  // nonzero elementary divisors, divisibility chain
  int free_rank = 0;          // m minus the number of nonzero divisors
};

// Invariants of Z^m modulo the row lattice of rows (rows may be 0 x m).
QuotientInvariants quotient_invariants(int m, const IntMat& rows);

}  // namespace b0
