#pragma once
// Arithmetic matroids of integer matrices and their representations up to equivalence.

#include "toric/exact_linalg.hpp"

#include <vector>

namespace toric {

// Torsion order of Z^r / <columns S>.
Int multiplicity(const IntMatrix& A, const std::vector<int>& S);
int column_rank(const IntMatrix& A, const std::vector<int>& S);

// Rank and multiplicity of every subset of columns, indexed by bitmask.
struct MatroidData {
    int n = 0;
    std::vector<int> rank;
    std::vector<Int> mult;
    bool operator==(const MatroidData& o) const { return n == o.n && rank == o.rank && mult == o.mult; }
};

MatroidData matroid_data(const IntMatrix& A);

// Representative of {U A D : U unimodular, D diagonal +-1} with the columns of B sent to the
// identity. The non-basis block N is then only defined up to N -> D1 N D2; the signs are fixed by
// making the entries on a spanning forest of the bipartite support graph of N positive, the forest
// being chosen from the support pattern alone.
// Requires A of full row rank, |B| = rows and m(B) = 1.
IntMatrix canonical_form(const IntMatrix& A, const std::vector<int>& B);

bool equivalent(const IntMatrix& A, const IntMatrix& Ap, const std::vector<int>& B);

// The 3 x 6 matrix on which the sign-normalization argument breaks down.
IntMatrix lenz_matrix();

}  // namespace toric
