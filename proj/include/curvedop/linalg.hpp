#pragma once

#include <stdexcept>
#include <vector>

#include "curvedop/sparse_matrix.hpp"

namespace curvedop {

// Thrown by homology_dimension when d_out * d_in != 0: the input pair is not
// a two-step complex (typically an unsatisfied Maurer-Cartan equation upstream).
class CompositionNotZero : public std::runtime_error {
public:
    CompositionNotZero() : std::runtime_error("composition d_out * d_in is not zero") {}
};

struct RrefResult {
    int rank = 0;
    std::vector<SparseVec> rows;    // reduced row echelon rows, pivots scaled to 1
    std::vector<int> pivot_cols;    // pivot column per echelon row
};

RrefResult rref(const SparseMatrix& m, bool parallel);

int rank(const SparseMatrix& m);
int rank_serial(const SparseMatrix& m);
int rank_parallel(const SparseMatrix& m);

// Basis of the right kernel; size is always cols - rank.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

// Incremental row space with full reduction, for residue computations.
class RowSpace {
public:
    // Returns the residue of v modulo the current span.
    SparseVec reduce(SparseVec v) const;
    // Reduces and inserts if independent; returns true when v enlarged the span.
    bool insert(SparseVec v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<SparseVec> rows_;
    std::vector<int> pivots_;
};

struct HomologyResult {
    int dim = 0;
    std::vector<SparseVec> representatives;
};

// dim ker(d_out) - rank(d_in) with representative vectors for the quotient.
// Requires d_out * d_in == 0 and throws CompositionNotZero otherwise.
HomologyResult homology_dimension(const SparseMatrix& d_in, const SparseMatrix& d_out);

}  // namespace curvedop
