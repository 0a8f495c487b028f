#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "curvedop/rational.hpp"

namespace curvedop {

// Sparse rational vector: sorted (index, coeff) pairs, no stored zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x);
Rational sparse_get(const SparseVec& v, int idx);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Accumulating insert; stored zeros are pruned.
    void add(int r, int c, const Rational& v);
    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    bool operator==(const SparseMatrix& other) const;
    bool operator!=(const SparseMatrix& other) const { return !(*this == other); }

    bool is_zero() const { return entries_.empty(); }

    static SparseMatrix identity(int n);
    SparseMatrix transpose() const;
    SparseMatrix scaled(const Rational& s) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);

    SparseVec apply(const SparseVec& x) const;

    std::vector<SparseVec> to_rows() const;
    std::vector<SparseVec> to_cols() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

}  // namespace curvedop
