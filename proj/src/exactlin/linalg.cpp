#include "curvedop/linalg.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace curvedop {

namespace {

// Rows at positions >= next_row have no entries left of the current column,
// so a nonzero at the column is a leading entry.
int pick_pivot(const std::vector<SparseVec>& rows, int next_row, int col) {
    int best = -1;
    std::size_t best_nnz = 0;
    for (std::size_t i = next_row; i < rows.size(); ++i) {
        if (!rows[i].empty() && rows[i].front().first == col) {
            if (best < 0 || rows[i].size() < best_nnz) {
                best = static_cast<int>(i);
                best_nnz = rows[i].size();
            }
        }
    }
    return best;
}

RrefResult rref_rows(std::vector<SparseVec> rows, int cols, bool parallel) {
    RrefResult res;
    int next_row = 0;
    for (int col = 0; col < cols; ++col) {
        int piv = pick_pivot(rows, next_row, col);
        if (piv < 0)
            continue;
        std::swap(rows[next_row], rows[piv]);
        Rational inv = Rational(1) / rows[next_row].front().second;
        if (inv != 1)
            for (auto& [idx, c] : rows[next_row])
                c *= inv;
        const SparseVec& prow = rows[next_row];
        const int n = static_cast<int>(rows.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel && n > 32)
#endif
        for (int i = 0; i < n; ++i) {
            if (i == next_row)
                continue;
            Rational c = sparse_get(rows[i], col);
            if (!is_zero(c))
                sparse_axpy(rows[i], -c, prow);
        }
        res.pivot_cols.push_back(col);
        ++next_row;
    }
    rows.resize(next_row);
    res.rows = std::move(rows);
    res.rank = next_row;
    return res;
}

}  // namespace

RrefResult rref(const SparseMatrix& m, bool parallel) {
    return rref_rows(m.to_rows(), m.cols(), parallel);
}

int rank_serial(const SparseMatrix& m) {
    return rref(m, false).rank;
}

int rank_parallel(const SparseMatrix& m) {
    return rref(m, true).rank;
}

int rank(const SparseMatrix& m) {
    return rref(m, m.rows() > 64).rank;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    RrefResult r = rref(m, m.rows() > 64);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : r.pivot_cols)
        is_pivot[p] = true;
    std::vector<SparseVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        SparseVec v;
        for (int k = 0; k < r.rank; ++k) {
            Rational c = sparse_get(r.rows[k], f);
            if (!is_zero(c))
                v.emplace_back(r.pivot_cols[k], -c);
        }
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseVec RowSpace::reduce(SparseVec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rational c = sparse_get(v, pivots_[k]);
        if (!is_zero(c))
            sparse_axpy(v, -c, rows_[k]);
    }
    return v;
}

bool RowSpace::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    Rational inv = Rational(1) / v.front().second;
    if (inv != 1)
        for (auto& [idx, c] : v)
            c *= inv;
    pivots_.push_back(v.front().first);
    rows_.push_back(std::move(v));
    return true;
}

HomologyResult homology_dimension(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (!(d_out * d_in).is_zero())
        throw CompositionNotZero();
    HomologyResult res;
    RowSpace span;
    for (const SparseVec& col : d_in.to_cols())
        span.insert(col);
    for (SparseVec& v : kernel_basis(d_out)) {
        SparseVec rep = span.reduce(v);
        if (!rep.empty()) {
            span.insert(rep);
            res.representatives.push_back(std::move(rep));
        }
    }
    res.dim = static_cast<int>(res.representatives.size());
    return res;
}

}  // namespace curvedop
