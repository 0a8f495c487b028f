#include "curvedop/sparse_matrix.hpp"

#include <stdexcept>

namespace curvedop {

void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
    if (is_zero(a))
        return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            Rational v = a * x[j].second;
            if (!is_zero(v))
                out.emplace_back(x[j].first, v);
            ++j;
        } else {
            Rational v = y[i].second + a * x[j].second;
            if (!is_zero(v))
                out.emplace_back(y[i].first, v);
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

Rational sparse_get(const SparseVec& v, int idx) {
    for (const auto& [i, c] : v)
        if (i == idx)
            return c;
    return Rational(0);
}

void SparseMatrix::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::add index out of range");
    if (sgn(v) == 0)
        return;
    auto key = std::make_pair(r, c);
    auto [it, inserted] = entries_.emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (sgn(it->second) == 0)
            entries_.erase(it);
    }
}

void SparseMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::set index out of range");
    auto key = std::make_pair(r, c);
    if (sgn(v) == 0)
        entries_.erase(key);
    else
        entries_[key] = v;
}

Rational SparseMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, Rational(1));
    return m;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_)
        t.set(rc.second, rc.first, v);
    return t;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix m(rows_, cols_);
    if (sgn(s) == 0)
        return m;
    for (const auto& [rc, v] : entries_)
        m.set(rc.first, rc.second, v * s);
    return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("SparseMatrix product: dimension mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    // Row-of-a times stored rows of b.
    auto brows = b.to_rows();
    for (const auto& [rc, av] : a.entries_) {
        for (const auto& [bc, bv] : brows[rc.second])
            out.add(rc.first, bc, av * bv);
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("SparseMatrix sum: dimension mismatch");
    SparseMatrix out = a;
    for (const auto& [rc, v] : b.entries_)
        out.add(rc.first, rc.second, v);
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return a + b.scaled(Rational(-1));
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    SparseVec cols_of_x = x;
    SparseVec out;
    auto col_lists = to_cols();
    for (const auto& [j, xv] : cols_of_x)
        sparse_axpy(out, xv, col_lists[j]);
    return out;
}

std::vector<SparseVec> SparseMatrix::to_rows() const {
    std::vector<SparseVec> rows(rows_);
    for (const auto& [rc, v] : entries_)
        rows[rc.first].emplace_back(rc.second, v);
    return rows;
}

std::vector<SparseVec> SparseMatrix::to_cols() const {
    std::vector<SparseVec> cols(cols_);
    for (const auto& [rc, v] : entries_)
        cols[rc.second].emplace_back(rc.first, v);
    return cols;
}

}  // namespace curvedop
