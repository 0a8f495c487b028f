#include "curvedop/grdg.hpp"

#include <stdexcept>

namespace curvedop {

int GrDgModule::index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].label == label)
            return i;
    return -1;
}

void GrDgModule::set_d(int from, const FormalSum<int>& image) {
    if (from < 0 || from >= dim())
        throw std::out_of_range("GrDgModule::set_d");
    if (d_.empty())
        d_.resize(dim());
    d_[from] = image;
}

void GrDgModule::add_d(int from, int to, const Rational& coeff) {
    if (from < 0 || from >= dim() || to < 0 || to >= dim())
        throw std::out_of_range("GrDgModule::add_d");
    if (d_.empty())
        d_.resize(dim());
    d_[from].add(to, coeff);
}

const FormalSum<int>& GrDgModule::d_column(int from) const {
    if (d_.empty())
        return zero_;
    return d_[from];
}

SparseMatrix GrDgModule::d_matrix() const {
    SparseMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [i, c] : d_column(j))
            m.add(i, j, c);
    return m;
}

SparseMatrix GrDgModule::gr_part() const {
    SparseMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [i, c] : d_column(j))
            if (basis_[i].weight == basis_[j].weight)
                m.add(i, j, c);
    return m;
}

bool GrDgModule::operator==(const GrDgModule& other) const {
    if (dim() != other.dim())
        return false;
    for (int i = 0; i < dim(); ++i) {
        const BasisElement& a = basis_[i];
        const BasisElement& b = other.basis_[i];
        if (a.label != b.label || a.degree != b.degree || a.weight != b.weight)
            return false;
        if (d_column(i) != other.d_column(i))
            return false;
    }
    return true;
}

CheckReport check_grdg(const GrDgModule& m) {
    CheckReport report;
    for (int j = 0; j < m.dim(); ++j) {
        for (const auto& [i, c] : m.d_column(j)) {
            if (m.element(i).degree != m.element(j).degree - 1) {
                report.fail("degree", m.element(j).label,
                            "d must have homological degree -1");
                return report;
            }
            if (m.element(i).weight < m.element(j).weight) {
                report.fail("weight", m.element(j).label,
                            "d must be weight-nondecreasing");
                return report;
            }
        }
    }
    SparseMatrix gr = m.gr_part();
    if (!(gr * gr).is_zero()) {
        report.fail("gr_square", "-", "weight-preserving part of d must square to zero");
        return report;
    }
    SparseMatrix d = m.d_matrix();
    SparseMatrix d2 = d * d;
    for (const auto& [rc, v] : d2.entries()) {
        if (m.element(rc.first).weight < m.element(rc.second).weight + 1) {
            report.fail("d_square_weight", m.element(rc.second).label,
                        "d^2 must land in strictly higher weight");
            return report;
        }
    }
    return report;
}

HomElement hom_differential(const HomElement& f) {
    HomElement out;
    out.source = f.source;
    out.target = f.target;
    out.degree = f.degree - 1;
    SparseMatrix left = f.target->d_matrix() * f.matrix;
    SparseMatrix right = f.matrix * f.source->d_matrix();
    out.matrix = (f.degree % 2 == 0) ? left - right : left + right;
    return out;
}

CheckReport check_hom_element(const HomElement& f, bool require_filtered) {
    CheckReport report;
    if (f.matrix.rows() != f.target->dim() || f.matrix.cols() != f.source->dim()) {
        report.fail("shape", "-", "matrix shape does not match source/target");
        return report;
    }
    for (const auto& [rc, v] : f.matrix.entries()) {
        const BasisElement& to = f.target->element(rc.first);
        const BasisElement& from = f.source->element(rc.second);
        if (to.degree != from.degree + f.degree) {
            report.fail("degree", from.label, "entry violates the declared degree");
            return report;
        }
        if (require_filtered && to.weight < from.weight) {
            report.fail("weight", from.label, "entry lowers weight");
            return report;
        }
    }
    return report;
}

GrDgModule direct_sum(const GrDgModule& a, const GrDgModule& b,
                      const std::string& prefix_a, const std::string& prefix_b) {
    std::vector<BasisElement> basis;
    basis.reserve(a.dim() + b.dim());
    for (const BasisElement& e : a.basis())
        basis.push_back({prefix_a + e.label, e.degree, e.weight});
    for (const BasisElement& e : b.basis())
        basis.push_back({prefix_b + e.label, e.degree, e.weight});
    GrDgModule out(std::move(basis));
    for (int j = 0; j < a.dim(); ++j)
        for (const auto& [i, c] : a.d_column(j))
            out.add_d(j, i, c);
    for (int j = 0; j < b.dim(); ++j)
        for (const auto& [i, c] : b.d_column(j))
            out.add_d(a.dim() + j, a.dim() + i, c);
    return out;
}

}  // namespace curvedop
