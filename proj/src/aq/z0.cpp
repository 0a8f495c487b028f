#include "curvedop/aq.hpp"

#include "curvedop/strict.hpp"

namespace curvedop {

namespace {

// The strict complex-line target: multiplication by i, zero bracket, no
// curvature, trivial predifferential.
AlgebraStructure complex_line_target() {
    GrDgModule m({{"one", 0, 0}, {"i", 0, 0}});
    SparseTensor J;
    J.arity = 1;
    J.degree = 0;
    J.add({0}, 1, Rational(1));
    J.add({1}, 0, Rational(-1));
    SparseTensor bracket;
    bracket.arity = 2;
    bracket.degree = -1;
    return strict_ccx(m, J, bracket, FormalSum<int>());
}

}  // namespace

Z0Report z0_infinity_correspondence(const AlgebraStructure& ccx_algebra, const Truncation& t) {
    Z0Report rep;
    if (ccx_algebra.family != Family::CCX) {
        rep.pass = false;
        rep.detail = "the correspondence applies to CCX algebras";
        return rep;
    }
    AlgebraStructure target = complex_line_target();
    ModuleCoefficients triv = trivial_complex_module(ccx_algebra);
    AQComplex cx = aq_differential(ccx_algebra, triv, t);

    // Degree-zero cochains; the kernel of the twisted differential restricted
    // to complete rows must be cut out only by honest equations, so we work on
    // windows where every row is complete.
    std::vector<int> deg0 = cx.degree_subspace(0);
    std::map<int, int> pos;
    for (std::size_t i = 0; i < deg0.size(); ++i)
        pos[deg0[i]] = static_cast<int>(i);
    SparseMatrix d0(static_cast<int>(cx.cochains.size()), static_cast<int>(deg0.size()));
    for (const auto& [rc, v] : cx.d_tau.entries()) {
        auto it = pos.find(rc.second);
        if (it != pos.end())
            d0.add(rc.first, it->second, v);
    }
    std::vector<SparseVec> kernel = kernel_basis(d0);
    rep.dim_kernel = static_cast<int>(kernel.size());

    // Independent route: the algebraic Maurer-Cartan operator into the strict
    // complex line, whose target operations of arity >= 2 vanish, so the
    // residual is linear and assembled column by column.
    const std::vector<BarWord>& words = cx.words;
    std::map<std::pair<BarWord, int>, int> col_of;
    std::vector<std::pair<BarWord, int>> cols;
    for (int i : deg0) {
        cols.push_back({cx.cochains[i].word, cx.cochains[i].target});
        col_of[cols.back()] = static_cast<int>(cols.size()) - 1;
    }
    // Row space: (word, target element) pairs of the residual.
    std::map<std::pair<BarWord, int>, int> row_of;
    auto row_index = [&](const BarWord& w, int tgt) {
        auto key = std::make_pair(w, tgt);
        auto it = row_of.find(key);
        if (it != row_of.end())
            return it->second;
        int id = static_cast<int>(row_of.size());
        row_of.emplace(key, id);
        return id;
    };
    std::vector<std::tuple<int, int, Rational>> triples;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        HomCochain basis_cochain;
        basis_cochain.degree = 0;
        basis_cochain.add(cols[ci].first, FormalSum<int>(cols[ci].second, Rational(1)));
        HomCochain res = algebraic_mc_residual(ccx_algebra, target, basis_cochain, words,
                                               t.max_weight + 1);
        for (const auto& [w, val] : res.values)
            for (const auto& [tgt, c] : val)
                triples.emplace_back(row_index(w, tgt), static_cast<int>(ci), c);
    }
    // The constant term: the residual of the zero cochain (curvature part).
    {
        HomCochain zero;
        zero.degree = 0;
        HomCochain res =
            algebraic_mc_residual(ccx_algebra, target, zero, words, t.max_weight + 1);
        if (!res.is_zero()) {
            rep.pass = false;
            rep.detail = "affine Maurer-Cartan operator: nonzero constant term";
            return rep;
        }
    }
    SparseMatrix mc_matrix(static_cast<int>(row_of.size()), static_cast<int>(cols.size()));
    for (auto& [r, c, v] : triples)
        mc_matrix.add(r, c, v);
    std::vector<SparseVec> mc_kernel = kernel_basis(mc_matrix);
    rep.dim_mc = static_cast<int>(mc_kernel.size());

    // Subspace equality by mutual containment.
    RowSpace mc_span;
    for (const SparseVec& v : mc_kernel)
        mc_span.insert(v);
    rep.kernel_in_mc = true;
    for (const SparseVec& v : kernel)
        if (!mc_span.reduce(v).empty())
            rep.kernel_in_mc = false;
    RowSpace ker_span;
    for (const SparseVec& v : kernel)
        ker_span.insert(v);
    rep.mc_in_kernel = true;
    for (const SparseVec& v : mc_kernel)
        if (!ker_span.reduce(v).empty())
            rep.mc_in_kernel = false;
    rep.pass = rep.kernel_in_mc && rep.mc_in_kernel && rep.dim_kernel == rep.dim_mc;
    if (!rep.pass)
        rep.detail = "kernel of the twisted differential and the Maurer-Cartan solution space differ";
    return rep;
}

}  // namespace curvedop
