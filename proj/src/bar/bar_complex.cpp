#include "curvedop/bar.hpp"

#include <algorithm>

#include "curvedop/signs.hpp"

namespace curvedop {

namespace {

// Koszul sign of regrouping the word letters (ascending slots) into the listed
// block order; blocks are disjoint position lists.
int regroup_letters_sign(const GrDgModule& m, const std::vector<int>& letters,
                         const std::vector<int>& grouped_positions) {
    int parity = 0;
    for (std::size_t i = 0; i < grouped_positions.size(); ++i)
        for (std::size_t j = i + 1; j < grouped_positions.size(); ++j)
            if (grouped_positions[i] > grouped_positions[j])
                parity += m.element(letters[grouped_positions[i] - 1]).degree *
                          m.element(letters[grouped_positions[j] - 1]).degree;
    return parity % 2 == 0 ? 1 : -1;
}

// Rebuilds a word from a root key and per-slot letters (applying the CCX
// canonical form); returns {word, sign} or nothing when it vanishes.
std::optional<std::pair<BarWord, int>> assemble_word(const GrDgModule& m, Family family,
                                                     const GeneratorKey& root,
                                                     const std::vector<int>& letters) {
    if (family == Family::CCX)
        return make_ccx_word(m, root.extra, letters);
    BarWord w;
    w.key = root;
    w.letters = letters;
    return std::make_pair(std::move(w), 1);
}

}  // namespace

FormalSum<BarWord> bar_d(const AlgebraStructure& alg, const BarWord& w) {
    const GrDgModule& m = alg.module;
    FormalSum<BarWord> out;

    // Internal part: the letterwise predifferential with Koszul signs past the
    // key and the earlier letters.
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const FormalSum<int>& da = m.d_column(w.letters[i]);
        if (da.empty())
            continue;
        int parity = w.key.degree();
        for (std::size_t j = 0; j < i; ++j)
            parity += m.element(w.letters[j]).degree;
        int sign = parity % 2 == 0 ? 1 : -1;
        for (const auto& [b, c] : da) {
            std::vector<int> letters = w.letters;
            letters[i] = b;
            auto rebuilt = assemble_word(m, alg.family, w.key, letters);
            if (rebuilt)
                out.add(rebuilt->first, c * Rational(sign * rebuilt->second));
        }
    }

    // Twisted part: contract the inner vertex of every infinitesimal
    // decomposition of the key through the structure operations.
    for (const auto& [tree, coeff] : delta1(w.key)) {
        if (tree.inner.is_coaugmentation())
            continue;
        const SparseTensor& op = alg.op(tree.inner);
        if (op.is_zero())
            continue;
        int q = tree.inner.slots();
        std::vector<bool> used(w.letters.size() + 1, false);
        for (int p : tree.inner_positions)
            used[p] = true;
        std::vector<int> outer;
        for (int v = 1; v <= static_cast<int>(w.letters.size()); ++v)
            if (!used[v])
                outer.push_back(v);
        // Letters feeding the inner operation, in ascending position order.
        std::vector<int> block(q);
        for (int j = 0; j < q; ++j)
            block[j] = w.letters[tree.inner_positions[j] - 1];
        FormalSum<int> value = op.apply(block);
        if (value.empty())
            continue;
        // Regroup sign: outer-before-block, block, outer-after-block.
        std::vector<int> grouped;
        for (int i = 0; i < tree.pos - 1; ++i)
            grouped.push_back(outer[i]);
        for (int p : tree.inner_positions)
            grouped.push_back(p);
        for (std::size_t i = tree.pos - 1; i < outer.size(); ++i)
            grouped.push_back(outer[i]);
        int parity_sign = regroup_letters_sign(m, w.letters, grouped);
        // alpha (degree -1) passes the root and the letters before the block.
        int cross = tree.root.degree();
        for (int i = 0; i < tree.pos - 1; ++i)
            cross += m.element(w.letters[outer[i] - 1]).degree;
        int cross_sign = cross % 2 == 0 ? 1 : -1;
        for (const auto& [b, c] : value) {
            std::vector<int> letters;
            letters.reserve(outer.size() + 1);
            for (int i = 0; i < tree.pos - 1; ++i)
                letters.push_back(w.letters[outer[i] - 1]);
            letters.push_back(b);
            for (std::size_t i = tree.pos - 1; i < outer.size(); ++i)
                letters.push_back(w.letters[outer[i] - 1]);
            auto rebuilt = assemble_word(m, alg.family, tree.root, letters);
            if (rebuilt)
                out.add(rebuilt->first,
                        coeff * c * Rational(parity_sign * cross_sign * rebuilt->second));
        }
    }
    return out;
}

FormalSum<WordCorolla> coalgebra_delta(const AlgebraStructure& alg, const BarWord& w,
                                       int max_weight) {
    const GrDgModule& m = alg.module;
    FormalSum<WordCorolla> out;
    for (const auto& [corolla, coeff] : delta_full(w.key, max_weight)) {
        WordCorolla wc;
        wc.root = corolla.root;
        Rational c = coeff;
        std::vector<int> grouped;
        bool dead = false;
        for (const CorollaChild& child : corolla.children) {
            std::vector<int> letters;
            for (int p : child.positions) {
                letters.push_back(w.letters[p - 1]);
                grouped.push_back(p);
            }
            auto rebuilt = assemble_word(m, alg.family, child.key, letters);
            if (!rebuilt) {
                dead = true;
                break;
            }
            c *= rebuilt->second;
            wc.children.push_back(std::move(rebuilt->first));
        }
        if (dead)
            continue;
        c *= regroup_letters_sign(m, w.letters, grouped);
        out.add(wc, c);
    }
    return out;
}

FormalSum<BarWord> bar_theta(const AlgebraStructure& alg, const BarWord& w) {
    FormalSum<BarWord> out;
    for (const auto& [wc, coeff] : coalgebra_delta(alg, w, w.weight(alg.module) + 1)) {
        Rational theta = wc.root.curvature();
        if (is_zero(theta) || wc.children.size() != 1)
            continue;
        out.add(wc.children[0], coeff * theta);
    }
    return out;
}

int BarComplex::index_of(const BarWord& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

BarComplex bar_differential(const AlgebraStructure& alg, const Truncation& t) {
    BarComplex cx;
    cx.basis = bar_basis(alg, t);
    for (std::size_t i = 0; i < cx.basis.size(); ++i)
        cx.index[cx.basis[i]] = static_cast<int>(i);
    int n = static_cast<int>(cx.basis.size());
    cx.d_b = SparseMatrix(n, n);
    cx.theta_insertion = SparseMatrix(n, n);
    cx.interior.assign(n, true);
    // Columns are independent; assemble per source word and merge in order so
    // the result does not depend on the schedule.
    std::vector<FormalSum<BarWord>> d_cols(n), theta_cols(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (n > 64)
#endif
    for (int j = 0; j < n; ++j) {
        d_cols[j] = bar_d(alg, cx.basis[j]);
        theta_cols[j] = bar_theta(alg, cx.basis[j]);
    }
    for (int j = 0; j < n; ++j) {
        for (const auto& [target, c] : d_cols[j]) {
            int i = cx.index_of(target);
            if (i < 0)
                cx.interior[j] = false;
            else
                cx.d_b.add(i, j, c);
        }
        for (const auto& [target, c] : theta_cols[j]) {
            int i = cx.index_of(target);
            if (i < 0)
                cx.interior[j] = false;
            else
                cx.theta_insertion.add(i, j, c);
        }
    }
    return cx;
}

BarSquareReport check_bar_square(const AlgebraStructure& alg, const Truncation& t) {
    BarSquareReport rep;
    BarComplex cx = bar_differential(alg, t);
    int n = static_cast<int>(cx.basis.size());
    auto cols = cx.d_b.to_cols();
    auto theta_cols = cx.theta_insertion.to_cols();
    for (int j = 0; j < n; ++j) {
        bool deep = cx.interior[j];
        if (deep)
            for (const auto& [i, c] : cols[j])
                if (!cx.interior[i])
                    deep = false;
        if (!deep) {
            ++rep.boundary_count;
            continue;
        }
        ++rep.interior_count;
        SparseVec square;
        for (const auto& [i, c] : cols[j])
            sparse_axpy(square, c, cols[i]);
        sparse_axpy(square, Rational(1), theta_cols[j]);
        if (!square.empty()) {
            rep.pass = false;
            rep.witness = cx.basis[j];
            rep.detail = "d_b^2 + theta insertion nonzero at " +
                         cx.basis[j].to_string(alg.module);
            return rep;
        }
    }
    return rep;
}

}  // namespace curvedop
