#include "curvedop/aq.hpp"

#include <algorithm>

#include "curvedop/signs.hpp"

namespace curvedop {

std::vector<int> AQComplex::degree_subspace(int n) const {
    std::vector<int> idx;
    for (std::size_t i = 0; i < cochains.size(); ++i)
        if (cohomological_degree[i] == n)
            idx.push_back(static_cast<int>(i));
    return idx;
}

namespace {

int parity_of(int v) { return ((v % 2) + 2) % 2; }

}  // namespace

AQComplex aq_differential(const AlgebraStructure& alg, const ModuleCoefficients& coeffs,
                          const Truncation& t, int validate_arity) {
    if (validate_arity > 0) {
        McReport mc = mc_check(alg, validate_arity, t.max_weight);
        if (!mc.pass)
            throw InvalidStructure("algebra fails the Maurer-Cartan equation: " + mc.detail);
        ModuleReport mr = check_module(alg, coeffs, validate_arity, t.max_weight);
        if (!mr.pass)
            throw InvalidStructure("module coefficients fail validation: " + mr.detail);
    }
    const GrDgModule& src = alg.module;
    const GrDgModule& m = coeffs.module;
    AQComplex cx;
    cx.words = bar_basis(alg, t);
    for (std::size_t i = 0; i < cx.words.size(); ++i)
        cx.word_index[cx.words[i]] = static_cast<int>(i);
    for (const BarWord& w : cx.words)
        for (int j = 0; j < m.dim(); ++j)
            cx.cochains.push_back({w, j});
    std::sort(cx.cochains.begin(), cx.cochains.end());
    for (std::size_t i = 0; i < cx.cochains.size(); ++i) {
        cx.cochain_index[cx.cochains[i]] = static_cast<int>(i);
        cx.cohomological_degree.push_back(cx.cochains[i].word.degree(src) -
                                          m.element(cx.cochains[i].target).degree);
    }
    int dim = static_cast<int>(cx.cochains.size());
    cx.d_tau = SparseMatrix(dim, dim);
    cx.row_complete.assign(cx.words.size(), true);

    for (std::size_t wi = 0; wi < cx.words.size(); ++wi) {
        const BarWord& w = cx.words[wi];
        bool complete = true;

        // d_M . f : same word, differentiated output.
        for (int j = 0; j < m.dim(); ++j) {
            int col = cx.cochain_index.at({w, j});
            for (const auto& [mo, c] : m.d_column(j))
                cx.d_tau.add(cx.cochain_index.at({w, mo}), col, c);
        }

        // - (-1)^{|f|} f . d_b : referenced at the bar targets of w.
        for (const auto& [u, c] : bar_d(alg, w)) {
            auto it = cx.word_index.find(u);
            if (it == cx.word_index.end()) {
                complete = false;
                continue;
            }
            int udeg = u.degree(src);
            for (int j = 0; j < m.dim(); ++j) {
                int fdeg = m.element(j).degree - udeg;
                Rational s(parity_of(fdeg) == 0 ? -1 : 1);
                cx.d_tau.add(cx.cochain_index.at({w, j}), cx.cochain_index.at({u, j}), c * s);
            }
        }

        // + del_alpha^l : the root key acts through the module coefficients on
        // the cochain value at the inner subword.
        for (const auto& [tree, c] : delta1(w.key)) {
            if (tree.root.is_coaugmentation())
                continue;
            auto action_it = coeffs.action.find(tree.root);
            if (action_it == coeffs.action.end())
                continue;
            int q = tree.inner.slots();
            std::vector<bool> used(w.letters.size() + 1, false);
            for (int p : tree.inner_positions)
                used[p] = true;
            std::vector<int> outer;
            for (int v = 1; v <= static_cast<int>(w.letters.size()); ++v)
                if (!used[v])
                    outer.push_back(v);
            std::vector<int> block(q);
            for (int j = 0; j < q; ++j)
                block[j] = w.letters[tree.inner_positions[j] - 1];

            std::vector<int> grouped;
            for (int i = 0; i < tree.pos - 1; ++i)
                grouped.push_back(outer[i]);
            for (int p : tree.inner_positions)
                grouped.push_back(p);
            for (std::size_t i = tree.pos - 1; i < outer.size(); ++i)
                grouped.push_back(outer[i]);
            int base_parity = 0;
            for (std::size_t a = 0; a < grouped.size(); ++a)
                for (std::size_t b = a + 1; b < grouped.size(); ++b)
                    if (grouped[a] > grouped[b])
                        base_parity += src.element(w.letters[grouped[a] - 1]).degree *
                                       src.element(w.letters[grouped[b] - 1]).degree;
            int before = 0;
            for (int i = 0; i < tree.pos - 1; ++i)
                before += src.element(w.letters[outer[i] - 1]).degree;
            base_parity += tree.inner.degree() * before;
            // (-1)^{|f|} from the composite plus |f| crossings past the root
            // operation (degree deg(root)-1) and the letters before the slot.
            int f_multiplier = parity_of(1 + tree.root.degree() - 1 + before);

            BarWord sub;
            int sub_sign = 1;
            if (alg.family == Family::CCX) {
                auto rebuilt = make_ccx_word(src, tree.inner.extra, block);
                if (!rebuilt)
                    continue;
                sub = rebuilt->first;
                sub_sign = rebuilt->second;
            } else {
                sub.key = tree.inner;
                sub.letters = block;
            }
            if (!cx.word_index.count(sub)) {
                complete = false;
                continue;
            }
            int subdeg = sub.degree(src);
            for (const ActionEntry& entry : action_it->second) {
                if (entry.mslot != tree.pos - 1)
                    continue;
                if (static_cast<int>(entry.inputs.size()) != tree.root.slots())
                    continue;
                bool match = true;
                for (int i = 0, oi = 0; i < static_cast<int>(entry.inputs.size()); ++i) {
                    if (i == entry.mslot)
                        continue;
                    if (entry.inputs[i] != w.letters[outer[oi] - 1])
                        match = false;
                    ++oi;
                }
                if (!match)
                    continue;
                int min = entry.inputs[entry.mslot];
                int fdeg = m.element(min).degree - subdeg;
                int parity = base_parity + f_multiplier * fdeg;
                Rational s(parity_of(parity) == 0 ? 1 : -1);
                int col = cx.cochain_index.at({sub, min});
                for (const auto& [mout, mc] : entry.output)
                    cx.d_tau.add(cx.cochain_index.at({w, mout}), col, c * mc * s * sub_sign);
            }
        }
        cx.row_complete[wi] = complete;
    }

    cx.word_interior = cx.row_complete;
    return cx;
}

DtauReport check_dtau_square(const AlgebraStructure& alg, const ModuleCoefficients& coeffs,
                             const Truncation& t) {
    DtauReport rep;
    AQComplex cx = aq_differential(alg, coeffs, t);
    // A row is safe for squaring when every cochain it references lives on a
    // word whose own row is complete.
    auto rows = cx.d_tau.to_rows();
    std::vector<bool> word_safe(cx.words.size(), true);
    for (std::size_t wi = 0; wi < cx.words.size(); ++wi) {
        if (!cx.row_complete[wi]) {
            word_safe[wi] = false;
            continue;
        }
        for (int j = 0; j < static_cast<int>(coeffs.module.dim()); ++j) {
            int row = cx.cochain_index.at({cx.words[wi], j});
            for (const auto& [col, c] : rows[row]) {
                const BarWord& ref = cx.cochains[col].word;
                if (!cx.row_complete[cx.word_index.at(ref)])
                    word_safe[wi] = false;
            }
        }
    }
    for (std::size_t wi = 0; wi < cx.words.size(); ++wi)
        (word_safe[wi] ? rep.interior_words : rep.boundary_words)++;

    SparseMatrix square = cx.d_tau * cx.d_tau;
    for (const auto& [rc, v] : square.entries()) {
        const BarWord& w = cx.cochains[rc.first].word;
        if (!word_safe[cx.word_index.at(w)])
            continue;
        rep.pass = false;
        rep.witness = cx.cochains[rc.first];
        rep.detail = "d_tau^2 nonzero at " + w.to_string(alg.module);
        return rep;
    }
    return rep;
}

CohomologyResult aq_cohomology(const AlgebraStructure& alg, const ModuleCoefficients& coeffs,
                               int degree, const Truncation& t, bool with_stability) {
    auto compute_dim = [&](const Truncation& tr, CohomologyResult* fill) {
        AQComplex cx = aq_differential(alg, coeffs, tr);
        std::vector<int> mid = cx.degree_subspace(degree);
        std::vector<int> lo = cx.degree_subspace(degree - 1);
        std::vector<int> hi = cx.degree_subspace(degree + 1);
        std::map<int, int> mid_pos;
        for (std::size_t i = 0; i < mid.size(); ++i)
            mid_pos[mid[i]] = static_cast<int>(i);
        SparseMatrix d_in(static_cast<int>(mid.size()), static_cast<int>(lo.size()));
        SparseMatrix d_out(static_cast<int>(hi.size()), static_cast<int>(mid.size()));
        std::map<int, int> hi_pos;
        for (std::size_t i = 0; i < hi.size(); ++i)
            hi_pos[hi[i]] = static_cast<int>(i);
        for (const auto& [rc, v] : cx.d_tau.entries()) {
            auto mp = mid_pos.find(rc.first);
            if (mp != mid_pos.end()) {
                for (std::size_t j = 0; j < lo.size(); ++j)
                    if (lo[j] == rc.second)
                        d_in.add(mp->second, static_cast<int>(j), v);
            }
            auto hp = hi_pos.find(rc.first);
            if (hp != hi_pos.end()) {
                auto mp2 = mid_pos.find(rc.second);
                if (mp2 != mid_pos.end())
                    d_out.add(hp->second, mp2->second, v);
            }
        }
        HomologyResult h = homology_dimension(d_in, d_out);
        if (fill) {
            fill->dim = h.dim;
            for (const SparseVec& rep : h.representatives) {
                std::map<CochainBasisElement, Rational> r;
                for (const auto& [i, c] : rep)
                    r[cx.cochains[mid[i]]] = c;
                fill->representatives.push_back(std::move(r));
            }
        }
        return h.dim;
    };
    CohomologyResult res;
    res.degree = degree;
    compute_dim(t, &res);
    if (with_stability) {
        int smaller = compute_dim(t.shrunk(), nullptr);
        res.stable = (smaller == res.dim);
    }
    return res;
}

}  // namespace curvedop
