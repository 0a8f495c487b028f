#include "curvedop/bar.hpp"

#include <algorithm>
#include <functional>

#include "curvedop/signs.hpp"

namespace curvedop {

namespace {

// The directly transcribed symmetric-model differential on a word, summing the
// shuffle formula over the operation keys of the structure. Written against
// the displayed coefficients, independently of the tree machinery.
FormalSum<BarWord> sym_d(const AlgebraStructure& alg, const BarWord& w) {
    const GrDgModule& m = alg.module;
    FormalSum<BarWord> out;
    int n = w.length();
    const std::vector<int>& ks = w.key.extra;

    // Letterwise predifferential, Koszul past the key and earlier letters.
    for (int i = 0; i < n; ++i) {
        const FormalSum<int>& da = m.d_column(w.letters[i]);
        if (da.empty())
            continue;
        int parity = w.key.degree();
        for (int j = 0; j < i; ++j)
            parity += m.element(w.letters[j]).degree;
        for (const auto& [b, c] : da) {
            std::vector<int> letters = w.letters;
            letters[i] = b;
            auto rebuilt = make_ccx_word(m, ks, letters);
            if (rebuilt)
                out.add(rebuilt->first, c * Rational((parity % 2 ? -1 : 1) * rebuilt->second));
        }
    }

    // Shuffle part: a block of q letters is consumed by an operation
    // j_{k''_...}, the result re-enters with the collected shift k'.
    for (int q = 1; q <= n; ++q) {
        int p = n + 1 - q;
        if (p < 1)
            continue;
        for (const Permutation& sigma : monotone_shuffles({q, n - q})) {
            std::vector<int> block_pos(q), rest_pos(n - q);
            for (int j = 0; j < q; ++j)
                block_pos[j] = sigma(j + 1);
            for (int j = 0; j < n - q; ++j)
                rest_pos[j] = sigma(q + j + 1);
            // Split each consumed shift k = k' + k''.
            std::vector<int> split(q, 0);
            std::function<void(int)> rec = [&](int idx) {
                if (idx == q) {
                    std::vector<int> kpp(q), kp_full(n, 0), kpp_full(n, 0), block_kp(q);
                    int kprime = 0;
                    for (int j = 0; j < q; ++j) {
                        int pos = block_pos[j];
                        kpp[j] = ks[pos - 1] - split[j];
                        kp_full[pos - 1] = split[j];
                        kpp_full[pos - 1] = kpp[j];
                        block_kp[j] = split[j];
                        kprime += split[j];
                    }
                    for (int j = 0; j < n - q; ++j)
                        kp_full[rest_pos[j] - 1] = ks[rest_pos[j] - 1];
                    GeneratorKey inner = GeneratorKey::ccx(kpp);
                    const SparseTensor& op = alg.op(inner);
                    if (op.is_zero())
                        return;
                    Rational coeff =
                        alpha_coeff(block_kp) *
                        Rational(sgn_restricted(sigma, ks) *
                                 epsilon_sigma(kp_full, kpp_full, sigma));
                    if (is_zero(coeff))
                        return;
                    std::vector<int> block(q);
                    for (int j = 0; j < q; ++j)
                        block[j] = w.letters[block_pos[j] - 1];
                    FormalSum<int> value = op.apply(block);
                    if (value.empty())
                        return;
                    // Regroup the letters block-first and cross the new root key.
                    int parity = 0;
                    std::vector<int> grouped = block_pos;
                    for (int v : rest_pos)
                        grouped.push_back(v);
                    for (std::size_t a = 0; a < grouped.size(); ++a)
                        for (std::size_t b = a + 1; b < grouped.size(); ++b)
                            if (grouped[a] > grouped[b])
                                parity += m.element(w.letters[grouped[a] - 1]).degree *
                                          m.element(w.letters[grouped[b] - 1]).degree;
                    std::vector<int> root_ks;
                    root_ks.push_back(kprime);
                    for (int v : rest_pos)
                        root_ks.push_back(ks[v - 1]);
                    parity += GeneratorKey::ccx(root_ks).degree();  // alpha passes the root
                    for (const auto& [b, c] : value) {
                        std::vector<int> letters;
                        letters.push_back(b);
                        for (int v : rest_pos)
                            letters.push_back(w.letters[v - 1]);
                        auto rebuilt = make_ccx_word(m, root_ks, letters);
                        if (rebuilt)
                            out.add(rebuilt->first,
                                    coeff * c *
                                        Rational((parity % 2 ? -1 : 1) * rebuilt->second));
                    }
                    return;
                }
                for (int v = 0; v <= ks[block_pos[idx] - 1]; ++v) {
                    split[idx] = v;
                    rec(idx + 1);
                }
            };
            rec(0);
        }
    }

    // Curvature insertion: the arity-zero operation enters as a fresh letter
    // with shift zero.
    {
        const SparseTensor& theta = alg.op(curvature_key(Family::CCX));
        if (!theta.is_zero()) {
            FormalSum<int> value = theta.apply({});
            int parity = w.key.degree();  // the insertion map passes the key
            std::vector<int> root_ks;
            root_ks.push_back(0);
            for (int k : ks)
                root_ks.push_back(k);
            for (const auto& [b, c] : value) {
                std::vector<int> letters;
                letters.push_back(b);
                for (int a : w.letters)
                    letters.push_back(a);
                auto rebuilt = make_ccx_word(alg.module, root_ks, letters);
                if (rebuilt)
                    out.add(rebuilt->first,
                            c * Rational((parity % 2 ? -1 : 1) * rebuilt->second));
            }
        }
    }
    return out;
}

}  // namespace

SymAgreementReport sym_model_agreement(const AlgebraStructure& alg, const Truncation& t) {
    SymAgreementReport rep;
    if (alg.family != Family::CCX) {
        rep.pass = false;
        rep.detail = "symmetric model applies to the CCX family";
        return rep;
    }
    for (const BarWord& w : bar_basis(alg, t)) {
        FormalSum<BarWord> generic = bar_d(alg, w);
        FormalSum<BarWord> direct = sym_d(alg, w);
        if (!(generic == direct)) {
            rep.pass = false;
            rep.witness = w;
            rep.detail = "bar differential and symmetric model differ at " +
                         w.to_string(alg.module);
            return rep;
        }
    }
    return rep;
}

}  // namespace curvedop
