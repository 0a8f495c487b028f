#include "curvedop/convolution.hpp"

#include <functional>

#include "curvedop/signs.hpp"

namespace curvedop {

namespace {

FormalSum<int> apply_op_to_sums(const SparseTensor& op, const std::vector<FormalSum<int>>& args) {
    FormalSum<int> out;
    std::vector<int> idx(args.size(), 0);
    std::function<void(std::size_t, std::vector<int>&, Rational)> rec =
        [&](std::size_t slot, std::vector<int>& tuple, Rational coeff) {
            if (slot == args.size()) {
                out.add(op.apply(tuple), coeff);
                return;
            }
            for (const auto& [b, c] : args[slot]) {
                tuple.push_back(b);
                rec(slot + 1, tuple, coeff * c);
                tuple.pop_back();
            }
        };
    std::vector<int> tuple;
    rec(0, tuple, Rational(1));
    return out;
}

}  // namespace

HomCochain l_n_alpha(const AlgebraStructure& source, const AlgebraStructure& target,
                     const std::vector<const HomCochain*>& phis,
                     const std::vector<BarWord>& words, int max_weight) {
    const GrDgModule& src = source.module;
    const GrDgModule& tgt = target.module;
    int k = static_cast<int>(phis.size());
    HomCochain out;
    out.degree = -1;
    for (const auto* phi : phis)
        out.degree += phi->degree + 1;
    std::vector<Permutation> perms = all_permutations(k);
    for (const BarWord& w : words) {
        FormalSum<int> val;
        if (k == 1) {
            // l_1 is the twisted differential: hom differential plus the
            // arity-one insertions below.
            const HomCochain& phi = *phis[0];
            for (const auto& [b, c] : phi.at(w))
                val.add(tgt.d_column(b), c);
            Rational s(phi.degree % 2 == 0 ? -1 : 1);
            for (const auto& [u, c] : bar_d(source, w))
                val.add(phi.at(u), c * s);
        }
        for (const auto& [corolla, coeff] : coalgebra_delta(source, w, max_weight)) {
            if (static_cast<int>(corolla.children.size()) != k)
                continue;
            if (corolla.root.is_coaugmentation())
                continue;
            const SparseTensor& op = target.op(corolla.root);
            if (op.is_zero())
                continue;
            std::vector<int> subdegs(k);
            for (int j = 0; j < k; ++j)
                subdegs[j] = corolla.children[j].degree(src);
            for (const Permutation& sigma : perms) {
                // Koszul: reorder the cochains to sigma order, then move each
                // past the root operation and the earlier subwords.
                std::vector<int> phidegs(k);
                for (int j = 0; j < k; ++j)
                    phidegs[j] = phis[j]->degree;
                int parity = 0;
                for (int a = 1; a <= k; ++a)
                    for (int b = a + 1; b <= k; ++b)
                        if (sigma(a) > sigma(b))
                            parity += phidegs[sigma(a) - 1] * phidegs[sigma(b) - 1];
                int opdeg = corolla.root.degree() - 1;
                for (int j = 1; j <= k; ++j) {
                    int d = phidegs[sigma(j) - 1];
                    int passed = opdeg;
                    for (int l = 0; l < j - 1; ++l)
                        passed += subdegs[l];
                    parity += d * passed;
                }
                std::vector<FormalSum<int>> args(k);
                bool dead = false;
                for (int j = 0; j < k; ++j) {
                    args[j] = phis[sigma(j + 1) - 1]->at(corolla.children[j]);
                    if (args[j].empty())
                        dead = true;
                }
                if (dead)
                    continue;
                FormalSum<int> term = apply_op_to_sums(op, args);
                val.add(term, coeff * Rational(parity % 2 == 0 ? 1 : -1));
            }
        }
        if (!val.empty())
            out.add(w, val);
    }
    return out;
}

HomCochain algebraic_mc_sum(const AlgebraStructure& source, const AlgebraStructure& target,
                            const HomCochain& phi, const std::vector<BarWord>& words,
                            int max_n, int max_weight) {
    HomCochain acc;
    acc.degree = phi.degree - 1;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<const HomCochain*> phis(n, &phi);
        HomCochain term = l_n_alpha(source, target, phis, words, max_weight);
        for (const auto& [w, v] : term.values)
            acc.add(w, v, inverse_factorial(n));
    }
    return acc;
}

HomCochain algebraic_mc_residual(const AlgebraStructure& source, const AlgebraStructure& target,
                                 const HomCochain& phi, const std::vector<BarWord>& words,
                                 int max_weight) {
    const GrDgModule& src = source.module;
    const GrDgModule& tgt = target.module;
    HomCochain out;
    out.degree = phi.degree - 1;
    SparseTensor d_t = d_tensor(tgt);
    for (const BarWord& w : words) {
        FormalSum<int> val;
        // d_target . phi
        for (const auto& [b, c] : phi.at(w))
            val.add(tgt.d_column(b), c);
        // - (-1)^{|phi|} phi . d_b
        Rational s(phi.degree % 2 == 0 ? -1 : 1);
        for (const auto& [u, c] : bar_d(source, w))
            val.add(phi.at(u), c * s);
        // gamma(alpha o phi) Delta: the target operation at the root, phi on
        // every child.
        for (const auto& [corolla, coeff] : coalgebra_delta(source, w, max_weight)) {
            if (corolla.root.is_coaugmentation())
                continue;
            const SparseTensor& op = target.op(corolla.root);
            if (op.is_zero())
                continue;
            int k = static_cast<int>(corolla.children.size());
            std::vector<FormalSum<int>> args(k);
            bool dead = false;
            int parity = 0;
            int passed = corolla.root.degree() - 1;
            for (int j = 0; j < k && !dead; ++j) {
                args[j] = phi.at(corolla.children[j]);
                if (args[j].empty())
                    dead = true;
                parity += phi.degree * passed;
                passed += corolla.children[j].degree(src);
            }
            if (dead)
                continue;
            val.add(apply_op_to_sums(op, args), coeff * Rational(parity % 2 == 0 ? 1 : -1));
        }
        if (!val.empty())
            out.add(w, val);
    }
    return out;
}

}  // namespace curvedop
