#include "curvedop/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "curvedop/signs.hpp"

namespace curvedop {

namespace {
const SparseTensor& zero_tensor_of(int arity, int degree) {
    static std::map<std::pair<int, int>, SparseTensor> zeros;
    static std::mutex m;
    std::lock_guard lock(m);
    auto key = std::make_pair(arity, degree);
    auto it = zeros.find(key);
    if (it == zeros.end()) {
        SparseTensor t;
        t.arity = arity;
        t.degree = degree;
        it = zeros.emplace(key, std::move(t)).first;
    }
    return it->second;
}
}  // namespace

const SparseTensor& AlgebraStructure::op(const GeneratorKey& key) const {
    auto it = ops.find(key);
    if (it != ops.end())
        return it->second;
    return zero_tensor_of(key.slots(), key.degree() - 1);
}

SparseTensor AlgebraStructure::alpha(const GeneratorKey& key) const {
    if (key.is_coaugmentation())
        return zero_tensor_of(1, -1);
    return op(key);
}

void AlgebraStructure::set_op(const GeneratorKey& key, SparseTensor t) {
    if (key.family != family)
        throw std::invalid_argument("operation key from the wrong family");
    if (t.arity != key.slots())
        throw std::invalid_argument("operation arity does not match the key");
    t.degree = key.degree() - 1;
    if (t.is_zero())
        ops.erase(key);
    else
        ops[key] = std::move(t);
}

int AlgebraStructure::max_op_arity() const {
    int a = 1;
    for (const auto& [k, t] : ops)
        a = std::max(a, k.arity_label());
    return a;
}

int AlgebraStructure::degree_span() const {
    if (module.dim() == 0)
        return 0;
    int lo = module.element(0).degree, hi = lo;
    for (int i = 1; i < module.dim(); ++i) {
        lo = std::min(lo, module.element(i).degree);
        hi = std::max(hi, module.element(i).degree);
    }
    return hi - lo;
}

CheckReport check_structure(const AlgebraStructure& alg) {
    CheckReport report = check_grdg(alg.module);
    if (!report.pass)
        return report;
    for (const auto& [key, t] : alg.ops) {
        if (key.family != alg.family) {
            report.fail("family", key.to_string(), "operation key from the wrong family");
            return report;
        }
        if (t.arity != key.slots()) {
            report.fail("arity", key.to_string(), "operation arity mismatch");
            return report;
        }
        if (t.degree != key.degree() - 1) {
            report.fail("op_degree", key.to_string(),
                        "operation degree must be deg(key) - 1");
            return report;
        }
        CheckReport tr = check_tensor(t, alg.module, key.weight());
        if (!tr.pass) {
            report.fail(tr.clause, key.to_string(), tr.detail);
            return report;
        }
        if (key.is_coaugmentation() && !(t == d_tensor(alg.module))) {
            report.fail("coaugmentation", key.to_string(),
                        "the arity-one coaugmentation operation must store the predifferential");
            return report;
        }
    }
    // CCX operations are fixed under the key action up to its sign.
    if (alg.family == Family::CCX) {
        for (const auto& [key, t] : alg.ops) {
            int n = key.slots();
            if (n < 2)
                continue;
            for (const Permutation& tau : all_permutations(n)) {
                if (tau.is_identity())
                    continue;
                std::vector<int> ks(n);
                for (int i = 1; i <= n; ++i)
                    ks[i - 1] = key.extra[tau(i) - 1];
                GeneratorKey moved = GeneratorKey::ccx(std::move(ks));
                SparseTensor expected = permuted(t, tau, alg.module);
                Rational s(sgn_restricted(tau, key.extra));
                SparseTensor scaled = alg.op(moved);
                SparseTensor diff = scaled;
                diff.add_tensor(expected, -s);
                if (!diff.is_zero()) {
                    report.fail("symmetry", key.to_string(),
                                "operation is not equivariant under the key action");
                    return report;
                }
            }
        }
    }
    return report;
}

SparseTensor eval_tree(const TwoLevelTree& tree, const SparseTensor& root_op,
                       const SparseTensor& inner_op, const GrDgModule& m) {
    SparseTensor h = compose_at(root_op, tree.pos, inner_op, m);
    int n = tree.composite_slots();
    int q = tree.inner.slots();
    // h's arguments: root slots before pos, then the inner block, then the rest.
    std::vector<bool> used(n + 1, false);
    for (int p : tree.inner_positions)
        used[p] = true;
    std::vector<int> outer;
    for (int v = 1; v <= n; ++v)
        if (!used[v])
            outer.push_back(v);
    std::vector<int> tau(n);
    int idx = 0;
    for (int i = 0; i < tree.pos - 1; ++i)
        tau[idx++] = outer[i];
    for (int p : tree.inner_positions)
        tau[idx++] = p;
    for (std::size_t i = tree.pos - 1; i < outer.size(); ++i)
        tau[idx++] = outer[i];
    (void)q;
    return permuted(h, Permutation(tau), m);
}

namespace {

SparseTensor mc_residual_at(const AlgebraStructure& alg, const GeneratorKey& g,
                            const SparseTensor& d2) {
    SparseTensor res;
    res.arity = g.slots();
    res.degree = g.degree() - 2;
    // Theta_H = theta_End . counit + unit . theta^c
    if (!is_zero(g.counit()))
        res.add_tensor(d2, g.counit());
    if (!is_zero(g.curvature()))
        res.add_tensor(identity_tensor(alg.module), g.curvature());
    // del(alpha)
    SparseTensor a = alg.alpha(g);
    if (!a.is_zero())
        res.add_tensor(tensor_hom_differential(a, alg.module));
    // alpha star alpha over the infinitesimal decomposition, with the Koszul
    // sign of alpha (degree -1) passing the root.
    for (const auto& [tree, coeff] : delta1(g)) {
        if (tree.root.is_coaugmentation() || tree.inner.is_coaugmentation())
            continue;
        SparseTensor root_op = alg.op(tree.root);
        SparseTensor inner_op = alg.op(tree.inner);
        if (root_op.is_zero() || inner_op.is_zero())
            continue;
        Rational c = coeff;
        if (tree.root.degree() % 2 != 0)
            c = -c;
        res.add_tensor(eval_tree(tree, root_op, inner_op, alg.module), c);
    }
    return res;
}

}  // namespace

std::map<GeneratorKey, SparseTensor> mc_residual(const AlgebraStructure& alg, int max_arity,
                                                 int max_weight, int max_k) {
    (void)max_weight;
    if (max_k < 0)
        max_k = alg.degree_span() + 2;
    std::map<GeneratorKey, SparseTensor> out;
    SparseTensor d = d_tensor(alg.module);
    SparseTensor d2 = compose_at(d, 1, d, alg.module);
    std::vector<GeneratorKey> keys = keys_up_to(alg.family, max_arity, max_k);
    std::vector<SparseTensor> residuals(keys.size());
    int nkeys = static_cast<int>(keys.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (nkeys > 16)
#endif
    for (int gi = 0; gi < nkeys; ++gi)
        residuals[gi] = mc_residual_at(alg, keys[gi], d2);
    for (int gi = 0; gi < nkeys; ++gi)
        if (!residuals[gi].is_zero())
            out.emplace(keys[gi], std::move(residuals[gi]));
    return out;
}

McReport mc_check(const AlgebraStructure& alg, int max_arity, int max_weight, int max_k) {
    McReport rep;
    auto res = mc_residual(alg, max_arity, max_weight, max_k);
    if (!res.empty()) {
        rep.pass = false;
        rep.first_failure = res.begin()->first;
        rep.detail = "Maurer-Cartan residual nonzero at " + res.begin()->first.to_string();
    }
    return rep;
}

}  // namespace curvedop
