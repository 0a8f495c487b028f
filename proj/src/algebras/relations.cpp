#include "curvedop/relations.hpp"

#include <algorithm>

#include "curvedop/signs.hpp"

namespace curvedop {

namespace {

// Operation lookup with m_1 = d_A substituted, as the printed relations use it.
SparseTensor op_with_d(const AlgebraStructure& alg, const GeneratorKey& key) {
    if (key.is_coaugmentation())
        return d_tensor(alg.module);
    return alg.op(key);
}

SparseTensor sclie_relation(const AlgebraStructure& alg, int n) {
    SparseTensor res;
    res.arity = n;
    res.degree = -2;
    for (int p = 1; p <= n + 1; ++p) {
        int q = n + 1 - p;
        SparseTensor lp = op_with_d(alg, GeneratorKey::sclie(p));
        SparseTensor lq = op_with_d(alg, GeneratorKey::sclie(q));
        if (lp.is_zero() || lq.is_zero())
            continue;
        SparseTensor h = compose_at(lp, 1, lq, alg.module);
        for (const Permutation& sigma : monotone_shuffles({q, p - 1}))
            res.add_tensor(permuted(h, sigma, alg.module));
    }
    return res;
}

struct CuasSplit {
    int p, q, r;
    std::vector<int> t0prime;  // T cap [p]
    std::vector<int> t1;       // inner marks, 1-based within the run
    std::vector<int> t0tail;   // T beyond the run
};

SparseTensor cuas_relation(const AlgebraStructure& alg, const GeneratorKey& key) {
    int n = key.n;
    const std::vector<int>& T = key.extra;
    const GrDgModule& m = alg.module;

    if (n == 2 && T.size() == 1) {
        // del(m_2^{t}) - m_2 o (unit at slot t) + id
        SparseTensor res = tensor_hom_differential(alg.op(key), m);
        SparseTensor m2 = alg.op(GeneratorKey::cuas(2));
        SparseTensor unit = alg.op(GeneratorKey::cuas(1, {1}));
        if (!m2.is_zero() && !unit.is_zero())
            res.add_tensor(compose_at(m2, T[0], unit, m), Rational(-1));
        res.add_tensor(identity_tensor(m));
        return res;
    }

    SparseTensor res;
    res.arity = key.slots();
    res.degree = key.degree() - 2;
    auto in_T = [&](int pos) { return std::binary_search(T.begin(), T.end(), pos); };
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; p + q <= n; ++q) {
            int r = n - p - q;
            CuasSplit s{p, q, r, {}, {}, {}};
            for (int v = 1; v <= p; ++v)
                if (in_T(v))
                    s.t0prime.push_back(v);
            for (int v = p + 1; v <= p + q; ++v)
                if (in_T(v))
                    s.t1.push_back(v - p);
            for (int v = p + q + 1; v <= n; ++v)
                if (in_T(v))
                    s.t0tail.push_back(v);
            // Root marks in root coordinates: the tail shifts past the graft leaf.
            std::vector<int> t0;
            t0 = s.t0prime;
            for (int v : s.t0tail)
                t0.push_back(v - q + 1);
            GeneratorKey root = GeneratorKey::cuas(p + 1 + r, t0);
            GeneratorKey inner = GeneratorKey::cuas(q, s.t1);
            SparseTensor rop = op_with_d(alg, root);
            SparseTensor iop = op_with_d(alg, inner);
            if (rop.is_zero() || iop.is_zero())
                continue;
            long eps = static_cast<long>(p + s.t0tail.size()) * q + r +
                       static_cast<long>(s.t0prime.size()) * (s.t1.size() + 1);
            int slot = p + 1 - static_cast<int>(s.t0prime.size());
            SparseTensor h = compose_at(rop, slot, iop, m);
            res.add_tensor(h, Rational(eps % 2 == 0 ? 1 : -1));
        }
    }
    return res;
}

}  // namespace

SparseTensor relation_sum(const AlgebraStructure& alg, const GeneratorKey& key) {
    switch (alg.family) {
        case Family::SCLIE:
            return sclie_relation(alg, key.n);
        case Family::CUAS:
            return cuas_relation(alg, key);
        case Family::CCX:
            throw UnsupportedFamily();
    }
    throw UnsupportedFamily();
}

RelationReport check_structure_relations(const AlgebraStructure& alg, int max_arity,
                                         int max_weight) {
    (void)max_weight;
    if (alg.family == Family::CCX)
        throw UnsupportedFamily();
    RelationReport rep;
    for (const GeneratorKey& g : keys_up_to(alg.family, max_arity)) {
        SparseTensor res = relation_sum(alg, g);
        if (!res.is_zero()) {
            rep.pass = false;
            rep.first_failure = g;
            rep.detail = "relation fails at " + g.to_string();
            return rep;
        }
    }
    return rep;
}

}  // namespace curvedop
