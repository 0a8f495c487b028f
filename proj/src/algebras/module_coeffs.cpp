#include "curvedop/module_coeffs.hpp"

#include <stdexcept>

namespace curvedop {

AlgebraStructure square_zero_extension(const AlgebraStructure& a, const ModuleCoefficients& m) {
    AlgebraStructure out;
    out.family = a.family;
    out.module = direct_sum(a.module, m.module, "a:", "m:");
    int na = a.module.dim();

    for (const auto& [key, t] : a.ops) {
        SparseTensor lifted;
        lifted.arity = t.arity;
        lifted.degree = t.degree;
        for (const auto& [in, outsum] : t.entries)
            lifted.add(in, outsum);  // algebra indices keep their positions
        out.set_op(key, std::move(lifted));
    }
    for (const auto& [key, entries] : m.action) {
        SparseTensor t = out.op(key);  // copy (possibly zero) to extend
        t.arity = key.slots();
        t.degree = key.degree() - 1;
        for (const ActionEntry& e : entries) {
            if (static_cast<int>(e.inputs.size()) != key.slots())
                throw std::invalid_argument("action entry arity mismatch at " + key.to_string());
            std::vector<int> in(e.inputs.size());
            for (std::size_t i = 0; i < e.inputs.size(); ++i)
                in[i] = (static_cast<int>(i) == e.mslot) ? na + e.inputs[i] : e.inputs[i];
            FormalSum<int> outsum;
            for (const auto& [j, c] : e.output)
                outsum.add(na + j, c);
            t.add(in, outsum);
        }
        out.set_op(key, std::move(t));
    }
    return out;
}

ModuleCoefficients trivial_complex_module(const AlgebraStructure& ccx_algebra) {
    if (ccx_algebra.family != Family::CCX)
        throw std::invalid_argument("trivial complex module requires a CCX algebra");
    ModuleCoefficients m;
    m.base = &ccx_algebra;
    m.module = GrDgModule({{"one", 0, 0}, {"i", 0, 0}});
    // action of j_(1): multiplication by i on the module slot
    std::vector<ActionEntry> entries;
    entries.push_back({{0}, 0, FormalSum<int>(1, Rational(1))});
    entries.push_back({{1}, 0, FormalSum<int>(0, Rational(-1))});
    m.action[GeneratorKey::ccx({1})] = std::move(entries);
    return m;
}

ModuleCoefficients regular_module(const AlgebraStructure& a) {
    ModuleCoefficients m;
    m.base = &a;
    m.module = a.module;
    for (const auto& [key, t] : a.ops) {
        if (key.is_coaugmentation() || key.slots() == 0)
            continue;
        std::vector<ActionEntry>& entries = m.action[key];
        for (const auto& [in, outsum] : t.entries) {
            for (int slot = 0; slot < t.arity; ++slot)
                entries.push_back({in, slot, outsum});
        }
    }
    return m;
}

ModuleReport check_module(const AlgebraStructure& a, const ModuleCoefficients& m,
                          int max_arity, int max_weight) {
    ModuleReport rep;
    AlgebraStructure ext = square_zero_extension(a, m);
    McReport mc = mc_check(ext, max_arity, max_weight);
    rep.pass = mc.pass;
    rep.first_failure = mc.first_failure;
    rep.detail = mc.detail;
    return rep;
}

}  // namespace curvedop
