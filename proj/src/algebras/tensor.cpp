#include "curvedop/tensor.hpp"

#include <stdexcept>

#include "curvedop/signs.hpp"

namespace curvedop {

void SparseTensor::add(const std::vector<int>& inputs, int output, const Rational& coeff) {
    if (static_cast<int>(inputs.size()) != arity)
        throw std::invalid_argument("SparseTensor::add arity mismatch");
    if (sgn(coeff) == 0)
        return;
    auto& sum = entries[inputs];
    sum.add(output, coeff);
    if (sum.empty())
        entries.erase(inputs);
}

void SparseTensor::add(const std::vector<int>& inputs, const FormalSum<int>& output,
                       const Rational& scale) {
    for (const auto& [out, c] : output)
        add(inputs, out, c * scale);
}

void SparseTensor::add_tensor(const SparseTensor& other, const Rational& scale) {
    if (other.is_zero())
        return;
    if (arity != other.arity)
        throw std::invalid_argument("SparseTensor::add_tensor arity mismatch");
    for (const auto& [in, out] : other.entries)
        add(in, out, scale);
}

FormalSum<int> SparseTensor::apply(const std::vector<int>& inputs) const {
    auto it = entries.find(inputs);
    return it == entries.end() ? FormalSum<int>() : it->second;
}

SparseTensor identity_tensor(const GrDgModule& m) {
    SparseTensor t;
    t.arity = 1;
    t.degree = 0;
    for (int i = 0; i < m.dim(); ++i)
        t.add({i}, i, Rational(1));
    return t;
}

SparseTensor d_tensor(const GrDgModule& m) {
    SparseTensor t;
    t.arity = 1;
    t.degree = -1;
    for (int j = 0; j < m.dim(); ++j)
        t.add({j}, m.d_column(j));
    return t;
}

SparseTensor compose_at(const SparseTensor& f, int pos, const SparseTensor& g,
                        const GrDgModule& m) {
    if (pos < 1 || pos > f.arity)
        throw std::invalid_argument("compose_at: position out of range");
    SparseTensor out;
    out.arity = f.arity + g.arity - 1;
    out.degree = f.degree + g.degree;
    if (f.is_zero() || g.is_zero())
        return out;
    // Group f entries by the value in the grafted slot.
    std::map<int, std::vector<const std::pair<const std::vector<int>, FormalSum<int>>*>> by_slot;
    for (const auto& entry : f.entries)
        by_slot[entry.first[pos - 1]].push_back(&entry);
    for (const auto& [gin, gout] : g.entries) {
        for (const auto& [b, gcoeff] : gout) {
            auto it = by_slot.find(b);
            if (it == by_slot.end())
                continue;
            for (const auto* fentry : it->second) {
                const std::vector<int>& fin = fentry->first;
                int prefix_deg = 0;
                for (int i = 0; i < pos - 1; ++i)
                    prefix_deg += m.element(fin[i]).degree;
                int sign = (g.degree % 2 != 0 && prefix_deg % 2 != 0) ? -1 : 1;
                std::vector<int> in;
                in.reserve(out.arity);
                for (int i = 0; i < pos - 1; ++i)
                    in.push_back(fin[i]);
                for (int v : gin)
                    in.push_back(v);
                for (int i = pos; i < f.arity; ++i)
                    in.push_back(fin[i]);
                out.add(in, fentry->second, gcoeff * sign);
            }
        }
    }
    return out;
}

SparseTensor permuted(const SparseTensor& f, const Permutation& tau, const GrDgModule& m) {
    if (tau.size() != f.arity)
        throw std::invalid_argument("permuted: size mismatch");
    SparseTensor out;
    out.arity = f.arity;
    out.degree = f.degree;
    if (tau.is_identity())
        return f;
    for (const auto& [fin, fout] : f.entries) {
        std::vector<int> in(f.arity);
        std::vector<int> degs(f.arity);
        for (int j = 1; j <= f.arity; ++j)
            in[tau(j) - 1] = fin[j - 1];
        for (int i = 0; i < f.arity; ++i)
            degs[i] = m.element(in[i]).degree;
        int sign = koszul_sign(tau, degs);
        out.add(in, fout, Rational(sign));
    }
    return out;
}

SparseTensor tensor_hom_differential(const SparseTensor& f, const GrDgModule& m) {
    SparseTensor d = d_tensor(m);
    SparseTensor out;
    out.arity = f.arity;
    out.degree = f.degree - 1;
    out.add_tensor(compose_at(d, 1, f, m));
    Rational sign((f.degree % 2 == 0) ? -1 : 1);
    for (int i = 1; i <= f.arity; ++i)
        out.add_tensor(compose_at(f, i, d, m), sign);
    return out;
}

CheckReport check_tensor(const SparseTensor& f, const GrDgModule& m, int extra_weight) {
    CheckReport report;
    for (const auto& [in, outsum] : f.entries) {
        int in_deg = 0, in_w = 0;
        for (int v : in) {
            if (v < 0 || v >= m.dim()) {
                report.fail("index", "-", "tensor input index out of range");
                return report;
            }
            in_deg += m.element(v).degree;
            in_w += m.element(v).weight;
        }
        for (const auto& [out, c] : outsum) {
            if (out < 0 || out >= m.dim()) {
                report.fail("index", "-", "tensor output index out of range");
                return report;
            }
            if (m.element(out).degree != in_deg + f.degree) {
                report.fail("degree", m.element(out).label,
                            "tensor entry violates the declared degree");
                return report;
            }
            if (m.element(out).weight < in_w + extra_weight) {
                report.fail("weight", m.element(out).label,
                            "tensor entry violates the filtration");
                return report;
            }
        }
    }
    return report;
}

}  // namespace curvedop
