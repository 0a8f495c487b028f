#pragma once

#include "curvedop/bar.hpp"

namespace curvedop {

// Linear map from bar words to a target module, stored on its support.
struct HomCochain {
    int degree = 0;  // homological degree
    std::map<BarWord, FormalSum<int>> values;

    FormalSum<int> at(const BarWord& w) const {
        auto it = values.find(w);
        return it == values.end() ? FormalSum<int>() : it->second;
    }
    void add(const BarWord& w, const FormalSum<int>& v, const Rational& scale = Rational(1)) {
        if (v.empty() || sgn(scale) == 0)
            return;
        auto& slot = values[w];
        slot.add(v, scale);
        if (slot.empty())
            values.erase(w);
    }
    bool is_zero() const { return values.empty(); }
    bool operator==(const HomCochain& o) const {
        return degree == o.degree && values == o.values;
    }
};

// The convolution bracket l_k^alpha applied to k cochains out of the bar of
// `source` into the strict target structure: the coalgebra decomposition at
// arity k, the target operation at the root, the cochains at the leaves over
// the symmetrized sum with Koszul signs.
HomCochain l_n_alpha(const AlgebraStructure& source, const AlgebraStructure& target,
                     const std::vector<const HomCochain*>& phis,
                     const std::vector<BarWord>& words, int max_weight);

// sum_{n <= max_n} 1/n! l_n(phi,...,phi) on the listed words.
HomCochain algebraic_mc_sum(const AlgebraStructure& source, const AlgebraStructure& target,
                            const HomCochain& phi, const std::vector<BarWord>& words,
                            int max_n, int max_weight);

// The same residual through the adjunction formula
// d_target . phi + gamma(alpha o phi) Delta - phi . d_b, exact on each word.
HomCochain algebraic_mc_residual(const AlgebraStructure& source, const AlgebraStructure& target,
                                 const HomCochain& phi, const std::vector<BarWord>& words,
                                 int max_weight);

}  // namespace curvedop
