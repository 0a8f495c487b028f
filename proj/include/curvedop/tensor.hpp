#pragma once

#include <map>
#include <vector>

#include "curvedop/formal_sum.hpp"
#include "curvedop/grdg.hpp"
#include "curvedop/permutation.hpp"

namespace curvedop {

// Multilinear operation on a module: basis-tuple inputs to a formal output.
// No stored zero entries; degree is the homological degree of the map.
struct SparseTensor {
    int arity = 0;
    int degree = 0;
    std::map<std::vector<int>, FormalSum<int>> entries;

    bool is_zero() const { return entries.empty(); }

    void add(const std::vector<int>& inputs, int output, const Rational& coeff);
    void add(const std::vector<int>& inputs, const FormalSum<int>& output,
             const Rational& scale = Rational(1));
    void add_tensor(const SparseTensor& other, const Rational& scale = Rational(1));

    FormalSum<int> apply(const std::vector<int>& inputs) const;

    bool operator==(const SparseTensor& o) const {
        return arity == o.arity && degree == o.degree && entries == o.entries;
    }
};

SparseTensor identity_tensor(const GrDgModule& m);
SparseTensor d_tensor(const GrDgModule& m);

// f o_pos g with the Koszul sign (-1)^{|g| (|x_1|+...+|x_{pos-1}|)}.
SparseTensor compose_at(const SparseTensor& f, int pos, const SparseTensor& g,
                        const GrDgModule& m);

// (f^tau)(x_1..x_n) = koszul(tau, deg x) f(x_tau(1), ..., x_tau(n)).
SparseTensor permuted(const SparseTensor& f, const Permutation& tau, const GrDgModule& m);

// d f - (-1)^{|f|} sum_i f o_i d.
SparseTensor tensor_hom_differential(const SparseTensor& f, const GrDgModule& m);

// Entries must connect tuples whose degrees differ by the declared tensor
// degree, be weight-nondecreasing by at least `extra_weight`, and (optionally)
// stay inside the module dimensions.
CheckReport check_tensor(const SparseTensor& f, const GrDgModule& m, int extra_weight = 0);

}  // namespace curvedop
