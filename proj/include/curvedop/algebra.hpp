#pragma once

#include <map>
#include <optional>
#include <string>

#include "curvedop/decomposition.hpp"
#include "curvedop/tensor.hpp"

namespace curvedop {

// A homotopy-algebra structure is its twisting data: one multilinear operation
// per generator key, on a finite gr-dg module. Unfilled keys are the zero
// operation; the coaugmentation key stores the module predifferential and is
// treated as such (the twisting morphism itself vanishes on it).
struct AlgebraStructure {
    GrDgModule module;
    Family family = Family::CUAS;
    std::map<GeneratorKey, SparseTensor> ops;

    const SparseTensor& op(const GeneratorKey& key) const;
    SparseTensor alpha(const GeneratorKey& key) const;  // zero on the coaugmentation
    void set_op(const GeneratorKey& key, SparseTensor t);

    int max_op_arity() const;
    int degree_span() const;  // max - min basis degree
};

// Shape, degree, filtration and (CCX) symmetry validation of the stored data.
CheckReport check_structure(const AlgebraStructure& alg);

// Left-hand side of the curved Maurer-Cartan equation per generator:
// Theta_H + del(alpha) + (alpha star alpha), exact; the structure is a valid
// homotopy algebra iff all residuals vanish on the window.
std::map<GeneratorKey, SparseTensor> mc_residual(const AlgebraStructure& alg, int max_arity,
                                                 int max_weight, int max_k = -1);

struct McReport {
    bool pass = true;
    std::optional<GeneratorKey> first_failure;
    std::string detail;
};

McReport mc_check(const AlgebraStructure& alg, int max_arity, int max_weight, int max_k = -1);

// Evaluates one two-level tree on the stored operations (alpha convention:
// zero on the coaugmentation key) including the unshuffle action.
SparseTensor eval_tree(const TwoLevelTree& tree, const SparseTensor& root_op,
                       const SparseTensor& inner_op, const GrDgModule& m);

}  // namespace curvedop
