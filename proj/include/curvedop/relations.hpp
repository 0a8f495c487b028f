#pragma once

#include <stdexcept>

#include "curvedop/algebra.hpp"

namespace curvedop {

class UnsupportedFamily : public std::invalid_argument {
public:
    UnsupportedFamily()
        : std::invalid_argument("structure relations are only printed for CUAS and SCLIE") {}
};

struct RelationReport {
    bool pass = true;
    std::optional<GeneratorKey> first_failure;
    std::string detail;
};

// Evaluates the printed homotopy-algebra relation sums directly, with the
// arity-one operation taken to be the module predifferential. Independent of
// the infinitesimal-decomposition route; must agree with mc_check.
RelationReport check_structure_relations(const AlgebraStructure& alg, int max_arity,
                                         int max_weight);

// The relation tensor at one generator (CUAS or SCLIE).
SparseTensor relation_sum(const AlgebraStructure& alg, const GeneratorKey& key);

}  // namespace curvedop
