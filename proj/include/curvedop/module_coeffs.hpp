#pragma once

#include "curvedop/algebra.hpp"

namespace curvedop {

// Action tensor entry: inputs are base-algebra basis indices except for the
// one module slot; the output lives in the module.
struct ActionEntry {
    std::vector<int> inputs;  // algebra indices, module index at mslot
    int mslot = 0;            // 0-based position of the module input
    FormalSum<int> output;    // module indices
};

// Module coefficients over a homotopy algebra: one action tensor per key with
// exactly one module input slot. Validation goes entirely through the
// square-zero extension.
struct ModuleCoefficients {
    const AlgebraStructure* base = nullptr;
    GrDgModule module;
    std::map<GeneratorKey, std::vector<ActionEntry>> action;
};

// The algebra A (+) M with operations gamma_A on pure algebra slots plus the
// one-module-slot action, zero on two or more module slots.
AlgebraStructure square_zero_extension(const AlgebraStructure& a, const ModuleCoefficients& m);

// Trivial complex-line coefficients over a CCX algebra: the action of j_(1)
// is multiplication by i, everything else zero. j_one / j_i are the two basis
// labels the module uses.
ModuleCoefficients trivial_complex_module(const AlgebraStructure& ccx_algebra);

// Regular coefficients: M = A with the tautological action.
ModuleCoefficients regular_module(const AlgebraStructure& a);

struct ModuleReport {
    bool pass = true;
    std::optional<GeneratorKey> first_failure;
    std::string detail;
};

// Valid iff the square-zero extension satisfies the Maurer-Cartan equation.
ModuleReport check_module(const AlgebraStructure& a, const ModuleCoefficients& m,
                          int max_arity, int max_weight);

}  // namespace curvedop
