#pragma once

#include "curvedop/convolution.hpp"
#include "curvedop/linalg.hpp"
#include "curvedop/module_coeffs.hpp"

namespace curvedop {

class InvalidStructure : public std::runtime_error {
public:
    explicit InvalidStructure(const std::string& what) : std::runtime_error(what) {}
};

// Basis cochain: the dual of (word, module element); cohomological degree
// deg(word) - deg(element).
struct CochainBasisElement {
    BarWord word;
    int target = 0;

    bool operator<(const CochainBasisElement& o) const {
        if (!(word == o.word))
            return word < o.word;
        return target < o.target;
    }
    bool operator==(const CochainBasisElement& o) const {
        return word == o.word && target == o.target;
    }
};

struct AQComplex {
    std::vector<BarWord> words;
    std::map<BarWord, int> word_index;
    std::vector<CochainBasisElement> cochains;          // all degrees, sorted
    std::map<CochainBasisElement, int> cochain_index;
    std::vector<int> cohomological_degree;              // per cochain
    SparseMatrix d_tau;                                 // full operator
    std::vector<bool> row_complete;   // per word: every referenced word in range
    std::vector<bool> word_interior;  // row_complete and references row-complete

    std::vector<int> degree_subspace(int n) const;
};

// Assembles Hom(bar(A), M) with the twisted differential; requires the
// structure and module to validate first.
AQComplex aq_differential(const AlgebraStructure& alg, const ModuleCoefficients& coeffs,
                          const Truncation& t, int validate_arity = 3);

struct DtauReport {
    bool pass = true;
    std::optional<CochainBasisElement> witness;
    int interior_words = 0;
    int boundary_words = 0;
    std::string detail;
};

DtauReport check_dtau_square(const AlgebraStructure& alg, const ModuleCoefficients& coeffs,
                             const Truncation& t);

struct CohomologyResult {
    int degree = 0;
    int dim = 0;
    bool stable = false;
    std::vector<std::map<CochainBasisElement, Rational>> representatives;
};

CohomologyResult aq_cohomology(const AlgebraStructure& alg, const ModuleCoefficients& coeffs,
                               int degree, const Truncation& t, bool with_stability = true);

struct Z0Report {
    bool pass = true;
    int dim_kernel = 0;
    int dim_mc = 0;
    bool kernel_in_mc = false;
    bool mc_in_kernel = false;
    std::string detail;
};

// Kernel of the twisted differential in degree zero against the solution
// space of the algebraic Maurer-Cartan operator into the trivial complex
// line; proves mutual containment.
Z0Report z0_infinity_correspondence(const AlgebraStructure& ccx_algebra, const Truncation& t);

}  // namespace curvedop
