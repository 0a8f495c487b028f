#pragma once

#include "curvedop/aq.hpp"

namespace curvedop {

// Graded-commutative product on the complex-valued cochains of the bar of a
// CCX algebra, through the projection onto the all-zero-shift corollas and
// complex multiplication at the target.
HomCochain cdga_product(const AlgebraStructure& alg, const GrDgModule& line,
                        const HomCochain& phi, const HomCochain& psi,
                        const std::vector<BarWord>& words, int max_weight);

struct CdgaReport {
    bool pass = true;
    std::string failed_law;
    std::string detail;
};

// Commutativity and complex bilinearity on all basis cochain pairs, the
// Leibniz rule on all basis pairs, associativity on all basis triples of the
// shrunken window plus exact randomized combinations on the full window.
CdgaReport check_cdga(const AlgebraStructure& alg, const Truncation& t, int random_trials = 4);

}  // namespace curvedop
