#pragma once

#include <stdexcept>

#include "curvedop/algebra.hpp"

namespace curvedop {

class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& axiom)
        : std::invalid_argument("invalid strict-algebra input: " + axiom), axiom_(axiom) {}
    const std::string& axiom() const { return axiom_; }

private:
    std::string axiom_;
};

// Curved unital associative algebra (A, mu, unit, d, theta) as twisting data:
// m_2 = product, m_1^{1} = unit element, m_0 = theta, m_1 = d.
// Preconditions (associativity, two-sided unit, degrees, d derivation,
// d^2 = [theta,-], d theta = 0, theta in F_1) are verified.
AlgebraStructure strict_cuas(const GrDgModule& module, const SparseTensor& product,
                             const FormalSum<int>& unit, const FormalSum<int>& theta);

// Complete curved Lie C-algebra (A, J, bracket, d, theta) as twisting data:
// j_(1) = J, j_(0,0) = bracket, j_() = theta, j_(0) = d. The bracket is the
// shifted one (homological degree -1, Koszul-symmetric), C-linear in each slot.
AlgebraStructure strict_ccx(const GrDgModule& module, const SparseTensor& J,
                            const SparseTensor& bracket, const FormalSum<int>& theta);

// Strict shifted curved Lie algebra: l_2 = bracket (degree -1, symmetric),
// l_0 = theta, l_1 = d.
AlgebraStructure strict_sclie(const GrDgModule& module, const SparseTensor& bracket,
                              const FormalSum<int>& theta);

}  // namespace curvedop
