#pragma once

#include "curvedop/strict.hpp"

namespace curvedop::fixtures {

// K[theta]/theta^2: unital product on {e, theta-element t}, curvature t.
inline AlgebraStructure ktheta() {
    GrDgModule m({{"e", 0, 0}, {"t", -2, 1}});
    SparseTensor prod;
    prod.arity = 2;
    prod.degree = 0;
    prod.add({0, 0}, 0, Rational(1));
    prod.add({0, 1}, 1, Rational(1));
    prod.add({1, 0}, 1, Rational(1));
    return strict_cuas(m, prod, FormalSum<int>(0, Rational(1)), FormalSum<int>(1, Rational(1)));
}

// The complex line as a real two-dimensional module with the rotation J.
inline AlgebraStructure complex_line() {
    GrDgModule m({{"one", 0, 0}, {"i", 0, 0}});
    SparseTensor J;
    J.arity = 1;
    J.degree = 0;
    J.add({0}, 1, Rational(1));
    J.add({1}, 0, Rational(-1));
    SparseTensor bracket;
    bracket.arity = 2;
    bracket.degree = -1;
    return strict_ccx(m, J, bracket, FormalSum<int>());
}

// Four-dimensional curved complex Lie algebra: C.x in degree 0, C.u in
// degree -1 and weight 1, bracket [x,x] = u extended C-bilinearly, curvature u.
inline AlgebraStructure lie4() {
    GrDgModule m({{"u", -1, 1}, {"Ju", -1, 1}, {"x", 0, 0}, {"Jx", 0, 0}});
    SparseTensor J;
    J.arity = 1;
    J.degree = 0;
    J.add({0}, 1, Rational(1));
    J.add({1}, 0, Rational(-1));
    J.add({2}, 3, Rational(1));
    J.add({3}, 2, Rational(-1));
    SparseTensor B;
    B.arity = 2;
    B.degree = -1;
    B.add({2, 2}, 0, Rational(1));
    B.add({2, 3}, 1, Rational(1));
    B.add({3, 2}, 1, Rational(1));
    B.add({3, 3}, 0, Rational(-1));
    return strict_ccx(m, J, B, FormalSum<int>(0, Rational(1)));
}

// Doubled product: associative but the declared unit only acts up to a factor
// of two; the Maurer-Cartan defect sits at the first marked binary key.
inline AlgebraStructure broken_unit() {
    AlgebraStructure alg;
    alg.family = Family::CUAS;
    alg.module = GrDgModule({{"e", 0, 0}, {"t", -2, 1}});
    SparseTensor prod;
    prod.arity = 2;
    prod.degree = 0;
    prod.add({0, 0}, 0, Rational(2));
    prod.add({0, 1}, 1, Rational(2));
    prod.add({1, 0}, 1, Rational(2));
    alg.set_op(GeneratorKey::cuas(2), prod);
    SparseTensor unit;
    unit.arity = 0;
    unit.degree = 0;
    unit.add({}, 0, Rational(1));
    alg.set_op(GeneratorKey::cuas(1, {1}), unit);
    SparseTensor theta;
    theta.arity = 0;
    theta.degree = -2;
    theta.add({}, 1, Rational(1));
    alg.set_op(GeneratorKey::cuas(0), theta);
    return alg;
}

// A Maurer-Cartan-violating perturbation of the complex line: J fails to
// square to -1 on the second basis vector.
inline AlgebraStructure skew_line() {
    AlgebraStructure alg = complex_line();
    SparseTensor J;
    J.arity = 1;
    J.degree = 0;
    J.add({0}, 1, Rational(1));
    J.add({1}, 0, Rational(-2));
    alg.set_op(GeneratorKey::ccx({1}), J);
    return alg;
}

// Shifted curved Lie algebra on three generators with [x,x] = u and
// curvature u.
inline AlgebraStructure sclie3() {
    GrDgModule m({{"u", -1, 1}, {"x", 0, 0}, {"y", -1, 0}});
    SparseTensor B;
    B.arity = 2;
    B.degree = -1;
    B.add({1, 1}, 0, Rational(1));
    return strict_sclie(m, B, FormalSum<int>(0, Rational(1)));
}

}  // namespace curvedop::fixtures
