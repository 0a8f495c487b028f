#include "curvedop/strict.hpp"

#include "curvedop/signs.hpp"

namespace curvedop {

namespace {

SparseTensor element_tensor(const FormalSum<int>& element, int degree) {
    SparseTensor t;
    t.arity = 0;
    t.degree = degree;
    t.add({}, element);
    return t;
}

void require(bool cond, const char* axiom) {
    if (!cond)
        throw InvalidInput(axiom);
}

void require_element_degree(const GrDgModule& m, const FormalSum<int>& e, int degree,
                            const char* axiom) {
    for (const auto& [i, c] : e)
        if (m.element(i).degree != degree)
            throw InvalidInput(axiom);
}

void require_element_weight_at_least(const GrDgModule& m, const FormalSum<int>& e, int w,
                                     const char* axiom) {
    for (const auto& [i, c] : e)
        if (m.element(i).weight < w)
            throw InvalidInput(axiom);
}

FormalSum<int> apply_d(const GrDgModule& m, const FormalSum<int>& e) {
    FormalSum<int> out;
    for (const auto& [i, c] : e)
        out.add(m.d_column(i), c);
    return out;
}

}  // namespace

AlgebraStructure strict_cuas(const GrDgModule& module, const SparseTensor& product,
                             const FormalSum<int>& unit, const FormalSum<int>& theta) {
    require(check_grdg(module).pass, "module is not gr-dg");
    require(product.arity == 2 && product.degree == 0, "product must be bilinear of degree 0");
    require(check_tensor(product, module).pass, "product violates degree or filtration");
    require_element_degree(module, unit, 0, "unit must have degree 0");
    require_element_degree(module, theta, -2, "theta must have degree -2");
    require_element_weight_at_least(module, theta, 1, "theta must lie in weight >= 1");

    // Associativity.
    SparseTensor assoc = compose_at(product, 1, product, module);
    assoc.add_tensor(compose_at(product, 2, product, module), Rational(-1));
    require(assoc.is_zero(), "product is not associative");

    // Two-sided unit.
    SparseTensor unit_t = element_tensor(unit, 0);
    SparseTensor left = compose_at(product, 1, unit_t, module);
    left.add_tensor(identity_tensor(module), Rational(-1));
    require(left.is_zero(), "unit is not a left unit");
    SparseTensor right = compose_at(product, 2, unit_t, module);
    right.add_tensor(identity_tensor(module), Rational(-1));
    require(right.is_zero(), "unit is not a right unit");

    // d is a derivation of the product and kills unit and theta.
    require(tensor_hom_differential(product, module).is_zero(),
            "d is not a derivation of the product");
    require(apply_d(module, unit).empty(), "d(unit) is nonzero");
    require(apply_d(module, theta).empty(), "d(theta) is nonzero");

    // d^2 = [theta, -].
    SparseTensor d = d_tensor(module);
    SparseTensor d2 = compose_at(d, 1, d, module);
    SparseTensor theta_t = element_tensor(theta, -2);
    SparseTensor bracket = compose_at(product, 1, theta_t, module);
    bracket.add_tensor(compose_at(product, 2, theta_t, module), Rational(-1));
    d2.add_tensor(bracket, Rational(-1));
    require(d2.is_zero(), "d^2 differs from the theta bracket");

    AlgebraStructure alg;
    alg.family = Family::CUAS;
    alg.module = module;
    alg.set_op(GeneratorKey::cuas(1), d_tensor(module));
    alg.set_op(GeneratorKey::cuas(2), product);
    alg.set_op(GeneratorKey::cuas(1, {1}), unit_t);
    alg.set_op(GeneratorKey::cuas(0), element_tensor(theta, -2));
    return alg;
}

AlgebraStructure strict_ccx(const GrDgModule& module, const SparseTensor& J,
                            const SparseTensor& bracket, const FormalSum<int>& theta) {
    require(check_grdg(module).pass, "module is not gr-dg");
    require(J.arity == 1 && J.degree == 0, "J must be an endomorphism of degree 0");
    require(check_tensor(J, module).pass, "J violates degree or filtration");
    require(bracket.arity == 2 && bracket.degree == -1,
            "bracket must be bilinear of homological degree -1");
    require(check_tensor(bracket, module).pass, "bracket violates degree or filtration");
    require_element_degree(module, theta, -1, "theta must have homological degree -1");
    require_element_weight_at_least(module, theta, 1, "theta must lie in weight >= 1");

    // J^2 = -id.
    SparseTensor j2 = compose_at(J, 1, J, module);
    j2.add_tensor(identity_tensor(module));
    require(j2.is_zero(), "J^2 differs from -id");

    // The shifted bracket is Koszul-symmetric.
    {
        SparseTensor swapped = permuted(bracket, Permutation({2, 1}), module);
        swapped.add_tensor(bracket, Rational(-1));
        require(swapped.is_zero(), "bracket is not symmetric in the shifted sense");
    }

    // C-linearity: [Jx, y] = J[x, y] (the other slot follows by symmetry).
    {
        SparseTensor lhs = compose_at(bracket, 1, J, module);
        lhs.add_tensor(compose_at(J, 1, bracket, module), Rational(-1));
        require(lhs.is_zero(), "bracket is not C-linear");
    }

    // Shifted Jacobi identity.
    {
        SparseTensor h = compose_at(bracket, 1, bracket, module);
        SparseTensor jac;
        jac.arity = 3;
        jac.degree = -2;
        for (const Permutation& sigma : monotone_shuffles({2, 1}))
            jac.add_tensor(permuted(h, sigma, module));
        require(jac.is_zero(), "bracket fails the Jacobi identity");
    }

    // d is compatible: [d, J] = 0, d a derivation of the bracket, d theta = 0,
    // d^2 = bracket with theta.
    require(tensor_hom_differential(J, module).is_zero(), "d does not commute with J");
    require(tensor_hom_differential(bracket, module).is_zero(),
            "d is not a derivation of the bracket");
    require(apply_d(module, theta).empty(), "d(theta) is nonzero");
    {
        SparseTensor d = d_tensor(module);
        SparseTensor d2 = compose_at(d, 1, d, module);
        SparseTensor theta_t = element_tensor(theta, -1);
        d2.add_tensor(compose_at(bracket, 1, theta_t, module));
        require(d2.is_zero(), "d^2 differs from the theta bracket");
    }

    AlgebraStructure alg;
    alg.family = Family::CCX;
    alg.module = module;
    alg.set_op(GeneratorKey::ccx({0}), d_tensor(module));
    alg.set_op(GeneratorKey::ccx({1}), J);
    alg.set_op(GeneratorKey::ccx({0, 0}), bracket);
    alg.set_op(GeneratorKey::ccx({}), element_tensor(theta, -1));
    return alg;
}

AlgebraStructure strict_sclie(const GrDgModule& module, const SparseTensor& bracket,
                              const FormalSum<int>& theta) {
    require(check_grdg(module).pass, "module is not gr-dg");
    require(bracket.arity == 2 && bracket.degree == -1,
            "bracket must be bilinear of homological degree -1");
    require(check_tensor(bracket, module).pass, "bracket violates degree or filtration");
    require_element_degree(module, theta, -1, "theta must have homological degree -1");
    require_element_weight_at_least(module, theta, 1, "theta must lie in weight >= 1");
    {
        SparseTensor swapped = permuted(bracket, Permutation({2, 1}), module);
        swapped.add_tensor(bracket, Rational(-1));
        require(swapped.is_zero(), "bracket is not symmetric in the shifted sense");
    }
    {
        SparseTensor h = compose_at(bracket, 1, bracket, module);
        SparseTensor jac;
        jac.arity = 3;
        jac.degree = -2;
        for (const Permutation& sigma : monotone_shuffles({2, 1}))
            jac.add_tensor(permuted(h, sigma, module));
        require(jac.is_zero(), "bracket fails the Jacobi identity");
    }
    require(tensor_hom_differential(bracket, module).is_zero(),
            "d is not a derivation of the bracket");
    require(apply_d(module, theta).empty(), "d(theta) is nonzero");
    {
        SparseTensor d = d_tensor(module);
        SparseTensor d2 = compose_at(d, 1, d, module);
        SparseTensor theta_t = element_tensor(theta, -1);
        d2.add_tensor(compose_at(bracket, 1, theta_t, module));
        require(d2.is_zero(), "d^2 differs from the theta bracket");
    }
    AlgebraStructure alg;
    alg.family = Family::SCLIE;
    alg.module = module;
    alg.set_op(GeneratorKey::sclie(1), d_tensor(module));
    alg.set_op(GeneratorKey::sclie(2), bracket);
    alg.set_op(GeneratorKey::sclie(0), element_tensor(theta, -1));
    return alg;
}

}  // namespace curvedop
