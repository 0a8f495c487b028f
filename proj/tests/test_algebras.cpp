#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "curvedop/relations.hpp"
#include "support/fixtures.hpp"

#include "curvedop/convolution.hpp"
#include "curvedop/module_coeffs.hpp"

using namespace curvedop;

namespace {

SparseTensor random_tensor(std::mt19937& rng, const GrDgModule& m, const GeneratorKey& key) {
    SparseTensor t;
    t.arity = key.slots();
    t.degree = key.degree() - 1;
    std::uniform_int_distribution<int> val(-2, 2);
    std::vector<int> tuple(t.arity, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == t.arity) {
            int din = 0, win = 0;
            for (int v : tuple) {
                din += m.element(v).degree;
                win += m.element(v).weight;
            }
            for (int o = 0; o < m.dim(); ++o) {
                if (m.element(o).degree != din + t.degree)
                    continue;
                if (m.element(o).weight < win + key.weight())
                    continue;
                if (int c = val(rng); c != 0)
                    t.add(tuple, o, Rational(c));
            }
            return;
        }
        for (int v = 0; v < m.dim(); ++v) {
            tuple[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return t;
}

}  // namespace

TEST_CASE("strict constructors validate their axioms") {
    CHECK(check_structure(fixtures::ktheta()).pass);
    CHECK(check_structure(fixtures::complex_line()).pass);
    CHECK(check_structure(fixtures::lie4()).pass);
    CHECK(check_structure(fixtures::sclie3()).pass);

    GrDgModule m({{"e", 0, 0}, {"x", 0, 0}});
    SUBCASE("non-associative product is rejected") {
        SparseTensor prod;
        prod.arity = 2;
        prod.degree = 0;
        prod.add({0, 0}, 0, Rational(1));
        prod.add({0, 1}, 1, Rational(2));  // e*x = 2x
        prod.add({1, 0}, 1, Rational(1));  // x*e = x
        prod.add({1, 1}, 0, Rational(1));  // x*x = e: (e x)x = 2e, e(x x) = e
        CHECK_THROWS_AS(
            strict_cuas(m, prod, FormalSum<int>(0, Rational(1)), FormalSum<int>()),
            InvalidInput);
    }
    SUBCASE("J must square to minus one") {
        SparseTensor J;
        J.arity = 1;
        J.degree = 0;
        J.add({0}, 0, Rational(1));
        J.add({1}, 1, Rational(1));
        SparseTensor bracket;
        bracket.arity = 2;
        bracket.degree = -1;
        CHECK_THROWS_AS(strict_ccx(m, J, bracket, FormalSum<int>()), InvalidInput);
    }
    SUBCASE("curvature must raise the filtration") {
        GrDgModule flat({{"e", 0, 0}, {"t", -2, 0}});
        SparseTensor prod;
        prod.arity = 2;
        prod.degree = 0;
        prod.add({0, 0}, 0, Rational(1));
        prod.add({0, 1}, 1, Rational(1));
        prod.add({1, 0}, 1, Rational(1));
        CHECK_THROWS_AS(strict_cuas(flat, prod, FormalSum<int>(0, Rational(1)),
                                    FormalSum<int>(1, Rational(1))),
                        InvalidInput);
    }
}

TEST_CASE("Maurer-Cartan residuals vanish on the strict fixtures") {
    CHECK(mc_check(fixtures::ktheta(), 4, 4).pass);
    CHECK(mc_check(fixtures::complex_line(), 4, 4, 4).pass);
    CHECK(mc_check(fixtures::lie4(), 4, 4, 4).pass);
    CHECK(mc_check(fixtures::sclie3(), 4, 4).pass);
}

TEST_CASE("the broken unit fails at the first marked binary key") {
    AlgebraStructure bad = fixtures::broken_unit();
    auto res = mc_residual(bad, 3, 3);
    REQUIRE_FALSE(res.empty());
    CHECK(res.begin()->first == GeneratorKey::cuas(2, {1}));
    // the defect is the identity-vs-doubled-unit discrepancy on one generator
    const SparseTensor& defect = res.begin()->second;
    CHECK(defect.apply({0}).coeff(0) == Rational(-1));
    auto rel = check_structure_relations(bad, 3, 3);
    REQUIRE_FALSE(rel.pass);
    CHECK(*rel.first_failure == GeneratorKey::cuas(2, {1}));
}

TEST_CASE("relations are unsupported for the complex family") {
    CHECK_THROWS_AS(check_structure_relations(fixtures::complex_line(), 3, 3),
                    UnsupportedFamily);
}

TEST_CASE("oracle agreement on randomized strict and perturbed structures") {
    std::mt19937 rng(2024u);
    int checked = 0;
    for (int trial = 0; trial < 24; ++trial) {
        AlgebraStructure alg =
            (trial % 2 == 0) ? fixtures::ktheta() : fixtures::sclie3();
        bool perturb = trial % 3 != 0;
        if (perturb) {
            auto keys = keys_up_to(alg.family, 3);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(keys.size()) - 1);
            for (int tries = 0; tries < 8; ++tries) {
                GeneratorKey k = keys[pick(rng)];
                if (k.is_coaugmentation())
                    continue;
                SparseTensor pert = random_tensor(rng, alg.module, k);
                if (pert.is_zero())
                    continue;
                SparseTensor cur = alg.op(k);
                cur.arity = pert.arity;
                cur.degree = pert.degree;
                cur.add_tensor(pert);
                alg.set_op(k, cur);
                break;
            }
        }
        auto mc = mc_check(alg, 4, 3);
        auto rel = check_structure_relations(alg, 4, 3);
        CHECK(mc.pass == rel.pass);
        if (!mc.pass && !rel.pass)
            CHECK(*mc.first_failure == *rel.first_failure);
        ++checked;
    }
    CHECK(checked == 24);
}

TEST_CASE("square-zero extensions validate module coefficients") {
    AlgebraStructure kt = fixtures::ktheta();
    SUBCASE("regular coefficients pass") {
        CHECK(check_module(kt, regular_module(kt), 3, 3).pass);
    }
    SUBCASE("trivial complex module over the complex line passes") {
        AlgebraStructure cc = fixtures::complex_line();
        CHECK(check_module(cc, trivial_complex_module(cc), 3, 3).pass);
    }
    SUBCASE("an action violating the curvature compatibility fails at arity one") {
        AlgebraStructure cc = fixtures::complex_line();
        ModuleCoefficients bad = trivial_complex_module(cc);
        bad.action[GeneratorKey::ccx({1})][1] = {{1}, 0, FormalSum<int>(0, Rational(1))};
        auto rep = check_module(cc, bad, 3, 3);
        CHECK_FALSE(rep.pass);
        REQUIRE(rep.first_failure.has_value());
        CHECK(rep.first_failure->arity_label() <= 2);
    }
}

TEST_CASE("convolution brackets: symmetry and the Maurer-Cartan sum") {
    AlgebraStructure cc = fixtures::complex_line();
    Truncation t{3, 2, 1};
    std::vector<BarWord> words = bar_basis(cc, t);
    // two degree-zero cochains with disjoint support
    HomCochain phi, psi;
    phi.degree = 0;
    psi.degree = 0;
    int placed = 0;
    for (const BarWord& w : words) {
        if (w.degree(cc.module) != 0)
            continue;
        if (placed % 2 == 0)
            phi.add(w, FormalSum<int>(0, Rational(placed + 1)));
        else
            psi.add(w, FormalSum<int>(1, Rational(placed)));
        ++placed;
    }
    SUBCASE("l2 is graded symmetric") {
        HomCochain ab = l_n_alpha(cc, cc, {&phi, &psi}, words, 3);
        HomCochain ba = l_n_alpha(cc, cc, {&psi, &phi}, words, 3);
        CHECK(ab == ba);  // both cochains are even
    }
    SUBCASE("l0 is the curvature insertion") {
        HomCochain l0 = l_n_alpha(cc, cc, {}, words, 3);
        CHECK(l0.is_zero());  // the complex line is uncurved
        AlgebraStructure l4 = fixtures::lie4();
        std::vector<BarWord> words4 = bar_basis(l4, {2, 2, 1});
        HomCochain l0c = l_n_alpha(l4, l4, {}, words4, 3);
        CHECK_FALSE(l0c.is_zero());
    }
    SUBCASE("the factorial sum matches the direct residual") {
        HomCochain direct = algebraic_mc_residual(cc, cc, phi, words, 3);
        HomCochain summed = algebraic_mc_sum(cc, cc, phi, words, 4, 3);
        CHECK(direct == summed);
    }
}
