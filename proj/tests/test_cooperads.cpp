#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvedop/cooperad_checks.hpp"

using namespace curvedop;

namespace {
Rational tree_coeff(const FormalSum<TwoLevelTree>& sum, const GeneratorKey& root, int pos,
                    const GeneratorKey& inner, std::vector<int> positions) {
    return sum.coeff({root, pos, inner, std::move(positions)});
}
}  // namespace

TEST_CASE("infinitesimal decomposition worked examples") {
    SUBCASE("shifted Lie, arity one") {
        auto d = delta1(GeneratorKey::sclie(1));
        CHECK(d.size() == 2);
        CHECK(tree_coeff(d, GeneratorKey::sclie(1), 1, GeneratorKey::sclie(1), {1}) == 1);
        CHECK(tree_coeff(d, GeneratorKey::sclie(2), 1, GeneratorKey::sclie(0), {}) == 1);
    }
    SUBCASE("shifted Lie, arity two") {
        auto d = delta1(GeneratorKey::sclie(2));
        CHECK(d.size() == 4);
        CHECK(tree_coeff(d, GeneratorKey::sclie(1), 1, GeneratorKey::sclie(2), {1, 2}) == 1);
        CHECK(tree_coeff(d, GeneratorKey::sclie(2), 1, GeneratorKey::sclie(1), {1}) == 1);
        CHECK(tree_coeff(d, GeneratorKey::sclie(2), 1, GeneratorKey::sclie(1), {2}) == 1);
        CHECK(tree_coeff(d, GeneratorKey::sclie(3), 1, GeneratorKey::sclie(0), {}) == 1);
    }
    SUBCASE("unital associative, arity one") {
        auto d = delta1(GeneratorKey::cuas(1));
        CHECK(d.size() == 3);
        CHECK(tree_coeff(d, GeneratorKey::cuas(1), 1, GeneratorKey::cuas(1), {1}) == 1);
        CHECK(tree_coeff(d, GeneratorKey::cuas(2), 1, GeneratorKey::cuas(0), {}) == 1);
        CHECK(tree_coeff(d, GeneratorKey::cuas(2), 2, GeneratorKey::cuas(0), {}) == -1);
    }
    SUBCASE("complex family, single zero shift") {
        auto d = delta1(GeneratorKey::ccx({0}));
        CHECK(d.size() == 2);
        CHECK(tree_coeff(d, GeneratorKey::ccx({0}), 1, GeneratorKey::ccx({0}), {1}) == 1);
        CHECK(tree_coeff(d, GeneratorKey::ccx({0, 0}), 1, GeneratorKey::ccx({}), {}) == 1);
    }
}

TEST_CASE("full decomposition worked examples") {
    SUBCASE("counit-side corollas of the arity-two shifted Lie generator") {
        auto d = delta_full(GeneratorKey::sclie(2), 2);
        Corolla trivial_top{GeneratorKey::sclie(1),
                            {{GeneratorKey::sclie(2), {1, 2}}}};
        CHECK(d.coeff(trivial_top) == 1);
        Corolla split{GeneratorKey::sclie(2),
                      {{GeneratorKey::sclie(1), {1}}, {GeneratorKey::sclie(1), {2}}}};
        CHECK(d.coeff(split) == 1);
    }
    SUBCASE("binary unital corolla") {
        auto d = delta_full(GeneratorKey::cuas(2), 0);
        Corolla split{GeneratorKey::cuas(2),
                      {{GeneratorKey::cuas(1), {1}}, {GeneratorKey::cuas(1), {2}}}};
        CHECK(d.coeff(split) == 1);
    }
    SUBCASE("empty complex word decomposes consistently with delta1") {
        CHECK(delta1(curvature_key(Family::CCX)) == delta1_from_full(curvature_key(Family::CCX)));
    }
}

TEST_CASE("curvature table") {
    CHECK(GeneratorKey::cuas(2, {1}).curvature() == 1);
    CHECK(GeneratorKey::cuas(2, {2}).curvature() == 1);
    CHECK(GeneratorKey::cuas(2, {1, 2}).curvature() == 0);
    CHECK(GeneratorKey::cuas(2).curvature() == 0);
    CHECK(GeneratorKey::cuas(3, {1}).curvature() == 0);
    for (int n = 0; n <= 5; ++n)
        CHECK(GeneratorKey::sclie(n).curvature() == 0);
    CHECK_FALSE(is_zero(GeneratorKey::ccx({2}).curvature()));
    CHECK(GeneratorKey::ccx({1}).curvature() == 0);
    CHECK(GeneratorKey::ccx({2, 0}).curvature() == 0);
    CHECK(GeneratorKey::ccx({}).curvature() == 0);
}

TEST_CASE("degree and weight bookkeeping") {
    CHECK(GeneratorKey::sclie(3).degree() == 0);
    CHECK(GeneratorKey::cuas(2, {1}).degree() == 2);
    CHECK(GeneratorKey::ccx({0, 2}).degree() == 2);
    CHECK(GeneratorKey::sclie(0).weight() == 1);
    CHECK(GeneratorKey::cuas(0).weight() == 1);
    CHECK(GeneratorKey::ccx({}).weight() == 1);
    CHECK(GeneratorKey::ccx({0}).weight() == 0);
    // every output term of delta1 preserves the total degree
    for (Family f : {Family::SCLIE, Family::CUAS, Family::CCX}) {
        for (const GeneratorKey& g : keys_up_to(f, 3, 2)) {
            for (const auto& [tree, c] : delta1(g))
                CHECK(tree.root.degree() + tree.inner.degree() == g.degree());
            for (const auto& [corolla, c] : delta_full(g, 3))
                CHECK(corolla.total_degree() == g.degree());
        }
    }
}

TEST_CASE("axiom suite on small windows") {
    for (Family f : {Family::SCLIE, Family::CUAS, Family::CCX}) {
        CAPTURE(family_name(f));
        CHECK(check_counit(f, 3, 3, 2).pass);
        CHECK(check_delta1_consistency(f, 3, 2).pass);
        CHECK(check_curved_cooperad_identity(f, 3, 3, 3).pass);
        CHECK(check_coassociativity(f, 2, 2, 2).pass);
    }
    CHECK(check_equivariance(Family::SCLIE, 3).pass);
    CHECK(check_equivariance(Family::CCX, 3, 2).pass);
}

TEST_CASE("convention transport") {
    CHECK(convention_transport_check(4).pass);
}

TEST_CASE("unshuffle decoration round trip") {
    auto d = delta1(GeneratorKey::sclie(2));
    for (const auto& [tree, c] : d) {
        Permutation u = tree.unshuffle_decoration();
        CHECK(u.size() == tree.composite_slots());
        // the inverse is monotone on the (q, p-1) blocks
        Permutation s = u.inverse();
        int q = tree.inner.slots();
        for (int j = 1; j < q; ++j)
            CHECK(s(j) < s(j + 1));
    }
}
