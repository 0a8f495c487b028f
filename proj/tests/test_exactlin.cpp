#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvedop/formal_sum.hpp"
#include "curvedop/linalg.hpp"

using namespace curvedop;

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("2/6") == make_rational(1, 3));
    CHECK(parse_rational("-4/2") == make_rational(-2));
    CHECK(format_rational(make_rational(3, -6)) == "-1/2");
    CHECK(format_rational(make_rational(5, 1)) == "5");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("formal sums prune zeros and stay deterministic") {
    FormalSum<std::string> s;
    s.add("b", make_rational(1, 2));
    s.add("a", Rational(1));
    s.add("b", make_rational(-1, 2));
    CHECK(s.size() == 1);
    CHECK(s.coeff("a") == 1);
    CHECK(s.coeff("b") == 0);
    FormalSum<std::string> t("a", Rational(1));
    CHECK(s == t);
    s.add(t, Rational(-1));
    CHECK(s.empty());
}

TEST_CASE("rank worked examples") {
    SparseMatrix id2 = SparseMatrix::identity(2);
    CHECK(rank(id2) == 2);
    SparseMatrix zero(2, 2);
    CHECK(rank(zero) == 0);
    SparseMatrix m(2, 2);
    m.add(0, 0, Rational(1));
    m.add(0, 1, Rational(2));
    m.add(1, 0, Rational(2));
    m.add(1, 1, Rational(4));
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel worked examples") {
    CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
    SparseMatrix z(1, 3);
    CHECK(kernel_basis(z).size() == 3);
    SparseMatrix row(1, 2);
    row.add(0, 0, Rational(1));
    row.add(0, 1, Rational(1));
    auto ker = kernel_basis(row);
    REQUIRE(ker.size() == 1);
    CHECK(sparse_get(ker[0], 0) == -sparse_get(ker[0], 1));
}

TEST_CASE("homology worked examples") {
    SparseMatrix z11(1, 1), z11b(1, 1);
    CHECK(homology_dimension(z11, z11b).dim == 1);
    SparseMatrix one(1, 1);
    one.add(0, 0, Rational(1));
    CHECK(homology_dimension(one, z11).dim == 0);
    SparseMatrix d_in(2, 0);
    SparseMatrix d_out(1, 2);
    d_out.add(0, 0, Rational(1));
    d_out.add(0, 1, Rational(1));
    CHECK(homology_dimension(d_in, d_out).dim == 1);
}

TEST_CASE("homology rejects non-complexes") {
    SparseMatrix a = SparseMatrix::identity(1);
    SparseMatrix b = SparseMatrix::identity(1);
    CHECK_THROWS_AS(homology_dimension(a, b), CompositionNotZero);
}

TEST_CASE("rank + kernel = columns, kernel annihilated, serial agrees with parallel") {
    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> dim(1, 14);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_real_distribution<double> fill(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        int r = dim(rng), c = dim(rng);
        SparseMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (fill(rng) < 0.4)
                    m.add(i, j, make_rational(num(rng), den(rng)));
        int rk = rank_serial(m);
        CHECK(rk == rank_parallel(m));
        auto ker = kernel_basis(m);
        CHECK(rk + static_cast<int>(ker.size()) == c);
        for (const SparseVec& v : ker)
            CHECK(m.apply(v).empty());
    }
}

TEST_CASE("homology invariant under permutation of presentations") {
    // d_in: K -> K^3 with image (1,1,0); d_out: K^3 -> K sending (x,y,z) to x - y.
    SparseMatrix d_in(3, 1);
    d_in.add(0, 0, Rational(1));
    d_in.add(1, 0, Rational(1));
    SparseMatrix d_out(1, 3);
    d_out.add(0, 0, Rational(1));
    d_out.add(0, 1, Rational(-1));
    int base = homology_dimension(d_in, d_out).dim;
    // permute the middle coordinates (0 1 2) -> (2 0 1)
    SparseMatrix p(3, 3);
    p.add(0, 2, Rational(1));
    p.add(1, 0, Rational(1));
    p.add(2, 1, Rational(1));
    SparseMatrix d_in2 = p * d_in;
    SparseMatrix d_out2 = d_out * p.transpose();
    CHECK(homology_dimension(d_in2, d_out2).dim == base);
}
