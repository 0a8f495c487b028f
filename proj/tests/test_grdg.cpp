#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvedop/grdg.hpp"

using namespace curvedop;

TEST_CASE("gr_part drops weight-raising components") {
    GrDgModule trivial({{"x", 0, 0}});
    CHECK(trivial.gr_part().is_zero());

    GrDgModule raising({{"x", 0, 0}, {"t", -1, 1}});
    raising.add_d(0, 1, Rational(1));
    CHECK(raising.gr_part().is_zero());
    CHECK_FALSE(raising.d_matrix().is_zero());

    GrDgModule level({{"a", 0, 0}, {"b", -1, 0}});
    level.add_d(0, 1, Rational(1));
    CHECK(level.gr_part() == level.d_matrix());
}

TEST_CASE("check_grdg worked examples") {
    GrDgModule ok({{"x", 0, 0}});
    CHECK(check_grdg(ok).pass);

    GrDgModule degree_violation({{"x", 0, 0}});
    degree_violation.add_d(0, 0, Rational(1));
    auto rep = check_grdg(degree_violation);
    CHECK_FALSE(rep.pass);
    CHECK(rep.clause == "degree");

    GrDgModule two({{"x", 0, 0}, {"y", -2, 0}});
    CHECK(check_grdg(two).pass);

    // gr part squares to zero but d^2 only raises weight
    GrDgModule curved({{"x", 0, 0}, {"y", -1, 0}, {"z", -2, 1}});
    curved.add_d(0, 1, Rational(1));
    curved.add_d(1, 2, Rational(1));  // d^2(x) = z raises weight
    CHECK(check_grdg(curved).pass);

    GrDgModule bad({{"x", 0, 0}, {"y", -1, 0}, {"z", -2, 0}});
    bad.add_d(0, 1, Rational(1));
    bad.add_d(1, 2, Rational(1));  // d^2(x) = z stays in weight 0
    auto rep2 = check_grdg(bad);
    CHECK_FALSE(rep2.pass);
    CHECK(rep2.clause == "gr_square");
}

TEST_CASE("hom differential worked examples") {
    GrDgModule zero_d({{"x", 0, 0}});
    HomElement id{&zero_d, &zero_d, 0, SparseMatrix::identity(1)};
    CHECK(hom_differential(id).matrix.is_zero());

    GrDgModule with_d({{"a", 0, 0}, {"b", -1, 1}});
    with_d.add_d(0, 1, Rational(1));
    HomElement id2{&with_d, &with_d, 0, SparseMatrix::identity(2)};
    CHECK(hom_differential(id2).matrix.is_zero());

    // f : x -> a of degree 0 from a one-dimensional source with d = 0
    GrDgModule src({{"x", 0, 0}});
    SparseMatrix fm(2, 1);
    fm.add(0, 0, Rational(1));
    HomElement f{&src, &with_d, 0, fm};
    HomElement df = hom_differential(f);
    CHECK(df.degree == -1);
    CHECK(df.matrix.get(1, 0) == Rational(1));
    CHECK(df.matrix.nnz() == 1);
}

TEST_CASE("check_hom_element validates degree and filtration") {
    GrDgModule m({{"a", 0, 0}, {"b", -1, 1}});
    SparseMatrix good(2, 2);
    good.add(1, 0, Rational(1));
    CHECK(check_hom_element({&m, &m, -1, good}).pass);
    SparseMatrix bad(2, 2);
    bad.add(0, 1, Rational(1));  // degree +1 entry under declared degree -1
    CHECK_FALSE(check_hom_element({&m, &m, -1, bad}).pass);
}
