#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symchar/characters.hpp"
#include "symchar/jacobi_trudi.hpp"

using namespace symchar;

TEST_CASE("jt_matrix entries") {
    JTMatrix m = jt_matrix(SkewShape(Partition({2, 1})));
    REQUIRE(m.dimension() == 2);
    CHECK(m.entries[0][0] == HPoly::generator(2));
    CHECK(m.entries[0][1] == HPoly::generator(3));
    CHECK(m.entries[1][0] == HPoly::one());
    CHECK(m.entries[1][1] == HPoly::generator(1));

    JTMatrix single = jt_matrix(SkewShape(Partition({1})));
    REQUIRE(single.dimension() == 1);
    CHECK(single.entries[0][0] == HPoly::generator(1));

    JTMatrix skew = jt_matrix(SkewShape(Partition({2, 1}), Partition({1})));
    CHECK(skew.entries[0][0] == HPoly::generator(1));
    CHECK(skew.entries[0][1] == HPoly::generator(3));
    CHECK(skew.entries[1][0].is_zero()); // h_{-1}
    CHECK(skew.entries[1][1] == HPoly::generator(1));
}

TEST_CASE("skew schur determinants") {
    CHECK(skew_schur_h(SkewShape(Partition({2, 1}))) ==
          HPoly::generator(1) * HPoly::generator(2) - HPoly::generator(3));
    CHECK(skew_schur_h(SkewShape(Partition({4}))) == HPoly::generator(4));
    CHECK(skew_schur_h(SkewShape(Partition({2, 1}), Partition({1}))) ==
          HPoly::generator(1) * HPoly::generator(1));
    CHECK(skew_schur_h(SkewShape(Partition())) == HPoly::one());
}

TEST_CASE("schur identity examples") {
    CHECK(verify_schur_identity(Partition({1}), 2).ok);
    CHECK(verify_schur_identity(Partition(), 3).ok);
    CHECK(verify_schur_identity(Partition({2, 1}), 2).ok);
    CHECK_THROWS_AS(verify_schur_identity(Partition({3}), 2), DomainError);
}

TEST_CASE("minor identity examples") {
    CHECK(verify_minor_identity(Partition({1}), 0).ok);
    CHECK(verify_minor_identity(Partition({1}), 1).ok);
    CHECK(verify_minor_identity(Partition({2, 1}), 1).ok);
    CHECK_THROWS_AS(verify_minor_identity(Partition(), 0), DomainError);
    CHECK_THROWS_AS(verify_minor_identity(Partition({2}), 2), DomainError);
}

TEST_CASE("minor at j = 0 degenerates to the straight determinant") {
    for (int k = 1; k <= 5; ++k) {
        for (const Partition& lam : partitions_of(k)) {
            CHECK(verify_minor_identity(lam, 0).ok);
            // the j = 0 minor is exactly the Jacobi-Trudi matrix of lam
            JTMatrix full = jt_matrix(SkewShape(first_row_extend(lam, lam.part(1))));
            std::vector<std::vector<HPoly>> minor(lam.length(),
                                                  std::vector<HPoly>(lam.length()));
            for (int i = 0; i < lam.length(); ++i)
                for (int j = 0; j < lam.length(); ++j) minor[i][j] = full.entries[i + 1][j + 1];
            CHECK(hpoly_det(minor) == skew_schur_h(SkewShape(lam)));
        }
    }
}

TEST_CASE("identities hold exhaustively for k <= 6, n <= 10") {
    VerifyReport report = verify_jt_sweep(6, 10);
    CHECK(report.all_ok());
    CHECK(report.total() > 0);
    if (const VerifyRecord* f = report.first_failure())
        FAIL_CHECK("first failure: ", f->instance, " ", f->note);
}

TEST_CASE("witness reports differing terms") {
    // an intentionally wrong comparison: s_{(2)} vs s_{(1,1)}
    HPoly lhs = skew_schur_h(SkewShape(Partition({2})));
    HPoly rhs = skew_schur_h(SkewShape(Partition({1, 1})));
    CHECK(lhs != rhs);
}

TEST_CASE("degree specialization cross-check") {
    // counting consistency between the h-expansion and tableaux: the
    // coefficient extraction is exercised at the character level instead;
    // here the schur identity holding at the h level must in particular make
    // the degree expansion hold
    for (int n = 2; n <= 6; ++n) {
        CHECK(verify_schur_identity(Partition({2, 1}), n).ok);
        CHECK(mn_value(SkewShape(first_row_extend(Partition({2, 1}), n)),
                       CycleType::identity(n + 3)) == degree_hook(first_row_extend(Partition({2, 1}), n)));
    }
}

TEST_CASE("sweep guards") {
    CHECK_THROWS_AS(verify_jt_sweep(8, 10), GuardError);
    CHECK_THROWS_AS(verify_jt_sweep(3, 13), GuardError);
}
