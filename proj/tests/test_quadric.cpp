// Kunneth cohomology on P^1 x P^1, O(m) on P^3, and the degree-d existence
// certificates.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lacm/quadric.hpp"

using namespace lacm;

TEST_CASE("Kunneth values") {
    CHECK(q_coh({1, 1}) == CohTriple{4, 0, 0});
    CHECK(q_coh({-2, 0}) == CohTriple{0, 1, 0});
    CHECK(q_coh({0, 0}) == CohTriple{1, 0, 0});
    CHECK(q_coh({-2, -2}) == CohTriple{0, 0, 1});
    CHECK(q_coh({3, 2}) == CohTriple{12, 0, 0});
}

TEST_CASE("Serre duality and Euler characteristic on the quadric") {
    for (std::int64_t a = -10; a <= 10; ++a) {
        for (std::int64_t b = -10; b <= 10; ++b) {
            const CohTriple t = q_coh({a, b});
            const CohTriple dual = q_coh({-2 - a, -2 - b});
            CHECK(t.h0 == dual.h2);
            CHECK(t.h1 == dual.h1);
            CHECK(t.h2 == dual.h0);
            CHECK(t.h0 - t.h1 + t.h2 == (a + 1) * (b + 1));
        }
    }
}

TEST_CASE("nonvanishing twists of (ell+1)h1") {
    // h1((ell+1+t, t)) != 0 exactly for t in [-ell-1, -2]
    const std::int64_t ell = 4;
    for (std::int64_t t = -12; t <= 12; ++t) {
        const bool nonzero = q_coh({ell + 1 + t, t}).h1 != 0;
        CHECK(nonzero == (t >= -ell - 1 && t <= -2));
    }
}

TEST_CASE("q_ell values") {
    CHECK(q_ell({2, 0}) == 1);
    CHECK(q_ell({3, 0}) == 2);
    CHECK(q_ell({1, 1}) == 0);
    for (std::int64_t ell = 1; ell <= 20; ++ell) {
        CHECK(q_ell({ell + 1, 0}) == ell);
        CHECK(q_ell({0, ell + 1}) == ell);  // factor swap
    }
}

TEST_CASE("O(m) on P^3") {
    CHECK(p3_coh(0) == P3Coh{1, 0, 0, 0});
    CHECK(p3_coh(2) == P3Coh{10, 0, 0, 0});
    CHECK(p3_coh(-4) == P3Coh{0, 0, 0, 1});
    CHECK(p3_coh(-1) == P3Coh{0, 0, 0, 0});
    CHECK(p3_coh(5).h0 == 56);
}

TEST_CASE("regularity certificate") {
    CHECK(regularity_certificate(1, 3));
    CHECK_FALSE(regularity_certificate(3, 3));
    CHECK(regularity_certificate(2, 5));
    CHECK_THROWS_AS(regularity_certificate(0, 3), BoundsError);
    CHECK_THROWS_AS(regularity_certificate(1, 2), BoundsError);
}

TEST_CASE("t41 existence check") {
    CHECK(t41_check(2, 3));
    CHECK_FALSE(t41_check(4, 4));
    CHECK(t41_check(1, 12));
    // the boundary is exactly d > ell
    for (std::int64_t ell = 1; ell <= 10; ++ell) {
        for (std::int64_t d = 3; d <= 12; ++d) {
            CHECK(t41_check(ell, d) == (d > ell));
        }
    }
    CHECK_THROWS_AS(t41_check(1, 2), BoundsError);
}

TEST_CASE("t41 table emitter") {
    const std::string csv = t41_table_csv(2, 4);
    CHECK(csv == "ell,d,t41\n1,3,1\n1,4,1\n2,3,1\n2,4,1\n");
}
