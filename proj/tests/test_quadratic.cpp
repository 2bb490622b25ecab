#include "doctest.h"
#include "nfkit/quadratic.hpp"

using namespace nfkit;

TEST_CASE("quadratic field records") {
    QuadraticField K5(Int(5));
    CHECK(K5.disc() == 5);
    CHECK(K5.canonical_min_poly() == Poly::from_int_coeffs({Int(-1), Int(-1), Int(1)}));
    QuadraticField Km5(Int(-5));
    CHECK(Km5.disc() == -20);
    CHECK(QuadraticField(Int(3)).disc() == 12);
    CHECK_THROWS_AS(QuadraticField(Int(12)), std::domain_error);
    CHECK_THROWS_AS(QuadraticField(Int(1)), std::domain_error);
}

TEST_CASE("definite form class groups") {
    FormClassGroup g20(Int(-20));
    CHECK(g20.narrow_count() == 2);  // (1,0,5), (2,2,3)
    CHECK(g20.representatives()[0] == QForm{Int(1), Int(0), Int(5)});
    CHECK(g20.representatives()[1] == QForm{Int(2), Int(2), Int(3)});

    FormClassGroup g23(Int(-23));
    CHECK(g23.narrow_count() == 3);  // (1,1,6), (2,+-1,3)
    CHECK(g23.representatives()[0] == QForm{Int(1), Int(1), Int(6)});

    CHECK(FormClassGroup(Int(-4)).narrow_count() == 1);
    CHECK_THROWS_AS(FormClassGroup(Int(-12)), std::domain_error);  // not fundamental
}

TEST_CASE("composition group laws on small discriminants" * doctest::timeout(120)) {
    // associativity, commutativity, identity and inverses, full table
    for (long D = -499; D < 500; ++D) {
        Int disc(D);
        if (D == 0 || (mod_floor(disc, Int(4)) != 0 && mod_floor(disc, Int(4)) != 1)) continue;
        bool fundamental = true;
        try {
            FormClassGroup G(disc);
            int h = G.narrow_count();
            REQUIRE(h >= 1);
            int e = G.identity();
            for (int i = 0; i < h; ++i) {
                REQUIRE(G.compose(e, i) == i);
                REQUIRE(G.compose(i, G.inverse_of(i)) == e);
                for (int j = 0; j < h; ++j) {
                    REQUIRE(G.compose(i, j) == G.compose(j, i));
                    for (int k = 0; k < h; ++k)
                        REQUIRE(G.compose(G.compose(i, j), k) == G.compose(i, G.compose(j, k)));
                }
            }
        } catch (const std::domain_error&) {
            fundamental = false;  // skipped: non-fundamental discriminant
        }
        (void)fundamental;
    }
}

TEST_CASE("fundamental units") {
    FundamentalUnit u5 = fundamental_unit(Int(5));
    CHECK(u5.x == 1);
    CHECK(u5.y == 1);
    CHECK(u5.norm == -1);  // (1+sqrt5)/2

    FundamentalUnit u3 = fundamental_unit(Int(3));
    CHECK(u3.x == 4);  // 2 + sqrt3 = (4 + 2 sqrt3)/2
    CHECK(u3.y == 2);
    CHECK(u3.norm == 1);

    FundamentalUnit u34 = fundamental_unit(Int(34));
    CHECK(u34.x == 70);  // 35 + 6 sqrt34
    CHECK(u34.y == 12);
    CHECK(u34.norm == 1);

    FundamentalUnit u13 = fundamental_unit(Int(13));
    CHECK(u13.x == 3);
    CHECK(u13.y == 1);
    CHECK(u13.norm == -1);  // (3+sqrt13)/2

    FundamentalUnit u2 = fundamental_unit(Int(2));
    CHECK(u2.x == 2);
    CHECK(u2.y == 2);
    CHECK(u2.norm == -1);  // 1 + sqrt2

    // x^2 - d y^2 = 4 norm identity, and the element really is a unit > 1
    for (long d : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 21L, 29L, 34L, 94L}) {
        FundamentalUnit u = fundamental_unit(Int(d));
        REQUIRE(u.x * u.x - Int(d) * u.y * u.y == 4 * u.norm);
        QuadraticField K((Int(d)));
        FieldElement e = u.as_element(K);
        REQUIRE(is_unit(e));
        REQUIRE(norm(e) == Rat(u.norm));
        REQUIRE(u.x > 0);
        REQUIRE(u.y > 0);
    }
    // d = 94 has a famously large fundamental unit: 2143295 + 221064 sqrt(94)
    FundamentalUnit u94 = fundamental_unit(Int(94));
    CHECK(u94.x == 2 * Int(2143295));
    CHECK(u94.y == 2 * Int(221064));
}

TEST_CASE("class numbers from scratch") {
    QuadraticInvariants im5 = class_numbers(Int(-5));
    CHECK(im5.h == 2);
    CHECK(im5.h_plus == 2);

    QuadraticInvariants im23 = class_numbers(Int(-23));
    CHECK(im23.h == 3);

    QuadraticInvariants r5 = class_numbers(Int(5));
    CHECK(r5.h == 1);
    CHECK(r5.h_plus == 1);
    CHECK(r5.unit_norm == -1);

    QuadraticInvariants r3 = class_numbers(Int(3));
    CHECK(r3.h == 1);
    CHECK(r3.h_plus == 2);
    CHECK(r3.unit_norm == 1);

    QuadraticInvariants r34 = class_numbers(Int(34));
    CHECK(r34.h == 2);
    CHECK(r34.h_plus == 4);
    CHECK(r34.unit_norm == 1);

    CHECK(class_numbers(Int(-1)).h == 1);
    CHECK(class_numbers(Int(-163)).h == 1);
    CHECK(class_numbers(Int(-47)).h == 5);
    CHECK(class_numbers(Int(79)).h == 3);
    CHECK(class_numbers(Int(10)).h == 2);
}

TEST_CASE("narrow/wide ratio and unit-norm dichotomy over a range" *
          doctest::timeout(120)) {
    for (long d = 2; d <= 150; ++d) {
        if (!is_squarefree(Int(d))) continue;
        QuadraticInvariants inv = class_numbers(Int(d));
        REQUIRE(mod_floor(inv.h_plus, inv.h) == 0);
        Int ratio = inv.h_plus / inv.h;
        REQUIRE((ratio == 1 || ratio == 2));
        REQUIRE((inv.h_plus == inv.h) == (inv.unit_norm == -1));
    }
    for (long d = -150; d <= -2; ++d) {
        if (!is_squarefree(Int(d))) continue;
        QuadraticInvariants inv = class_numbers(Int(d));
        REQUIRE(inv.h == inv.h_plus);
    }
}

TEST_CASE("minus one as a global norm") {
    CHECK(minus_one_is_global_norm(Int(5)));
    CHECK(!minus_one_is_global_norm(Int(3)));
    CHECK(minus_one_is_global_norm(Int(2)));
    CHECK(!minus_one_is_global_norm(Int(-5)));
    // d = 34: -1 is a rational norm although the fundamental unit has norm +1
    CHECK(minus_one_is_global_norm(Int(34)));
    CHECK(class_numbers(Int(34)).unit_norm == 1);
    // unit norm -1 always implies the global norm condition
    for (long d = 2; d <= 120; ++d) {
        if (!is_squarefree(Int(d))) continue;
        if (class_numbers(Int(d)).unit_norm == -1) REQUIRE(minus_one_is_global_norm(Int(d)));
    }
}

TEST_CASE("hilbert symbol spot values") {
    CHECK(hilbert_symbol(Int(-1), Int(3), Int(3)) == -1);
    CHECK(hilbert_symbol(Int(-1), Int(5), Int(5)) == 1);
    CHECK(hilbert_symbol(Int(-1), Int(-1), Int(0)) == -1);
    CHECK(hilbert_symbol(Int(2), Int(3), Int(0)) == 1);
    CHECK(hilbert_symbol(Int(-1), Int(34), Int(2)) == 1);
    CHECK(hilbert_symbol(Int(-1), Int(34), Int(17)) == 1);
    // product formula over all places for a few pairs
    for (long a : {-6L, -1L, 2L, 15L}) {
        for (long b : {-10L, -3L, 7L, 30L}) {
            int prod = hilbert_symbol(Int(a), Int(b), Int(0));
            for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L})
                prod *= hilbert_symbol(Int(a), Int(b), Int(p));
            REQUIRE(prod == 1);
        }
    }
}
