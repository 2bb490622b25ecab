#include "doctest.h"
#include "nfkit/poly.hpp"
#include "oracles.hpp"

using namespace nfkit;
using nfkit::testing::PolyGen;
using nfkit::testing::sylvester_resultant;

namespace {

Poly ipoly(std::vector<long> coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Poly unit_eq_lhs(int r) {  // X^r - 1
    Poly p = Poly::monomial(r, Rat(1));
    return p - Poly::one();
}

Poly unit_eq_rhs(int r) {  // (X-1)^r - 1
    Poly xm1 = Poly::x() - Poly::one();
    Poly acc = Poly::one();
    for (int i = 0; i < r; ++i) acc = acc * xm1;
    return acc - Poly::one();
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    Poly f = ipoly({-1, 0, 1});  // x^2 - 1
    Poly g = ipoly({1, 1});      // x + 1
    CHECK(f.degree() == 2);
    CHECK((f * g).degree() == 3);
    CHECK(divrem(f, g).remainder.is_zero());
    CHECK(divrem(f, g).quotient == ipoly({-1, 1}));
    CHECK(f.eval(Rat(3)) == Rat(8));
    CHECK(f.compose(g) == ipoly({0, 2, 1}));
    CHECK(poly_gcd(f, g) == g.make_monic());
    CHECK(ipoly({2, 4}).make_monic() == Poly({Rat(1) / 2 * 1, Rat(1)}));
}

TEST_CASE("squarefree part strips multiplicity") {
    Poly g = ipoly({1, 1});
    Poly f = g * g * ipoly({-2, 0, 1});
    Poly sf = squarefree_part(f);
    CHECK(sf == (g * ipoly({-2, 0, 1})).make_monic());
}

TEST_CASE("resultant frozen values") {
    // Standard Sylvester convention; cross-checked by the determinant oracle.
    // The r=2 case factors as g(1)*g(-1) = (-1)*3 = -3.
    CHECK(resultant(unit_eq_lhs(2), unit_eq_rhs(2)) == Rat(-3));
    CHECK(resultant(unit_eq_lhs(4), unit_eq_rhs(4)) == Rat(-375));
    // r=6: x = exp(i pi/3) is a common root, so the resultant vanishes.
    CHECK(resultant(unit_eq_lhs(6), unit_eq_rhs(6)) == Rat(0));
    // oracle agreement on the same inputs
    for (int r : {2, 4, 6})
        CHECK(resultant(unit_eq_lhs(r), unit_eq_rhs(r)) ==
              sylvester_resultant(unit_eq_lhs(r), unit_eq_rhs(r)));
}

TEST_CASE("resultant of a polynomial with itself is zero") {
    PolyGen gen(1234);
    for (int i = 0; i < 50; ++i) {
        Poly f = gen.random_int_poly(6, 8);
        if (f.degree() < 1) continue;
        CHECK(resultant(f, f) == Rat(0));
    }
}

TEST_CASE("resultant edge cases") {
    CHECK_THROWS_AS(resultant(Poly(), Poly()), std::domain_error);
    CHECK(resultant(Poly(), ipoly({1, 1})) == Rat(0));
    CHECK(resultant(ipoly({5}), ipoly({1, 2, 3})) == Rat(25));  // c^deg g
    CHECK(resultant(ipoly({1, 1}), ipoly({7})) == Rat(7));
    CHECK(resultant(ipoly({4}), ipoly({9})) == Rat(1));
    // rational coefficients stay exact
    Poly half({make_rat(1, 2), Rat(1)});
    CHECK(resultant(half, Poly::x()) == make_rat(-1, 2));  // root -1/2 of f, g(-1/2)
}

TEST_CASE("resultant matches Sylvester oracle on random inputs" *
          doctest::timeout(60)) {
    PolyGen gen(20260808);
    for (int i = 0; i < 1000; ++i) {
        Poly f = gen.random_int_poly(7, 10);
        Poly g = gen.random_int_poly(7, 10);
        CAPTURE(f.to_string());
        CAPTURE(g.to_string());
        REQUIRE(resultant(f, g) == sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant symmetry and multiplicativity properties" *
          doctest::timeout(60)) {
    PolyGen gen(55);
    int done = 0;
    while (done < 1000) {
        Poly f = gen.random_int_poly(5, 6);
        Poly g1 = gen.random_int_poly(4, 6);
        Poly g2 = gen.random_int_poly(4, 6);
        if (f.is_zero() || g1.is_zero() || g2.is_zero()) continue;
        ++done;
        Rat sym = resultant(g1, f);
        if ((f.degree() * g1.degree()) % 2) sym = -sym;
        REQUIRE(resultant(f, g1) == sym);
        REQUIRE(resultant(f, g1 * g2) == resultant(f, g1) * resultant(f, g2));
    }
}

TEST_CASE("discriminant values") {
    CHECK(discriminant(ipoly({-1, -1, 1})) == Rat(5));   // x^2 - x - 1
    CHECK(discriminant(ipoly({-5, 0, 1})) == Rat(20));   // x^2 - 5
    CHECK(discriminant(ipoly({1, 0, 1})) == Rat(-4));    // x^2 + 1
    CHECK(discriminant(ipoly({1, 1, 1})) == Rat(-3));
}

TEST_CASE("sturm real root counts") {
    CHECK(sturm_count_real_roots(ipoly({-2, 0, 1})) == 2);
    CHECK(sturm_count_real_roots(ipoly({1, 0, 1})) == 0);
    CHECK(sturm_count_real_roots(ipoly({-11, 9, 129, 85, -65, -45, -1, 1})) == 7);
    CHECK(sturm_count_real_roots(ipoly({0, 1})) == 1);
    CHECK(sturm_count_real_roots(ipoly({1})) == 0);
    CHECK_THROWS_AS(sturm_count_real_roots(Poly()), std::domain_error);
    // repeated roots are counted once (squarefree part taken internally)
    Poly g = ipoly({-1, 1});
    CHECK(sturm_count_real_roots(g * g * g) == 1);
}

TEST_CASE("sturm count agrees with numeric root isolation" * doctest::timeout(60)) {
    PolyGen gen(77);
    int done = 0;
    while (done < 200) {
        Poly f = gen.random_int_poly(6, 5);
        if (f.degree() < 1) continue;
        Poly sf = squarefree_part(f);
        if (sf.degree() < 1) continue;
        ++done;
        int real = sturm_count_real_roots(sf);
        int numeric = nfkit::testing::numeric_real_root_count(sf);
        CAPTURE(sf.to_string());
        REQUIRE(real == numeric);
        REQUIRE((sf.degree() - real) % 2 == 0);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(Int(5)) == ipoly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(Int(3)) == ipoly({1, 1, 1}));
    Poly phi11 = cyclotomic_poly(Int(11));
    CHECK(phi11.degree() == 10);
    for (int i = 0; i <= 10; ++i) CHECK(phi11.coeff(i) == Rat(1));
    CHECK_THROWS_AS(cyclotomic_poly(Int(6)), std::domain_error);
    // Phi_p divides x^p - 1 exactly
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        Poly xp1 = Poly::monomial(static_cast<int>(p), Rat(1)) - Poly::one();
        CHECK(divrem(xp1, cyclotomic_poly(Int(p))).remainder.is_zero());
    }
}

TEST_CASE("real cyclotomic minimal polynomials") {
    CHECK(real_cyclotomic_min_poly(Int(5)) == ipoly({-1, 1, 1}));
    CHECK(real_cyclotomic_min_poly(Int(7)) == ipoly({-1, -2, 1, 1}));
    CHECK(real_cyclotomic_min_poly(Int(11)) == ipoly({1, 3, -3, -4, 1, 1}));
    CHECK_THROWS_AS(real_cyclotomic_min_poly(Int(3)), std::domain_error);

    // verification by substitution: m(y + y^{p-1}) == 0 mod Phi_p
    for (long p : {5L, 7L, 11L, 13L}) {
        Poly phi = cyclotomic_poly(Int(p));
        Poly m = real_cyclotomic_min_poly(Int(p));
        CHECK(m.degree() == static_cast<int>((p - 1) / 2));
        CHECK(m.is_monic());
        Poly eta = divrem(Poly::x() + Poly::monomial(static_cast<int>(p - 1), Rat(1)), phi)
                       .remainder;
        Poly value = divrem(m.compose(eta), phi).remainder;
        CHECK(value.is_zero());
    }
}
