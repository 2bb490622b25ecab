#include "doctest.h"
#include "nfkit/modpoly.hpp"
#include "oracles.hpp"

using namespace nfkit;
using nfkit::testing::PolyGen;

namespace {

Poly ipoly(std::vector<long> coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("modpoly arithmetic") {
    Int p = 5;
    ModPoly f(p, {Int(4), Int(0), Int(1)});   // x^2 + 4 = x^2 - 1
    ModPoly g(p, {Int(1), Int(1)});
    CHECK((f + g) == ModPoly(p, {Int(0), Int(1), Int(1)}));
    CHECK(divrem(f, g).remainder.is_zero());
    CHECK(gcd(f, g) == g.make_monic());
    CHECK(powmod(ModPoly::x(p), Int(5), f) == divrem(ModPoly::x(p), f).remainder);
    CHECK(f.eval(Int(2)) == 3);
}

TEST_CASE("factor_mod_p frozen examples") {
    // Phi_5 mod 5 = (x-1)^4
    auto fac = factor_mod_p(cyclotomic_poly(Int(5)), Int(5));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].factor == ModPoly(Int(5), {Int(4), Int(1)}));
    CHECK(fac.factors[0].multiplicity == 4);

    // quintic from the bundled records is irreducible mod 2: x^5 + x^2 + 1
    Poly f5 = ipoly({-451, -990, -605, -110, 0, 1});
    auto fac2 = factor_mod_p(f5, Int(2));
    REQUIRE(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].multiplicity == 1);
    CHECK(fac2.factors[0].factor ==
          ModPoly(Int(2), {Int(1), Int(0), Int(1), Int(0), Int(0), Int(1)}));
    CHECK(is_irreducible_mod_p(f5, Int(2)));

    // x^2 + 1 mod 5 = (x+2)(x+3)
    auto fac3 = factor_mod_p(ipoly({1, 0, 1}), Int(5));
    REQUIRE(fac3.factors.size() == 2);
    CHECK(fac3.factors[0].factor == ModPoly(Int(5), {Int(2), Int(1)}));
    CHECK(fac3.factors[1].factor == ModPoly(Int(5), {Int(3), Int(1)}));
}

TEST_CASE("factor_mod_p error paths") {
    CHECK_THROWS_AS(factor_mod_p(ipoly({1, 1}), Int(6)), std::domain_error);
    CHECK_THROWS_AS(factor_mod_p(Poly(), Int(5)), std::domain_error);
    CHECK_THROWS_AS(factor_mod_p(ipoly({5, 10}), Int(5)), std::domain_error);
}

TEST_CASE("factorization reproduces the input and respects degrees" *
          doctest::timeout(120)) {
    PolyGen gen(99);
    const long primes[] = {2, 3, 5, 13};
    int done = 0;
    while (done < 400) {
        Poly f = gen.random_int_poly(8, 20);
        Int p(primes[static_cast<unsigned>(done) % 4]);
        ModPoly fp = ModPoly::reduce(f, p);
        if (fp.is_zero()) continue;
        ++done;
        auto fac = factor_mod_p(f, p);
        REQUIRE(fac.expand() == fp);
        REQUIRE(fac.total_degree() == fp.degree());
        for (const auto& g : fac.factors) {
            REQUIRE(g.factor.is_monic());
            REQUIRE(g.multiplicity >= 1);
            if (g.factor.degree() <= 3) {
                // irreducibility spot check: no roots for deg <= 3
                bool has_root = false;
                if (g.factor.degree() >= 2)
                    for (Int a = 0; a < p; ++a)
                        if (sgn(g.factor.eval(a)) == 0) has_root = true;
                REQUIRE(!has_root);
            }
        }
    }
}

TEST_CASE("factorization is deterministic for a fixed seed") {
    Poly f = ipoly({1, 3, 0, 1, 2, 0, 0, 1, 1});
    auto a = factor_mod_p(f, Int(7), {.seed = 42});
    auto b = factor_mod_p(f, Int(7), {.seed = 42});
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].factor == b.factors[i].factor);
        CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
    }
    // different seed still yields the same sorted factor list
    auto c = factor_mod_p(f, Int(7), {.seed = 12345});
    REQUIRE(c.factors.size() == a.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        CHECK(a.factors[i].factor == c.factors[i].factor);
}

TEST_CASE("is_irreducible_mod_p") {
    CHECK(is_irreducible_mod_p(ipoly({1, 1, 1}), Int(2)));        // x^2+x+1
    CHECK(!is_irreducible_mod_p(ipoly({1, 0, 1}), Int(2)));       // (x+1)^2
    CHECK(is_irreducible_mod_p(ipoly({-1, -1, 1}), Int(2)));      // x^2-x-1
    CHECK(!is_irreducible_mod_p(ipoly({1, 0, 1}), Int(5)));
    CHECK(is_irreducible_mod_p(ipoly({1, 0, 1}), Int(3)));
    CHECK(is_irreducible_mod_p(ipoly({2, 1}), Int(7)));
}
