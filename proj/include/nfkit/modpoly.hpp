#ifndef NFKIT_MODPOLY_HPP
#define NFKIT_MODPOLY_HPP

#include <cstdint>
#include <vector>

#include "nfkit/poly.hpp"

namespace nfkit {

// Dense polynomial over F_p, coefficients in [0, p). The modulus must be
// prime; this is checked once at the factorization entry points.
class ModPoly {
  public:
    explicit ModPoly(Int p) : p_(std::move(p)) {}
    ModPoly(Int p, std::vector<Int> coeffs);

    // Reduce a rational polynomial mod p; denominators prime to p are
    // inverted, others raise std::domain_error.
    static ModPoly reduce(const Poly& f, const Int& p);

    static ModPoly x(const Int& p) { return ModPoly(p, {Int(0), Int(1)}); }
    static ModPoly constant(const Int& p, const Int& c) { return ModPoly(p, {c}); }

    const Int& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const;
    const Int& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly scaled(const Int& s) const;
    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const ModPoly& o) const { return !(*this == o); }
    // Strict total order: degree, then coefficient vectors ascending-degree
    // lexicographically. Used for deterministic factor ordering.
    bool operator<(const ModPoly& o) const;

    ModPoly make_monic() const;
    ModPoly derivative() const;
    Int eval(const Int& x) const;

    // Lift to an integer polynomial with coefficients in [0, p).
    Poly lift() const;

  private:
    void trim();
    Int p_;
    std::vector<Int> c_;
};

struct ModDivRem {
    ModPoly quotient, remainder;
};
ModDivRem divrem(const ModPoly& num, const ModPoly& den);
ModPoly gcd(const ModPoly& a, const ModPoly& b);  // monic
// a^e mod f (e >= 0).
ModPoly powmod(const ModPoly& a, const Int& e, const ModPoly& f);

struct ModFactor {
    ModPoly factor;  // monic irreducible
    int multiplicity;
};

struct FactorizationModP {
    Int modulus;
    Int unit;  // leading coefficient of the input mod p
    std::vector<ModFactor> factors;  // sorted by (degree, coeff order)
    // Degree of the factored image (sum of deg * mult).
    int total_degree() const;
    // Re-expanded product times the unit; used by verification tests.
    ModPoly expand() const;
};

struct FactorOptions {
    unsigned long seed = kDefaultSeed;
};

// Complete factorization of f mod p into monic irreducibles. Squarefree
// decomposition, then distinct-degree splitting, then seeded equal-degree
// splitting (Cantor-Zassenhaus; trace maps for p = 2). Deterministic for a
// fixed seed. Errors: p not prime, f zero, or f vanishing mod p.
FactorizationModP factor_mod_p(const Poly& f, const Int& p,
                               const FactorOptions& opt = {});

// Distinct-degree test only; no randomness involved.
bool is_irreducible_mod_p(const Poly& f, const Int& p);

}  // namespace nfkit

#endif
