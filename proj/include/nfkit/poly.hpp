#ifndef NFKIT_POLY_HPP
#define NFKIT_POLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nfkit/numeric.hpp"

namespace nfkit {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree. The zero polynomial has an empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rat(1)); }
    static Poly x();
    static Poly constant(const Rat& c);
    static Poly from_int_coeffs(const std::vector<Int>& coeffs);
    static Poly monomial(int degree, const Rat& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    // Coefficient of x^i, zero beyond the degree.
    const Rat& coeff(int i) const;
    const Rat& leading() const;

    // True when every coefficient has denominator 1.
    bool is_integer() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Poly compose(const Poly& inner) const;
    Poly make_monic() const;

    // lcm of coefficient denominators (1 for the zero polynomial).
    Int denominator_lcm() const;
    // Integer coefficients after clearing denominators (caller owns the scale).
    std::vector<Int> scaled_int_coeffs(Int* scale = nullptr) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

struct PolyDivRem {
    Poly quotient, remainder;
};
// Exact division with remainder over Q; divisor nonzero.
PolyDivRem divrem(const Poly& num, const Poly& den);

// Monic gcd over Q; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// f / squarefree-radical bookkeeping: the monic squarefree part f/gcd(f,f').
Poly squarefree_part(const Poly& f);

// Resultant of f and g, exact. Fraction-free subresultant PRS on integer
// images after clearing denominators. Both inputs zero is a domain error.
Rat resultant(const Poly& f, const Poly& g);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), n = deg f >= 1.
Rat discriminant(const Poly& f);

// Number of distinct real roots via a Sturm chain over exact rationals.
// The squarefree part is taken internally; zero polynomial is a domain error.
int sturm_count_real_roots(const Poly& f);

// Phi_p = 1 + x + ... + x^{p-1} for prime p.
Poly cyclotomic_poly(const Int& p);

// Minimal polynomial of zeta_p + zeta_p^{-1}, monic of degree (p-1)/2,
// built from the recurrence for z^k + z^{-k} in z + z^{-1}. Requires p >= 5.
Poly real_cyclotomic_min_poly(const Int& p);

}  // namespace nfkit

#endif
