#ifndef NFKIT_NUMERIC_HPP
#define NFKIT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nfkit {

using Int = mpz_class;
using Rat = mpq_class;

// Default seed for every randomized routine (equal-degree splitting).
// Overridable through the options structs / --seed on the CLI.
inline constexpr unsigned long kDefaultSeed = 1;

inline Rat make_rat(Int num, Int den) {
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (sgn(n) < 0) return false;
    Int r = isqrt_floor(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// p-adic valuation of a nonzero integer.
long valuation(const Int& n, const Int& p);

// p-adic valuation of a nonzero rational.
long valuation(const Rat& q, const Int& p);

inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int powmod(const Int& base, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

struct Xgcd {
    Int g, s, t;  // g = s*a + t*b, g >= 0
};

inline Xgcd xgcd(const Int& a, const Int& b) {
    Xgcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("invmod: not invertible");
    return r;
}

// Exact parse of "a", "-a", or "a/b". Throws std::invalid_argument on junk.
Rat rat_from_string(const std::string& s);

// Canonical form "a" or "a/b" (b > 1).
std::string rat_to_string(const Rat& q);

// Legendre symbol (a|p) for odd prime p.
inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// Hilbert symbol (a,b)_p over Q_p; pass p = 0 for the real place.
int hilbert_symbol(Int a, Int b, const Int& p);

// Squarefree kernel d of n (n != 0): n = d * square.
Int squarefree_kernel(const Int& n);

bool is_squarefree(const Int& n);

// Trial-divided prime factors of |n| up to `bound`; the unfactored cofactor
// (possibly 1 or a proven prime, absorbed into the list when prime) is
// returned separately.
struct PartialFactorization {
    std::vector<std::pair<Int, int>> factors;  // ascending primes
    Int cofactor;                              // 1 when complete
};
PartialFactorization trial_factor(Int n, const Int& bound);

}  // namespace nfkit

#endif
