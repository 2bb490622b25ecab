#ifndef NFKIT_CHEVALLEY_HPP
#define NFKIT_CHEVALLEY_HPP

#include <vector>

#include "nfkit/quadratic.hpp"

namespace nfkit {

// Two-sided check of the ambiguous class number formula for K = Q(sqrt d)
// over Q: the Galois-fixed classes of Cl(K) against
// h_Q * e(K/Q) / ([K:Q] * [Z^x : Z^x cap Norm(K^x)]).
struct ChevalleyReport {
    Int d;
    Int disc;
    Int lhs;                         // # Cl(K)^G, counted on forms
    Int rhs;                         // formula value
    Int e_product;                   // prod of local ramification degrees
    int norm_index;                  // 1 or 2
    std::vector<Int> ramified_primes;
    bool infinite_ramified;          // complex place over the real place of Q

    bool match() const { return lhs == rhs; }
    bool operator==(const ChevalleyReport& o) const;
};

// Galois-fixed classes, counted directly on forms via (a,b,c) -> (a,-b,c).
// d > 0 counts fixed classes of the wide class group (the formula's Cl).
Int ambiguous_lhs(const Int& d);

// Right-hand side with the per-place detail filled in.
ChevalleyReport ambiguous_rhs(const Int& d);

// Both sides; lhs and rhs filled, equality NOT asserted here.
ChevalleyReport chevalley_check(const Int& d);

// All squarefree d with dmin <= d <= dmax, d not in {0, 1}, ascending |d|
// then sign. Throws std::logic_error with evidence on any mismatch.
std::vector<ChevalleyReport> chevalley_scan(const Int& dmin, const Int& dmax);

}  // namespace nfkit

#endif
