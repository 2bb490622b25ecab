#include "nfkit/chevalley.hpp"

#include <algorithm>
#include <sstream>

namespace nfkit {

bool ChevalleyReport::operator==(const ChevalleyReport& o) const {
    return d == o.d && disc == o.disc && lhs == o.lhs && rhs == o.rhs &&
           e_product == o.e_product && norm_index == o.norm_index &&
           ramified_primes == o.ramified_primes && infinite_ramified == o.infinite_ramified;
}

Int ambiguous_lhs(const Int& d) {
    QuadraticField K(d);
    FormClassGroup G(K.disc());
    int fixed = 0;
    if (!K.real()) {
        for (int i = 0; i < G.narrow_count(); ++i) {
            int img = G.class_index(G.representatives()[static_cast<std::size_t>(i)].galois_image());
            if (img == i) ++fixed;
        }
        return Int(fixed);
    }
    // wide classes: a class is fixed when the Galois image lands in the same
    // twist orbit
    const std::vector<int>& orbit = G.wide_orbit_ids();
    std::vector<bool> seen(static_cast<std::size_t>(G.wide_count()), false);
    for (int i = 0; i < G.narrow_count(); ++i) {
        int oid = orbit[static_cast<std::size_t>(i)];
        if (seen[static_cast<std::size_t>(oid)]) continue;
        seen[static_cast<std::size_t>(oid)] = true;
        int img = G.class_index(G.representatives()[static_cast<std::size_t>(i)].galois_image());
        if (orbit[static_cast<std::size_t>(img)] == oid) ++fixed;
    }
    return Int(fixed);
}

ChevalleyReport ambiguous_rhs(const Int& d) {
    QuadraticField K(d);
    ChevalleyReport rep;
    rep.d = d;
    rep.disc = K.disc();
    PartialFactorization fac = trial_factor(rep.disc, abs(rep.disc));
    for (const auto& [p, e] : fac.factors) rep.ramified_primes.push_back(p);
    std::sort(rep.ramified_primes.begin(), rep.ramified_primes.end());
    rep.infinite_ramified = !K.real();  // complex place of K over the real place
    unsigned long t = rep.ramified_primes.size() + (rep.infinite_ramified ? 1 : 0);
    rep.e_product = pow_int(Int(2), t);
    rep.norm_index = minus_one_is_global_norm(d) ? 1 : 2;
    // h_Q = 1, [K:Q] = 2
    Int denom = Int(2) * rep.norm_index;
    if (!mpz_divisible_p(rep.e_product.get_mpz_t(), denom.get_mpz_t()))
        throw std::logic_error("Chevalley rhs is not an integer for d=" + d.get_str());
    rep.rhs = rep.e_product / denom;
    return rep;
}

ChevalleyReport chevalley_check(const Int& d) {
    ChevalleyReport rep = ambiguous_rhs(d);
    rep.lhs = ambiguous_lhs(d);
    return rep;
}

std::vector<ChevalleyReport> chevalley_scan(const Int& dmin, const Int& dmax) {
    std::vector<Int> ds;
    for (Int d = dmin; d <= dmax; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end(), [](const Int& a, const Int& b) {
        Int aa = abs(a), ab = abs(b);
        if (aa != ab) return aa < ab;
        return a < b;
    });
    std::vector<ChevalleyReport> out;
    out.reserve(ds.size());
    for (const Int& d : ds) {
        ChevalleyReport rep = chevalley_check(d);
        if (!rep.match()) {
            std::ostringstream os;
            os << "ambiguous class number mismatch at d=" << d.get_str()
               << ": lhs=" << rep.lhs.get_str() << " rhs=" << rep.rhs.get_str()
               << " e=" << rep.e_product.get_str() << " norm_index=" << rep.norm_index;
            throw std::logic_error(os.str());
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace nfkit
