#include "nfkit/numeric.hpp"

#include <stdexcept>

namespace nfkit {

long valuation(const Int& n, const Int& p) {
    if (sgn(n) == 0) throw std::domain_error("valuation of zero");
    Int m = abs(n);
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (sgn(r) != 0) break;
        ++v;
        m = q;
    }
    return v;
}

long valuation(const Rat& q, const Int& p) {
    if (sgn(q) == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    if (mpz_divisible_p(q.get_num().get_mpz_t(), p.get_mpz_t()))
        v = valuation(q.get_num(), p);
    else if (mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()))
        v = -valuation(q.get_den(), p);
    return v;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw std::invalid_argument("malformed rational: " + s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational: " + s);
    Int d(den);
    if (sgn(d) == 0) throw std::invalid_argument("zero denominator: " + s);
    return make_rat(Int(num), d);
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// epsilon(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2 for odd u.
int eps2(const Int& u) { return mpz_tstbit(Int((u - 1) / 2).get_mpz_t(), 0); }
int omega2(const Int& u) {
    return mpz_tstbit(Int((u * u - 1) / 8).get_mpz_t(), 0);
}

}  // namespace

int hilbert_symbol(Int a, Int b, const Int& p) {
    if (sgn(a) == 0 || sgn(b) == 0)
        throw std::domain_error("hilbert_symbol: zero argument");
    if (sgn(p) == 0) {  // real place
        return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    }
    long alpha = valuation(a, p);
    long beta = valuation(b, p);
    Int u = a / pow_int(p, static_cast<unsigned long>(alpha));
    Int v = b / pow_int(p, static_cast<unsigned long>(beta));
    if (p == 2) {
        int e = (eps2(u) * eps2(v) + static_cast<int>(alpha % 2) * omega2(v) +
                 static_cast<int>(beta % 2) * omega2(u)) %
                2;
        return e ? -1 : 1;
    }
    int e = static_cast<int>((alpha % 2) * (beta % 2)) * eps2(p);
    int sym = 1;
    if (e % 2) sym = -sym;
    if (beta % 2) sym *= legendre(mod_floor(u, p), p);
    if (alpha % 2) sym *= legendre(mod_floor(v, p), p);
    return sym;
}

Int squarefree_kernel(const Int& n) {
    if (sgn(n) == 0) throw std::domain_error("squarefree_kernel of zero");
    Int m = abs(n), kernel = sgn(n) < 0 ? Int(-1) : Int(1);
    Int d = 2;
    while (d * d <= m) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            int e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
                m /= d;
                ++e;
            }
            if (e % 2) kernel *= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (m > 1) kernel *= m;
    return kernel;
}

bool is_squarefree(const Int& n) {
    return abs(squarefree_kernel(n)) == abs(n);
}

PartialFactorization trial_factor(Int n, const Int& bound) {
    PartialFactorization out;
    n = abs(n);
    if (sgn(n) == 0) throw std::domain_error("trial_factor of zero");
    Int d = 2;
    while (d <= bound && d * d <= n) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            int e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                n /= d;
                ++e;
            }
            out.factors.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1 && (is_prime(n) || d * d > n)) {
        out.factors.emplace_back(n, 1);
        n = 1;
    }
    out.cofactor = n;
    return out;
}

}  // namespace nfkit
