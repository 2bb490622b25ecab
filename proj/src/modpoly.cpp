#include "nfkit/modpoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace nfkit {

void ModPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

ModPoly::ModPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    for (Int& v : c_) v = mod_floor(v, p_);
    trim();
}

ModPoly ModPoly::reduce(const Poly& f, const Int& p) {
    std::vector<Int> c;
    c.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat& q = f.coeff(i);
        Int den = mod_floor(q.get_den(), p);
        if (sgn(den) == 0)
            throw std::domain_error("ModPoly::reduce: denominator divisible by p");
        c.push_back(mod_floor(q.get_num(), p) * invmod(den, p));
    }
    return ModPoly(p, std::move(c));
}

Int ModPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
    return c_[static_cast<std::size_t>(i)];
}

const Int& ModPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    assert(p_ == o.p_);
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    assert(p_ == o.p_);
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    assert(p_ == o.p_);
    if (is_zero() || o.is_zero()) return ModPoly(p_);
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::scaled(const Int& s) const {
    std::vector<Int> c(c_);
    for (Int& v : c) v *= s;
    return ModPoly(p_, std::move(c));
}

bool ModPoly::operator<(const ModPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int cmp = ::cmp(c_[i], o.c_[i]);
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

ModPoly ModPoly::make_monic() const {
    if (is_zero()) return *this;
    return scaled(invmod(leading(), p_));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_);
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return ModPoly(p_, std::move(c));
}

Int ModPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_floor(acc * x + *it, p_);
    return acc;
}

Poly ModPoly::lift() const {
    std::vector<Int> c(c_);
    return Poly::from_int_coeffs(c);
}

ModDivRem divrem(const ModPoly& num, const ModPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    const Int& p = num.modulus();
    std::vector<Int> r(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {ModPoly(p), num};
    std::vector<Int> q(static_cast<std::size_t>(dn - dd) + 1, Int(0));
    Int lcinv = invmod(den.leading(), p);
    for (int i = dn; i >= dd; --i) {
        Int f = mod_floor(r[static_cast<std::size_t>(i)] * lcinv, p);
        if (sgn(f) == 0) continue;
        q[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            Int& t = r[static_cast<std::size_t>(i - dd + j)];
            t = mod_floor(t - f * den.coeff(j), p);
        }
    }
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly f = a, g = b;
    while (!g.is_zero()) {
        ModPoly r = divrem(f, g).remainder;
        f = g;
        g = r;
    }
    return f.make_monic();
}

ModPoly powmod(const ModPoly& a, const Int& e, const ModPoly& f) {
    assert(sgn(e) >= 0);
    ModPoly base = divrem(a, f).remainder;
    ModPoly acc = ModPoly::constant(a.modulus(), Int(1));
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = divrem(acc * acc, f).remainder;
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            acc = divrem(acc * base, f).remainder;
    }
    return acc;
}

int FactorizationModP::total_degree() const {
    int d = 0;
    for (const ModFactor& f : factors) d += f.factor.degree() * f.multiplicity;
    return d;
}

ModPoly FactorizationModP::expand() const {
    ModPoly acc = ModPoly::constant(modulus, unit);
    for (const ModFactor& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) acc = acc * f.factor;
    return acc;
}

namespace {

class ModRng {
  public:
    explicit ModRng(unsigned long seed) : state_(gmp_randinit_default) {
        state_.seed(seed);
    }
    // Random monic-ish polynomial of degree < d over F_p (nonzero).
    ModPoly random_poly(const Int& p, int d) {
        for (;;) {
            std::vector<Int> c(static_cast<std::size_t>(d));
            for (Int& v : c) v = state_.get_z_range(p);
            ModPoly r(p, std::move(c));
            if (!r.is_zero()) return r;
        }
    }

  private:
    gmp_randclass state_;
};

// Squarefree decomposition in characteristic p: returns pairs
// (monic squarefree g_m, multiplicity m) with f = prod g_m^m.
void squarefree_decompose(const ModPoly& f, int outer_mult,
                          std::map<int, ModPoly>* out) {
    const Int& p = f.modulus();
    if (f.degree() == 0) return;
    ModPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); take p-th root coefficientwise (Frobenius fixes F_p).
        unsigned long pu = p.get_ui();
        std::vector<Int> c;
        for (int i = 0; i <= f.degree(); i += static_cast<int>(pu))
            c.push_back(f.coeff(i));
        squarefree_decompose(ModPoly(p, std::move(c)),
                             outer_mult * static_cast<int>(pu), out);
        return;
    }
    ModPoly g = gcd(f, d);
    ModPoly w = divrem(f, g).quotient.make_monic();  // product of factors with mult not div by p
    int m = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, g);
        ModPoly z = divrem(w, y).quotient.make_monic();  // factors of exact multiplicity m
        if (z.degree() > 0) {
            auto it = out->find(outer_mult * m);
            if (it == out->end())
                out->emplace(outer_mult * m, z);
            else
                it->second = it->second * z;
        }
        w = y;
        g = divrem(g, y).quotient.make_monic();
        ++m;
    }
    if (g.degree() > 0) squarefree_decompose(g, outer_mult, out);  // p-th power residue
}

// Distinct-degree: split monic squarefree g into products of irreducibles of
// equal degree d; returns pairs (product, d).
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& g_in) {
    std::vector<std::pair<ModPoly, int>> out;
    const Int& p = g_in.modulus();
    ModPoly g = g_in;
    ModPoly h = ModPoly::x(p);  // x^{p^d} mod g, iteratively
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {
            out.emplace_back(g, g.degree());
            break;
        }
        h = powmod(h, p, g);
        ModPoly split = gcd(h - ModPoly::x(p), g);
        if (split.degree() > 0) {
            out.emplace_back(split, d);
            g = divrem(g, split).quotient.make_monic();
            h = divrem(h, g).remainder;
        }
    }
    return out;
}

// Equal-degree splitting of a monic product of k >= 1 irreducibles of degree d.
void equal_degree(const ModPoly& f, int d, ModRng* rng, std::vector<ModPoly>* out) {
    const Int& p = f.modulus();
    if (f.degree() == d) {
        out->push_back(f);
        return;
    }
    ModPoly splitter(p);
    for (;;) {
        ModPoly a = rng->random_poly(p, f.degree());
        ModPoly b(p);
        if (p == 2) {
            // trace map: a + a^2 + a^4 + ... + a^{2^{d-1}}
            ModPoly t = divrem(a, f).remainder;
            b = t;
            for (int i = 1; i < d; ++i) {
                t = divrem(t * t, f).remainder;
                b = b + t;
            }
        } else {
            Int e = (pow_int(p, static_cast<unsigned long>(d)) - 1) / 2;
            b = powmod(a, e, f) - ModPoly::constant(p, Int(1));
        }
        ModPoly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
    }
    equal_degree(splitter, d, rng, out);
    equal_degree(divrem(f, splitter).quotient.make_monic(), d, rng, out);
}

}  // namespace

FactorizationModP factor_mod_p(const Poly& f, const Int& p, const FactorOptions& opt) {
    if (!is_prime(p)) throw std::domain_error("factor_mod_p: p must be prime");
    if (f.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.is_zero())
        throw std::domain_error("factor_mod_p: polynomial vanishes mod p");
    FactorizationModP out;
    out.modulus = p;
    out.unit = fp.leading();
    if (fp.degree() == 0) return out;

    std::map<int, ModPoly> squarefree;
    squarefree_decompose(fp.make_monic(), 1, &squarefree);

    ModRng rng(opt.seed);
    for (const auto& [mult, part] : squarefree) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<ModPoly> irreducibles;
            equal_degree(prod, d, &rng, &irreducibles);
            for (ModPoly& g : irreducibles)
                out.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const ModFactor& a, const ModFactor& b) {
                  if (a.factor.degree() != b.factor.degree())
                      return a.factor.degree() < b.factor.degree();
                  if (a.factor < b.factor) return true;
                  if (b.factor < a.factor) return false;
                  return a.multiplicity < b.multiplicity;
              });
    return out;
}

bool is_irreducible_mod_p(const Poly& f, const Int& p) {
    if (!is_prime(p)) throw std::domain_error("is_irreducible_mod_p: p must be prime");
    ModPoly fp = ModPoly::reduce(f, p);
    int n = fp.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (gcd(fp, fp.derivative()).degree() > 0) return false;
    // x^{p^n} == x mod f and gcd(x^{p^{n/q}} - x, f) = 1 for prime q | n.
    ModPoly x = ModPoly::x(p);
    ModPoly h = x;
    std::vector<ModPoly> frobenius_powers;  // h_i = x^{p^i} mod f
    frobenius_powers.push_back(h);
    for (int i = 1; i <= n; ++i) {
        h = powmod(h, p, fp);
        frobenius_powers.push_back(h);
    }
    if (frobenius_powers[static_cast<std::size_t>(n)] != divrem(x, fp).remainder)
        return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime(Int(q))) continue;
        ModPoly diff = frobenius_powers[static_cast<std::size_t>(n / q)] - x;
        if (gcd(diff, fp).degree() != 0) return false;
    }
    return true;
}

}  // namespace nfkit
