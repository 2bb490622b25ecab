#include "nfkit/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace nfkit {

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

Poly Poly::constant(const Rat& c) {
    if (sgn(c) == 0) return Poly();
    return Poly({c});
}

Poly Poly::from_int_coeffs(const std::vector<Int>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const Int& v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Poly Poly::monomial(int degree, const Rat& c) {
    if (sgn(c) == 0) return Poly();
    std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rat& Poly::coeff(int i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

bool Poly::is_integer() const {
    for (const Rat& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

Poly Poly::operator-() const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    if (sgn(s) == 0) return Poly();
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::make_monic() const {
    if (is_zero()) return Poly();
    Rat inv = make_rat(leading().get_den(), leading().get_num());
    return *this * inv;
}

Int Poly::denominator_lcm() const {
    Int l = 1;
    for (const Rat& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return l;
}

std::vector<Int> Poly::scaled_int_coeffs(Int* scale) const {
    Int l = denominator_lcm();
    if (scale) *scale = l;
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const Rat& q : c_) {
        Rat s = q * Rat(l);
        assert(s.get_den() == 1);
        out.push_back(s.get_num());
    }
    return out;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& q = coeff(i);
        if (sgn(q) == 0) continue;
        if (!first) os << (sgn(q) > 0 ? " + " : " - ");
        else if (sgn(q) < 0) os << "-";
        first = false;
        Rat a = abs(q);
        if (i == 0 || a != 1) os << rat_to_string(a) << (i > 0 ? "*" : "");
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

PolyDivRem divrem(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {Poly(), num};
    std::vector<Rat> q(static_cast<std::size_t>(dn - dd) + 1, Rat(0));
    Rat lcinv = make_rat(den.leading().get_den(), den.leading().get_num());
    for (int i = dn; i >= dd; --i) {
        Rat f = r[static_cast<std::size_t>(i)] * lcinv;
        if (sgn(f) == 0) continue;
        q[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] -= f * den.coeff(j);
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = divrem(f, g).remainder;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.make_monic();
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) return f;
    if (f.degree() == 0) return Poly::one();
    Poly g = poly_gcd(f, f.derivative());
    return divrem(f, g).quotient.make_monic();
}

namespace {

// --- internal integer polynomial layer for the subresultant PRS ---

using IntPoly = std::vector<Int>;  // ascending, trimmed

void ztrim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int zdeg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Int zcontent(const IntPoly& p) {
    Int c = 0;
    for (const Int& v : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
    return c;  // nonnegative
}


void zdiv_scalar_checked(IntPoly& p, const Int& d) {
    for (Int& v : p) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        if (sgn(r) != 0) throw std::logic_error("subresultant division not exact");
        v = q;
    }
}

// Pseudo-remainder: lc(B)^k * A mod B, where k (reported through `steps`)
// counts the reduction rounds actually taken; k <= deg A - deg B + 1.
IntPoly zprem(IntPoly A, const IntPoly& B, long* steps) {
    int dB = zdeg(B);
    const Int& lb = B.back();
    *steps = 0;
    while (zdeg(A) >= dB) {
        int dA = zdeg(A);
        Int la = A.back();
        for (Int& v : A) v *= lb;
        for (int j = 0; j <= dB; ++j)
            A[static_cast<std::size_t>(dA - dB + j)] -= la * B[static_cast<std::size_t>(j)];
        ztrim(A);
        ++*steps;
        if (A.empty()) break;
    }
    return A;
}

Rat rat_power(const Int& base, long e) {
    Int p = pow_int(base, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(p);
    return make_rat(Int(1), p);
}

// Subresultant PRS resultant of two nonzero integer polynomials. The PRS
// divisions control coefficient growth; correctness rests on the running
// correction factor, which applies only elementary resultant identities:
//   Res(A,B) = (-1)^{ab} Res(B,A)
//   Res(cA, B) = c^{deg B} Res(A, B)
//   lc(B)^k A = QB + R  =>
//       Res(A,B) = (-1)^{ab} lc(B)^{a - kb - deg R} Res(B, R)
Rat zresultant(IntPoly A, IntPoly B) {
    Rat corr(1);
    if (zdeg(A) < zdeg(B)) {
        if ((zdeg(A) % 2) && (zdeg(B) % 2)) corr = -corr;
        std::swap(A, B);
    }
    if (zdeg(B) == 0)
        return corr * Rat(pow_int(B[0], static_cast<unsigned long>(zdeg(A))));
    Int ca = zcontent(A), cb = zcontent(B);
    zdiv_scalar_checked(A, ca);
    zdiv_scalar_checked(B, cb);
    corr *= Rat(pow_int(ca, static_cast<unsigned long>(zdeg(B))) *
                pow_int(cb, static_cast<unsigned long>(zdeg(A))));
    for (;;) {
        long a = zdeg(A), b = zdeg(B);
        long k = 0;
        IntPoly R = zprem(A, B, &k);
        if (R.empty()) return Rat(0);  // positive-degree common factor
        long r = zdeg(R);
        if ((a % 2) && (b % 2)) corr = -corr;
        corr *= rat_power(B.back(), a - k * b - r);
        Int divisor = zcontent(R);
        zdiv_scalar_checked(R, divisor);
        corr *= rat_power(divisor, b);
        A = B;
        B = R;
        if (zdeg(B) == 0)
            return corr * Rat(pow_int(B[0], static_cast<unsigned long>(zdeg(A))));
    }
}

IntPoly to_int_poly(const Poly& f, Int* scale) {
    std::vector<Int> c = f.scaled_int_coeffs(scale);
    ztrim(c);
    return c;
}

}  // namespace

Rat resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return Rat(0);
    Int df, dg;
    IntPoly F = to_int_poly(f, &df);
    IntPoly G = to_int_poly(g, &dg);
    Rat rz = zresultant(F, G);
    // Res(F/df, G/dg) = Res(F, G) / (df^{deg g} dg^{deg f})
    Int den = pow_int(df, static_cast<unsigned long>(g.degree())) *
              pow_int(dg, static_cast<unsigned long>(f.degree()));
    return rz / Rat(den);
}

Rat discriminant(const Poly& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
    int n = f.degree();
    Rat r = resultant(f, f.derivative());
    Rat d = r / f.leading();
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2) d = -d;
    return d;
}

namespace {

int sign_at_plus_inf(const Poly& p) { return sgn(p.leading()); }

int sign_at_minus_inf(const Poly& p) {
    int s = sgn(p.leading());
    return (p.degree() % 2) ? -s : s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int sturm_count_real_roots(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("sturm count of zero polynomial");
    Poly p = squarefree_part(f);
    if (p.degree() == 0) return 0;
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = divrem(a, b).remainder;
        chain.push_back(-r);
    }
    chain.pop_back();
    std::vector<int> lo, hi;
    lo.reserve(chain.size());
    hi.reserve(chain.size());
    for (const Poly& q : chain) {
        lo.push_back(sign_at_minus_inf(q));
        hi.push_back(sign_at_plus_inf(q));
    }
    return variations(lo) - variations(hi);
}

Poly cyclotomic_poly(const Int& p) {
    if (!is_prime(p)) throw std::domain_error("cyclotomic_poly: p must be prime");
    unsigned long n = p.get_ui();
    std::vector<Rat> c(n, Rat(1));
    return Poly(std::move(c));
}

Poly real_cyclotomic_min_poly(const Int& p) {
    if (p < 5) throw std::domain_error("real_cyclotomic_min_poly requires p >= 5");
    if (!is_prime(p)) throw std::domain_error("real_cyclotomic_min_poly: p must be prime");
    unsigned long n = Int((p - 1) / 2).get_ui();
    // V_k(x) = z^k + z^{-k} as a polynomial in x = z + z^{-1}:
    // V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}. The minimal polynomial of
    // zeta_p + zeta_p^{-1} is 1 + sum_{k=1}^{n} V_k.
    Poly vprev = Poly::constant(Rat(2));
    Poly vcur = Poly::x();
    Poly acc = Poly::one() + vcur;
    for (unsigned long k = 2; k <= n; ++k) {
        Poly vnext = Poly::x() * vcur - vprev;
        acc = acc + vnext;
        vprev = vcur;
        vcur = vnext;
    }
    return acc;
}

}  // namespace nfkit
