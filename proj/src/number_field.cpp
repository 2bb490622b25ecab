#include "nfkit/number_field.hpp"

#include <algorithm>
#include <sstream>

namespace nfkit {

std::shared_ptr<const NumberField> NumberField::create(Poly min_poly,
                                                       const NumberFieldOptions& opt) {
    if (min_poly.degree() < 1)
        throw std::domain_error("NumberField: defining polynomial must be nonconstant");
    if (!min_poly.is_integer())
        throw std::domain_error("NumberField: defining polynomial must have integer coefficients");
    if (!min_poly.is_monic())
        throw std::domain_error("NumberField: defining polynomial must be monic");
    IrreducibilityCertificate cert;
    for (Int p = 2; p <= opt.certificate_bound;
         mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (is_irreducible_mod_p(min_poly, p)) {
            cert.prime = p;
            break;
        }
    }
    if (!cert.prime) {
        if (!opt.allow_asserted)
            throw std::domain_error(
                "NumberField: no irreducibility certificate prime found below bound; "
                "pass allow_asserted to accept the polynomial as-is");
        cert.asserted = true;
    }
    int degree = min_poly.degree();
    return std::shared_ptr<const NumberField>(
        new NumberField(std::move(min_poly), degree, std::move(cert)));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != field_->degree())
        throw std::domain_error("FieldElement: coefficient vector length != degree");
}

FieldElement FieldElement::zero(FieldPtr field) {
    int n = field->degree();
    return FieldElement(std::move(field), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
}

FieldElement FieldElement::one(FieldPtr field) { return rational(std::move(field), Rat(1)); }

FieldElement FieldElement::rational(FieldPtr field, const Rat& c) {
    FieldElement e = zero(std::move(field));
    e.coeffs_[0] = c;
    return e;
}

FieldElement FieldElement::generator(FieldPtr field) {
    if (field->degree() < 2) return rational(std::move(field), Rat(0));
    FieldElement e = zero(std::move(field));
    e.coeffs_[1] = Rat(1);
    return e;
}

FieldElement FieldElement::from_poly(FieldPtr field, const Poly& a) {
    Poly r = divrem(a, field->min_poly()).remainder;
    std::vector<Rat> c(static_cast<std::size_t>(field->degree()), Rat(0));
    for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
    return FieldElement(std::move(field), std::move(c));
}

Poly FieldElement::as_poly() const { return Poly(std::vector<Rat>(coeffs_)); }

bool FieldElement::is_zero() const {
    for (const Rat& q : coeffs_)
        if (sgn(q) != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field() && a.field()->min_poly() != b.field()->min_poly())
        throw std::domain_error("FieldElement: operands live in different fields");
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<Rat> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<Rat> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] - o.coeffs_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rat> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    return from_poly(field_, as_poly() * o.as_poly());
}

FieldElement FieldElement::operator*(const Rat& s) const {
    std::vector<Rat> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * s;
    return FieldElement(field_, std::move(c));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return coeffs_ == o.coeffs_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    // extended Euclid: u*a + v*f = g with g constant since f is irreducible
    Poly r0 = field_->min_poly(), r1 = as_poly();
    Poly s0, s1 = Poly::one();  // coefficients of a
    while (!r1.is_zero()) {
        PolyDivRem qr = divrem(r0, r1);
        Poly s2 = s0 - qr.quotient * s1;
        r0 = r1;
        r1 = qr.remainder;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0)
        throw std::domain_error(
            "inverse: defining polynomial is reducible (nontrivial gcd found)");
    Rat inv = Rat(1) / r0.coeff(0);
    return from_poly(field_, s0 * inv);
}

FieldElement FieldElement::pow(long e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    FieldElement acc = one(field_);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string FieldElement::to_string(const std::string& var) const {
    return as_poly().to_string(var);
}

Rat norm(const FieldElement& a) {
    if (a.is_zero()) return Rat(0);
    // min_poly is monic, so Res(f, a) = prod a(theta_i) = N(a).
    return resultant(a.field()->min_poly(), a.as_poly());
}

namespace {

// Multiplication-by-a matrix on the power basis; column j = a * theta^j.
std::vector<std::vector<Rat>> mult_matrix(const FieldElement& a) {
    int n = a.field()->degree();
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    FieldElement cur = a;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                cur.coeffs()[static_cast<std::size_t>(i)];
        if (j + 1 < n)
            cur = FieldElement::from_poly(a.field(), cur.as_poly() * Poly::x());
    }
    return m;
}

}  // namespace

Rat trace(const FieldElement& a) {
    auto m = mult_matrix(a);
    Rat t(0);
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

Poly char_poly(const FieldElement& a) {
    // Faddeev-LeVerrier over Q on the multiplication matrix.
    int n = a.field()->degree();
    auto m = mult_matrix(a);
    auto matmul = [n](const std::vector<std::vector<Rat>>& x,
                      const std::vector<std::vector<Rat>>& y) {
        std::vector<std::vector<Rat>> z(static_cast<std::size_t>(n),
                                        std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Rat& xk = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (sgn(xk) == 0) continue;
                for (int j = 0; j < n; ++j)
                    z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        xk * y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
        return z;
    };
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    c[static_cast<std::size_t>(n)] = Rat(1);
    std::vector<std::vector<Rat>> ak = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // ak <- m * (ak + c_{n-k+1} I)
            for (int i = 0; i < n; ++i)
                ak[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] +=
                    c[static_cast<std::size_t>(n - k + 1)];
            ak = matmul(m, ak);
        }
        Rat tr(0);
        for (int i = 0; i < n; ++i)
            tr += ak[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        c[static_cast<std::size_t>(n - k)] = -tr / Rat(k);
    }
    return Poly(std::move(c));
}

Poly min_poly_of_element(const FieldElement& a) {
    return squarefree_part(char_poly(a));
}

bool is_integral(const FieldElement& a) { return char_poly(a).is_integer(); }

bool is_unit(const FieldElement& a) {
    if (a.is_zero()) return false;
    Rat n = norm(a);
    if (!(n == 1 || n == -1)) return false;
    return is_integral(a);
}

std::pair<int, int> signature(const NumberField& F) {
    int r1 = sturm_count_real_roots(F.min_poly());
    return {r1, (F.degree() - r1) / 2};
}

bool dedekind_p_maximal(const NumberField& F, const Int& p, const FactorOptions& opt) {
    const Poly& f = F.min_poly();
    FactorizationModP fac = factor_mod_p(f, p, opt);
    ModPoly radical = ModPoly::constant(p, Int(1));
    ModPoly cofactor = ModPoly::constant(p, Int(1));
    for (const ModFactor& g : fac.factors) {
        radical = radical * g.factor;
        for (int i = 1; i < g.multiplicity; ++i) cofactor = cofactor * g.factor;
    }
    // T = (g* h* - f)/p with monic lifts g*, h*; exact since g* h* == f mod p.
    Poly gh = radical.lift() * cofactor.lift() - f;
    std::vector<Rat> tc;
    tc.reserve(static_cast<std::size_t>(gh.degree()) + 1);
    for (int i = 0; i <= gh.degree(); ++i) {
        Rat q = gh.coeff(i) / Rat(p);
        if (q.get_den() != 1) throw std::logic_error("Dedekind lift not divisible by p");
        tc.push_back(q);
    }
    ModPoly tbar = ModPoly::reduce(Poly(std::move(tc)), p);
    ModPoly common = gcd(tbar, gcd(radical, cofactor));
    return common.degree() == 0;
}

bool SplittingReport::totally_ramified(int degree) const {
    return certified && pattern.size() == 1 && pattern[0].first == degree &&
           pattern[0].second == 1;
}

bool SplittingReport::inert(int degree) const {
    return certified && pattern.size() == 1 && pattern[0].first == 1 &&
           pattern[0].second == degree;
}

SplittingReport splitting_type(const NumberField& F, const Int& p, const FactorOptions& opt) {
    SplittingReport rep;
    rep.prime = p;
    FactorizationModP fac = factor_mod_p(F.min_poly(), p, opt);
    for (const ModFactor& g : fac.factors)
        rep.pattern.emplace_back(g.multiplicity, g.factor.degree());
    rep.certified = dedekind_p_maximal(F, p, opt);
    return rep;
}

bool is_totally_ramified(const NumberField& F, const Int& p, const FactorOptions& opt) {
    return splitting_type(F, p, opt).totally_ramified(F.degree());
}

bool is_inert(const NumberField& F, const Int& p, const FactorOptions& opt) {
    return splitting_type(F, p, opt).inert(F.degree());
}

Int residue_tot_ramified(const FieldElement& a, const Int& p, const FactorOptions& opt) {
    const NumberField& F = *a.field();
    FactorizationModP fac = factor_mod_p(F.min_poly(), p, opt);
    bool tot_ram = fac.factors.size() == 1 && fac.factors[0].factor.degree() == 1 &&
                   fac.factors[0].multiplicity == F.degree();
    if (!tot_ram || !dedekind_p_maximal(F, p, opt))
        throw std::domain_error("residue_tot_ramified: p is not certified totally ramified");
    // min_poly == (x - r)^n mod p; theta maps to r.
    Int r = mod_floor(-fac.factors[0].factor.coeff(0), p);
    Int acc = 0;
    Int rpow = 1;
    for (const Rat& q : a.coeffs()) {
        Int den = mod_floor(q.get_den(), p);
        if (sgn(den) == 0)
            throw std::domain_error("residue_tot_ramified: not integral at p");
        acc = mod_floor(acc + mod_floor(q.get_num(), p) * invmod(den, p) * rpow, p);
        rpow = mod_floor(rpow * r, p);
    }
    return acc;
}

long ord_at_inert_two(const FieldElement& a, const FactorOptions& opt) {
    if (a.is_zero()) throw std::domain_error("ord_at_inert_two of zero");
    const NumberField& F = *a.field();
    if (!is_inert(F, Int(2), opt))
        throw std::domain_error("ord_at_inert_two: 2 is not certified inert");
    long v = valuation(norm(a), Int(2));
    if (v % F.degree() != 0)
        throw std::logic_error("ord_at_inert_two: norm valuation not divisible by degree");
    return v / F.degree();
}

Int evertse_bound(int r1, int r2) {
    if (r1 < 0 || r2 < 0) throw std::domain_error("evertse_bound: negative signature");
    return Int(3) * pow_int(Int(7), static_cast<unsigned long>(3 * r1 + 4 * r2));
}

}  // namespace nfkit
