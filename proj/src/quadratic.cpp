#include "nfkit/quadratic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nfkit {

bool QForm::operator<(const QForm& o) const {
    int s = cmp(a, o.a);
    if (s != 0) return s < 0;
    s = cmp(b, o.b);
    if (s != 0) return s < 0;
    return cmp(c, o.c) < 0;
}

std::string QForm::to_string() const {
    std::ostringstream os;
    os << "(" << a.get_str() << "," << b.get_str() << "," << c.get_str() << ")";
    return os.str();
}

QuadraticField::QuadraticField(const Int& d) : d_(d) {
    if (d == 0 || d == 1) throw std::domain_error("QuadraticField: d must not be 0 or 1");
    if (!is_squarefree(d)) throw std::domain_error("QuadraticField: d must be squarefree");
    disc_ = (mod_floor(d, Int(4)) == 1) ? d : Int(4 * d);
}

Poly QuadraticField::canonical_min_poly() const {
    if (mod_floor(d_, Int(4)) == 1)
        return Poly::from_int_coeffs({-(d_ - 1) / 4, Int(-1), Int(1)});
    return Poly::from_int_coeffs({-d_, Int(0), Int(1)});
}

namespace {

bool is_fundamental_disc(const Int& D) {
    if (D == 0 || D == 1) return false;
    Int m = mod_floor(D, Int(4));
    if (m == 1) return is_squarefree(D);
    if (m != 0) return false;
    Int q = D / 4;
    Int qm = mod_floor(q, Int(4));
    return (qm == 2 || qm == 3) && is_squarefree(q);
}

// Definite reduction, D < 0, a > 0.
QForm reduce_definite(QForm f) {
    for (;;) {
        // normalize b into (-a, a]
        Int twoa = 2 * f.a;
        Int b = mod_floor(f.b + f.a, twoa) - f.a;  // [-a, a)
        if (b == -f.a) b = f.a;
        if (b != f.b) {
            f.c = (b * b - f.disc()) / (4 * f.a);
            f.b = b;
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        break;
    }
    if ((f.a == f.c || f.a == -f.b) && sgn(f.b) < 0) f.b = -f.b;
    return f;
}

bool is_reduced_indefinite(const QForm& f, const Int& s) {
    // 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, in exact integers
    if (sgn(f.b) <= 0 || f.b > s) return false;
    Int twoabs = 2 * abs(f.a);
    return (twoabs + f.b >= s + 1) && (twoabs - f.b <= s);
}

// One rho step for indefinite forms; also makes progress on non-reduced input.
QForm rho_indefinite(const QForm& f, const Int& D, const Int& s) {
    Int cabs = abs(f.c);
    Int twoc = 2 * cabs;
    Int r;
    if (cabs > s) {
        // r = -b mod 2|c| in (-|c|, |c|]
        r = mod_floor(-f.b + cabs, twoc) - cabs;
        if (r == -cabs) r = cabs;
    } else {
        // r = -b mod 2|c| in (s - 2|c|, s]
        r = s - mod_floor(s + f.b, twoc);
    }
    QForm g{f.c, r, (r * r - D) / (4 * f.c)};
    return g;
}

}  // namespace

QForm FormClassGroup::reduce(QForm f) const {
    if (f.disc() != disc_) throw std::domain_error("form has wrong discriminant");
    if (sgn(disc_) < 0) {
        if (sgn(f.a) < 0) throw std::domain_error("negative-definite form");
        return reduce_definite(f);
    }
    int guard = 0;
    while (!is_reduced_indefinite(f, sqrt_disc_)) {
        f = rho_indefinite(f, disc_, sqrt_disc_);
        if (++guard > 10000) throw std::logic_error("indefinite reduction did not terminate");
    }
    return f;
}

std::vector<QForm> FormClassGroup::reduction_cycle(const QForm& reduced) const {
    std::vector<QForm> cycle{reduced};
    QForm g = rho_indefinite(reduced, disc_, sqrt_disc_);
    while (!(g == reduced)) {
        cycle.push_back(g);
        g = rho_indefinite(g, disc_, sqrt_disc_);
        if (cycle.size() > 100000) throw std::logic_error("rho cycle did not close");
    }
    return cycle;
}

namespace {

// Deterministic search for coprime (x, y) with f(x,y) != 0 coprime to m.
void concordant_representation(const QForm& f, const Int& m, Int* xo, Int* yo) {
    for (long n = 1; n <= 1000; ++n) {
        for (long x = -n; x <= n; ++x) {
            for (long y = -n; y <= n; ++y) {
                if (std::max(std::abs(x), std::abs(y)) != n && n > 1) continue;
                Int xi(x), yi(y);
                if (gcd_int(xi, yi) != 1) continue;
                Int val = f.a * xi * xi + f.b * xi * yi + f.c * yi * yi;
                if (sgn(val) == 0) continue;
                if (gcd_int(val, m) == 1) {
                    *xo = xi;
                    *yo = yi;
                    return;
                }
            }
        }
    }
    throw std::logic_error("no concordant representation found");
}

// f composed with the unimodular matrix (x r; y s).
QForm transform(const QForm& f, const Int& x, const Int& r, const Int& y, const Int& s) {
    QForm g;
    g.a = f.a * x * x + f.b * x * y + f.c * y * y;
    g.b = 2 * (f.a * x * r + f.c * y * s) + f.b * (x * s + y * r);
    g.c = f.a * r * r + f.b * r * s + f.c * s * s;
    return g;
}

// Dirichlet composition through united forms: returns an (unreduced)
// representative of the product class.
QForm compose_forms(const QForm& f1, const QForm& f2) {
    Int D = f1.disc();
    Int x, y;
    concordant_representation(f2, f1.a, &x, &y);
    Xgcd e = xgcd(x, y);  // e.s * x + e.t * y = 1
    QForm g2 = transform(f2, x, -e.t, y, e.s);
    // now gcd(g2.a, f1.a) = 1 and both classes are unchanged
    Int m1 = abs(2 * f1.a), m2 = abs(2 * g2.a);
    Int g = gcd_int(m1, m2);  // = 2
    Int diff = g2.b - f1.b;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()))
        throw std::logic_error("composition congruence unsolvable");
    Xgcd em = xgcd(m1 / g, m2 / g);
    Int lcm = m1 / g * m2;
    Int k = mod_floor(diff / g * em.s, m2 / g);
    Int B = mod_floor(f1.b + m1 * k, lcm);
    Int A = f1.a * g2.a;
    Int num = B * B - D;
    if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * A).get_mpz_t()))
        throw std::logic_error("composition: B^2 != D mod 4A");
    return {A, B, num / (4 * A)};
}

}  // namespace

FormClassGroup::FormClassGroup(const Int& disc) : disc_(disc) {
    if (!is_fundamental_disc(disc))
        throw std::domain_error("FormClassGroup: discriminant is not fundamental");
    if (sgn(disc_) > 0) sqrt_disc_ = isqrt_floor(disc_);

    if (sgn(disc_) < 0) {
        // enumerate reduced positive-definite forms
        Int bound = isqrt_floor(abs(disc_) / 3);
        for (Int a = 1; a <= bound; ++a) {
            for (Int b = -a + 1; b <= a; ++b) {
                Int num = b * b - disc_;
                if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t())) continue;
                Int c = num / (4 * a);
                if (c < a) continue;
                QForm f{a, b, c};
                if ((f.a == f.c || f.a == -f.b) && sgn(f.b) < 0) continue;  // tie rule
                if (gcd_int(gcd_int(f.a, f.b), f.c) != 1) continue;
                reps_.push_back(f);
            }
        }
        std::sort(reps_.begin(), reps_.end());
        all_reduced_ = reps_;
        rep_of_reduced_.resize(reps_.size());
        for (std::size_t i = 0; i < reps_.size(); ++i) rep_of_reduced_[i] = static_cast<int>(i);
    } else {
        // enumerate reduced indefinite forms, partition into rho cycles
        std::vector<QForm> all;
        for (Int b = 1; b <= sqrt_disc_; ++b) {
            if (mod_floor(b, Int(2)) != mod_floor(disc_, Int(2))) continue;
            Int lo = sqrt_disc_ + 1 - b, hi = sqrt_disc_ + b;  // range for 2|a|
            if (lo < 1) lo = 1;
            for (Int t = lo; t <= hi; ++t) {
                if (mod_floor(t, Int(2)) != 0) continue;
                Int aabs = t / 2;
                Int num = b * b - disc_;
                if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * aabs).get_mpz_t())) continue;
                for (int sign : {1, -1}) {
                    Int a = sign * aabs;
                    Int c = num / (4 * a);
                    QForm f{a, b, c};
                    if (gcd_int(gcd_int(f.a, f.b), f.c) != 1) continue;
                    all.push_back(f);
                }
            }
        }
        std::sort(all.begin(), all.end());
        all_reduced_ = all;
        rep_of_reduced_.assign(all.size(), -1);
        std::map<QForm, std::size_t> index;
        for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (rep_of_reduced_[i] >= 0) continue;
            std::vector<QForm> cycle = reduction_cycle(all[i]);
            QForm rep = *std::min_element(cycle.begin(), cycle.end());
            reps_.push_back(rep);
            int rid = static_cast<int>(reps_.size()) - 1;
            for (const QForm& g : cycle) {
                auto it = index.find(g);
                if (it == index.end())
                    throw std::logic_error("cycle member missing from reduced enumeration");
                rep_of_reduced_[it->second] = rid;
            }
        }
    }

    // composition table
    int h = narrow_count();
    table_.assign(static_cast<std::size_t>(h), std::vector<int>(static_cast<std::size_t>(h), -1));
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            QForm prod = compose_forms(reps_[static_cast<std::size_t>(i)],
                                       reps_[static_cast<std::size_t>(j)]);
            int k = class_index(prod);
            table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
            table_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = k;
        }

    QForm principal = (mod_floor(disc_, Int(2)) == 0)
                          ? QForm{Int(1), Int(0), -disc_ / 4}
                          : QForm{Int(1), Int(1), (1 - disc_) / 4};
    identity_ = class_index(principal);

    // wide classes: orbits under the (-a, b, -c) identification (trivial for d < 0)
    wide_orbit_.assign(static_cast<std::size_t>(h), -1);
    wide_count_ = 0;
    for (int i = 0; i < h; ++i) {
        if (wide_orbit_[static_cast<std::size_t>(i)] >= 0) continue;
        int t = twist_of(i);
        wide_orbit_[static_cast<std::size_t>(i)] = wide_count_;
        wide_orbit_[static_cast<std::size_t>(t)] = wide_count_;
        ++wide_count_;
    }
}

int FormClassGroup::class_index(const QForm& f) const {
    QForm r = reduce(f);
    auto it = std::lower_bound(all_reduced_.begin(), all_reduced_.end(), r);
    if (it == all_reduced_.end() || !(*it == r))
        throw std::logic_error("reduced form missing from enumeration: " + r.to_string());
    return rep_of_reduced_[static_cast<std::size_t>(it - all_reduced_.begin())];
}

int FormClassGroup::compose(int i, int j) const {
    return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int FormClassGroup::inverse_of(int i) const {
    return class_index(reps_[static_cast<std::size_t>(i)].inverse());
}

int FormClassGroup::twist_of(int i) const {
    if (sgn(disc_) < 0) return i;
    return class_index(reps_[static_cast<std::size_t>(i)].negated());
}

int FormClassGroup::two_torsion_count() const {
    int n = 0;
    for (int i = 0; i < narrow_count(); ++i)
        if (compose(i, i) == identity_) ++n;
    return n;
}

FormClassGroup form_class_group(const Int& disc) { return FormClassGroup(disc); }

FundamentalUnit fundamental_unit(const Int& d) {
    if (d <= 1 || !is_squarefree(d))
        throw std::domain_error("fundamental_unit: d must be squarefree > 1");
    // Continued fraction of sqrt(d); complete quotients (P_k + sqrt d)/Q_k,
    // P_{k} = a_{k-1} Q_{k-1} - P_{k-1}, Q_k = (d - P_k^2)/Q_{k-1}. The period
    // closes when (P_k, Q_k) returns to (P_1, Q_1); the convergent p_{L-1}/q_{L-1}
    // gives the fundamental solution of x^2 - d y^2 = (-1)^L in Z[sqrt d].
    Int a0 = isqrt_floor(d);
    Int P = 0, Q = 1, a_prev = a0;
    Int pprev = 1, pcur = a0, qprev = 0, qcur = 1;  // p_{-1}, p_0, q_{-1}, q_0
    Int P1, Q1;
    long period = 0;
    for (long k = 1;; ++k) {
        P = a_prev * Q - P;
        Q = (d - P * P) / Q;
        if (k == 1) {
            P1 = P;
            Q1 = Q;
        } else if (P == P1 && Q == Q1) {
            period = k - 1;
            break;
        }
        Int ak = (P + a0) / Q;
        Int pn = ak * pcur + pprev, qn = ak * qcur + qprev;
        pprev = pcur;
        pcur = pn;
        qprev = qcur;
        qcur = qn;
        a_prev = ak;
        if (k > 10000000) throw std::logic_error("continued fraction did not close");
    }
    // at the break, (pprev, qprev) = (p_{L-1}, q_{L-1})
    int nrm = (period % 2) ? -1 : 1;
    if (mod_floor(d, Int(4)) == 1) {
        // The maximal order Z[(1+sqrt d)/2] may contain a cube root of the
        // Z[sqrt d]-fundamental unit (unit index 1 or 3, d = 5 mod 8 only).
        // From eps^3 = p + q sqrt d with N(eps) = n: trace t of eps solves
        // t^3 - 3nt = 2p, and eps = (t + y sqrt d)/2 with y^2 = (t^2-4n)/d.
        int n = nrm;
        Int twop = 2 * pprev;
        Int tc;
        mpz_root(tc.get_mpz_t(), twop.get_mpz_t(), 3);
        for (Int t = tc - 2; t <= tc + 2; ++t) {
            if (t <= 0 || t * t * t - 3 * n * t != twop) continue;
            Int num = t * t - 4 * n;
            if (sgn(num) <= 0 || !mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t())) continue;
            Int yr;
            if (!is_perfect_square(num / d, &yr)) continue;
            return {t, yr, n};
        }
    }
    return {2 * pprev, 2 * qprev, nrm};
}

FieldElement FundamentalUnit::as_element(const QuadraticField& K) const {
    FieldPtr F = NumberField::create(K.canonical_min_poly());
    if (mod_floor(K.d(), Int(4)) == 1) {
        // theta = (1+sqrt d)/2, so (x + y sqrt d)/2 = (x-y)/2 + y theta
        return FieldElement(F, {make_rat(x - y, Int(2)), Rat(y)});
    }
    return FieldElement(F, {make_rat(x, Int(2)), make_rat(y, Int(2))});
}

QuadraticInvariants class_numbers(const Int& d) {
    QuadraticField K(d);
    FormClassGroup G(K.disc());
    QuadraticInvariants inv;
    inv.h_plus = G.narrow_count();
    if (!K.real()) {
        inv.h = inv.h_plus;
        return inv;
    }
    inv.h = G.wide_count();
    inv.unit = fundamental_unit(d);
    inv.unit_norm = inv.unit->norm;
    // cross-check between the two independent computations: the narrow and
    // wide counts coincide exactly when the fundamental unit has norm -1
    bool same = inv.h == inv.h_plus;
    if (same != (inv.unit_norm == -1))
        throw std::logic_error("class group / fundamental unit cross-check failed for d=" +
                               d.get_str());
    return inv;
}

bool minus_one_is_global_norm(const Int& d) {
    if (d == 0 || d == 1) throw std::domain_error("d must not be 0 or 1");
    if (!is_squarefree(d)) throw std::domain_error("d must be squarefree");
    if (sgn(d) < 0) return false;  // norms from an imaginary field are positive
    if (hilbert_symbol(Int(-1), d, Int(2)) != 1) return false;
    PartialFactorization fac = trial_factor(d, d);  // d is desk-scale
    for (const auto& [p, e] : fac.factors) {
        if (p == 2) continue;
        if (hilbert_symbol(Int(-1), d, p) != 1) return false;
    }
    return true;
}

}  // namespace nfkit
