#ifndef NFKIT_NUMBER_FIELD_HPP
#define NFKIT_NUMBER_FIELD_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "nfkit/modpoly.hpp"
#include "nfkit/poly.hpp"

namespace nfkit {

// How the defining polynomial's irreducibility is certified: a prime at
// which it is irreducible mod p, or an assertion taken from the input.
struct IrreducibilityCertificate {
    std::optional<Int> prime;
    bool asserted = false;
};

struct NumberFieldOptions {
    // Largest prime tried when searching for an irreducibility certificate.
    long certificate_bound = 1000;
    // Accept the polynomial as irreducible if no certificate prime is found.
    bool allow_asserted = false;
};

// F = Q[x]/(f) for a monic irreducible integer polynomial f. Immutable;
// shared by the elements that live in it.
class NumberField {
  public:
    static std::shared_ptr<const NumberField> create(Poly min_poly,
                                                     const NumberFieldOptions& opt = {});

    const Poly& min_poly() const { return min_poly_; }
    int degree() const { return degree_; }
    const IrreducibilityCertificate& certificate() const { return cert_; }

  private:
    NumberField(Poly f, int degree, IrreducibilityCertificate cert)
        : min_poly_(std::move(f)), degree_(degree), cert_(std::move(cert)) {}
    Poly min_poly_;
    int degree_;
    IrreducibilityCertificate cert_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of F in the power basis 1, theta, ..., theta^{n-1}, with exact
// rational coordinates.
class FieldElement {
  public:
    FieldElement(FieldPtr field, std::vector<Rat> coeffs);

    static FieldElement zero(FieldPtr field);
    static FieldElement one(FieldPtr field);
    static FieldElement rational(FieldPtr field, const Rat& c);
    static FieldElement generator(FieldPtr field);  // theta
    static FieldElement from_poly(FieldPtr field, const Poly& a);  // a(theta)

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Poly as_poly() const;
    bool is_zero() const;
    bool is_rational() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rat& s) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;  // domain error on zero
    FieldElement pow(long e) const;

    std::string to_string(const std::string& var = "t") const;

  private:
    FieldPtr field_;
    std::vector<Rat> coeffs_;
};

Rat norm(const FieldElement& a);
Rat trace(const FieldElement& a);
// Characteristic polynomial of multiplication by a, monic of degree n.
Poly char_poly(const FieldElement& a);
// Monic minimal polynomial (the squarefree radical of the characteristic
// polynomial; equal to it when a generates F).
Poly min_poly_of_element(const FieldElement& a);

bool is_integral(const FieldElement& a);
bool is_unit(const FieldElement& a);

// (r1, r2) with r1 real embeddings; r1 from the Sturm count of min_poly.
std::pair<int, int> signature(const NumberField& F);

// Dedekind's criterion: is Z[theta] maximal at p?
bool dedekind_p_maximal(const NumberField& F, const Int& p,
                        const FactorOptions& opt = {});

struct SplittingReport {
    Int prime;
    bool certified = false;  // equation order p-maximal per Dedekind
    // (ramification index, residue degree) per prime of F over p; when not
    // certified the pattern is the shape of the factorization mod p only.
    std::vector<std::pair<int, int>> pattern;

    bool totally_ramified(int degree) const;
    bool inert(int degree) const;
};

SplittingReport splitting_type(const NumberField& F, const Int& p,
                               const FactorOptions& opt = {});
bool is_totally_ramified(const NumberField& F, const Int& p,
                         const FactorOptions& opt = {});
bool is_inert(const NumberField& F, const Int& p, const FactorOptions& opt = {});

// Image of a in O_F/p = F_p when p is certified totally ramified. Elements
// with denominators divisible by p are rejected ("not integral at p").
Int residue_tot_ramified(const FieldElement& a, const Int& p,
                         const FactorOptions& opt = {});

// q-adic valuation at q = 2 O_F for 2 certified inert: v(a) = v_2(N(a))/n.
long ord_at_inert_two(const FieldElement& a, const FactorOptions& opt = {});

// 3 * 7^{3 r1 + 4 r2}.
Int evertse_bound(int r1, int r2);

}  // namespace nfkit

#endif
