#ifndef NFKIT_QUADRATIC_HPP
#define NFKIT_QUADRATIC_HPP

#include <optional>
#include <vector>

#include "nfkit/number_field.hpp"
#include "nfkit/numeric.hpp"

namespace nfkit {

// Binary quadratic form a x^2 + b xy + c y^2.
struct QForm {
    Int a, b, c;
    Int disc() const { return b * b - 4 * a * c; }
    QForm inverse() const { return {a, -b, c}; }       // class inverse
    QForm galois_image() const { return {a, -b, c}; }  // action of Gal(K/Q) on forms
    QForm negated() const { return {-a, b, -c}; }      // wide-class identification twist
    bool operator==(const QForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QForm& o) const;
    std::string to_string() const;
};

// Q(sqrt d) for squarefree d != 0, 1; disc is the fundamental discriminant.
class QuadraticField {
  public:
    explicit QuadraticField(const Int& d);
    const Int& d() const { return d_; }
    const Int& disc() const { return disc_; }
    bool real() const { return sgn(d_) > 0; }
    // Canonical defining polynomial: x^2 - x - (d-1)/4 when d = 1 mod 4
    // (integral generator, so 2-inertness is read off the record), else x^2 - d.
    Poly canonical_min_poly() const;

  private:
    Int d_, disc_;
};

// Class group of forms of a fundamental discriminant. For disc < 0 the
// classes are the reduced positive-definite forms; for disc > 0 the narrow
// (proper-equivalence) classes, each one a cycle of reduced forms.
class FormClassGroup {
  public:
    explicit FormClassGroup(const Int& disc);

    const Int& disc() const { return disc_; }
    // One reduced representative per narrow class, deterministic order.
    const std::vector<QForm>& representatives() const { return reps_; }
    int narrow_count() const { return static_cast<int>(reps_.size()); }

    int class_index(const QForm& f) const;  // index into representatives()
    QForm reduce(QForm f) const;
    int compose(int i, int j) const;
    int identity() const { return identity_; }
    int inverse_of(int i) const;
    // Multiplication by the totally-negative twist (-a, b, -c); identity map
    // when the twist is principal (norm -1 fundamental unit).
    int twist_of(int i) const;

    // Wide classes: orbits of the twist. Returns orbit id per narrow class.
    const std::vector<int>& wide_orbit_ids() const { return wide_orbit_; }
    int wide_count() const { return wide_count_; }

    // Order-2 (ambiguous in the group sense) classes; used as the d < 0
    // cross-check oracle for the fixed-class count.
    int two_torsion_count() const;

  private:
    std::vector<QForm> reduction_cycle(const QForm& reduced) const;
    Int disc_;
    Int sqrt_disc_;  // floor(sqrt(disc)) for disc > 0
    std::vector<QForm> reps_;
    std::vector<int> rep_of_reduced_;  // parallel to all_reduced_
    std::vector<QForm> all_reduced_;
    std::vector<std::vector<int>> table_;
    int identity_ = -1;
    std::vector<int> wide_orbit_;
    int wide_count_ = 0;
};

FormClassGroup form_class_group(const Int& disc);

// Fundamental unit (x + y sqrt d)/2 of the maximal order of Q(sqrt d), d > 1
// squarefree; x = y = 2 pattern for Z[sqrt d] units. norm is +-1.
struct FundamentalUnit {
    Int x, y;  // unit = (x + y sqrt d)/2, x = y d (mod 2)
    int norm;
    FieldElement as_element(const QuadraticField& K) const;
};
FundamentalUnit fundamental_unit(const Int& d);

struct QuadraticInvariants {
    Int h;       // class number
    Int h_plus;  // narrow class number (= h for d < 0)
    std::optional<FundamentalUnit> unit;  // real case only
    int unit_norm = 0;                    // +-1 real case, 0 imaginary
};

// Complete invariants computed from scratch (forms + continued fractions).
QuadraticInvariants class_numbers(const Int& d);

// Is -1 a norm from Q(sqrt d)^x, decided by Hilbert symbols (-1, d)_v at
// v = 2, infinity and the odd primes dividing d.
bool minus_one_is_global_norm(const Int& d);

}  // namespace nfkit

#endif
