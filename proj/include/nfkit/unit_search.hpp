#ifndef NFKIT_UNIT_SEARCH_HPP
#define NFKIT_UNIT_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "nfkit/number_field.hpp"

namespace nfkit {

// Supplied generators of (a subgroup of) O_F^x: a torsion generator and a
// list of infinite-order units. Generators are verified to be units at
// construction; multiplicative independence is checked by the test-suite
// regulator oracle, not here.
class UnitGroupDesc {
  public:
    UnitGroupDesc(FieldPtr field, std::vector<FieldElement> fundamental_units,
                  bool certified_fundamental = false);
    UnitGroupDesc(FieldPtr field, FieldElement torsion_gen,
                  std::vector<FieldElement> fundamental_units,
                  bool certified_fundamental = false);

    const FieldPtr& field() const { return field_; }
    const FieldElement& torsion_gen() const { return torsion_gen_; }
    const std::vector<FieldElement>& fundamental_units() const { return units_; }
    bool certified_fundamental() const { return certified_; }
    int rank() const { return static_cast<int>(units_.size()); }
    int torsion_order() const { return torsion_order_; }

  private:
    FieldPtr field_;
    FieldElement torsion_gen_;
    std::vector<FieldElement> units_;
    bool certified_;
    int torsion_order_;
};

// All t^s prod u_i^{e_i} with |e_i| <= B and s in [0, order(t)). Deterministic
// order: a reflected Gray walk over the exponent box (one multiplication per
// step), torsion powers innermost.
std::vector<FieldElement> enumerate_units(const UnitGroupDesc& U, int B);

struct UnitEqSolution {
    enum class Kind { Unit, SUnit };

    UnitEqSolution(FieldElement lambda_in, FieldElement mu_in, Kind kind_in = Kind::Unit,
                   long v_lambda_in = 0, long v_mu_in = 0)
        : lambda(std::move(lambda_in)),
          mu(std::move(mu_in)),
          kind(kind_in),
          v_lambda(v_lambda_in),
          v_mu(v_mu_in),
          n_value(std::max(v_lambda_in < 0 ? -v_lambda_in : v_lambda_in,
                           v_mu_in < 0 ? -v_mu_in : v_mu_in)) {}

    FieldElement lambda, mu;
    Kind kind;
    long v_lambda, v_mu;  // q-adic valuations (SUnit kind)
    long n_value;         // max(|v_lambda|, |v_mu|)

    bool operator==(const UnitEqSolution& o) const {
        return lambda == o.lambda && mu == o.mu && kind == o.kind &&
               v_lambda == o.v_lambda && v_mu == o.v_mu && n_value == o.n_value;
    }
};

// All pairs inside the enumeration box with lambda + mu = 1, found by exact
// lookup of 1 - lambda among the enumerated units. Ordered pairs; complete
// only within the box. Results sorted by lambda's coefficient vector.
std::vector<UnitEqSolution> solve_unit_equation(const UnitGroupDesc& U, int B);

// q = 2 O_F solutions: lambda = 2^k u runs over the box (|k| <= k_bound,
// u in the B-box); mu = 1 - lambda is accepted whenever it is a {q}-unit,
// verified exactly (mu itself need not lie in the box). Requires 2 inert
// (certified).
std::vector<UnitEqSolution> solve_s_unit_equation(const UnitGroupDesc& U, int B,
                                                  int k_bound);

// Rewrites an S-unit solution into the shape v(lambda) >= 0, v(mu) = 0 by a
// swap or the (1/lambda, -mu/lambda) substitution; n_value is preserved.
UnitEqSolution normalize_solution(const UnitEqSolution& s);

// Descent: given a normalized solution with v(lambda) = n >= 2 and a unit
// delta with delta^2 = mu, builds the solution (lambda1^2/(4 delta),
// -lambda2^2/(4 delta)) with n' = 2n - 4, choosing the sign of delta so that
// v(1 + delta) = n - 1 and v(1 - delta) = 1.
UnitEqSolution descent_step(const UnitEqSolution& s, const FieldElement& delta);

// Box search for delta with delta^2 = mu; absence in the box proves nothing.
std::optional<FieldElement> find_square_root_unit(const UnitGroupDesc& U, int B,
                                                  const FieldElement& mu);

struct FsConditionResult {
    bool ok = false;
    bool n_at_most_4 = false;
    bool ord_product_1_mod_3 = false;
    long n_value = 0;
    long ord_product = 0;
    std::string detail;
};
// max{|v(lambda)|,|v(mu)|} <= 4 and ord(lambda mu) = 1 (mod 3).
FsConditionResult check_fs_conditions(const UnitEqSolution& s);

// Membership in {(-4,-4), (-1,-1), (1,0), (0,1), (4,0), (0,4)}. Pairs with
// min(v) < 0 and v_lambda != v_mu are inconsistent with lambda + mu = 1 and
// rejected with a domain error.
bool classify_valuation_pair(long v_lambda, long v_mu);

struct UnitCongruenceResult {
    enum class Status { Certified, Uncertified, NotTotallyRamified } status;
    bool holds = false;  // meaningful only when Certified
    Int r;
    struct Witness {
        std::string generator;
        Int residue;        // image in F_p
        Int power_residue;  // residue^r mod p
    };
    std::vector<Witness> witnesses;
};

// Verifies g^r = 1 (mod p-bar) for every supplied generator, r = gcd(2 h_F,
// p-1), through the residue map at a certified totally ramified p. The
// congruence is multiplicative, so generators suffice for the whole group.
UnitCongruenceResult unit_congruence_check(const UnitGroupDesc& U, const Int& p,
                                           const Int& h_F);

}  // namespace nfkit

#endif
