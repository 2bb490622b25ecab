#ifndef NFKIT_CRITERIA_HPP
#define NFKIT_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "nfkit/number_field.hpp"
#include "nfkit/unit_search.hpp"

namespace nfkit {

enum class Verdict { Conclusive, Inconclusive, Error };

std::string to_string(Verdict v);

struct Evidence {
    std::string hypothesis;
    std::string status;  // satisfied | failed | uncertified | error
    std::string witness;
    bool operator==(const Evidence& o) const {
        return hypothesis == o.hypothesis && status == o.status && witness == o.witness;
    }
};

struct CriterionReport {
    std::string criterion;
    std::string record_label;
    Verdict verdict = Verdict::Error;
    std::string statement;  // conclusion when Conclusive, reason otherwise
    std::vector<Evidence> evidence;
    std::vector<std::string> assumptions;

    bool conclusive() const { return verdict == Verdict::Conclusive; }
    bool operator==(const CriterionReport& o) const {
        return criterion == o.criterion && record_label == o.record_label &&
               verdict == o.verdict && statement == o.statement && evidence == o.evidence &&
               assumptions == o.assumptions;
    }
};

// A field record as ingested from a record file. Optional invariants are
// trusted data and must arrive with provenance.
struct FieldRecord {
    std::string label;
    Poly min_poly;
    std::optional<Int> class_number;
    std::optional<Int> narrow_class_number;
    std::optional<std::vector<std::vector<Rat>>> unit_gens;
    std::optional<std::vector<Rat>> torsion_gen;
    std::optional<bool> galois;
    std::string provenance;

    bool operator==(const FieldRecord& o) const;
};

struct CheckOptions {
    unsigned long seed = kDefaultSeed;
    long certificate_bound = 1000;
    // trial-division bound when scanning disc(min_poly) for candidate primes
    Int disc_factor_bound = Int(100000);
    // box bound of the witness search used when theorem2's condition (iv)
    // cannot be established
    int witness_search_bound = 2;
};

// Field construction shared by the checks; irreducibility is certified by a
// prime below the bound or accepted as asserted by the record (flagged).
FieldPtr field_of(const FieldRecord& rec, const CheckOptions& opt = {});

// Unit group from the record's generators (torsion_gen defaults to -1).
UnitGroupDesc unit_group_of(const FieldRecord& rec, const FieldPtr& F);

// Theorem-style checks. Every Conclusive verdict rests only on certified
// splittings and present invariants; gaps downgrade to Inconclusive/Error.
CriterionReport theorem1_check(const FieldRecord& rec, const Int& p,
                               const CheckOptions& opt = {});
CriterionReport corollary1_check(const FieldRecord& rec, const Int& p,
                                 const CheckOptions& opt = {});
CriterionReport corollary2_check(const FieldRecord& rec, const CheckOptions& opt = {});
// Implements the general even/odd-degree form; the odd-degree statement is
// the specialization with the modularity hypothesis discharged.
CriterionReport theorem2_check(const FieldRecord& rec, const CheckOptions& opt = {});
CriterionReport corollary3_check(const FieldRecord& rec, const Int& p,
                                 const CheckOptions& opt = {});
CriterionReport triantafillou_check(const FieldRecord& rec, const CheckOptions& opt = {});
CriterionReport galois_p_extension_check(const FieldRecord& rec, const Int& p,
                                         const CheckOptions& opt = {});

// Res(X^r - 1, (X-1)^r - 1) != 0 mod p for even positive r.
bool resultant_criterion(long r, const Int& p);

// Exact count of the roots of min_poly inside F itself, certified by exact
// verification of each reconstructed root (q-adic lifting at an inert
// auxiliary prime + rational reconstruction). Returns nullopt when no inert
// auxiliary prime exists below the certificate bound.
std::optional<int> count_roots_in_field(const NumberField& F, const CheckOptions& opt = {});

}  // namespace nfkit

#endif
