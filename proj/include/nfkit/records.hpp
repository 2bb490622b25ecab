#ifndef NFKIT_RECORDS_HPP
#define NFKIT_RECORDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nfkit/criteria.hpp"

namespace nfkit {

// Record files hold one JSON object per line, or a single JSON array of
// objects. Keys: label, min_poly (ascending integer coefficients, monic),
// class_number?, narrow_class_number?, unit_gens? (arrays of exact rational
// strings), torsion_gen?, galois?, provenance (required whenever an optional
// invariant is present). Unknown keys are rejected; rationals are parsed
// exactly. Errors carry the line / entry position.
std::vector<FieldRecord> parse_records(std::istream& in);
std::vector<FieldRecord> parse_records_file(const std::string& path);

// Canonical one-record-per-line rendering; parse(render(x)) == x.
std::string render_records(const std::vector<FieldRecord>& records);

// Real cyclotomic units xi_a = zeta^{(1-a)/2} (1 - zeta^a)/(1 - zeta),
// a = 2..(p-1)/2, expressed exactly in the power basis of
// eta = zeta + zeta^{-1}; computed in Q[y]/Phi_p and converted by an exact
// linear solve.
std::vector<std::vector<Rat>> real_cyclotomic_unit_vectors(const Int& p);

// The datasets shipped with the tool: the two bundled example fields,
// quadratic records, and cyclotomic records for p in {5, 7, 11, 13}.
struct BundledDataset {
    std::string name;  // relative file name, e.g. "example_fields.json"
    std::vector<FieldRecord> records;
};
std::vector<BundledDataset> bundled_datasets();

// Look up a bundled record by label.
FieldRecord bundled_record(const std::string& label);

}  // namespace nfkit

#endif
