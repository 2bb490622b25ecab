#include "nfkit/records.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nfkit {

namespace {

using json = nlohmann::ordered_json;

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument(where + ": expected an integer or integer string");
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

std::vector<Rat> rat_vector_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_number_integer())
            out.emplace_back(Int(static_cast<long>(e.get<std::int64_t>())));
        else if (e.is_string())
            out.push_back(rat_from_string(e.get<std::string>()));
        else
            throw std::invalid_argument(where + ": expected rational strings");
    }
    return out;
}

json rat_vector_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& q : v) arr.push_back(rat_to_string(q));
    return arr;
}

FieldRecord record_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
    static const char* known[] = {"label",          "min_poly",     "class_number",
                                  "narrow_class_number", "unit_gens", "torsion_gen",
                                  "galois",         "provenance"};
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
    FieldRecord rec;
    if (!j.contains("label") || !j.at("label").is_string())
        throw std::invalid_argument(where + ": missing string 'label'");
    rec.label = j.at("label").get<std::string>();
    if (!j.contains("min_poly"))
        throw std::invalid_argument(where + ": missing 'min_poly'");
    std::vector<Int> coeffs;
    for (const auto& e : j.at("min_poly"))
        coeffs.push_back(int_from_json(e, where + ": min_poly"));
    rec.min_poly = Poly::from_int_coeffs(coeffs);
    if (rec.min_poly.degree() < 1)
        throw std::invalid_argument(where + ": min_poly must be nonconstant");
    if (!rec.min_poly.is_monic())
        throw std::invalid_argument(where + ": min_poly must be monic");
    bool has_invariant = false;
    if (j.contains("class_number")) {
        rec.class_number = int_from_json(j.at("class_number"), where + ": class_number");
        has_invariant = true;
    }
    if (j.contains("narrow_class_number")) {
        rec.narrow_class_number =
            int_from_json(j.at("narrow_class_number"), where + ": narrow_class_number");
        has_invariant = true;
    }
    if (j.contains("unit_gens")) {
        std::vector<std::vector<Rat>> gens;
        for (const auto& g : j.at("unit_gens"))
            gens.push_back(rat_vector_from_json(g, where + ": unit_gens"));
        rec.unit_gens = std::move(gens);
        has_invariant = true;
    }
    if (j.contains("torsion_gen")) {
        rec.torsion_gen = rat_vector_from_json(j.at("torsion_gen"), where + ": torsion_gen");
        has_invariant = true;
    }
    if (j.contains("galois")) {
        if (!j.at("galois").is_boolean())
            throw std::invalid_argument(where + ": galois must be a boolean");
        rec.galois = j.at("galois").get<bool>();
        has_invariant = true;
    }
    if (j.contains("provenance")) {
        if (!j.at("provenance").is_string())
            throw std::invalid_argument(where + ": provenance must be a string");
        rec.provenance = j.at("provenance").get<std::string>();
    }
    if (has_invariant && rec.provenance.empty())
        throw std::invalid_argument(
            where + ": records carrying invariants require a provenance string");
    return rec;
}

json record_to_json(const FieldRecord& rec) {
    json j = json::object();
    j["label"] = rec.label;
    json mp = json::array();
    for (int i = 0; i <= rec.min_poly.degree(); ++i)
        mp.push_back(int_to_json(rec.min_poly.coeff(i).get_num()));
    j["min_poly"] = mp;
    if (rec.class_number) j["class_number"] = int_to_json(*rec.class_number);
    if (rec.narrow_class_number)
        j["narrow_class_number"] = int_to_json(*rec.narrow_class_number);
    if (rec.unit_gens) {
        json gens = json::array();
        for (const auto& g : *rec.unit_gens) gens.push_back(rat_vector_to_json(g));
        j["unit_gens"] = gens;
    }
    if (rec.torsion_gen) j["torsion_gen"] = rat_vector_to_json(*rec.torsion_gen);
    if (rec.galois) j["galois"] = *rec.galois;
    if (!rec.provenance.empty()) j["provenance"] = rec.provenance;
    return j;
}

}  // namespace

std::vector<FieldRecord> parse_records(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    // whole-file JSON array form
    std::string all;
    for (const std::string& l : lines) all += l + "\n";
    std::size_t start = all.find_first_not_of(" \t\r\n");
    std::vector<FieldRecord> out;
    if (start != std::string::npos && all[start] == '[') {
        json arr = json::parse(all);
        std::size_t idx = 0;
        for (const auto& e : arr) {
            out.push_back(record_from_json(e, "entry " + std::to_string(idx)));
            ++idx;
        }
        return out;
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string trimmed = lines[i];
        std::size_t s = trimmed.find_first_not_of(" \t\r");
        if (s == std::string::npos) continue;
        std::string where = "line " + std::to_string(i + 1);
        json j;
        try {
            j = json::parse(lines[i]);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
        out.push_back(record_from_json(j, where));
    }
    return out;
}

std::vector<FieldRecord> parse_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open record file: " + path);
    return parse_records(in);
}

std::string render_records(const std::vector<FieldRecord>& records) {
    std::string out;
    for (const FieldRecord& r : records) {
        out += record_to_json(r).dump();
        out += "\n";
    }
    return out;
}

std::vector<std::vector<Rat>> real_cyclotomic_unit_vectors(const Int& p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("real_cyclotomic_unit_vectors: p must be a prime >= 5");
    FieldPtr C = NumberField::create(cyclotomic_poly(p));
    int n = C->degree();           // p - 1
    int m = n / 2;                 // (p - 1)/2
    FieldElement zeta = FieldElement::generator(C);
    FieldElement one = FieldElement::one(C);
    FieldElement eta = zeta + zeta.inverse();
    FieldElement inv_one_minus_zeta = (one - zeta).inverse();
    unsigned long pu = p.get_ui();

    // eta powers in the zeta power basis
    std::vector<FieldElement> etapow;
    FieldElement cur = one;
    for (int k = 0; k < m; ++k) {
        etapow.push_back(cur);
        cur = cur * eta;
    }

    std::vector<std::vector<Rat>> out;
    for (unsigned long a = 2; a <= static_cast<unsigned long>(m); ++a) {
        unsigned long e = ((1 + pu - (a % pu)) * ((pu + 1) / 2)) % pu;  // (1-a)/2 mod p
        FieldElement xi =
            zeta.pow(static_cast<long>(e)) * (one - zeta.pow(static_cast<long>(a))) *
            inv_one_minus_zeta;
        // solve sum_k c_k eta^k = xi exactly (n equations, m unknowns)
        std::vector<std::vector<Rat>> aug(static_cast<std::size_t>(n),
                                          std::vector<Rat>(static_cast<std::size_t>(m) + 1, Rat(0)));
        for (int row = 0; row < n; ++row) {
            for (int k = 0; k < m; ++k)
                aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] =
                    etapow[static_cast<std::size_t>(k)].coeffs()[static_cast<std::size_t>(row)];
            aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(m)] =
                xi.coeffs()[static_cast<std::size_t>(row)];
        }
        // Gaussian elimination
        int rank = 0;
        for (int col = 0; col < m; ++col) {
            int piv = -1;
            for (int row = rank; row < n; ++row)
                if (sgn(aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) != 0) {
                    piv = row;
                    break;
                }
            if (piv < 0) continue;
            std::swap(aug[static_cast<std::size_t>(piv)], aug[static_cast<std::size_t>(rank)]);
            Rat inv = Rat(1) / aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            for (int c2 = col; c2 <= m; ++c2)
                aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)] *= inv;
            for (int row = 0; row < n; ++row) {
                if (row == rank) continue;
                Rat f = aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
                if (sgn(f) == 0) continue;
                for (int c2 = col; c2 <= m; ++c2)
                    aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] -=
                        f * aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)];
            }
            ++rank;
        }
        if (rank != m)
            throw std::logic_error("eta powers do not span the real subfield");
        for (int row = rank; row < n; ++row)
            if (sgn(aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(m)]) != 0)
                throw std::logic_error("cyclotomic unit is not in the real subfield");
        std::vector<Rat> c(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k)
            c[static_cast<std::size_t>(k)] =
                aug[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

FieldRecord make_record(std::string label, Poly min_poly, std::string provenance) {
    FieldRecord r;
    r.label = std::move(label);
    r.min_poly = std::move(min_poly);
    r.provenance = std::move(provenance);
    return r;
}

std::vector<Rat> rvec(std::vector<long> v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

std::vector<BundledDataset> bundled_datasets() {
    std::vector<BundledDataset> out;

    const std::string oracle_prov =
        "h and h+ recomputed in-repo from scratch (reduced forms and continued "
        "fractions); fundamental unit from the continued-fraction expansion";
    const std::string cas_prov =
        "class numbers computed with an external computer algebra system and "
        "ingested untrusted (class-group computation for degree > 2 is out of scope)";

    {
        BundledDataset ds;
        ds.name = "example_fields.json";
        FieldRecord deg7 = make_record(
            "deg7-tr53",
            Poly::from_int_coeffs({Int(-11), Int(9), Int(129), Int(85), Int(-65), Int(-45),
                                   Int(-1), Int(1)}),
            cas_prov + "; h_F = 2");
        deg7.class_number = 2;
        FieldRecord deg5 = make_record(
            "deg5-cyclic",
            Poly::from_int_coeffs({Int(-451), Int(-990), Int(-605), Int(-110), Int(0), Int(1)}),
            cas_prov +
                "; h_F = h_F^+ = 5; unit theta+5 verified in-repo by exact norm (not a "
                "fundamental system); cyclic: certified in-repo by exact root counting");
        deg5.class_number = 5;
        deg5.narrow_class_number = 5;
        deg5.unit_gens = {rvec({5, 1, 0, 0, 0})};
        deg5.galois = true;
        ds.records = {deg7, deg5};
        out.push_back(std::move(ds));
    }

    {
        BundledDataset ds;
        ds.name = "quadratic.json";
        FieldRecord qr = make_record("q-rational", Poly::from_int_coeffs({Int(0), Int(1)}),
                                     "degree-1 sanity record; invariants are trivial");
        qr.class_number = 1;
        qr.narrow_class_number = 1;

        auto quad = [&](std::string label, std::vector<Int> poly, long h, long hplus,
                        std::vector<long> unit, bool units_known = true) {
            FieldRecord r = make_record(std::move(label), Poly::from_int_coeffs(poly),
                                        oracle_prov);
            r.class_number = h;
            r.narrow_class_number = hplus;
            if (units_known) r.unit_gens = {rvec(std::move(unit))};
            r.galois = true;
            return r;
        };
        ds.records = {
            qr,
            quad("q-sqrt2", {Int(-2), Int(0), Int(1)}, 1, 1, {1, 1}),
            quad("q-sqrt3", {Int(-3), Int(0), Int(1)}, 1, 2, {2, 1}),
            quad("q-sqrt5", {Int(-1), Int(-1), Int(1)}, 1, 1, {0, 1}),
            quad("q-sqrt7", {Int(-7), Int(0), Int(1)}, 1, 2, {8, 3}),
            quad("q-sqrt34", {Int(-34), Int(0), Int(1)}, 2, 4, {35, 6}),
        };
        out.push_back(std::move(ds));
    }

    {
        BundledDataset ds;
        ds.name = "cyclotomic.json";
        const std::string cyc_prov =
            "cyclotomic units zeta^{(1-a)/2}(1-zeta^a)/(1-zeta) expressed in the power "
            "basis of eta = zeta + zeta^{-1}, computed in-repo exactly; h+ = 1 is the "
            "classical value, so the cyclotomic units are fundamental (recorded as an "
            "assumption for p > 5)";
        FieldRecord z5 = make_record(
            "zeta5", cyclotomic_poly(Int(5)),
            "h(Q(zeta_5)) = 1 classical; torsion generator -zeta^3 of order 10 and "
            "cyclotomic unit 1 + zeta verified in-repo");
        z5.class_number = 1;
        z5.torsion_gen = rvec({0, 0, 0, -1});
        z5.unit_gens = {rvec({1, 1, 0, 0})};
        z5.galois = true;
        ds.records.push_back(z5);
        for (long p : {5L, 7L, 11L, 13L}) {
            FieldRecord r = make_record("zeta" + std::to_string(p) + "-plus",
                                        real_cyclotomic_min_poly(Int(p)), cyc_prov);
            r.class_number = 1;
            r.narrow_class_number = 1;
            std::vector<std::vector<Rat>> gens = real_cyclotomic_unit_vectors(Int(p));
            r.unit_gens = std::move(gens);
            r.galois = true;
            ds.records.push_back(std::move(r));
        }
        out.push_back(std::move(ds));
    }
    return out;
}

FieldRecord bundled_record(const std::string& label) {
    for (const BundledDataset& ds : bundled_datasets())
        for (const FieldRecord& r : ds.records)
            if (r.label == label) return r;
    throw std::invalid_argument("no bundled record with label '" + label + "'");
}

}  // namespace nfkit
