#include "nfkit/report.hpp"

#include <sstream>

#include "json.hpp"

namespace nfkit {

namespace {
using json = nlohmann::ordered_json;
}

bool FieldAnalysis::operator==(const FieldAnalysis& o) const {
    if (!(label == o.label && degree == o.degree && r1 == o.r1 && r2 == o.r2 &&
          certificate == o.certificate && evertse == o.evertse &&
          splittings.size() == o.splittings.size()))
        return false;
    for (std::size_t i = 0; i < splittings.size(); ++i) {
        if (splittings[i].prime != o.splittings[i].prime ||
            splittings[i].certified != o.splittings[i].certified ||
            splittings[i].pattern != o.splittings[i].pattern)
            return false;
    }
    return true;
}

bool SearchReport::operator==(const SearchReport& o) const {
    return record_label == o.record_label && bound == o.bound && s_unit == o.s_unit &&
           k_bound == o.k_bound && convention == o.convention && solutions == o.solutions;
}

bool ReportDocument::operator==(const ReportDocument& o) const {
    return kind == o.kind && criteria == o.criteria && chevalley == o.chevalley &&
           searches == o.searches && analyses == o.analyses;
}

SearchSolutionEntry to_entry(const UnitEqSolution& s) {
    SearchSolutionEntry e;
    for (const Rat& q : s.lambda.coeffs()) e.lambda.push_back(rat_to_string(q));
    for (const Rat& q : s.mu.coeffs()) e.mu.push_back(rat_to_string(q));
    e.kind = s.kind == UnitEqSolution::Kind::Unit ? "unit" : "s-unit";
    e.v_lambda = s.v_lambda;
    e.v_mu = s.v_mu;
    e.n_value = s.n_value;
    return e;
}

namespace {

json evidence_to_json(const Evidence& e) {
    return json{{"hypothesis", e.hypothesis}, {"status", e.status}, {"witness", e.witness}};
}

Evidence evidence_from_json(const json& j) {
    return {j.at("hypothesis").get<std::string>(), j.at("status").get<std::string>(),
            j.at("witness").get<std::string>()};
}

json criterion_to_json(const CriterionReport& r) {
    json ev = json::array();
    for (const Evidence& e : r.evidence) ev.push_back(evidence_to_json(e));
    return json{{"criterion", r.criterion}, {"record", r.record_label},
                {"verdict", to_string(r.verdict)}, {"statement", r.statement},
                {"evidence", ev},           {"assumptions", r.assumptions}};
}

CriterionReport criterion_from_json(const json& j) {
    CriterionReport r;
    r.criterion = j.at("criterion").get<std::string>();
    r.record_label = j.at("record").get<std::string>();
    std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "Conclusive" ? Verdict::Conclusive
                                  : (v == "Inconclusive" ? Verdict::Inconclusive : Verdict::Error);
    r.statement = j.at("statement").get<std::string>();
    for (const auto& e : j.at("evidence")) r.evidence.push_back(evidence_from_json(e));
    for (const auto& a : j.at("assumptions")) r.assumptions.push_back(a.get<std::string>());
    return r;
}

json chevalley_to_json(const ChevalleyReport& r) {
    json primes = json::array();
    for (const Int& p : r.ramified_primes) primes.push_back(p.get_str());
    return json{{"d", r.d.get_str()},
                {"disc", r.disc.get_str()},
                {"lhs", r.lhs.get_str()},
                {"rhs", r.rhs.get_str()},
                {"e_product", r.e_product.get_str()},
                {"norm_index", r.norm_index},
                {"ramified_primes", primes},
                {"infinite_ramified", r.infinite_ramified}};
}

ChevalleyReport chevalley_from_json(const json& j) {
    ChevalleyReport r;
    r.d = Int(j.at("d").get<std::string>());
    r.disc = Int(j.at("disc").get<std::string>());
    r.lhs = Int(j.at("lhs").get<std::string>());
    r.rhs = Int(j.at("rhs").get<std::string>());
    r.e_product = Int(j.at("e_product").get<std::string>());
    r.norm_index = j.at("norm_index").get<int>();
    for (const auto& p : j.at("ramified_primes"))
        r.ramified_primes.emplace_back(p.get<std::string>());
    r.infinite_ramified = j.at("infinite_ramified").get<bool>();
    return r;
}

json search_to_json(const SearchReport& r) {
    json sols = json::array();
    for (const SearchSolutionEntry& s : r.solutions) {
        sols.push_back(json{{"lambda", s.lambda},
                            {"mu", s.mu},
                            {"kind", s.kind},
                            {"v_lambda", s.v_lambda},
                            {"v_mu", s.v_mu},
                            {"n", s.n_value}});
    }
    return json{{"record", r.record_label}, {"bound", r.bound},   {"s_unit", r.s_unit},
                {"k_bound", r.k_bound},     {"convention", r.convention},
                {"count", r.solutions.size()}, {"solutions", sols}};
}

SearchReport search_from_json(const json& j) {
    SearchReport r;
    r.record_label = j.at("record").get<std::string>();
    r.bound = j.at("bound").get<int>();
    r.s_unit = j.at("s_unit").get<bool>();
    r.k_bound = j.at("k_bound").get<int>();
    r.convention = j.at("convention").get<std::string>();
    for (const auto& s : j.at("solutions")) {
        SearchSolutionEntry e;
        for (const auto& c : s.at("lambda")) e.lambda.push_back(c.get<std::string>());
        for (const auto& c : s.at("mu")) e.mu.push_back(c.get<std::string>());
        e.kind = s.at("kind").get<std::string>();
        e.v_lambda = s.at("v_lambda").get<long>();
        e.v_mu = s.at("v_mu").get<long>();
        e.n_value = s.at("n").get<long>();
        r.solutions.push_back(std::move(e));
    }
    return r;
}

json analysis_to_json(const FieldAnalysis& a) {
    json sp = json::array();
    for (const SplittingReport& s : a.splittings) {
        json pat = json::array();
        for (auto [e, f] : s.pattern) pat.push_back(json{{"e", e}, {"f", f}});
        sp.push_back(json{{"prime", s.prime.get_str()}, {"certified", s.certified},
                          {"pattern", pat}});
    }
    return json{{"label", a.label},   {"degree", a.degree},
                {"r1", a.r1},         {"r2", a.r2},
                {"certificate", a.certificate}, {"evertse_bound", a.evertse.get_str()},
                {"splittings", sp}};
}

FieldAnalysis analysis_from_json(const json& j) {
    FieldAnalysis a;
    a.label = j.at("label").get<std::string>();
    a.degree = j.at("degree").get<int>();
    a.r1 = j.at("r1").get<int>();
    a.r2 = j.at("r2").get<int>();
    a.certificate = j.at("certificate").get<std::string>();
    a.evertse = Int(j.at("evertse_bound").get<std::string>());
    for (const auto& s : j.at("splittings")) {
        SplittingReport rep;
        rep.prime = Int(s.at("prime").get<std::string>());
        rep.certified = s.at("certified").get<bool>();
        for (const auto& p : s.at("pattern"))
            rep.pattern.emplace_back(p.at("e").get<int>(), p.at("f").get<int>());
        a.splittings.push_back(std::move(rep));
    }
    return a;
}

const char* kind_name(ReportDocument::Kind k) {
    switch (k) {
        case ReportDocument::Kind::Criteria: return "criteria";
        case ReportDocument::Kind::Chevalley: return "chevalley";
        case ReportDocument::Kind::Search: return "search";
        case ReportDocument::Kind::Analysis: return "analysis";
    }
    return "?";
}

}  // namespace

std::string render_json(const ReportDocument& doc) {
    json j = json::object();
    j["kind"] = kind_name(doc.kind);
    json entries = json::array();
    switch (doc.kind) {
        case ReportDocument::Kind::Criteria:
            for (const auto& r : doc.criteria) entries.push_back(criterion_to_json(r));
            break;
        case ReportDocument::Kind::Chevalley:
            for (const auto& r : doc.chevalley) entries.push_back(chevalley_to_json(r));
            break;
        case ReportDocument::Kind::Search:
            for (const auto& r : doc.searches) entries.push_back(search_to_json(r));
            break;
        case ReportDocument::Kind::Analysis:
            for (const auto& r : doc.analyses) entries.push_back(analysis_to_json(r));
            break;
    }
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& json_text) {
    json j = json::parse(json_text);
    ReportDocument doc;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "criteria") {
        doc.kind = ReportDocument::Kind::Criteria;
        for (const auto& e : j.at("entries")) doc.criteria.push_back(criterion_from_json(e));
    } else if (kind == "chevalley") {
        doc.kind = ReportDocument::Kind::Chevalley;
        for (const auto& e : j.at("entries")) doc.chevalley.push_back(chevalley_from_json(e));
    } else if (kind == "search") {
        doc.kind = ReportDocument::Kind::Search;
        for (const auto& e : j.at("entries")) doc.searches.push_back(search_from_json(e));
    } else if (kind == "analysis") {
        doc.kind = ReportDocument::Kind::Analysis;
        for (const auto& e : j.at("entries")) doc.analyses.push_back(analysis_from_json(e));
    } else {
        throw std::invalid_argument("unknown report kind: " + kind);
    }
    return doc;
}

std::string render_text(const ReportDocument& doc) {
    std::ostringstream os;
    switch (doc.kind) {
        case ReportDocument::Kind::Criteria:
            for (const CriterionReport& r : doc.criteria) {
                os << "[" << to_string(r.verdict) << "] " << r.record_label << " / "
                   << r.criterion << ": " << r.statement << "\n";
                for (const Evidence& e : r.evidence) {
                    os << "    - " << e.hypothesis << ": " << e.status;
                    if (!e.witness.empty()) os << " (" << e.witness << ")";
                    os << "\n";
                }
                for (const std::string& a : r.assumptions)
                    os << "    * assumption: " << a << "\n";
            }
            break;
        case ReportDocument::Kind::Chevalley:
            for (const ChevalleyReport& r : doc.chevalley) {
                os << "d = " << r.d.get_str() << ": fixed classes " << r.lhs.get_str()
                   << ", formula " << r.rhs.get_str() << " (e = " << r.e_product.get_str()
                   << ", norm index " << r.norm_index << ", ramified";
                for (const Int& p : r.ramified_primes) os << " " << p.get_str();
                if (r.infinite_ramified) os << " oo";
                os << ") " << (r.match() ? "ok" : "MISMATCH") << "\n";
            }
            break;
        case ReportDocument::Kind::Search:
            for (const SearchReport& r : doc.searches) {
                os << r.record_label << ": " << r.solutions.size() << " solution(s) at bound "
                   << r.bound;
                if (r.s_unit) os << ", k-bound " << r.k_bound;
                os << "\n    convention: " << r.convention << "\n";
                for (const SearchSolutionEntry& s : r.solutions) {
                    os << "    lambda = [";
                    for (std::size_t i = 0; i < s.lambda.size(); ++i)
                        os << (i ? ", " : "") << s.lambda[i];
                    os << "], mu = [";
                    for (std::size_t i = 0; i < s.mu.size(); ++i)
                        os << (i ? ", " : "") << s.mu[i];
                    os << "] (" << s.kind;
                    if (s.kind == "s-unit")
                        os << ", v = (" << s.v_lambda << ", " << s.v_mu << "), n = " << s.n_value;
                    os << ")\n";
                }
            }
            break;
        case ReportDocument::Kind::Analysis:
            for (const FieldAnalysis& a : doc.analyses) {
                os << a.label << ": degree " << a.degree << ", signature (" << a.r1 << ", "
                   << a.r2 << "), " << a.certificate << ", unit-equation solution bound "
                   << a.evertse.get_str() << "\n";
                for (const SplittingReport& s : a.splittings) {
                    os << "    p = " << s.prime.get_str() << ": ";
                    for (std::size_t i = 0; i < s.pattern.size(); ++i)
                        os << (i ? " " : "") << "(e=" << s.pattern[i].first
                           << ",f=" << s.pattern[i].second << ")";
                    os << (s.certified ? " [certified]" : " [NOT certified: advisory only]")
                       << "\n";
                }
            }
            break;
    }
    return os.str();
}

}  // namespace nfkit
