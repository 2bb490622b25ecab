#ifndef NFKIT_REPORT_HPP
#define NFKIT_REPORT_HPP

#include <string>
#include <vector>

#include "nfkit/chevalley.hpp"
#include "nfkit/criteria.hpp"

namespace nfkit {

// One `field analyze` result.
struct FieldAnalysis {
    std::string label;
    int degree = 0;
    int r1 = 0, r2 = 0;
    std::string certificate;  // "irreducible mod p" or "asserted"
    Int evertse;              // 3 * 7^{3 r1 + 4 r2}
    std::vector<SplittingReport> splittings;
    bool operator==(const FieldAnalysis& o) const;
};

// One search invocation (solutions serialized as exact rational strings).
struct SearchSolutionEntry {
    std::vector<std::string> lambda, mu;
    std::string kind;  // "unit" | "s-unit"
    long v_lambda = 0, v_mu = 0, n_value = 0;
    bool operator==(const SearchSolutionEntry& o) const {
        return lambda == o.lambda && mu == o.mu && kind == o.kind &&
               v_lambda == o.v_lambda && v_mu == o.v_mu && n_value == o.n_value;
    }
};

struct SearchReport {
    std::string record_label;
    int bound = 0;
    bool s_unit = false;
    int k_bound = 0;
    // solution-counting convention, stated next to every count
    std::string convention =
        "ordered pairs (lambda, mu), deduplicated on lambda's exact coefficient vector";
    std::vector<SearchSolutionEntry> solutions;
    bool operator==(const SearchReport& o) const;
};

SearchSolutionEntry to_entry(const UnitEqSolution& s);

// A report document is what a CLI command emits: one kind per invocation.
struct ReportDocument {
    enum class Kind { Criteria, Chevalley, Search, Analysis } kind = Kind::Criteria;
    std::vector<CriterionReport> criteria;
    std::vector<ChevalleyReport> chevalley;
    std::vector<SearchReport> searches;
    std::vector<FieldAnalysis> analyses;
    bool operator==(const ReportDocument& o) const;
};

std::string render_json(const ReportDocument& doc);
std::string render_text(const ReportDocument& doc);
// Inverse of render_json: parse_report(render_json(x)) == x.
ReportDocument parse_report(const std::string& json_text);

}  // namespace nfkit

#endif
