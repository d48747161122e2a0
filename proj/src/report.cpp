#include "uniw/report.hpp"

#include <sstream>

#include <json.hpp>

namespace uniw {

ReportDocument make_report(const SweepOptions& opt, const SweepResult& result) {
    ReportDocument doc;
    doc.max_n = opt.max_n;
    doc.girths = opt.girths;
    doc.strict_hypothesis = opt.strict_hypothesis;
    doc.rows = result.rows;
    return doc;
}

std::string emit_csv(const ReportDocument& doc) {
    std::ostringstream out;
    out << "# uniw report schema " << doc.schema_version << '\n';
    out << "n,g,beta,class_size,min_wiener,wiener_gstar_direct,formula_value,"
           "gstar_is_unique_min,formula_matches_direct\n";
    for (const auto& r : doc.rows) {
        out << r.n << ',' << r.g << ',' << r.beta << ',' << r.class_size << ',' << r.min_wiener
            << ',' << r.wiener_gstar_direct << ',' << r.formula_value << ','
            << (r.gstar_is_unique_min ? "true" : "false") << ','
            << (r.formula_matches_direct ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string emit_json(const ReportDocument& doc) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : doc.rows) {
        rows.push_back({{"n", r.n},
                        {"g", r.g},
                        {"beta", r.beta},
                        {"class_size", r.class_size},
                        {"min_wiener", r.min_wiener},
                        {"wiener_gstar_direct", r.wiener_gstar_direct},
                        {"formula_value", r.formula_value},
                        {"gstar_is_unique_min", r.gstar_is_unique_min},
                        {"formula_matches_direct", r.formula_matches_direct}});
    }
    nlohmann::json j{{"schema_version", doc.schema_version},
                     {"params",
                      {{"max_n", doc.max_n},
                       {"girths", doc.girths},
                       {"strict_hypothesis", doc.strict_hypothesis}}},
                     {"rows", rows}};
    return j.dump(2) + "\n";
}

} // namespace uniw
