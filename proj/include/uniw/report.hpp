#pragma once

#include <string>
#include <vector>

#include "uniw/enumeration.hpp"

namespace uniw {

inline constexpr int report_schema_version = 1;

// Serializable sweep result. Rows are sorted by (n, g, beta); the emitted
// bytes depend only on the parameters, never on the worker count.
struct ReportDocument {
    int schema_version = report_schema_version;
    int max_n = 0;
    std::vector<int> girths;
    bool strict_hypothesis = false;
    std::vector<VerificationReport> rows;
};

ReportDocument make_report(const SweepOptions& opt, const SweepResult& result);

std::string emit_csv(const ReportDocument& doc);
std::string emit_json(const ReportDocument& doc);

} // namespace uniw
