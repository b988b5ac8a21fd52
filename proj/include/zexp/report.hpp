#pragma once
// Tabular result reporting: one fixed row schema with human, CSV and JSON
// emitters. CSV and JSON output is byte-stable across platforms and thread
// counts, so wall-clock timing appears only in the human form.

#include <iosfwd>
#include <string>
#include <vector>

namespace zexp {

struct ReportRow {
    std::string identity;     // which comparison the row records
    double param1 = 0.0;
    double param2 = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    double tail = 0.0;        // computable truncation estimate, 0 if none
    bool pass = false;
    double wall_ms = 0.0;     // human emitter only
};

void emit_human(const std::vector<ReportRow>& rows, std::ostream& out);
void emit_csv(const std::vector<ReportRow>& rows, std::ostream& out);
void emit_json(const std::vector<ReportRow>& rows, std::ostream& out);

}  // namespace zexp
