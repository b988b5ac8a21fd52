#include "zexp/report.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>

#include "zexp/numeric.hpp"

namespace zexp {

namespace {
// JSON string escaper for the identity field; identities are short ASCII
// labels but control characters must still round-trip.
std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}
}  // namespace

void emit_human(const std::vector<ReportRow>& rows, std::ostream& out) {
    out << std::left << std::setw(22) << "identity" << std::right
        << std::setw(12) << "param1" << std::setw(12) << "param2"
        << std::setw(20) << "lhs" << std::setw(20) << "rhs"
        << std::setw(14) << "residual" << std::setw(12) << "tol"
        << std::setw(12) << "tail" << std::setw(7) << "pass"
        << std::setw(10) << "ms" << '\n';
    std::ostream::fmtflags flags = out.flags();
    for (const ReportRow& r : rows) {
        out << std::left << std::setw(22) << r.identity << std::right
            << std::setw(12) << std::setprecision(6) << std::defaultfloat << r.param1
            << std::setw(12) << r.param2
            << std::setw(20) << std::setprecision(12) << r.lhs
            << std::setw(20) << r.rhs
            << std::setw(14) << std::setprecision(4) << std::scientific << r.residual
            << std::setw(12) << r.tolerance << std::setw(12) << r.tail
            << std::setw(7) << (r.pass ? "pass" : "FAIL")
            << std::setw(10) << std::setprecision(1) << std::fixed << r.wall_ms
            << '\n';
        out.flags(flags);
    }
}

void emit_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
    out << "identity,param1,param2,lhs,rhs,residual,tolerance,tail_estimate,pass\n";
    for (const ReportRow& r : rows) {
        out << r.identity << ',' << repr_double(r.param1) << ','
            << repr_double(r.param2) << ',' << repr_double(r.lhs) << ','
            << repr_double(r.rhs) << ',' << repr_double(r.residual) << ','
            << repr_double(r.tolerance) << ',' << repr_double(r.tail) << ','
            << (r.pass ? "true" : "false") << '\n';
    }
}

void emit_json(const std::vector<ReportRow>& rows, std::ostream& out) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& r = rows[i];
        out << "  {\"identity\": \"" << json_escape(r.identity)
            << "\", \"param1\": " << repr_double(r.param1)
            << ", \"param2\": " << repr_double(r.param2)
            << ", \"lhs\": " << repr_double(r.lhs)
            << ", \"rhs\": " << repr_double(r.rhs)
            << ", \"residual\": " << repr_double(r.residual)
            << ", \"tolerance\": " << repr_double(r.tolerance)
            << ", \"tail_estimate\": " << repr_double(r.tail)
            << ", \"pass\": " << (r.pass ? "true" : "false") << '}'
            << (i + 1 < rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
}

}  // namespace zexp
