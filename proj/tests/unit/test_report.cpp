#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "zexp/report.hpp"

using namespace zexp;

namespace {

std::vector<ReportRow> sample_rows() {
    ReportRow a;
    a.identity = "inverse_map";
    a.param1 = 8.0;
    a.param2 = 1e6;
    a.lhs = 0.0881004919701;
    a.rhs = 0.0898404109032;
    a.residual = a.lhs - a.rhs;
    a.tolerance = 0.5;
    a.tail = 0.0123;
    a.pass = true;
    a.wall_ms = 123.4;
    ReportRow b;
    b.identity = "quote\"and\\slash";
    b.param1 = 0.1;
    b.param2 = -0.0;
    b.lhs = 1e300;
    b.rhs = -1e-300;
    b.residual = 1e300;
    b.tolerance = 1e-9;
    b.tail = 0.0;
    b.pass = false;
    b.wall_ms = 0.0;
    return {a, b};
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("csv schema is the documented nine columns") {
    std::ostringstream out;
    emit_csv(sample_rows(), out);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "identity,param1,param2,lhs,rhs,residual,tolerance,tail_estimate,pass");
    std::string row1;
    std::getline(lines, row1);
    CHECK(row1 == "inverse_map,8,1e+06,0.0881004919701,0.0898404109032,"
                  "-0.0017399189330999931,0.5,0.0123,true");
    std::string row2;
    std::getline(lines, row2);
    // Shortest round-trip decimals, including the negative zero and the
    // extreme magnitudes; wall-clock never appears.
    CHECK(row2.find("1e+300") != std::string::npos);
    CHECK(row2.find("-0,") != std::string::npos);
    CHECK(row2.find("false") != std::string::npos);
    CHECK(out.str().find("123.4") == std::string::npos);
}

TEST_CASE("csv is byte-stable across repeated emission") {
    std::ostringstream a, b;
    emit_csv(sample_rows(), a);
    emit_csv(sample_rows(), b);
    CHECK(a.str() == b.str());
}

TEST_CASE("json emits one object per row and escapes strings") {
    std::ostringstream out;
    emit_json(sample_rows(), out);
    std::string s = out.str();
    CHECK(s.find("\"identity\": \"inverse_map\"") != std::string::npos);
    CHECK(s.find("\"identity\": \"quote\\\"and\\\\slash\"") != std::string::npos);
    CHECK(s.find("\"pass\": true") != std::string::npos);
    CHECK(s.find("\"pass\": false") != std::string::npos);
    CHECK(s.find("wall") == std::string::npos);
    // One object per line inside a top-level array.
    int objects = 0;
    std::istringstream lines(s);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find("\"identity\"") != std::string::npos) ++objects;
    }
    CHECK(objects == 2);
}

TEST_CASE("human table includes timing and pass markers") {
    std::ostringstream out;
    emit_human(sample_rows(), out);
    std::string s = out.str();
    CHECK(s.find("inverse_map") != std::string::npos);
    CHECK(s.find("123.4") != std::string::npos);
    CHECK(s.find("pass") != std::string::npos);
    CHECK(s.find("FAIL") != std::string::npos);
}

TEST_CASE("empty tables emit headers only") {
    std::ostringstream csv, json;
    emit_csv({}, csv);
    emit_json({}, json);
    CHECK(csv.str() == "identity,param1,param2,lhs,rhs,residual,tolerance,tail_estimate,pass\n");
    CHECK(json.str().find("identity") == std::string::npos);
}

}  // TEST_SUITE
