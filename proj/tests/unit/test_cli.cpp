#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using std::string;

namespace {

const string kCli = ZEXP_CLI_PATH;
const string kData = ZEXP_DATA_DIR;
const string kGolden = ZEXP_GOLDEN_DIR;

struct RunResult {
    int exit_code = -1;
    string output;  // stdout and stderr combined
};

RunResult run_cli(const string& args) {
    string tmp = "cli_capture.tmp";
    string cmd = kCli + " " + args + " > " + tmp + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (rc == -1) ? -1 : WEXITSTATUS(rc);
    std::ifstream in(tmp);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    std::remove(tmp.c_str());
    return r;
}

string slurp(const string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), ("cannot open " + path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits zero and names the subcommands") {
    RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("sieve") != string::npos);
    CHECK(r.output.find("verify") != string::npos);
    CHECK(r.output.find("emit") != string::npos);
}

TEST_CASE("identity suite output is byte-identical to the golden csv") {
    RunResult r = run_cli("verify --suite identities --emit csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(kGolden + "/identities.csv"));
}

TEST_CASE("identity suite output is byte-identical to the golden json") {
    RunResult r = run_cli("verify --suite identities --emit json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(kGolden + "/identities.json"));
}

TEST_CASE("argument-function series matches the golden csv") {
    RunResult r = run_cli("emit --series S --zeros " + kData +
                          "/zeros_first100.txt --range 15:40:0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(kGolden + "/series_S.csv"));
}

TEST_CASE("area-remainder series matches the golden csv") {
    RunResult r = run_cli("emit --series delta-tilde --n-max 1000 --range 2:50:0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(kGolden + "/delta_tilde.csv"));
}

TEST_CASE("sieve reports psi and writes a loadable cache") {
    string cache = "cli_test_table.zexp";
    RunResult r = run_cli("sieve --n-max 1000 --cache-out " + cache);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("psi(1000) = 996.6809122471752") != string::npos);
    CHECK(r.output.find("cache written to " + cache) != string::npos);
    // The cache round-trips through a verify run.
    RunResult v = run_cli("verify --suite identities --table " + cache + " --emit csv");
    CHECK(v.exit_code == 0);
    std::remove(cache.c_str());
}

TEST_CASE("usage errors exit 2 with an error line") {
    RunResult bad_suite = run_cli("verify --suite no_such_suite");
    CHECK(bad_suite.exit_code == 2);
    RunResult bad_flag = run_cli("verify --frequency 3");
    CHECK(bad_flag.exit_code == 2);
    RunResult bad_range = run_cli("emit --series delta --n-max 100 --range 5:4:1");
    CHECK(bad_range.exit_code == 2);
    CHECK(bad_range.output.find("error:") != string::npos);
}

TEST_CASE("suites that need a catalog say exactly what is missing") {
    RunResult r = run_cli("verify --suite delta-tilde --n-max 10000");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("needs a zero catalog; pass --zeros <file>") != string::npos);
    RunResult t = run_cli("verify --suite guinand --zeros " + kData + "/zeros_first100.txt");
    CHECK(t.exit_code == 2);
    CHECK(t.output.find("no prime table available: pass --table <cache> or --n-max <N>") !=
          string::npos);
}

TEST_CASE("a failing comparison row exits 1") {
    // The transform suite compares rows against the user tolerance; an
    // impossibly tight one turns true residuals into reported failures, and
    // the process must signal that distinctly from usage errors.
    RunResult r = run_cli("verify --suite transform --n-max 10000 --tol 1e-30 --emit csv");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("false") != string::npos);
}

}  // TEST_SUITE
