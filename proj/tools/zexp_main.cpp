// Command line front end: builds cached prime tables, runs identity suites
// with pass/fail reporting, and emits sampled series as CSV.

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zexp/density.hpp"
#include "zexp/errors.hpp"
#include "zexp/explicit.hpp"
#include "zexp/mangoldt.hpp"
#include "zexp/numeric.hpp"
#include "zexp/parallel.hpp"
#include "zexp/report.hpp"
#include "zexp/segments.hpp"
#include "zexp/system.hpp"
#include "zexp/zero_catalog.hpp"
#include "zexp/zeta.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kC0 = 1.9850537244054112;

struct Options {
    std::string table_path;
    std::string zeros_path;
    std::uint64_t n_max = 0;
    double T = 5.0;
    double X = 1e4;
    double eps = 0.8;
    double a = 1.5;
    double t_max = 100.0;
    double tol = 1e-3;
    int threads = 0;
    double memory_budget_gb = 4.0;
    std::string emit_fmt = "human";
    std::string out_path;
    std::string range;
};

std::string resolve_cached(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    const char* dir = std::getenv("ZEXP_CACHE_DIR");
    if (dir != nullptr && fs::path(path).is_relative()) {
        fs::path alt = fs::path(dir) / path;
        if (fs::exists(alt)) return alt.string();
    }
    return path;
}

zexp::MangoldtTable acquire_table(const Options& o) {
    if (!o.table_path.empty())
        return zexp::load_cache(resolve_cached(o.table_path));
    if (o.n_max >= 2) {
        auto budget = static_cast<std::uint64_t>(o.memory_budget_gb * (1ull << 30));
        return zexp::build_table(o.n_max, budget, o.threads);
    }
    throw zexp::domain_error(
        "no prime table available: pass --table <cache> or --n-max <N>");
}

zexp::ZeroCatalog acquire_zeros(const Options& o, const std::string& who) {
    if (o.zeros_path.empty())
        throw zexp::domain_error("'" + who +
                                 "' needs a zero catalog; pass --zeros <file>");
    return zexp::load_zero_file(o.zeros_path);
}

struct RangeSpec {
    double lo = 0.0, hi = 0.0, step = 0.0;
};

RangeSpec parse_range(const std::string& text, const RangeSpec& fallback) {
    if (text.empty()) return fallback;
    RangeSpec r;
    std::size_t c1 = text.find(':');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                             : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw zexp::parse_error("range must be <lo>:<hi>:<step>, got '" + text +
                                "'");
    try {
        r.lo = std::stod(text.substr(0, c1));
        r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        r.step = std::stod(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw zexp::parse_error("range must be numeric <lo>:<hi>:<step>, got '" +
                                text + "'");
    }
    if (!(r.step > 0.0) || !(r.hi >= r.lo))
        throw zexp::parse_error("range needs hi >= lo and step > 0");
    return r;
}

std::vector<double> range_values(const RangeSpec& r) {
    std::vector<double> out;
    // Index-based stepping avoids accumulating rounding drift in the grid.
    std::int64_t n = static_cast<std::int64_t>((r.hi - r.lo) / r.step + 1e-9);
    for (std::int64_t k = 0; k <= n; ++k) out.push_back(r.lo + r.step * k);
    return out;
}

zexp::ReportRow make_row(const std::string& identity, double p1, double p2,
                         double lhs, double rhs, double tol, double tail) {
    zexp::ReportRow row;
    row.identity = identity;
    row.param1 = p1;
    row.param2 = p2;
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = lhs - rhs;
    row.tolerance = tol;
    row.tail = tail;
    row.pass = std::abs(row.residual) <= tol;
    return row;
}

// ---- verify suites ------------------------------------------------------

std::vector<zexp::ReportRow> suite_identities(const Options&) {
    std::vector<zexp::ReportRow> rows;
    for (double T : {1.0, 5.0, 10.0, 25.0, 40.0})
        rows.push_back(make_row("gamma_identity_d", T, 0.0,
                                zexp::d_identity(T), 0.0, 1e-9, 0.0));
    for (auto z : {std::complex<double>(0.3, 0.4), {-1.5, 2.25}, {3.6, -0.7}})
        rows.push_back(make_row("gamma_identity_f", z.real(), z.imag(),
                                std::abs(zexp::f_identity(z)), 1.0, 1e-9, 0.0));
    for (auto [T, X] : {std::pair{1.0, 10.0}, {5.0, 100.0}, {10.0, 1000.0}}) {
        zexp::ArctanRelation rel = zexp::arctan_relation(T, X);
        rows.push_back(make_row("arctan_relation", T, X, rel.f1,
                                rel.f2 + std::atan(2.0 * T), 1e-6, 0.0));
    }
    return rows;
}

std::vector<zexp::ReportRow> suite_lemma(const Options& o) {
    zexp::MangoldtTable table = acquire_table(o);
    zexp::ZeroCatalog catalog = acquire_zeros(o, "suite lemma");
    zexp::TruncationPolicy policy;
    policy.X = std::min(o.X, static_cast<double>(table.n_max));
    policy.T_max = std::min(o.t_max, catalog.t_max);
    std::vector<zexp::ReportRow> rows;
    for (auto s : {std::complex<double>(2.0, 0.0), {3.0, 0.0}, {2.5, 4.0}}) {
        zexp::LemmaValue lemma =
            zexp::lemma_rhs(s, policy, table, catalog, o.threads);
        zexp::DirichletValue dir =
            zexp::zeta_logderiv_dirichlet(s, table.n_max, table, o.threads);
        zexp::ReportRow row = make_row(
            "logderiv_lemma", s.real(), s.imag(), lemma.value.real(),
            dir.value.real(), lemma.tail_sum() + dir.tail_bound,
            lemma.tail_sum());
        row.residual = std::abs(lemma.value - dir.value);
        row.pass = row.residual <= row.tolerance;
        rows.push_back(row);
    }
    return rows;
}

std::vector<zexp::ReportRow> suite_guinand(const Options& o) {
    zexp::MangoldtTable table = acquire_table(o);
    zexp::ZeroCatalog catalog = acquire_zeros(o, "suite guinand");
    double X = std::min(o.X, static_cast<double>(table.n_max));
    std::vector<zexp::ReportRow> rows;
    for (double T : {8.0, 10.0, 17.0, 23.0}) {
        if (T >= catalog.t_max) continue;
        double value = zexp::guinand_truncated(
            T, X, zexp::GuinandVariant::with_log, table, {}, o.threads);
        double target = kPi * catalog.S_of_T(T);
        rows.push_back(make_row("guinand_with_log", T, X, value, target, 0.2,
                                0.0));
    }
    return rows;
}

std::vector<zexp::ReportRow> suite_delta_tilde(const Options& o) {
    zexp::MangoldtTable table = acquire_table(o);
    zexp::ZeroCatalog catalog = acquire_zeros(o, "suite delta-tilde");
    double hi = std::min(200.0, static_cast<double>(table.n_max) / 2.0);
    std::vector<double> xs = zexp::linspace(5.0, hi, 24);
    zexp::OffsetFit fit = zexp::offset_fit(xs, catalog.t_max, table, catalog);
    std::vector<zexp::ReportRow> rows;
    zexp::ReportRow head = make_row("delta_tilde_offset", xs.front(), xs.back(),
                                    fit.c, kC0, 0.1, fit.spread);
    rows.push_back(head);
    for (double x : {5.0, 10.0, 20.0, 50.0, 100.0, 200.0}) {
        if (x > hi) continue;
        zexp::ZeroSumValue zs =
            zexp::delta_tilde_from_zeros(x, catalog.t_max, catalog);
        double arith = table.sample(x).delta_tilde;
        double tol = std::max(0.05 * x * std::sqrt(x), 0.5);
        rows.push_back(make_row("delta_tilde_zero_expansion", x, catalog.t_max,
                                arith - zs.value, fit.c, tol, zs.zero_tail));
    }
    return rows;
}

std::vector<zexp::ReportRow> suite_system(const Options& o) {
    zexp::MangoldtTable table = acquire_table(o);
    zexp::ZeroCatalog catalog = acquire_zeros(o, "suite system");
    zexp::QuadratureSpec spec;
    spec.abs_tol = 1e-4;
    double y_max = std::min(1e6, static_cast<double>(table.n_max));
    std::vector<double> t_grid;
    for (double t : {8.0, 10.0, 17.0})
        if (t < catalog.t_max) t_grid.push_back(t);
    std::vector<double> x_grid{10.0, 50.0};
    return zexp::residual_system(t_grid, x_grid, o.a, y_max, table, catalog,
                                 spec, o.threads);
}

std::vector<zexp::ReportRow> suite_kx(const Options& o) {
    zexp::MangoldtTable table = acquire_table(o);
    zexp::ZeroCatalog catalog = acquire_zeros(o, "suite kx");
    std::vector<zexp::ReportRow> rows;
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (double X : {1e2, 1e3, 1e4}) {
        if (X > static_cast<double>(table.n_max)) continue;
        double r = zexp::kx_residual(o.T, X, catalog, table, o.threads);
        if (first || r < lo) lo = r;
        if (first || r > hi) hi = r;
        first = false;
        rows.push_back(make_row("kx_residual", o.T, X, r, 0.0, 5.0, 0.0));
    }
    if (!first)
        rows.push_back(make_row("kx_residual_spread", o.T, 0.0, hi - lo, 0.0,
                                3.0, 0.0));
    return rows;
}

std::vector<zexp::ReportRow> suite_transform(const Options& o) {
    zexp::MangoldtTable table = acquire_table(o);
    std::vector<zexp::ReportRow> rows;
    for (double k : {0.0, 2.0, 5.0}) {
        zexp::SmoothedTransformJ J =
            zexp::smoothed_transform_J(k, o.eps, table, o.threads);
        rows.push_back(make_row("smoothed_transform", k, o.eps, J.lhs, J.rhs,
                                o.tol, std::abs(J.rhs_printed - J.lhs)));
    }
    return rows;
}

std::vector<zexp::ReportRow> suite_density(const Options& o) {
    zexp::MangoldtTable table = acquire_table(o);
    zexp::ZeroCatalog catalog = acquire_zeros(o, "suite density");
    std::vector<zexp::ReportRow> rows;
    std::size_t n_res = std::min<std::size_t>(3, catalog.ordinates.size());
    for (std::size_t i = 0; i < n_res; ++i) {
        zexp::ResonanceParams p = zexp::resonance_params(catalog.ordinates[i]);
        zexp::ResonanceFit fit = zexp::resonance_slope(p, table);
        zexp::ReportRow row = make_row("resonance_slope", p.t_rho, 0.0,
                                       fit.slope, fit.predicted, 0.25, fit.c0);
        row.residual = fit.ratio - 1.0;
        row.pass = std::abs(row.residual) <= row.tolerance;
        rows.push_back(row);
    }
    if (n_res > 0) {
        zexp::ResonanceParams p0 = zexp::resonance_params(catalog.ordinates[0]);
        for (double frac : {0.2, 0.5, 0.8}) {
            zexp::MeasureEstimate est = zexp::measure_bound_check(
                frac * p0.amplitude, 12.0, p0.t_rho, table);
            zexp::ReportRow row =
                make_row("measure_bound", est.x_threshold, est.horizon,
                         est.measure, est.bound_rhs, 0.0, est.c0);
            row.pass = est.holds;
            rows.push_back(row);
        }
    }
    return rows;
}

// ---- emit series --------------------------------------------------------

void emit_series(const Options& o, const std::string& series,
                 std::ostream& out) {
    auto values = [&](const RangeSpec& fb) { return range_values(parse_range(o.range, fb)); };
    if (series == "N" || series == "S" || series == "S1") {
        zexp::ZeroCatalog catalog = acquire_zeros(o, "series " + series);
        out << "T," << series << '\n';
        for (double T : values({0.0, std::min(50.0, catalog.t_max), 0.25})) {
            double v = 0.0;
            if (series == "N")
                v = static_cast<double>(catalog.count_N(T));
            else if (series == "S")
                // Right-continuous evaluation stays defined on ordinates.
                v = static_cast<double>(catalog.count_N(T)) -
                    zexp::smooth_count_g(T);
            else
                v = catalog.S1_of_T(T);
            out << zexp::repr_double(T) << ',' << zexp::repr_double(v) << '\n';
        }
        return;
    }
    if (series == "delta" || series == "delta-tilde") {
        zexp::MangoldtTable table = acquire_table(o);
        out << "x," << (series == "delta" ? "delta" : "delta_tilde") << '\n';
        double hi = std::min(100.0, static_cast<double>(table.n_max));
        for (double x : values({2.0, hi, 0.5})) {
            zexp::ChebyshevSample s = table.sample(x);
            out << zexp::repr_double(x) << ','
                << zexp::repr_double(series == "delta" ? s.delta : s.delta_tilde)
                << '\n';
        }
        return;
    }
    if (series == "g-trace") {
        zexp::MangoldtTable table = acquire_table(o);
        out << "u,g\n";
        double hi = std::log(static_cast<double>(table.n_max));
        for (double u : values({0.0, std::min(12.0, hi), 0.01}))
            out << zexp::repr_double(u) << ','
                << zexp::repr_double(zexp::g_of_u(u, table)) << '\n';
        return;
    }
    if (series == "guinand-sweep") {
        zexp::MangoldtTable table = acquire_table(o);
        zexp::ZeroCatalog catalog = acquire_zeros(o, "series guinand-sweep");
        double X = std::min(o.X, static_cast<double>(table.n_max));
        out << "T,with_log,without_log,pi_S\n";
        for (double T : values({1.0, std::min(25.0, catalog.t_max - 1.0), 1.0})) {
            double wl = zexp::guinand_truncated(
                T, X, zexp::GuinandVariant::with_log, table, {}, o.threads);
            double wo = zexp::guinand_truncated(
                T, X, zexp::GuinandVariant::without_log, table, {}, o.threads);
            double target = kPi * (static_cast<double>(catalog.count_N(T)) -
                                   zexp::smooth_count_g(T));
            out << zexp::repr_double(T) << ',' << zexp::repr_double(wl) << ','
                << zexp::repr_double(wo) << ',' << zexp::repr_double(target)
                << '\n';
        }
        return;
    }
    if (series == "residuals") {
        Options local = o;
        std::vector<zexp::ReportRow> rows = suite_system(local);
        zexp::emit_csv(rows, out);
        return;
    }
    throw zexp::parse_error("unknown series '" + series + "'");
}

int emit_rows(const Options& o, const std::vector<zexp::ReportRow>& rows) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) throw zexp::resource_error("cannot open " + o.out_path);
        out = &file;
    }
    if (o.emit_fmt == "csv")
        zexp::emit_csv(rows, *out);
    else if (o.emit_fmt == "json")
        zexp::emit_json(rows, *out);
    else
        zexp::emit_human(rows, *out);
    for (const zexp::ReportRow& r : rows)
        if (!r.pass) return 1;
    return 0;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--table", o.table_path, "path to a cached prime table");
    cmd->add_option("--zeros", o.zeros_path, "path to a zero-ordinate file");
    cmd->add_option("--n-max", o.n_max, "build a fresh table up to this n");
    cmd->add_option("--T", o.T, "frequency parameter");
    cmd->add_option("--X", o.X, "prime-sum truncation height");
    cmd->add_option("--eps", o.eps, "real shift of the smoothed transform");
    cmd->add_option("--a", o.a, "left truncation point in (1, 2)");
    cmd->add_option("--t-max", o.t_max, "zero-sum truncation ordinate");
    cmd->add_option("--tol", o.tol, "comparison tolerance");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    cmd->add_option("--emit", o.emit_fmt, "output format")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    cmd->add_option("--out", o.out_path, "write output to this file");
    cmd->add_option("--memory-budget-gb", o.memory_budget_gb,
                    "sieve memory budget in GiB");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit-formula verification toolkit"};
    app.set_config("--config", "", "key=value config file, '#' comments");
    app.require_subcommand(1);

    Options opt;

    CLI::App* sieve = app.add_subcommand(
        "sieve", "build a von Mangoldt prefix table and cache it");
    add_common(sieve, opt);
    std::string cache_out;
    sieve->add_option("--cache-out", cache_out,
                      "cache file path (default under ZEXP_CACHE_DIR)");

    CLI::App* verify = app.add_subcommand(
        "verify", "run an identity suite and report pass/fail rows");
    add_common(verify, opt);
    std::string suite = "identities";
    verify->add_option("--suite", suite, "which suite to run")
        ->check(CLI::IsMember({"identities", "lemma", "guinand", "delta-tilde",
                               "system", "kx", "transform", "density", "all"}));

    CLI::App* emit = app.add_subcommand("emit", "sample a series as CSV");
    add_common(emit, opt);
    std::string series;
    emit->add_option("--series", series, "which series to sample")
        ->required()
        ->check(CLI::IsMember({"N", "S", "S1", "delta", "delta-tilde",
                               "g-trace", "guinand-sweep", "residuals"}));
    emit->add_option("--range", opt.range, "sample grid as <lo>:<hi>:<step>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Normalize usage errors to exit 2; --help stays a success exit.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (opt.threads > 0) zexp::set_default_threads(opt.threads);

        if (sieve->parsed()) {
            if (opt.n_max < 2)
                throw zexp::domain_error("sieve needs --n-max >= 2");
            auto budget =
                static_cast<std::uint64_t>(opt.memory_budget_gb * (1ull << 30));
            zexp::MangoldtTable table =
                zexp::build_table(opt.n_max, budget, opt.threads);
            std::string path = cache_out;
            if (path.empty()) {
                const char* dir = std::getenv("ZEXP_CACHE_DIR");
                std::filesystem::path base = dir != nullptr ? dir : ".";
                path = (base / ("mangoldt_" + std::to_string(opt.n_max) +
                                ".zexp")).string();
            }
            zexp::save_cache(table, path);
            std::cout << "psi(" << opt.n_max << ") = "
                      << zexp::repr_double(table.psi(static_cast<double>(opt.n_max)))
                      << '\n'
                      << "cache written to " << path << '\n';
            return 0;
        }

        if (verify->parsed()) {
            std::vector<zexp::ReportRow> rows;
            auto append = [&rows](std::vector<zexp::ReportRow> more) {
                rows.insert(rows.end(), more.begin(), more.end());
            };
            if (suite == "identities" || suite == "all")
                append(suite_identities(opt));
            if (suite == "lemma" || suite == "all") append(suite_lemma(opt));
            if (suite == "guinand" || suite == "all") append(suite_guinand(opt));
            if (suite == "delta-tilde" || suite == "all")
                append(suite_delta_tilde(opt));
            if (suite == "system" || suite == "all") append(suite_system(opt));
            if (suite == "kx" || suite == "all") append(suite_kx(opt));
            if (suite == "transform" || suite == "all")
                append(suite_transform(opt));
            if (suite == "density" || suite == "all") append(suite_density(opt));
            return emit_rows(opt, rows);
        }

        if (emit->parsed()) {
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!opt.out_path.empty()) {
                file.open(opt.out_path);
                if (!file)
                    throw zexp::resource_error("cannot open " + opt.out_path);
                out = &file;
            }
            emit_series(opt, series, *out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
