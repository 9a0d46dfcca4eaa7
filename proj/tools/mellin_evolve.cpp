// Command-line front end: grid scans with four-way method comparison,
// running-coupling curves, and the residual verification battery.

#include "mellin/coupling.hpp"
#include "mellin/scan.hpp"
#include "mellin/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

std::vector<mellin::Method> parse_methods(const std::vector<std::string>& ms) {
    std::vector<mellin::Method> out;
    for (const auto& m : ms) {
        if (m == "all") {
            return {mellin::Method::Direct, mellin::Method::Mapped,
                    mellin::Method::Dual, mellin::Method::Oracle};
        } else if (m == "direct") {
            out.push_back(mellin::Method::Direct);
        } else if (m == "mapped") {
            out.push_back(mellin::Method::Mapped);
        } else if (m == "dual") {
            out.push_back(mellin::Method::Dual);
        } else if (m == "oracle") {
            out.push_back(mellin::Method::Oracle);
        } else {
            throw CLI::ValidationError("--methods",
                                       "unknown method '" + m + "'");
        }
    }
    return out;
}

int cmd_scan(const mellin::ScanRequest& req, const std::string& format,
             const std::string& output) {
    const auto result = mellin::run_scan(req);
    write_out(output, format == "json" ? mellin::format_json(result.records)
                                       : mellin::format_csv(result.records));
    for (const auto& r : result.records)
        if (r.failed)
            std::cerr << "point (x=" << r.x << ", u=" << r.u << ", "
                      << mellin::method_name(r.method)
                      << ") failed: " << r.failure << "\n";
    return result.all_within_thresholds ? kExitOk : kExitNumerical;
}

int cmd_coupling(int gauge_n, int branch, const std::vector<double>& q2,
                 const std::string& format, const std::string& output) {
    const mellin::CouplingModel model{
        gauge_n, mellin::lambert_branch_from_index(branch)};
    std::string csv = "q2_ratio,re_alpha,im_alpha,lambert_residual\n";
    std::string json = "[\n";
    for (std::size_t i = 0; i < q2.size(); ++i) {
        const auto v = mellin::alpha(model, q2[i]);
        csv += fmt17(q2[i]) + "," + fmt17(v.alpha.real()) + "," +
               fmt17(v.alpha.imag()) + "," + fmt17(v.lambert_residual) + "\n";
        json += "  {\"q2_ratio\": " + fmt17(q2[i]) +
                ", \"re_alpha\": " + fmt17(v.alpha.real()) +
                ", \"im_alpha\": " + fmt17(v.alpha.imag()) +
                ", \"lambert_residual\": " + fmt17(v.lambert_residual) + "}" +
                (i + 1 < q2.size() ? ",\n" : "\n");
    }
    json += "]\n";
    write_out(output, format == "json" ? json : csv);
    return kExitOk;
}

int cmd_verify(const mellin::VerifyOptions& opt) {
    const auto checks = mellin::run_residual_suite(opt);
    bool all_pass = true;
    std::printf("%-28s %-14s %-14s %s\n", "check", "max residual", "threshold",
                "status");
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        std::printf("%-28s %-14.3e %-14.3e %s\n", c.name.c_str(),
                    c.max_residual, c.threshold, c.pass ? "pass" : "FAIL");
    }
    return all_pass ? kExitOk : kExitNumerical;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mellin-plane evolution toolkit: contour, mapped-contour and "
                 "dual-series evaluation of the moment-space evolution "
                 "solution, with a closed-form referee"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand(
        "scan", "evaluate phi(x, u) on a grid with selected methods");
    std::vector<double> xs, us;
    std::vector<std::string> method_names{"all"};
    std::string format = "csv", output;
    mellin::ScanOptions sopt;
    scan->add_option("--x", xs, "x grid points in (0, 1]")->required();
    scan->add_option("--u", us, "u grid points (> 0)")->required();
    scan->add_option("--methods", method_names,
                     "subset of direct,mapped,dual,oracle or 'all'");
    scan->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--output", output, "output path (default: stdout)");
    scan->add_option("--contour-anchor", sopt.contour_anchor,
                     "Re-axis intercept of the vertical contour");
    scan->add_option("--contour-extent", sopt.contour_extent,
                     "imaginary-direction truncation T");
    scan->add_option("--contour-nodes", sopt.contour_nodes,
                     "vertical-contour node count");
    scan->add_option("--cheb-nodes", sopt.cheb_nodes,
                     "Chebyshev-Gauss node count for the mapped route");
    scan->add_option("--series-tol", sopt.series_tol,
                     "series truncation tolerance");
    scan->add_flag("--no-subtract-leading",
                   [&sopt](std::int64_t) { sopt.subtract_leading = false; },
                   "integrate the raw 1/t-decay integrand");

    // coupling
    auto* coupling = app.add_subcommand(
        "coupling", "running-coupling curve through the Lambert W solution");
    int gauge_n = 3, branch = -1, q2_points = 0;
    double q2_min = 0.0, q2_max = 0.0;
    std::vector<double> q2s;
    std::string cformat = "csv", coutput;
    coupling->add_option("--gauge-n", gauge_n, "N of the SU(N) gauge group");
    coupling->add_option("--branch", branch, "Lambert branch: -1, 0 or +1");
    coupling->add_option("--q2", q2s, "explicit q2_ratio values");
    coupling->add_option("--q2-min", q2_min, "log-grid start");
    coupling->add_option("--q2-max", q2_max, "log-grid end");
    coupling->add_option("--q2-points", q2_points, "log-grid point count");
    coupling->add_option("--format", cformat, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    coupling->add_option("--output", coutput, "output path (default: stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run the residual battery and print a pass/fail table");
    mellin::VerifyOptions vopt;
    verify->add_option("--fd-step", vopt.fd_step,
                       "finite-difference step in the log variables");
    verify->add_option("--quad-tol", vopt.quad_tol, "quadrature tolerance");
    verify->add_option("--seed", vopt.seed, "RNG seed for the random samples");
    verify->add_option("--duality-samples", vopt.duality_samples,
                       "number of duality round-trip samples");
    verify->add_option("--ode-samples", vopt.ode_samples,
                       "number of random kernels per ODE check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (scan->parsed()) {
            mellin::ScanRequest req{xs, us, parse_methods(method_names), sopt};
            return cmd_scan(req, format, output);
        }
        if (coupling->parsed()) {
            if (q2s.empty()) {
                if (q2_points < 2 || !(q2_min > 0.0) || !(q2_max > q2_min))
                    throw std::invalid_argument(
                        "coupling: give --q2 values or a valid "
                        "--q2-min/--q2-max/--q2-points log grid");
                for (int i = 0; i < q2_points; ++i)
                    q2s.push_back(q2_min * std::pow(q2_max / q2_min,
                                                    static_cast<double>(i) /
                                                        (q2_points - 1)));
            }
            return cmd_coupling(gauge_n, branch, q2s, cformat, coutput);
        }
        return cmd_verify(vopt);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
