#include "mellin/scan.hpp"

#include "mellin/dual_series.hpp"
#include "mellin/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <stdexcept>

namespace mellin {

const char* method_name(Method m) {
    switch (m) {
    case Method::Direct: return "direct";
    case Method::Mapped: return "mapped";
    case Method::Dual: return "dual";
    case Method::Oracle: return "oracle";
    }
    return "?";
}

double method_threshold(Method m) {
    switch (m) {
    case Method::Direct: return 1e-6;
    case Method::Mapped: return 1e-10;
    case Method::Dual: return 1e-12;
    case Method::Oracle: return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

namespace {

ScanRecord evaluate_one(double x, double u, Method m, const ScanOptions& opt,
                        const Contour& contour, double oracle) {
    ScanRecord rec{x, u, m, 0.0, 0.0, 0, 0.0};
    try {
        const EvolutionPoint p(x, u);
        MethodReport rep;
        switch (m) {
        case Method::Oracle:
            rep = {"oracle", phi_closed_form(x, u, opt.series_tol), 0.0, 0};
            break;
        case Method::Direct:
            rep = invert_direct(p, contour, opt.subtract_leading);
            break;
        case Method::Mapped:
            rep = invert_mapped(p, opt.cheb_nodes);
            break;
        case Method::Dual:
            rep = eval_dual(p, {opt.series_tol, 500});
            break;
        }
        rec.value = rep.value;
        rec.error_estimate = rep.error_estimate;
        rec.nodes_or_terms = rep.nodes_or_terms;
        rec.deviation_from_oracle =
            std::abs(rep.value - oracle) / std::fmax(std::abs(oracle), 1e-300);
    } catch (const std::exception& e) {
        rec.failed = true;
        rec.failure = e.what();
        rec.value = std::numeric_limits<double>::quiet_NaN();
        rec.error_estimate = std::numeric_limits<double>::quiet_NaN();
        rec.deviation_from_oracle = std::numeric_limits<double>::infinity();
    }
    return rec;
}

} // namespace

ScanResult run_scan(const ScanRequest& req) {
    if (req.x_values.empty() || req.u_values.empty())
        throw std::invalid_argument("run_scan: empty grid");
    if (req.methods.empty())
        throw std::invalid_argument("run_scan: no methods requested");
    for (double x : req.x_values)
        if (!(x > 0.0) || !(x <= 1.0))
            throw std::invalid_argument("run_scan: x values must be in (0, 1]");
    for (double u : req.u_values)
        if (!(u > 0.0))
            throw std::invalid_argument("run_scan: u values must be positive");

    const Contour contour = build_vertical_contour(
        req.options.contour_anchor, req.options.contour_extent,
        req.options.contour_nodes);

    // one task per grid point; records land in a preassigned slot so the
    // output never depends on completion order
    struct Point {
        double x, u;
    };
    std::vector<Point> grid;
    for (double x : req.x_values)
        for (double u : req.u_values)
            grid.push_back({x, u});

    std::vector<std::vector<ScanRecord>> slots(grid.size());
    std::vector<std::future<void>> tasks;
    tasks.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        tasks.push_back(std::async(std::launch::async, [&, i] {
            const auto [x, u] = grid[i];
            double oracle = std::numeric_limits<double>::quiet_NaN();
            try {
                oracle = phi_closed_form(x, u, req.options.series_tol);
            } catch (const std::exception&) {
                // oracle failure propagates as infinite deviations below
            }
            for (Method m : req.methods)
                slots[i].push_back(
                    evaluate_one(x, u, m, req.options, contour, oracle));
        }));
    }
    for (auto& t : tasks)
        t.get();

    ScanResult out;
    out.all_within_thresholds = true;
    for (auto& s : slots)
        for (auto& r : s) {
            if (r.failed || !(r.deviation_from_oracle <=
                              method_threshold(r.method)))
                out.all_within_thresholds = false;
            out.records.push_back(std::move(r));
        }

    std::sort(out.records.begin(), out.records.end(),
              [](const ScanRecord& a, const ScanRecord& b) {
                  if (a.x != b.x) return a.x < b.x;
                  if (a.u != b.u) return a.u < b.u;
                  return std::string_view(method_name(a.method)) <
                         std::string_view(method_name(b.method));
              });
    return out;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string format_csv(const std::vector<ScanRecord>& records) {
    std::string out =
        "x,u,method,value,error_estimate,nodes_or_terms,deviation_from_oracle\n";
    for (const auto& r : records) {
        out += fmt17(r.x);
        out += ',';
        out += fmt17(r.u);
        out += ',';
        out += method_name(r.method);
        out += ',';
        out += fmt17(r.value);
        out += ',';
        out += fmt17(r.error_estimate);
        out += ',';
        out += std::to_string(r.nodes_or_terms);
        out += ',';
        out += fmt17(r.deviation_from_oracle);
        out += '\n';
    }
    return out;
}

std::string format_json(const std::vector<ScanRecord>& records) {
    auto num = [](double v) -> std::string {
        if (std::isnan(v)) return "null";
        if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
        return fmt17(v);
    };
    std::string out = "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += "  {\"x\": " + num(r.x) + ", \"u\": " + num(r.u) +
               ", \"method\": \"" + method_name(r.method) +
               "\", \"value\": " + num(r.value) +
               ", \"error_estimate\": " + num(r.error_estimate) +
               ", \"nodes_or_terms\": " + std::to_string(r.nodes_or_terms) +
               ", \"deviation_from_oracle\": " + num(r.deviation_from_oracle) +
               "}";
        out += (i + 1 < records.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

} // namespace mellin
