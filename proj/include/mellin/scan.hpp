#pragma once

#include "mellin/inversion.hpp"
#include "mellin/types.hpp"

#include <string>
#include <vector>

namespace mellin {

enum class Method { Direct, Mapped, Dual, Oracle };

const char* method_name(Method m);

// Acceptance threshold on the relative deviation from the closed-form
// oracle; a scan exits cleanly only if every record stays below its
// method's threshold.
double method_threshold(Method m);

// One knob set for every numerical default, overridable from the CLI.
struct ScanOptions {
    double contour_anchor = DirectContourDefaults::anchor;
    double contour_extent = DirectContourDefaults::extent;
    int contour_nodes = DirectContourDefaults::nodes;
    bool subtract_leading = true;
    int cheb_nodes = kMappedDefaultNodes;
    double series_tol = 1e-14;
};

struct ScanRequest {
    std::vector<double> x_values;
    std::vector<double> u_values;
    std::vector<Method> methods;
    ScanOptions options;
};

struct ScanRecord {
    double x;
    double u;
    Method method;
    double value;
    double error_estimate;
    long nodes_or_terms;
    double deviation_from_oracle;
    bool failed = false;
    std::string failure; // diagnostic, not part of the tabular output
};

struct ScanResult {
    std::vector<ScanRecord> records;
    bool all_within_thresholds;
};

// Evaluates every requested method on the (x, u) grid against the oracle.
// Grid points are processed concurrently; records come back sorted by
// x, then u, then method name, independent of scheduling.
ScanResult run_scan(const ScanRequest& req);

// CSV with the fixed header
// x,u,method,value,error_estimate,nodes_or_terms,deviation_from_oracle
// and 17-significant-digit floats (round-trip exact for doubles).
std::string format_csv(const std::vector<ScanRecord>& records);

// The same records as a JSON array with identical field names.
std::string format_json(const std::vector<ScanRecord>& records);

} // namespace mellin
