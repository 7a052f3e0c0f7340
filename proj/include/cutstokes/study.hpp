#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutstokes/error_norms.hpp"
#include "cutstokes/solutions.hpp"

namespace cutstokes {

// Configuration of a convergence study or viscosity sweep on [-1,1]^2 with
// the circular interface. Fully deterministic: no seeds, no tolerances to
// tune at run time.
struct StudyConfig {
    std::string example = "example1"; // example1 | example2 | patch
    std::vector<int> n_list = {8, 16, 32, 64, 128};
    double gamma0 = 10.0;
    double gamma1 = 10.0;
    double gamma2 = 10.0;
    std::optional<double> mu1; // override the example's viscosities
    std::optional<double> mu2;
    std::vector<double> sweep_mu1; // non-empty switches to sweep mode (fixed n = last n_list entry)
    std::string out_path;          // empty: CSV to stdout
    Vec2 circle_center{0.0, 0.0};
};

struct StudyRow {
    double h = 0.0;
    double mu1 = 0.0, mu2 = 0.0;
    ErrorReport err;
    double rate1 = std::numeric_limits<double>::quiet_NaN();
    double rate0 = std::numeric_limits<double>::quiet_NaN();
    double ratep = std::numeric_limits<double>::quiet_NaN();
};

struct StudyResult {
    bool sweep = false;
    std::vector<StudyRow> rows;
    std::string csv;        // machine contract
    std::string text_table; // human-readable mirror
};

// One solve of a benchmark case at the given subdivision count; the reported
// h label is (side length)/n.
ErrorReport solve_level(const BenchmarkCase& bench, int n);

BenchmarkCase make_case(const StudyConfig& config);

StudyResult run_study(const StudyConfig& config);

} // namespace cutstokes
