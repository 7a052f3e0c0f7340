#include "cutstokes/study.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cutstokes {

namespace {

std::string format_number(double v, const char* fmt = "%.6e") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string format_rate(double r) {
    return std::isnan(r) ? std::string() : format_number(r, "%.4f");
}

} // namespace

ErrorReport solve_level(const BenchmarkCase& bench, int n) {
    Mesh mesh = build_structured_mesh(Rect{}, n);
    LevelSet ls = make_circle_level_set(bench.circle_center, bench.circle_radius);
    InterfaceGeometry geo = classify(mesh, ls);
    DofMap dofs = build_dof_map(mesh, geo);
    SaddleSystem sys = assemble_system(mesh, geo, dofs, bench.params);
    Solution sol = solve(sys);
    ErrorReport report = compute_errors(mesh, geo, dofs, bench.params, sol, bench.exact);
    report.h = mesh.domain.width() / n;
    return report;
}

BenchmarkCase make_case(const StudyConfig& config) {
    BenchmarkCase bench;
    if (config.example == "example1")
        bench = example1();
    else if (config.example == "example2")
        bench = example2(config.mu1.value_or(1000.0), config.mu2.value_or(1.0), config.circle_center);
    else if (config.example == "patch")
        bench = patch_case();
    else
        throw std::invalid_argument("unknown example: " + config.example);
    if (config.example != "example2" && (config.mu1 || config.mu2)) {
        bench.params.mu1 = config.mu1.value_or(bench.params.mu1);
        bench.params.mu2 = config.mu2.value_or(bench.params.mu2);
    }
    bench.params.gamma0 = config.gamma0;
    bench.params.gamma1 = config.gamma1;
    bench.params.gamma2 = config.gamma2;
    bench.circle_center = config.circle_center;
    return bench;
}

StudyResult run_study(const StudyConfig& config) {
    for (size_t j = 1; j < config.n_list.size(); ++j)
        if (config.n_list[j] <= config.n_list[j - 1])
            throw std::invalid_argument("n_list must increase strictly");
    if (!(config.gamma0 > 0.0 && config.gamma1 > 0.0 && config.gamma2 > 0.0))
        throw std::invalid_argument("penalty parameters must be positive");
    if ((config.mu1 && !(*config.mu1 > 0.0)) || (config.mu2 && !(*config.mu2 > 0.0)))
        throw std::invalid_argument("viscosities must be positive");
    for (double mu : config.sweep_mu1)
        if (!(mu > 0.0))
            throw std::invalid_argument("sweep viscosities must be positive");

    StudyResult result;
    result.sweep = !config.sweep_mu1.empty();

    if (result.sweep) {
        const int n = config.n_list.back();
        const double mu2 = config.mu2.value_or(1.0);
        result.csv = "mu1,mu2,e1_u,e0_u,e0_p\n";
        result.text_table = "  mu1        mu2        e1_u     e0_u     e0_p\n";
        for (double mu1 : config.sweep_mu1) {
            StudyConfig level_config = config;
            level_config.mu1 = mu1;
            level_config.mu2 = mu2;
            BenchmarkCase bench = make_case(level_config);
            StudyRow row;
            row.mu1 = mu1;
            row.mu2 = mu2;
            row.err = solve_level(bench, n);
            row.h = row.err.h;
            result.rows.push_back(row);
            result.csv += format_number(mu1, "%.10g") + "," + format_number(mu2, "%.10g") + "," +
                          format_number(row.err.e1_u) + "," + format_number(row.err.e0_u) + "," +
                          format_number(row.err.e0_p) + "\n";
            result.text_table += "  " + format_number(mu1, "%-10.4g") + " " + format_number(mu2, "%-10.4g") +
                                 " " + format_number(row.err.e1_u, "%.4f") + "   " +
                                 format_number(row.err.e0_u, "%.4f") + "   " +
                                 format_number(row.err.e0_p, "%.4f") + "\n";
        }
        return result;
    }

    BenchmarkCase bench = make_case(config);
    std::vector<double> hs, e1s, e0s, eps;
    for (int n : config.n_list) {
        StudyRow row;
        row.mu1 = bench.params.mu1;
        row.mu2 = bench.params.mu2;
        row.err = solve_level(bench, n);
        row.h = row.err.h;
        result.rows.push_back(row);
        hs.push_back(row.h);
        e1s.push_back(row.err.e1_u);
        e0s.push_back(row.err.e0_u);
        eps.push_back(row.err.e0_p);
    }
    const auto r1 = rates(hs, e1s), r0 = rates(hs, e0s), rp = rates(hs, eps);
    for (size_t j = 0; j < result.rows.size(); ++j) {
        result.rows[j].rate1 = r1[j];
        result.rows[j].rate0 = r0[j];
        result.rows[j].ratep = rp[j];
    }

    result.csv = "h,e1_u,rate1,e0_u,rate0,e0_p,ratep\n";
    result.text_table = "  h          e1_u     rate     e0_u     rate     e0_p     rate\n";
    for (const StudyRow& row : result.rows) {
        result.csv += format_number(row.h, "%.10g") + "," + format_number(row.err.e1_u) + "," +
                      format_rate(row.rate1) + "," + format_number(row.err.e0_u) + "," +
                      format_rate(row.rate0) + "," + format_number(row.err.e0_p) + "," +
                      format_rate(row.ratep) + "\n";
        auto cell = [](double e, double r) {
            std::string s = format_number(e, "%.4f") + "   " + (std::isnan(r) ? "      " : format_number(r, "%.4f"));
            return s;
        };
        result.text_table += "  " + format_number(row.h, "%-10.6g") + " " + cell(row.err.e1_u, row.rate1) +
                             "   " + cell(row.err.e0_u, row.rate0) + "   " + cell(row.err.e0_p, row.ratep) +
                             "\n";
    }
    return result;
}

} // namespace cutstokes
