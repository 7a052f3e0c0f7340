#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cutstokes/study.hpp"

using namespace cutstokes;

int main(int argc, char** argv) {
    CLI::App app{"Unfitted Stokes interface solver: convergence studies on [-1,1]^2 "
                 "with a circular interface of radius 0.5"};
    app.set_config("--config", "", "key=value config file; command-line flags win");

    StudyConfig config;
    double mu1 = 0.0, mu2 = 0.0;
    app.add_option("--example", config.example, "example1 | example2 | patch")
        ->check(CLI::IsMember({"example1", "example2", "patch"}));
    app.add_option("--n-list", config.n_list, "mesh subdivisions per side (strictly increasing)")
        ->delimiter(',');
    app.add_option("--gamma0", config.gamma0, "interface penalty");
    app.add_option("--gamma1", config.gamma1, "cut-edge penalty, subdomain 1");
    app.add_option("--gamma2", config.gamma2, "cut-edge penalty, subdomain 2");
    auto* opt_mu1 = app.add_option("--mu1", mu1, "viscosity of subdomain 1");
    auto* opt_mu2 = app.add_option("--mu2", mu2, "viscosity of subdomain 2");
    app.add_option("--sweep-mu1", config.sweep_mu1,
                   "sweep mode: mu1 values at fixed n (last entry of --n-list)")
        ->delimiter(',');
    app.add_option("--out", config.out_path, "CSV output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);
    if (*opt_mu1)
        config.mu1 = mu1;
    if (*opt_mu2)
        config.mu2 = mu2;

    try {
        StudyResult result = run_study(config);
        std::cout << result.text_table;
        if (config.out_path.empty()) {
            std::cout << result.csv;
        } else {
            std::ofstream out(config.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot open output file: " << config.out_path << "\n";
                return 2;
            }
            out << result.csv;
        }
        return 0;
    } catch (const AssumptionViolation& e) {
        std::cerr << "assumption violation: " << e.what() << "\n";
        return 1;
    } catch (const GeometryDegenerate& e) {
        std::cerr << "degenerate geometry: " << e.what() << "\n";
        return 1;
    } catch (const SingularSystem& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
