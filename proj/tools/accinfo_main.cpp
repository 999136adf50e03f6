#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "accinfo/io.hpp"
#include "accinfo/optimizer.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw accinfo::Error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw accinfo::Error("cannot open output file: " + path);
    out << content;
    if (!out) throw accinfo::Error("failed writing output file: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Finds the POVM maximizing the mutual information of a quantum "
        "ensemble (its accessible information) by steepest ascent with "
        "conjugate-gradient speed-up and golden-section line search."};

    std::string input_path;
    std::string output_path;
    std::uint64_t seed = 0;
    accinfo::OptimizerConfig cfg;
    bool emit_json = false;
    bool quiet = false;

    app.add_option("--input", input_path, "Import file to optimize")
        ->required();
    app.add_option("--output", output_path,
                   "Result file (default: <input>.out)");
    auto* seed_opt =
        app.add_option("--seed", seed, "RNG seed (default: OS entropy)");
    app.add_option("--tolerance", cfg.tolerance,
                   "Relative mutual-information stopping tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--steepest-prob", cfg.steepest_prob,
                   "Chance of a plain-gradient iteration")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--max-iter", cfg.max_iterations, "Iteration cap")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--restarts", cfg.restarts,
                   "Independent restarts; the best final MI is reported")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--json", emit_json,
                 "Also write a machine-readable report to <output>.json");
    app.add_flag("--quiet", quiet, "Suppress progress and summary chatter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (output_path.empty()) output_path = input_path + ".out";
    if (seed_opt->count() > 0) {
        cfg.seed = seed;
    } else {
        std::random_device rd;
        cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }

    try {
        const accinfo::ImportFile file =
            accinfo::parse_import(read_file(input_path));

        accinfo::Ensemble ensemble{file.dim, file.ops};
        const accinfo::ValidationReport validation =
            accinfo::validate_ensemble(ensemble);
        if (!validation.ok()) {
            std::cerr << input_path << ": invalid ensemble\n";
            for (const accinfo::Violation& v : validation.violations) {
                std::cerr << "  " << v.message << "\n";
            }
            return 1;
        }

        accinfo::IterationObserver observer;
        if (!quiet) {
            observer = [](int restart, int iteration, double mi,
                          const accinfo::Povm&) {
                if (iteration % 100 == 0) {
                    std::cerr << "restart " << restart << "  iteration "
                              << iteration << "  MI = " << mi << "\n";
                }
            };
        }

        const accinfo::RunReport report =
            accinfo::run(ensemble, cfg, file.k_init, observer);

        write_file(output_path, accinfo::write_output(report, ensemble, cfg));
        if (emit_json) {
            write_file(output_path + ".json",
                       accinfo::write_json_report(report, ensemble));
        }

        if (!quiet) {
            std::cout << "accessible information = " << report.final_mi()
                      << " bits\n"
                      << "iterations = " << report.iterations
                      << (report.converged ? " (converged)"
                                           : " (iteration cap reached)")
                      << "\n"
                      << "POVM outcomes = " << report.final_povm.size()
                      << ", reduced = " << report.reduced_povm.size() << "\n"
                      << "wrote " << output_path << "\n";
        }
        return report.converged ? 0 : 2;
    } catch (const accinfo::Error& e) {
        std::cerr << input_path << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
