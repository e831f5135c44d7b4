#include "sgharm/commands.hpp"
#include "sgharm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

// Opens --output if given, otherwise hands back stdout.
struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    bool open(const std::string& path) {
        if (path.empty()) return true;
        file.open(path);
        if (!file) {
            std::cerr << "error: cannot write " << path << "\n";
            return false;
        }
        stream = &file;
        return true;
    }
};

std::unique_ptr<std::ifstream> open_input(const std::string& path) {
    if (path.empty()) return nullptr;
    auto in = std::make_unique<std::ifstream>(path);
    if (!*in) {
        std::cerr << "error: cannot read " << path << "\n";
        return nullptr;
    }
    return in;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact harmonic analysis on symmetric groups"};
    app.require_subcommand(1);

    std::string input_path, output_path;

    auto* transform = app.add_subcommand(
        "transform", "Chain averages and spherical coefficients of a function");
    sgh::TransformOptions topt;
    transform->add_option("--degree", topt.degree, "Degree of the ambient group")
        ->required();
    transform->add_option("--format", topt.format, "text or json");
    transform->add_option("--input", input_path, "Function file (default stdin)");
    transform->add_option("--output", output_path, "Write report here");

    auto* verify = app.add_subcommand("verify", "Run the exact identity suite");
    sgh::VerifyOptions vopt;
    verify->add_option("--n-max", vopt.n_max, "Largest pair index to check");
    verify->add_option("--mutate", vopt.mutate,
                       "Corrupt one named constant (the suite must then fail)");
    verify->add_option("--output", output_path, "Write report here");

    auto* heat = app.add_subcommand("heat", "Evolve a function by coset averaging");
    sgh::HeatOptions hopt;
    heat->add_option("--degree", hopt.degree, "Degree of the ambient group")
        ->required();
    heat->add_option("--steps", hopt.steps, "Number of steps")->required();
    heat->add_option("--format", hopt.format, "text or json");
    heat->add_option("--input", input_path, "Function file (default stdin)");
    heat->add_option("--output", output_path, "Write the evolved function here");

    auto* radon = app.add_subcommand("radon", "Coset and divisor averaging transforms");
    sgh::RadonOptions ropt;
    radon->add_option("--mode", ropt.mode, "group, divisor or invert")->required();
    radon->add_option("--degree", ropt.degree, "Group mode: ambient degree");
    radon->add_option("--truncation", ropt.truncation,
                      "Divisor modes: pad the table to at least this bound");
    radon->add_option("--out-max", ropt.out_max,
                      "Divisor modes: emit indices up to this (default 10)");
    radon->add_option("--format", ropt.format, "text or json");
    radon->add_option("--input", input_path, "Input file (default stdin)");
    radon->add_option("--output", output_path, "Write the table here");

    auto* tableaux = app.add_subcommand(
        "tableaux", "Per-shape stabilizer, support and dimension data");
    sgh::TableauxOptions xopt;
    tableaux->add_option("--degree", xopt.degree, "Ground set size")->required();
    tableaux->add_option("--format", xopt.format, "text or json");
    tableaux->add_option("--output", output_path, "Write the table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? sgh::kExitOk : sgh::kExitUsage;
    }

    OutputTarget target;
    if (!target.open(output_path)) return sgh::kExitUsage;
    auto file_in = open_input(input_path);
    if (!input_path.empty() && !file_in) return sgh::kExitUsage;
    std::istream& in = file_in ? *file_in : std::cin;

    if (*transform) return sgh::cmd_transform(in, *target.stream, std::cerr, topt);
    if (*verify) return sgh::cmd_verify(*target.stream, std::cerr, vopt);
    if (*heat) return sgh::cmd_heat(in, *target.stream, std::cerr, hopt);
    if (*radon) return sgh::cmd_radon(in, *target.stream, std::cerr, ropt);
    if (*tableaux) return sgh::cmd_tableaux(*target.stream, std::cerr, xopt);
    return sgh::kExitUsage;
}
