#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "reeskit/driver.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw reeskit::Error(reeskit::ErrorCode::BadProblemFile, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generators, implicit equations, and rational inverses for "
                 "monoid-type rational parametrizations"};
    app.require_subcommand(1);

    std::string path;
    reeskit::RunOptions opts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "problem file (or a generator document for verify)")->required();
        cmd->add_option("--field", opts.field_override, "coefficient field: qq or fp:<prime>");
        cmd->add_option("--bound", opts.bound, "verification bidegree bound (default d+3)");
        cmd->add_option("--seed", opts.seed, "seed for sampling and coprimality checks");
        cmd->add_option("--samples", opts.samples, "sample count for inverse certificates");
        cmd->add_option("--monomial-cap", opts.monomial_cap, "largest slice the oracle will attempt");
    };

    add_common(app.add_subcommand("generators", "emit the minimal generating set"));
    add_common(app.add_subcommand("implicitize", "emit the implicit equation only"));
    add_common(app.add_subcommand("invert", "emit the rational inverse with a sampling certificate"));
    add_common(app.add_subcommand("verify", "brute-force check of generation and minimality"));

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        reeskit::RunResult res = reeskit::run_command(command, read_file(path), opts);
        std::cout << res.output;
        return res.exit_code;
    } catch (const reeskit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error [internal]: " << e.what() << "\n";
        return 1;
    }
}
