#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hornrank/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"horn-rank: generic holonomic rank and solution bases of bivariate Horn systems"};
    app.require_subcommand(1);

    std::string input_path, json_path, convention_flag;
    std::uint64_t seed = 0;
    bool seed_set = false, window_set = false;
    long window = 12;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", input_path, "input file (B: n 2 + rows, optional c:/seed:/window:)")
            ->required();
        sub->add_option("--seed", seed, "override the seed")->each([&](const std::string&) { seed_set = true; });
        sub->add_option("--window", window, "override the truncation window")
            ->each([&](const std::string&) { window_set = true; });
        sub->add_option("--convention", convention_flag, "falling|rising (overrides the file)")
            ->check(CLI::IsMember({"falling", "rising"}));
        sub->add_option("--json", json_path, "write the JSON report to this file");
    };

    for (const char* name : {"rank", "identity", "puiseux", "series", "decompose", "psi", "verify", "all"})
        add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();

    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "error: cannot open " << input_path << "\n";
        return hornrank::kExitError;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    hornrank::JobSpec job;
    try {
        job = hornrank::parse(buf.str());
    } catch (const hornrank::ParseError& e) {
        std::cerr << "parse error at line " << e.line << ": " << e.what() << "\n";
        return hornrank::kExitError;
    } catch (const hornrank::InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return hornrank::kExitError;
    }
    job.command = sub->get_name();
    if (seed_set) job.seed = seed;
    if (window_set) job.window = window;
    if (convention_flag == "rising") job.convention = hornrank::Convention::Rising;
    if (convention_flag == "falling") job.convention = hornrank::Convention::Falling;

    hornrank::Report rep = hornrank::run(job);
    std::cout << rep.text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << rep.json.dump(2) << "\n";
    }
    return rep.exit_code;
}
