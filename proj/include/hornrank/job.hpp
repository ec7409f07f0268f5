#pragma once

#include <string>

#include <json.hpp>

#include "hornrank/horn.hpp"

namespace hornrank {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& rule) : std::runtime_error(rule) {}
};

struct JobSpec {
    std::string command = "all";
    IntMatrix B;
    bool generic_c = true;
    RatVec explicit_c;
    Convention convention = Convention::Falling;
    std::uint64_t seed = 0;
    long window = 12;
    int genericity_cap = 8;
    int weight_cap = 32;
};

// structured input file: "B: n 2" + rows, then optional "c:", "convention:",
// "seed:", "window:" lines; '#' starts a comment
JobSpec parse(const std::string& text);

struct Report {
    int exit_code = 0;
    Json json;          // deterministic given (JobSpec, seed)
    std::string text;   // human-readable rendering (includes timing)
};

Report run(const JobSpec& job);

// exit codes: 0 ok, 1 parse/invariant/other, 2 genericity cap, 3 resource budget
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitGenericity = 2;
constexpr int kExitResource = 3;

}  // namespace hornrank
