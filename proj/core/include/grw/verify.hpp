#pragma once

// Named verification claims: each one checks a specific statement
// about the computed objects and reports verified / failed / skipped.
// The command-line `verify` subcommand and the acceptance suite both
// run this registry.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace grw::verify {

enum class Status { Verified, Failed, Skipped };

struct Options {
    int max_degree = 6;   // bound for the claims that are degreewise-open
    bool extended = false;
    int64_t cap_degree = 120;
};

struct Result {
    std::string id;
    std::string description;
    Status status = Status::Failed;
    double seconds = 0.0;
    std::string details;
};

struct Claim {
    std::string id;
    std::string description;
    bool extended_only = false;
    std::function<void(const Options&, Result&)> run;
};

const std::vector<Claim>& registry();
const Claim* find_claim(const std::string& id);

Result run_claim(const Claim& c, const Options& opt);
std::vector<Result> run_all(const Options& opt);

std::string status_name(Status s);

}  // namespace grw::verify
