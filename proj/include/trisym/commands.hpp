#pragma once

#include "trisym/report.hpp"

#include <string>
#include <string_view>

namespace trisym {

/// Textual arguments of a command, as given on the command line.
struct Request {
    std::string base;     // root list; empty selects the catalog base
    std::string subset;   // 1-based indices
    std::string h;        // roots of h (negatives implied)
    std::string nplus;    // roots of n+
    std::string mplus;    // roots of m+
    std::string check;    // sweep checks joined by '+' or ','
    bool flip = false;
    bool all_subsets = false;
    bool candidates = false;
    bool force = false;
    int max_rank = 4;
};

struct CommandOutput {
    int status = 0;   // 0 success, 1 mathematical finding
    Json json;
    std::string text;
};

/// Runs one command. Throws InputError on malformed or inconsistent input.
CommandOutput run_command(std::string_view command, const RootSystemPtr& rs, const Request& req);

SweepReport run_sweep(const RootSystemPtr& rs, const Request& req);

/// Every subset of {0..rank-1}, ordered by size and then lexicographically.
std::vector<std::vector<int>> all_subsets(int rank);

Base resolve_base(const RootSystemPtr& rs, const std::string& text);

}  // namespace trisym
