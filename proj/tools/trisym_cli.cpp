// trisym command-line front end. Uses only the C interface.

#include "trisym/trisym.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Args {
    std::string type;
    std::string base, subset, h, nplus, mplus, check, out;
    bool json = false, flip = false, all_subsets = false, candidates = false, force = false;
    int max_rank = 0;
};

struct CommandSpec {
    const char* name;
    const char* help;
};

const std::vector<CommandSpec> kCommands = {
    {"roots", "list the roots of a simple type"},
    {"base", "simple roots, positive roots and highest root of a base"},
    {"grade", "level decomposition g^r of a parabolic datum (base, A)"},
    {"series", "canonical series of l+ compared with the grading"},
    {"fib3", "degree-3 fibration (h, m+, m-); --flip gives the sign-changed structure"},
    {"fib2", "degree-2 (symmetric) splitting (f, q)"},
    {"check3sym", "bracket conditions of a 3-symmetric structure"},
    {"nplus", "n+ = m ∩ positive roots of a base"},
    {"twistor-check", "integrability conditions for n+ (or --candidates for all of them)"},
    {"recover", "recover the parabolic from an integrable n+"},
    {"compat3", "test whether the recovered parabolic gives the degree-3 fibration onto m+"},
    {"wolf", "twistor space of the Wolf space attached to a base"},
    {"classify", "inner 3-symmetric spaces attached to a base"},
    {"sweep", "run checks over all subsets (--all-subsets) or candidates (--candidates)"},
};

int run(const std::string& command, const Args& a) {
    trisym_system* sys = nullptr;
    if (trisym_system_create(a.type.c_str(), &sys) != TRISYM_OK) {
        std::fprintf(stderr, "error: %s\n", trisym_last_error());
        return 2;
    }
    trisym_request req{};
    req.base = a.base.c_str();
    req.subset = a.subset.c_str();
    req.h = a.h.c_str();
    req.nplus = a.nplus.c_str();
    req.mplus = a.mplus.c_str();
    req.check = a.check.c_str();
    req.flip = a.flip;
    req.all_subsets = a.all_subsets;
    req.candidates = a.candidates;
    req.force = a.force;
    req.max_rank = a.max_rank;

    char* text = nullptr;
    trisym_status st = trisym_run(sys, command.c_str(), &req, a.json ? TRISYM_JSON : TRISYM_TEXT, &text);
    if (st == TRISYM_OK || st == TRISYM_FINDING) {
        std::fputs(text, stdout);
        trisym_free(text);
        if (!a.out.empty()) {
            char* js = nullptr;
            trisym_run(sys, command.c_str(), &req, TRISYM_JSON, &js);
            std::ofstream f(a.out);
            if (!f || !(f << js)) {
                trisym_free(js);
                trisym_system_destroy(sys);
                std::fprintf(stderr, "error: cannot write %s\n", a.out.c_str());
                return 2;
            }
            trisym_free(js);
        }
    } else {
        std::fprintf(stderr, "error: %s\n", trisym_last_error());
    }
    trisym_system_destroy(sys);
    switch (st) {
        case TRISYM_OK: return 0;
        case TRISYM_FINDING: return 1;
        case TRISYM_INPUT_ERROR: return 2;
        default: return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parabolic subalgebras, degree-3 fibrations and twistor checks over exact root systems"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help message and exit");
    Args a;

    for (const auto& spec : kCommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("type", a.type, "simple type, e.g. G2, A3, C3, E8")->required();
        sub->add_flag("--json", a.json, "emit JSON instead of text");
        sub->add_option("--out", a.out, "also write the JSON report to this file");
        sub->add_option("--base", a.base, "simple roots, e.g. \"[-3,1*r3]\",\"[2,0]\" (default: catalog base)");
        sub->add_option("--A", a.subset, "subset of simple roots, 1-based: \"12\", \"1,3\"");
        sub->add_option("--h", a.h, "roots of h (negatives implied; the Cartan is always included; 0 for the Cartan alone)");
        sub->add_option("--nplus", a.nplus, "roots of n+");
        sub->add_option("--mplus", a.mplus, "roots of m+");
        sub->add_option("--check", a.check, "sweep checks: series, fib3, check3sym, fib2, wolf, candidates");
        sub->add_flag("--flip", a.flip, "use the sign-changed 3-symmetric structure (levels <= 2)");
        sub->add_flag("--all-subsets", a.all_subsets, "sweep every subset A");
        sub->add_flag("--candidates", a.candidates, "enumerate every candidate n+");
        sub->add_option("--max-rank", a.max_rank, "rank guard for subset sweeps (default 4)");
        sub->add_flag("--force", a.force, "ignore the rank guard");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return run(app.get_subcommands().front()->get_name(), a);
}
