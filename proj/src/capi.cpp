#include "trisym/trisym.h"

#include "trisym/commands.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct trisym_system {
    trisym::RootSystemPtr rs;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::string str(const char* s) { return s ? std::string(s) : std::string(); }

trisym::Request to_request(const trisym_request* r) {
    trisym::Request out;
    if (!r) return out;
    out.base = str(r->base);
    out.subset = str(r->subset);
    out.h = str(r->h);
    out.nplus = str(r->nplus);
    out.mplus = str(r->mplus);
    out.check = str(r->check);
    out.flip = r->flip != 0;
    out.all_subsets = r->all_subsets != 0;
    out.candidates = r->candidates != 0;
    out.force = r->force != 0;
    if (r->max_rank > 0) out.max_rank = r->max_rank;
    return out;
}

template <typename F>
trisym_status guarded(F&& f) {
    g_last_error.clear();
    try {
        return f();
    } catch (const trisym::InputError& e) {
        g_last_error = e.what();
        return TRISYM_INPUT_ERROR;
    } catch (const std::exception& e) {
        g_last_error = std::string("internal error: ") + e.what();
        return TRISYM_INTERNAL;
    } catch (...) {
        g_last_error = "internal error";
        return TRISYM_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* trisym_version(void) { return "1.0.0"; }

const char* trisym_last_error(void) { return g_last_error.c_str(); }

void trisym_free(char* s) { std::free(s); }

trisym_status trisym_system_create(const char* type, trisym_system** out) {
    if (out) *out = nullptr;
    return guarded([&] {
        if (!type || !out) throw trisym::InputError("missing argument");
        auto rs = trisym::build_root_system(trisym::parse_simple_type(type));
        *out = new trisym_system{std::move(rs)};
        return TRISYM_OK;
    });
}

void trisym_system_destroy(trisym_system* sys) { delete sys; }

int trisym_system_rank(const trisym_system* sys) { return sys ? sys->rs->rank() : 0; }

int trisym_system_root_count(const trisym_system* sys) { return sys ? sys->rs->size() : 0; }

trisym_status trisym_run(const trisym_system* sys, const char* command, const trisym_request* req, trisym_format fmt,
                         char** out) {
    if (out) *out = nullptr;
    return guarded([&] {
        if (!sys || !command || !out) throw trisym::InputError("missing argument");
        trisym::CommandOutput res = trisym::run_command(command, sys->rs, to_request(req));
        *out = dup(fmt == TRISYM_JSON ? res.json.dump(2) + "\n" : res.text);
        return res.status == 0 ? TRISYM_OK : TRISYM_FINDING;
    });
}

trisym_status trisym_roots(const trisym_system* sys, trisym_format fmt, char** out) {
    return trisym_run(sys, "roots", nullptr, fmt, out);
}

#define TRISYM_COMMAND(fn, name)                                                                        \
    trisym_status fn(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out) { \
        return trisym_run(sys, name, req, fmt, out);                                                    \
    }

TRISYM_COMMAND(trisym_base, "base")
TRISYM_COMMAND(trisym_grade, "grade")
TRISYM_COMMAND(trisym_series, "series")
TRISYM_COMMAND(trisym_fib3, "fib3")
TRISYM_COMMAND(trisym_fib2, "fib2")
TRISYM_COMMAND(trisym_check3sym, "check3sym")
TRISYM_COMMAND(trisym_nplus, "nplus")
TRISYM_COMMAND(trisym_twistor_check, "twistor-check")
TRISYM_COMMAND(trisym_recover, "recover")
TRISYM_COMMAND(trisym_compat3, "compat3")
TRISYM_COMMAND(trisym_wolf, "wolf")
TRISYM_COMMAND(trisym_classify, "classify")
TRISYM_COMMAND(trisym_sweep, "sweep")

#undef TRISYM_COMMAND

}  // extern "C"
