/* C interface to the trisym library.
 *
 * All output strings are allocated with malloc and must be released with
 * trisym_free. On any status other than TRISYM_OK or TRISYM_FINDING the
 * output pointer is left NULL and trisym_last_error() describes the problem.
 */
#ifndef TRISYM_TRISYM_H
#define TRISYM_TRISYM_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TRISYM_API __declspec(dllexport)
#else
#define TRISYM_API __attribute__((visibility("default")))
#endif

typedef struct trisym_system trisym_system;

typedef enum trisym_status {
    TRISYM_OK = 0,
    TRISYM_FINDING = 1,     /* computed, but a checked property fails */
    TRISYM_INPUT_ERROR = 2,
    TRISYM_INTERNAL = 3
} trisym_status;

typedef enum trisym_format { TRISYM_TEXT = 0, TRISYM_JSON = 1 } trisym_format;

/* Optional arguments; NULL or "" means absent. */
typedef struct trisym_request {
    const char* base;    /* root list, e.g. "[-3,1*r3],[2,0]" */
    const char* subset;  /* 1-based indices, e.g. "12" or "1,3" */
    const char* h;       /* roots of h; negatives are implied */
    const char* nplus;
    const char* mplus;
    const char* check;   /* sweep checks, e.g. "fib3+check3sym" */
    int flip;
    int all_subsets;
    int candidates;
    int force;
    int max_rank;        /* 0 selects the default guard */
} trisym_request;

TRISYM_API const char* trisym_version(void);
TRISYM_API const char* trisym_last_error(void);
TRISYM_API void trisym_free(char* s);

TRISYM_API trisym_status trisym_system_create(const char* type, trisym_system** out);
TRISYM_API void trisym_system_destroy(trisym_system* sys);
TRISYM_API int trisym_system_rank(const trisym_system* sys);
TRISYM_API int trisym_system_root_count(const trisym_system* sys);

/* Generic entry point: command is one of roots, base, grade, series, fib3,
 * fib2, check3sym, nplus, twistor-check, recover, compat3, wolf, classify,
 * sweep. */
TRISYM_API trisym_status trisym_run(const trisym_system* sys, const char* command, const trisym_request* req,
                                    trisym_format fmt, char** out);

TRISYM_API trisym_status trisym_roots(const trisym_system* sys, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_base(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_grade(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_series(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_fib3(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_fib2(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_check3sym(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_nplus(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_twistor_check(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_recover(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_compat3(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_wolf(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_classify(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);
TRISYM_API trisym_status trisym_sweep(const trisym_system* sys, const trisym_request* req, trisym_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
