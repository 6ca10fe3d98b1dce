#include "trisym/fourier_motzkin.hpp"

#include <set>
#include <stdexcept>

namespace trisym {

namespace {

struct RowLess {
    bool operator()(const IntRow& x, const IntRow& y) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = cmp(x[i], y[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

using RowSet = std::set<IntRow, RowLess>;

// Returns false when the row is identically zero (the constraint 0 > 0).
bool normalize(IntRow& row) {
    mpz_class g = 0;
    for (const auto& a : row) g = gcd(g, a);
    if (g == 0) return false;
    if (g != 1)
        for (auto& a : row) a /= g;
    return true;
}

Rational floor_q(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

Rational ceil_q(const Rational& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(c);
}

Rational pick(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (!lo && !hi) return 0;
    if (lo && !hi) return *lo < 0 ? Rational(0) : Rational(floor_q(*lo) + 1);
    if (!lo && hi) return *hi > 0 ? Rational(0) : Rational(ceil_q(*hi) - 1);
    if (*lo < 0 && *hi > 0) return 0;
    if (*lo >= 0) {
        Rational c = floor_q(*lo) + 1;
        if (c < *hi) return c;
    } else {
        Rational c = ceil_q(*hi) - 1;
        if (c > *lo) return c;
    }
    Rational mid = (*lo + *hi) / 2;
    mid.canonicalize();
    return mid;
}

}  // namespace

std::optional<std::vector<Rational>> solve_strict_homogeneous(const std::vector<IntRow>& rows, int num_vars,
                                                              std::size_t max_rows) {
    const auto n = static_cast<std::size_t>(num_vars);
    RowSet current;
    for (IntRow r : rows) {
        if (r.size() != n) throw std::invalid_argument("constraint row has wrong length");
        if (!normalize(r)) return std::nullopt;
        current.insert(std::move(r));
    }

    // stages[k] holds the rows that involve only variables 0..k
    std::vector<RowSet> stages(n);
    for (std::size_t k = n; k-- > 0;) {
        stages[k] = current;
        std::vector<const IntRow*> pos, neg;
        RowSet next;
        for (const auto& r : current) {
            int s = sgn(r[k]);
            if (s > 0) pos.push_back(&r);
            else if (s < 0) neg.push_back(&r);
            else next.insert(r);
        }
        for (const IntRow* p : pos) {
            for (const IntRow* q : neg) {
                IntRow c(n);
                mpz_class wp = -(*q)[k];
                mpz_class wq = (*p)[k];
                for (std::size_t i = 0; i < n; ++i) c[i] = wp * (*p)[i] + wq * (*q)[i];
                if (!normalize(c)) return std::nullopt;
                next.insert(std::move(c));
                if (next.size() > max_rows)
                    throw std::length_error("Fourier-Motzkin elimination exceeded the row limit");
            }
        }
        current = std::move(next);
    }
    if (!current.empty()) return std::nullopt;

    std::vector<Rational> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<Rational> lo, hi;
        for (const auto& r : stages[k]) {
            if (sgn(r[k]) == 0) continue;
            Rational rest = 0;
            for (std::size_t j = 0; j < k; ++j) rest += Rational(r[j]) * x[j];
            Rational bound = -rest / Rational(r[k]);
            bound.canonicalize();
            if (sgn(r[k]) > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi && !(*lo < *hi)) throw std::logic_error("Fourier-Motzkin back-substitution found an empty interval");
        x[k] = pick(lo, hi);
    }
    return x;
}

}  // namespace trisym
