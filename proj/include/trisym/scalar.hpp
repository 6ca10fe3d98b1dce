#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trisym {

using Rational = mpq_class;

/// Raised for malformed user input: bad root text, unknown type, non-base
/// candidates and similar. The C API maps it to TRISYM_INPUT_ERROR.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element a + b*sqrt(3) of the real quadratic field Q[sqrt 3].
///
/// Every coordinate of every catalog root lives here; b is zero except in
/// the G2 realization. Ordering is the real ordering, decided exactly.
class QSqrt3 {
public:
    QSqrt3() = default;
    QSqrt3(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QSqrt3(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {  // NOLINT
        a_.canonicalize();
        b_.canonicalize();
    }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    int sign() const;

    QSqrt3 operator-() const { return {-a_, -b_}; }
    QSqrt3& operator+=(const QSqrt3& o);
    QSqrt3& operator-=(const QSqrt3& o);
    QSqrt3& operator*=(const QSqrt3& o);
    QSqrt3& operator/=(const QSqrt3& o);

    friend QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
    friend QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
    friend QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
    friend QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }

    friend bool operator==(const QSqrt3& x, const QSqrt3& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QSqrt3& x, const QSqrt3& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Text form: "p", "p/q", "q*r3", "p+q*r3" or "p-q*r3".
    std::string str() const;
    static QSqrt3 parse(std::string_view text);

private:
    Rational a_{0};
    Rational b_{0};
};

using Vec = std::vector<QSqrt3>;

QSqrt3 dot(const Vec& x, const Vec& y);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator-(const Vec& x);
Vec scale(const QSqrt3& s, const Vec& x);
bool is_zero(const Vec& x);

/// Lexicographic comparison by the real ordering of coordinates.
bool lex_less(const Vec& x, const Vec& y);

struct VecLess {
    bool operator()(const Vec& x, const Vec& y) const { return lex_less(x, y); }
};

/// "[c1,...,ck]"
std::string format_vec(const Vec& v);
Vec parse_vec(std::string_view text);

/// A sequence of bracketed vectors separated by commas and/or whitespace,
/// e.g. `[-3,1*r3],[2,0]`.
std::vector<Vec> parse_vec_list(std::string_view text);

std::string format_rational(const Rational& q);

}  // namespace trisym
