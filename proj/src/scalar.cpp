#include "trisym/scalar.hpp"

#include <cctype>

namespace trisym {

int QSqrt3::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 against 3 b^2
    Rational lhs = a_ * a_;
    Rational rhs = 3 * b_ * b_;
    return lhs > rhs ? sa : sb;
}

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
    Rational a = a_ * o.a_ + 3 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q[sqrt 3]");
    // (a + b r)/(c + d r) = (a + b r)(c - d r)/(c^2 - 3 d^2)
    Rational norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
    *this *= QSqrt3(o.a_, -o.b_);
    a_ /= norm;
    b_ /= norm;
    return *this;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string QSqrt3::str() const {
    if (sgn(b_) == 0) return format_rational(a_);
    std::string r3 = format_rational(abs(b_)) + "*r3";
    if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + r3;
    return format_rational(a_) + (sgn(b_) < 0 ? "-" : "+") + r3;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Rational parse_rational(std::string_view s, std::string_view whole) {
    s = trim(s);
    auto fail = [&] { throw InputError("malformed number '" + std::string(whole) + "'"); };
    if (s.empty()) fail();
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    bool seen_digit = false;
    bool seen_slash = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        char c = s[k];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit && k + 1 < s.size()) {
            seen_slash = true;
            seen_digit = false;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();
    std::string text(s[0] == '+' ? s.substr(1) : s);
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) fail();
    q.canonicalize();
    return q;
}

// Coefficient of r3: "", "+", "-" stand for 1, 1, -1.
Rational parse_r3_coefficient(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!s.empty() && s.back() == '*') {
        s = trim(s.substr(0, s.size() - 1));
        if (s.empty() || s == "+" || s == "-") throw InputError("malformed number '" + std::string(whole) + "'");
    }
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_rational(s, whole);
}

}  // namespace

QSqrt3 QSqrt3::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw InputError("empty coordinate");
    auto pos = s.find("r3");
    if (pos == std::string_view::npos) return QSqrt3(parse_rational(s, text), 0);
    if (pos + 2 != s.size()) throw InputError("malformed number '" + std::string(text) + "'");
    std::string_view head = s.substr(0, pos);
    // split head into "p" and "+q*" / "-q*" at the last sign not in leading position
    std::size_t split = std::string_view::npos;
    for (std::size_t k = head.size(); k-- > 1;) {
        if ((head[k] == '+' || head[k] == '-') && head[k - 1] != '/') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return QSqrt3(0, parse_r3_coefficient(head, text));
    Rational a = parse_rational(head.substr(0, split), text);
    std::string_view tail = head.substr(split);
    // "p+-q*r3" is accepted as p + (-q) r3
    Rational b;
    if (tail.size() > 1 && (tail[1] == '-' || tail[1] == '+')) {
        b = parse_r3_coefficient(tail.substr(1), text);
        if (tail[0] == '-') b = -b;
    } else {
        b = parse_r3_coefficient(tail, text);
    }
    return QSqrt3(a, b);
}

QSqrt3 dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch in dot product");
    QSqrt3 s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Vec operator+(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

Vec operator-(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

Vec operator-(const Vec& x) {
    Vec r(x);
    for (auto& c : r) c = -c;
    return r;
}

Vec scale(const QSqrt3& s, const Vec& x) {
    Vec r(x);
    for (auto& c : r) c *= s;
    return r;
}

bool is_zero(const Vec& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

bool lex_less(const Vec& x, const Vec& y) {
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = x[i] <=> y[i];
        if (c != 0) return c < 0;
    }
    return x.size() < y.size();
}

std::string format_vec(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + "]";
}

Vec parse_vec(std::string_view text) {
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw InputError("root text must look like [c1,...,ck]: '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    Vec v;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view piece = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
        try {
            v.push_back(QSqrt3::parse(piece));
        } catch (const InputError& e) {
            throw InputError(std::string(e.what()) + " at coordinate " + std::to_string(v.size() + 1) +
                             " of '" + std::string(text) + "'");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return v;
}

std::vector<Vec> parse_vec_list(std::string_view text) {
    std::vector<Vec> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '"') {
            ++i;
            continue;
        }
        if (c != '[')
            throw InputError("unexpected character '" + std::string(1, c) + "' at position " +
                             std::to_string(i + 1) + " in root list");
        std::size_t close = text.find(']', i);
        if (close == std::string_view::npos)
            throw InputError("unterminated '[' at position " + std::to_string(i + 1) + " in root list");
        out.push_back(parse_vec(text.substr(i, close - i + 1)));
        i = close + 1;
    }
    return out;
}

}  // namespace trisym
