#include "trisym/rootsys.hpp"

#include "trisym/fourier_motzkin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace trisym {

namespace {

Vec unit(int dim, int i, long c = 1) {
    Vec v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(i)] = QSqrt3(c);
    return v;
}

Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Vec halves(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(Rational(x, 2));
    return v;
}

void add_pm_ei_pm_ej(std::vector<Vec>& out, int dim, int limit) {
    for (int i = 0; i < limit; ++i)
        for (int j = i + 1; j < limit; ++j)
            for (long si : {1L, -1L})
                for (long sj : {1L, -1L}) out.push_back(unit(dim, i, si) + unit(dim, j, sj));
}

std::vector<Vec> e8_roots() {
    std::vector<Vec> out;
    add_pm_ei_pm_ej(out, 8, 8);
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        Vec v(8);
        for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = QSqrt3(Rational((mask >> i) & 1 ? -1 : 1, 2));
        out.push_back(v);
    }
    return out;
}

std::vector<Vec> e_simple(int rank) {
    std::vector<Vec> s = {
        halves({1, -1, -1, -1, -1, -1, -1, 1}),
        ints({1, 1, 0, 0, 0, 0, 0, 0}),
        ints({-1, 1, 0, 0, 0, 0, 0, 0}),
        ints({0, -1, 1, 0, 0, 0, 0, 0}),
        ints({0, 0, -1, 1, 0, 0, 0, 0}),
        ints({0, 0, 0, -1, 1, 0, 0, 0}),
        ints({0, 0, 0, 0, -1, 1, 0, 0}),
        ints({0, 0, 0, 0, 0, -1, 1, 0}),
    };
    s.resize(static_cast<std::size_t>(rank));
    return s;
}

// Catalog realization: root vectors plus the catalog simple roots.
std::pair<std::vector<Vec>, std::vector<Vec>> realize(const SimpleType& t) {
    std::vector<Vec> roots, simple;
    const int n = t.rank;
    switch (t.label) {
    case 'A': {
        const int dim = n + 1;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j) roots.push_back(unit(dim, i) - unit(dim, j));
        for (int i = 0; i < n; ++i) simple.push_back(unit(dim, i) - unit(dim, i + 1));
        break;
    }
    case 'B':
    case 'C':
    case 'D': {
        add_pm_ei_pm_ej(roots, n, n);
        long k = t.label == 'C' ? 2 : 1;
        if (t.label != 'D')
            for (int i = 0; i < n; ++i) {
                roots.push_back(unit(n, i, k));
                roots.push_back(unit(n, i, -k));
            }
        for (int i = 0; i + 1 < n; ++i) simple.push_back(unit(n, i) - unit(n, i + 1));
        if (t.label == 'D') simple.push_back(unit(n, n - 2) + unit(n, n - 1));
        else simple.push_back(unit(n, n - 1, k));
        break;
    }
    case 'E': {
        Vec w7 = ints({0, 0, 0, 0, 0, 0, 1, 1});
        Vec w6 = ints({0, 0, 0, 0, 0, 1, 0, 1});
        for (auto& r : e8_roots()) {
            if (n <= 7 && !dot(r, w7).is_zero()) continue;
            if (n == 6 && !dot(r, w6).is_zero()) continue;
            roots.push_back(r);
        }
        simple = e_simple(n);
        break;
    }
    case 'F': {
        add_pm_ei_pm_ej(roots, 4, 4);
        for (int i = 0; i < 4; ++i) {
            roots.push_back(unit(4, i));
            roots.push_back(unit(4, i, -1));
        }
        for (int mask = 0; mask < 16; ++mask) {
            Vec v(4);
            for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = QSqrt3(Rational((mask >> i) & 1 ? -1 : 1, 2));
            roots.push_back(v);
        }
        simple = {ints({0, 1, -1, 0}), ints({0, 0, 1, -1}), ints({0, 0, 0, 1}), halves({1, -1, -1, -1})};
        break;
    }
    case 'G': {
        // the planar table, verbatim
        auto g = [](long a, long b) { return Vec{QSqrt3(a), QSqrt3(0, b)}; };
        for (const auto& r : {g(0, 2), g(3, 1), g(-3, 1), g(1, 1), g(-1, 1), g(2, 0)}) {
            roots.push_back(r);
            roots.push_back(-r);
        }
        simple = {g(-3, 1), g(2, 0)};
        break;
    }
    default:
        throw InputError("invalid type '" + t.str() + "'");
    }
    return {roots, simple};
}

int ambient_dim_of(const SimpleType& t) {
    switch (t.label) {
    case 'A': return t.rank + 1;
    case 'E': return 8;
    case 'G': return 2;
    default: return t.rank;
    }
}

// Gauss-Jordan inverse over Q[sqrt 3]; nullopt when singular.
std::optional<std::vector<Vec>> invert(std::vector<Vec> m) {
    const std::size_t n = m.size();
    std::vector<Vec> inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = QSqrt3(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        QSqrt3 p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            QSqrt3 f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<Vec> gram(const RootSystem& rs, const std::vector<RootId>& ids) {
    std::vector<Vec> g(ids.size(), Vec(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < ids.size(); ++j) g[i][j] = dot(rs.root(ids[i]), rs.root(ids[j]));
    return g;
}

std::string coeff_text(const std::vector<QSqrt3>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
    return s + ")";
}

}  // namespace

SimpleType parse_simple_type(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
        throw InputError("invalid type '" + std::string(text) + "'");
    SimpleType t;
    t.label = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InputError("invalid type '" + std::string(text) + "'");
    if (s.size() > 4) throw InputError("invalid type '" + std::string(text) + "'");
    t.rank = std::stoi(s.substr(1));
    check_simple_type(t);
    return t;
}

void check_simple_type(const SimpleType& t) {
    bool ok = false;
    switch (t.label) {
    case 'A': ok = t.rank >= 1; break;
    case 'B': ok = t.rank >= 3; break;
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 4; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: break;
    }
    if (!ok) {
        std::string hint = t.label == 'B' && t.rank == 2 ? " (B2 is realized as C2)" : "";
        throw InputError("invalid type '" + t.str() + "'" + hint);
    }
}

std::optional<std::vector<long>> RootSystem::key(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim_) return std::nullopt;
    std::vector<long> k;
    k.reserve(2 * v.size());
    for (const auto& c : v) {
        for (const Rational* q : {&c.rational_part(), &c.sqrt3_part()}) {
            Rational s = *q * denom_;
            s.canonicalize();
            if (s.get_den() != 1 || !s.get_num().fits_slong_p()) return std::nullopt;
            k.push_back(s.get_num().get_si());
        }
    }
    return k;
}

RootSystemPtr RootSystem::build(SimpleType type) {
    check_simple_type(type);
    auto [roots, simple] = realize(type);
    std::shared_ptr<RootSystem> rs(new RootSystem());
    rs->type_ = type;
    rs->dim_ = ambient_dim_of(type);
    std::sort(roots.begin(), roots.end(), lex_less);
    rs->roots_ = std::move(roots);
    rs->tabulate();
    for (const auto& s : simple) rs->catalog_simple_.push_back(rs->require(s));
    return rs;
}

RootSystemPtr build_root_system(char label, int rank) { return RootSystem::build(SimpleType{label, rank}); }

void RootSystem::tabulate() {
    mpz_class d = 1;
    for (const auto& r : roots_)
        for (const auto& c : r) {
            d = lcm(d, c.rational_part().get_den());
            d = lcm(d, c.sqrt3_part().get_den());
        }
    denom_ = d.get_si();

    const std::size_t n = roots_.size();
    keys_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        keys_.push_back(*key(roots_[i]));
        index_.emplace(keys_.back(), static_cast<RootId>(i));
    }

    neg_.assign(n, kNoRoot);
    sum_.assign(n * n, kNoRoot);
    cartan_.assign(n * n, 0);
    norm2_.clear();

    // integer dot products: D^2 <x,y> = rat + irr*sqrt3
    auto idot = [&](std::size_t a, std::size_t b) {
        long rat = 0, irr = 0;
        const auto& x = keys_[a];
        const auto& y = keys_[b];
        for (std::size_t i = 0; i < x.size(); i += 2) {
            rat += x[i] * y[i] + 3 * x[i + 1] * y[i + 1];
            irr += x[i] * y[i + 1] + x[i + 1] * y[i];
        }
        return std::pair{rat, irr};
    };
    std::vector<long> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        norm2_.push_back(dot(roots_[i], roots_[i]));
        auto [rat, irr] = idot(i, i);
        if (irr != 0 || rat <= 0) throw std::logic_error("catalog root with non-rational norm");
        sq[i] = rat;
    }

    std::vector<long> buf(keys_.front().size());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < buf.size(); ++j) buf[j] = -keys_[a][j];
        neg_[a] = index_.at(buf);
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t j = 0; j < buf.size(); ++j) buf[j] = keys_[a][j] + keys_[b][j];
            auto it = index_.find(buf);
            if (it != index_.end()) sum_[a * n + b] = it->second;
            auto [rat, irr] = idot(a, b);
            if (irr != 0 || (2 * rat) % sq[b] != 0)
                throw std::logic_error("non-integral Cartan pairing in catalog realization");
            long c = 2 * rat / sq[b];
            if (c < -3 || c > 3) throw std::logic_error("Cartan pairing out of range");
            cartan_[a * n + b] = static_cast<std::int8_t>(c);
        }
    }
}

std::optional<RootId> RootSystem::find(const Vec& v) const {
    auto k = key(v);
    if (!k) return std::nullopt;
    auto it = index_.find(*k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RootId RootSystem::require(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw InputError(format_vec(v) + " has " + std::to_string(v.size()) + " coordinates; " + type_.str() +
                         " roots have " + std::to_string(dim_));
    auto id = find(v);
    if (!id) throw InputError(format_vec(v) + " is not a root of " + type_.str());
    return *id;
}

RootId RootSystem::parse_root(std::string_view text) const { return require(parse_vec(text)); }

std::vector<RootId> RootSystem::parse_roots(std::string_view text) const {
    std::vector<RootId> out;
    for (const auto& v : parse_vec_list(text)) out.push_back(require(v));
    return out;
}

int cartan_pairing(const RootSystem& rs, const Vec& a, const Vec& b) {
    return rs.cartan(rs.require(a), rs.require(b));
}

std::vector<RootId> Base::positives() const {
    std::vector<RootId> out;
    for (RootId i = 0; i < rs_->size(); ++i)
        if (is_positive(i)) out.push_back(i);
    return out;
}

int Base::height(RootId id) const {
    const auto& c = coefficients(id);
    return std::accumulate(c.begin(), c.end(), 0);
}

int Base::simple_index(RootId id) const {
    auto it = std::find(simple_.begin(), simple_.end(), id);
    return it == simple_.end() ? -1 : static_cast<int>(it - simple_.begin());
}

std::vector<QSqrt3> solve_coordinates(const Base& base, const Vec& v) {
    const RootSystem& rs = base.rs();
    if (static_cast<int>(v.size()) != rs.ambient_dim())
        throw InputError(format_vec(v) + " has the wrong number of coordinates");
    const std::size_t r = base.simple_.size();
    Vec rhs(r);
    for (std::size_t i = 0; i < r; ++i) rhs[i] = dot(v, rs.root(base.simple_[i]));
    std::vector<QSqrt3> c(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) c[i] += base.gram_inverse_[i][j] * rhs[j];
    Vec back(v.size());
    for (std::size_t i = 0; i < r; ++i) back = back + scale(c[i], rs.root(base.simple_[i]));
    if (!(back == v)) throw InputError(format_vec(v) + " is not in the span of the simple roots");
    return c;
}

Coefficients decompose(const Base& base, const Vec& alpha) {
    RootId id = base.rs().require(alpha);
    return base.coefficients(id);
}

Base validate_base(const RootSystemPtr& rs, const std::vector<RootId>& candidate) {
    if (static_cast<int>(candidate.size()) != rs->rank())
        throw InputError("a base of " + rs->type().str() + " has " + std::to_string(rs->rank()) + " roots, got " +
                         std::to_string(candidate.size()));
    auto inv = invert(gram(*rs, candidate));
    if (!inv) throw InputError("candidate simple roots are linearly dependent");

    Base b;
    b.rs_ = rs;
    b.simple_ = candidate;
    b.gram_inverse_ = std::move(*inv);
    const auto n = static_cast<std::size_t>(rs->size());
    b.positive_.assign(n, 0);
    b.coeffs_.assign(n, Coefficients(candidate.size()));
    for (RootId a = 0; a < rs->size(); ++a) {
        auto c = solve_coordinates(b, rs->root(a));
        int sign = 0;
        bool ok = true;
        for (std::size_t i = 0; i < c.size() && ok; ++i) {
            const QSqrt3& x = c[i];
            if (!x.is_rational() || x.rational_part().get_den() != 1) {
                ok = false;
                break;
            }
            long v = x.rational_part().get_num().get_si();
            b.coeffs_[static_cast<std::size_t>(a)][i] = static_cast<int>(v);
            int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (s != 0 && sign != 0 && s != sign) ok = false;
            if (s != 0) sign = s;
        }
        if (!ok)
            throw InputError("not a base: root " + rs->text(a) + " has coefficients " + coeff_text(c) +
                             " that are not all nonnegative or all nonpositive integers");
        b.positive_[static_cast<std::size_t>(a)] = sign > 0;
    }

    RootId best = kNoRoot;
    for (RootId a = 0; a < rs->size(); ++a)
        if (b.is_positive(a) && (best == kNoRoot || b.height(a) > b.height(best))) best = a;
    for (RootId a = 0; a < rs->size(); ++a) {
        if (!b.is_positive(a)) continue;
        for (std::size_t i = 0; i < candidate.size(); ++i)
            if (b.coefficients(best)[i] < b.coefficients(a)[i])
                throw std::logic_error("highest root does not dominate " + rs->text(a));
    }
    b.highest_ = best;
    return b;
}

Base catalog_base(const RootSystemPtr& rs) { return validate_base(rs, rs->catalog_simple()); }

Base base_from_regular_vector(const RootSystemPtr& rs, const Vec& v) {
    if (static_cast<int>(v.size()) != rs->ambient_dim())
        throw InputError("regular vector " + format_vec(v) + " has the wrong number of coordinates");
    std::vector<char> pos(static_cast<std::size_t>(rs->size()));
    for (RootId a = 0; a < rs->size(); ++a) {
        int s = dot(v, rs->root(a)).sign();
        if (s == 0) throw InputError("vector " + format_vec(v) + " is orthogonal to the root " + rs->text(a));
        pos[static_cast<std::size_t>(a)] = s > 0;
    }
    std::vector<char> decomposable(pos.size());
    for (RootId a = 0; a < rs->size(); ++a) {
        if (!pos[static_cast<std::size_t>(a)]) continue;
        for (RootId b = 0; b < rs->size(); ++b) {
            if (!pos[static_cast<std::size_t>(b)]) continue;
            RootId s = rs->sum(a, b);
            if (s != kNoRoot) decomposable[static_cast<std::size_t>(s)] = 1;
        }
    }
    std::vector<RootId> simple;
    for (RootId a = rs->size(); a-- > 0;)
        if (pos[static_cast<std::size_t>(a)] && !decomposable[static_cast<std::size_t>(a)]) simple.push_back(a);
    return validate_base(rs, simple);
}

PositiveSystemResult find_positive_system(const RootSystemPtr& rs, const std::vector<RootId>& S) {
    PositiveSystemResult out;
    std::vector<char> in(static_cast<std::size_t>(rs->size()));
    for (RootId a : S) in[static_cast<std::size_t>(a)] = 1;
    for (RootId a : S) {
        if (in[static_cast<std::size_t>(rs->neg(a))]) {
            out.failure = "S ∩ −S ≠ ∅: both " + rs->text(a) + " and " + rs->text(rs->neg(a)) + " lie in S";
            return out;
        }
    }
    for (RootId a : S)
        for (RootId b : S) {
            RootId s = rs->sum(a, b);
            if (s != kNoRoot && !in[static_cast<std::size_t>(s)]) {
                out.failure = "S is not closed: " + rs->text(a) + " + " + rs->text(b) + " = " + rs->text(s) +
                              " is not in S";
                return out;
            }
        }

    // unknowns: x_i = <v, beta_i> on the catalog simple roots
    Base cat = catalog_base(rs);
    const int r = rs->rank();
    std::vector<IntRow> rows;
    for (RootId a : S) {
        IntRow row;
        for (int c : cat.coefficients(a)) row.emplace_back(c);
        rows.push_back(std::move(row));
    }
    auto x = solve_strict_homogeneous(rows, r);
    if (!x) {
        out.failure = "internal inconsistency: S is closed and S ∩ −S = ∅ but no regular vector is positive on S";
        return out;
    }

    // perturb by the height functional so that no root pairs to zero
    auto value = [&](RootId a, const std::vector<Rational>& xs) {
        Rational s = 0;
        for (int i = 0; i < r; ++i) s += cat.coefficients(a)[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(i)];
        return s;
    };
    std::optional<Rational> min_abs;
    int max_height = 0;
    for (RootId a = 0; a < rs->size(); ++a) {
        Rational val = value(a, *x);
        if (sgn(val) != 0 && (!min_abs || abs(val) < *min_abs)) min_abs = abs(val);
        max_height = std::max(max_height, std::abs(cat.height(a)));
    }
    Rational scale_factor = 1;
    if (min_abs) {
        Rational q = Rational(max_height) / *min_abs;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        scale_factor = Rational(f + 1);
    }
    std::vector<QSqrt3> target(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) target[static_cast<std::size_t>(i)] = QSqrt3(Rational(scale_factor * (*x)[static_cast<std::size_t>(i)] + 1));

    // ambient v = sum y_j beta_j with Gram * y = target
    auto inv = invert(gram(*rs, cat.simple()));
    Vec v(static_cast<std::size_t>(rs->ambient_dim()));
    for (int j = 0; j < r; ++j) {
        QSqrt3 y;
        for (int k = 0; k < r; ++k) y += (*inv)[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * target[static_cast<std::size_t>(k)];
        v = v + scale(y, rs->root(cat.simple_root(j)));
    }
    Base found = base_from_regular_vector(rs, v);
    for (RootId a : S)
        if (!found.is_positive(a)) throw std::logic_error("regular vector is not positive on " + rs->text(a));
    out.base = std::move(found);
    out.regular_vector = std::move(v);
    return out;
}

std::vector<std::vector<int>> cartan_matrix(const RootSystem& rs, const std::vector<RootId>& system) {
    std::vector<std::vector<int>> c(system.size(), std::vector<int>(system.size()));
    for (std::size_t i = 0; i < system.size(); ++i)
        for (std::size_t j = 0; j < system.size(); ++j) c[i][j] = rs.cartan(system[i], system[j]);
    return c;
}

namespace {

SimpleType identify_component(const std::vector<std::size_t>& nodes, const std::vector<std::vector<int>>& C) {
    const std::size_t m = nodes.size();
    auto fail = [&](const std::string& why) -> SimpleType {
        throw InputError("Cartan matrix component of size " + std::to_string(m) + " is not of finite type: " + why);
    };
    if (m == 1) return {'A', 1};
    std::vector<std::vector<std::size_t>> adj(m);
    std::size_t edges = 0, doubles = 0, triples = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            int bond = C[nodes[i]][nodes[j]] * C[nodes[j]][nodes[i]];
            if (bond == 0) continue;
            ++edges;
            adj[i].push_back(j);
            adj[j].push_back(i);
            if (bond == 2) ++doubles;
            if (bond == 3) ++triples;
        }
    if (edges != m - 1) return fail("diagram contains a cycle");
    std::size_t max_deg = 0;
    for (const auto& a : adj) max_deg = std::max(max_deg, a.size());

    if (triples > 0) {
        if (m == 2) return {'G', 2};
        return fail("triple bond in a diagram with more than two nodes");
    }
    if (doubles > 1) return fail("more than one multiple bond");
    if (doubles == 1) {
        if (max_deg > 2) return fail("branched diagram with a double bond");
        if (m == 2) return {'C', 2};
        std::vector<std::size_t> path;
        std::size_t start = 0;
        while (adj[start].size() != 1) ++start;
        path.push_back(start);
        while (path.size() < m) {
            std::size_t cur = path.back();
            for (std::size_t nb : adj[cur])
                if (path.size() < 2 || nb != path[path.size() - 2]) {
                    path.push_back(nb);
                    break;
                }
        }
        std::size_t k = 0;
        while (C[nodes[path[k]]][nodes[path[k + 1]]] * C[nodes[path[k + 1]]][nodes[path[k]]] != 2) ++k;
        if (m == 4 && k == 1) return {'F', 4};
        if (k == 0) {
            std::reverse(path.begin(), path.end());
            k = m - 2;
        }
        if (k != m - 2) return fail("double bond in the interior of a long chain");
        std::size_t end = nodes[path[m - 1]];
        std::size_t inner = nodes[path[m - 2]];
        // C[inner][end] = -2 means the end node is short
        return {C[inner][end] == -2 ? 'B' : 'C', static_cast<int>(m)};
    }
    if (max_deg <= 2) return {'A', static_cast<int>(m)};
    std::size_t branch = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (adj[i].size() > 3) return fail("node of degree greater than three");
        if (adj[i].size() == 3) {
            if (branch != m) return fail("two branch nodes");
            branch = i;
        }
    }
    std::vector<int> arms;
    for (std::size_t start : adj[branch]) {
        int len = 1;
        std::size_t prev = branch, cur = start;
        while (adj[cur].size() == 2) {
            std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', static_cast<int>(m)};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', static_cast<int>(m)};
    return fail("branched diagram outside the D and E series");
}

}  // namespace

DynkinComponents dynkin_type(const RootSystem& rs, const std::vector<RootId>& system) {
    const std::size_t n = system.size();
    if (n == 0) return {};
    if (!invert(gram(rs, system))) throw InputError("simple system is linearly dependent");
    auto C = cartan_matrix(rs, system);
    for (std::size_t i = 0; i < n; ++i) {
        if (C[i][i] != 2) throw InputError("non-admissible Cartan matrix: diagonal entry is not 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (C[i][j] > 0)
                throw InputError("non-admissible Cartan matrix: (" + rs.text(system[i]) + "/" + rs.text(system[j]) +
                                 ") = " + std::to_string(C[i][j]) + " is positive");
            if ((C[i][j] == 0) != (C[j][i] == 0) || C[i][j] * C[j][i] > 3)
                throw InputError("non-admissible Cartan matrix at " + rs.text(system[i]) + ", " + rs.text(system[j]));
        }
    }
    std::vector<int> comp(n, -1);
    DynkinComponents out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> nodes{s};
        comp[s] = static_cast<int>(s);
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (comp[j] < 0 && C[nodes[k]][j] != 0) {
                    comp[j] = static_cast<int>(s);
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(identify_component(nodes, C));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_dynkin(const DynkinComponents& comps) {
    if (comps.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? "+" : "") + comps[i].str();
    return s;
}

std::vector<RootId> generated_subsystem(const RootSystem& rs, const std::vector<RootId>& seed) {
    std::vector<char> in(static_cast<std::size_t>(rs.size()));
    std::vector<RootId> members;
    auto add = [&](RootId a) {
        if (!in[static_cast<std::size_t>(a)]) {
            in[static_cast<std::size_t>(a)] = 1;
            members.push_back(a);
        }
    };
    for (RootId a : seed) {
        add(a);
        add(rs.neg(a));
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            RootId s = rs.sum(members[i], members[j]);
            if (s != kNoRoot) add(s);
        }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<RootId> subsystem_simple_roots(const Base& ambient, const std::vector<RootId>& subsystem) {
    const RootSystem& rs = ambient.rs();
    std::vector<RootId> pos;
    for (RootId a : subsystem)
        if (ambient.is_positive(a)) pos.push_back(a);
    std::set<RootId> decomposable;
    std::set<RootId> pos_set(pos.begin(), pos.end());
    for (RootId a : pos)
        for (RootId b : pos) {
            RootId s = rs.sum(a, b);
            if (s != kNoRoot && pos_set.count(s)) decomposable.insert(s);
        }
    std::vector<RootId> simple;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        if (!decomposable.count(*it)) simple.push_back(*it);
    return simple;
}

}  // namespace trisym
