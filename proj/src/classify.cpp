#include "trisym/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisym {

namespace {

std::vector<int> marks(const Base& base) { return base.coefficients(base.highest()); }

}  // namespace

int root_count(const SimpleType& t) {
    const int n = t.rank;
    switch (t.label) {
        case 'A': return n * (n + 1);
        case 'B':
        case 'C': return 2 * n * n;
        case 'D': return 2 * n * (n - 1);
        case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
        case 'F': return 48;
        case 'G': return 12;
    }
    throw std::invalid_argument("unknown type " + t.str());
}

WolfTwistor wolf_twistor(const Base& base) {
    const RootSystem& rs = base.rs();
    const RootId gamma = base.highest();
    if (base.rank() < 2)
        throw InputError("rank-one systems have no Wolf space: the highest root is simple and pairs to 2 with itself");
    std::vector<int> pairing(static_cast<std::size_t>(rs.size()));
    for (RootId a = 0; a < rs.size(); ++a) {
        int p = rs.cartan(a, gamma);
        pairing[static_cast<std::size_t>(a)] = p;
        if (a != gamma && a != rs.neg(gamma) && (p < -1 || p > 1))
            throw std::logic_error("(" + rs.text(a) + "/gamma) = " + std::to_string(p));
    }
    std::vector<int> subset;
    for (int i = 0; i < base.rank(); ++i)
        if (pairing[static_cast<std::size_t>(base.simple_root(i))] == 1) subset.push_back(i);
    ParabolicDatum datum(base, subset);
    GradedDecomposition g(datum);
    if (g.max_level() != 2 || g.level_set(2) != RootSet(rs.size(), {gamma}))
        throw std::logic_error("Wolf grading does not have g^2 = {gamma}");
    const RootSystemPtr& sys = base.system();
    return WolfTwistor{datum,
                       g,
                       WeightSpaceSet(sys, true, g.level_zero()),
                       WeightSpaceSet(sys, false, g.positive_part()),
                       j2_flip(g),
                       std::move(pairing)};
}

std::string to_string(InnerKind k) {
    switch (k) {
        case InnerKind::Singleton1: return "singleton-1";
        case InnerKind::Singleton2: return "singleton-2";
        case InnerKind::Pair11: return "pair-1-1";
        case InnerKind::Mark3: return "mark-3";
    }
    return "unknown";
}

MaximalRankSubalgebra borel_de_siebenthal(const Base& base, int delta) {
    const RootSystem& rs = base.rs();
    if (delta < 0 || delta >= base.rank()) throw InputError("simple root index out of range");
    const auto m = marks(base);
    if (m[static_cast<std::size_t>(delta)] != 3)
        throw InputError("simple root " + std::to_string(delta + 1) + " has mark " +
                         std::to_string(m[static_cast<std::size_t>(delta)]) + " in the highest root; 3 is required");
    MaximalRankSubalgebra out;
    out.h = WeightSpaceSet::empty(base.system());
    out.h.cartan = true;
    out.level3 = RootSet(rs.size());
    for (RootId a = 0; a < rs.size(); ++a) {
        int n = base.coefficients(a)[static_cast<std::size_t>(delta)];
        if (n == 0 || n == 3 || n == -3) out.h.roots.insert(a);
        if (n == 3) out.level3.insert(a);
    }
    InclusionCheck closed = check_bracket_inclusion("[h,h] ⊆ h", out.h, out.h, out.h);
    if (!closed.holds) throw std::logic_error("h_delta is not closed: " + closed.witnesses.front());

    for (int i = 0; i < base.rank(); ++i)
        if (i != delta) out.simple_system.push_back(base.simple_root(i));
    out.simple_system.push_back(rs.neg(base.highest()));
    out.type = dynkin_type(rs, out.simple_system);
    int count = 0;
    for (const auto& t : out.type) count += root_count(t);
    if (count != out.h.roots.count() || static_cast<int>(generated_subsystem(rs, out.simple_system).size()) != count)
        throw std::logic_error("(B - {delta}) + {-gamma} does not span h_delta");

    Fibration3 fib(GradedDecomposition(ParabolicDatum(base, {delta})));
    if (fib.h() != out.h) throw std::logic_error("degree-3 fibration at {delta} does not reproduce h_delta");
    return out;
}

std::vector<InnerCase> gray_wolf_inner(const Base& base) {
    const RootSystem& rs = base.rs();
    const auto m = marks(base);
    const int r = base.rank();
    std::vector<InnerCase> out;

    auto flag_case = [&](InnerKind kind, std::vector<int> subset) {
        InnerCase c;
        c.kind = kind;
        c.subset = subset;
        for (int i = 0; i < r; ++i)
            if (std::find(subset.begin(), subset.end(), i) == subset.end()) c.h_simple_system.push_back(base.simple_root(i));
        c.h_type = format_dynkin(dynkin_type(rs, c.h_simple_system));
        c.cartan_rank = r;
        c.fibre_dim = 0;
        c.fibre_pattern = "point";
        c.fibre_roots = RootSet(rs.size());
        out.push_back(std::move(c));
    };

    for (int i = 0; i < r; ++i) {
        int mi = m[static_cast<std::size_t>(i)];
        if (mi == 1) flag_case(InnerKind::Singleton1, {i});
        if (mi == 2) flag_case(InnerKind::Singleton2, {i});
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (m[static_cast<std::size_t>(i)] == 1 && m[static_cast<std::size_t>(j)] == 1) flag_case(InnerKind::Pair11, {i, j});
    for (int i = 0; i < r; ++i) {
        if (m[static_cast<std::size_t>(i)] != 3) continue;
        MaximalRankSubalgebra bds = borel_de_siebenthal(base, i);
        InnerCase c;
        c.kind = InnerKind::Mark3;
        c.subset = {i};
        c.h_simple_system = bds.simple_system;
        c.h_type = format_dynkin(bds.type);
        c.cartan_rank = r;
        c.fibre_dim = 2 * bds.level3.count();
        c.fibre_pattern = projective_pattern(rs, bds.level3, base);
        c.fibre_roots = bds.level3 | bds.level3.negated(rs);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace trisym
