// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.
#include "support.hpp"
#include "trisym/classify.hpp"
#include "trisym/twistor.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sys/wait.h>
#include <sstream>
#include <string>
#include <vector>

using namespace trisym;

namespace {

class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) problems_.push_back(what);
    }
    bool passed() const { return problems_.empty(); }
    int checks() const { return checks_; }
    const std::vector<std::string>& problems() const { return problems_; }

private:
    int checks_ = 0;
    std::vector<std::string> problems_;
};

RootSystemPtr sys(const char* t) { return build_root_system(parse_simple_type(t)); }

RootSet set_of(const RootSystem& rs, const std::string& text, bool with_negatives = false) {
    RootSet s(rs.size());
    if (text.empty()) return s;
    for (RootId a : rs.parse_roots(text)) {
        s.insert(a);
        if (with_negatives) s.insert(rs.neg(a));
    }
    return s;
}

Base base_of(const RootSystemPtr& rs, const std::string& text) { return validate_base(rs, rs->parse_roots(text)); }

GradedDecomposition grading(const Base& b, const std::string& subset) {
    return GradedDecomposition(ParabolicDatum(b, parse_subset(subset, b.rank())));
}

std::vector<std::vector<int>> subsets(int rank) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1U << rank); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < rank; ++i)
            if (mask & (1U << i)) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

const char* kG2Base = "[-3,1*r3],[2,0]";
const char* kA3Base = "[1,-1,0,0],[0,1,-1,0],[0,0,1,-1]";
const char* kA3SecondBase = "[-1,0,1,0],[0,0,-1,1],[0,1,0,-1]";
const char* kSU4MPlus = "[1,-1,0,0],[0,1,-1,0],[0,1,0,-1],[-1,0,0,1],[-1,0,1,0]";

void g2_tables(Criterion& c) {
    auto rs = sys("G2");
    Base b = base_of(rs, kG2Base);
    GradedDecomposition g = grading(b, "2");
    c.expect(g.level_set(1) == set_of(*rs, "[-1,1*r3],[2,0]"), "A={2}: g^1");
    c.expect(g.level_set(2) == set_of(*rs, "[1,1*r3]"), "A={2}: g^2");
    c.expect(g.level_set(3) == set_of(*rs, "[0,2*r3],[3,1*r3]"), "A={2}: g^3");
    c.expect(g.level_set(4).empty(), "A={2}: g^4 = 0");
    Fibration3 f(g);
    c.expect(f.h().cartan && f.h().roots == set_of(*rs, "[-3,1*r3],[0,2*r3],[3,1*r3]", true), "A={2}: h");
    c.expect(f.m_plus().roots == set_of(*rs, "[-1,1*r3],[2,0],[-1,-1*r3]"), "A={2}: m+");

    GradedDecomposition g12 = grading(b, "12");
    const std::array<const char*, 5> levels = {"[2,0],[-3,1*r3]", "[-1,1*r3]", "[1,1*r3]", "[3,1*r3]", "[0,2*r3]"};
    for (int r = 1; r <= 5; ++r)
        c.expect(g12.level_set(r) == set_of(*rs, levels[static_cast<std::size_t>(r - 1)]), "A={1,2}: g^" + std::to_string(r));
    c.expect(g12.level_set(6).empty(), "A={1,2}: g^6 = 0");
    Fibration3 f12(g12);
    c.expect(f12.h().cartan && f12.h().roots == set_of(*rs, "[1,1*r3]", true), "A={1,2}: h");
    c.expect(f12.m_plus().roots == set_of(*rs, "[2,0],[-3,1*r3],[1,-1*r3],[3,1*r3],[0,-2*r3]"), "A={1,2}: m+");
}

void su4_suite(Criterion& c) {
    auto rs = sys("A3");
    Base b = base_of(rs, kA3Base);
    // (a)
    GradedDecomposition g = grading(b, "12");
    c.expect(g.level_set(1) == set_of(*rs, "[1,-1,0,0],[0,1,-1,0],[0,1,0,-1]"), "(a) g^1");
    c.expect(g.level_set(2) == set_of(*rs, "[1,0,0,-1],[1,0,-1,0]"), "(a) g^2");
    c.expect(g.level_set(3).empty(), "(a) g^3 = 0");
    SymmetricPair p = degree2(g);
    c.expect(p.f.cartan && p.f.roots == (g.level_zero() | set_of(*rs, "[1,0,0,-1],[1,0,-1,0]", true)), "(a) f");
    // (b)
    for (const auto& s : subsets(3)) {
        if (s.empty()) continue;
        Fibration3 f(GradedDecomposition(ParabolicDatum(b, s)));
        c.expect(f.trivial() == (s.size() != 3), "(b) triviality of A=" + format_subset(s));
    }
    // (c)
    c.expect(j2_flip(g).roots == set_of(*rs, kSU4MPlus), "(c) j2 flip of A={1,2}");
    // (d)
    Base b2 = base_of(rs, kA3SecondBase);
    c.expect(b2.highest() == rs->parse_root("[-1,1,0,0]"), "(d) highest root of the second base");
    GradedDecomposition g2 = grading(b2, "13");
    c.expect(g2.level_zero() == g.level_zero(), "(d) k''_13 = k_12");
    c.expect(g2.positive_part() == set_of(*rs, "[-1,1,0,0],[0,1,-1,0],[0,1,0,-1],[-1,0,0,1],[-1,0,1,0]"), "(d) l''+_13");
    Fibration3 f2(g2);
    c.expect(f2.h().roots == g.level_zero() && f2.m_plus().roots == set_of(*rs, kSU4MPlus), "(d) m''+ = m+");
    c.expect(j2_flip(g2) == j2_flip(g), "(d) equal 3-symmetric structures");
    // (e)
    EqualRankSpace s = EqualRankSpace::from_roots(rs, rs->parse_roots("[0,1,-1,0]"));
    TwistorCandidate n = nplus_from_base(s, b2);
    c.expect(n.n_plus().roots == set_of(*rs, "[-1,0,0,1],[-1,0,1,0],[-1,1,0,0],[0,1,0,-1],[0,0,-1,1]"), "(e) n+");
    c.expect(integrability(n).pass(), "(e) integrability");
    Recovery r = recover_parabolic(n);
    c.expect(r.success() && r.subset == std::vector<int>{0, 1, 2} && r.base &&
                 RootSet(rs->size(), r.base->simple()) == RootSet(rs->size(), b2.simple()),
             "(e) recovery gives all of B''");
    WeightSpaceSet m_plus = WeightSpaceSet::of(rs, rs->parse_roots("[-1,0,0,1],[1,0,-1,0],[1,-1,0,0],[0,1,0,-1],[0,0,1,-1]"));
    if (r.success()) {
        CompatibilityReport plus = is_degree3_compatible(n, m_plus);
        CompatibilityReport minus = is_degree3_compatible(n, m_plus.conjugate());
        c.expect(!plus.compatible() && plus.agree, "(e) not compatible with m+");
        c.expect(!minus.compatible() && minus.agree, "(e) not compatible with m-");
    }
}

void sp3_suite(Criterion& c) {
    auto rs = sys("C3");
    EqualRankSpace s = EqualRankSpace::from_roots(rs, rs->parse_roots("[0,1,-1],[0,1,1],[0,2,0],[0,0,2]"));
    TwistorCandidate n(s, WeightSpaceSet::of(rs, rs->parse_roots("[2,0,0],[-1,1,0],[1,0,-1],[1,1,0],[1,0,1]")));
    IntegrabilityReport ir = integrability(n);
    c.expect(ir.bracket_m.roots == set_of(*rs, "[2,0,0],[1,1,0]"), "[n+,n+]^m");
    c.expect(ir.bracket_h.roots == set_of(*rs, "[0,2,0],[0,1,-1],[0,1,1]"), "[n+,n+]^h");
    c.expect(ir.second.roots == set_of(*rs, "[1,1,0]"), "[[n+,n+]^h,n+]");
    c.expect(ir.pass(), "integrability");
    Recovery r = recover_parabolic(n);
    c.expect(r.success() && r.fibre && r.fibre->dim == 6, "fibre dimension 6");
    c.expect(r.success() && r.fibre && r.fibre->pattern == "CP(3)", "fibre pattern CP(3)");
}

void equivalence(Criterion& c) {
    struct Case {
        const char* type;
        const char* h;
        std::size_t expected;
    };
    for (const Case& k : {Case{"G2", "[-3,1*r3],[0,2*r3],[3,1*r3]", 8}, Case{"A2", "", 8}, Case{"C2", "", 16}}) {
        auto rs = sys(k.type);
        EqualRankSpace s = EqualRankSpace::from_roots(rs, *k.h ? rs->parse_roots(k.h) : std::vector<RootId>{});
        auto cands = enumerate_candidates(s);
        c.expect(cands.size() == k.expected, std::string(k.type) + ": candidate count");
        for (std::size_t i = 0; i < cands.size(); ++i)
            c.expect(integrability(cands[i]).pass() == recover_parabolic(cands[i]).success(),
                     std::string(k.type) + ": candidate #" + std::to_string(i));
    }
}

void grading_series(Criterion& c) {
    for (auto t : testing_support::types_up_to(4)) {
        auto rs = build_root_system(t);
        Base b = catalog_base(rs);
        for (const auto& s : subsets(t.rank)) {
            ParabolicDatum d(b, s);
            const std::string where = t.str() + " A=" + format_subset(s);
            c.expect(check_series_equals_grading(d).equal, where + ": series");
            GradedDecomposition g(d);
            bool additive = true;
            for (RootId a = 0; a < rs->size(); ++a)
                for (RootId x = 0; x < rs->size(); ++x)
                    if (rs->sum(a, x) != kNoRoot && g.level(rs->sum(a, x)) != g.level(a) + g.level(x)) additive = false;
            c.expect(additive, where + ": additivity");
        }
    }
}

void degree3_soundness(Criterion& c) {
    for (auto t : testing_support::types_up_to(4)) {
        auto rs = build_root_system(t);
        Base b = catalog_base(rs);
        for (const auto& s : subsets(t.rank)) {
            GradedDecomposition g(ParabolicDatum(b, s));
            const std::string where = t.str() + " A=" + format_subset(s);
            c.expect(check_3symmetric(Fibration3(g)).pass(), where + ": degree 3");
            c.expect(check_symmetric(degree2(g)).pass(), where + ": degree 2");
        }
    }
}

void classification(Criterion& c) {
    for (auto t : testing_support::classical_up_to(8)) {
        auto rs = build_root_system(t);
        for (const auto& k : gray_wolf_inner(catalog_base(rs)))
            c.expect(k.kind != InnerKind::Mark3, t.str() + ": unexpected mark-3 root");
    }
    struct Expect {
        const char* type;
        const char* h_type;   // nullptr: any
        int dim;              // 0: any
    };
    for (const Expect& e : {Expect{"G2", "A2", 4}, Expect{"F4", nullptr, 4}, Expect{"E6", nullptr, 4}, Expect{"E7", nullptr, 0},
                            Expect{"E8", nullptr, 0}}) {
        auto rs = sys(e.type);
        bool found = false;
        for (const auto& k : gray_wolf_inner(catalog_base(rs))) {
            if (k.kind != InnerKind::Mark3) continue;
            found = true;
            if (e.h_type) c.expect(k.h_type == e.h_type, std::string(e.type) + ": h type " + k.h_type);
            if (e.dim) c.expect(k.fibre_dim == e.dim, std::string(e.type) + ": fibre dim " + std::to_string(k.fibre_dim));
            DynkinComponents dt = dynkin_type(*rs, k.h_simple_system);
            c.expect(format_dynkin(dt) == k.h_type, std::string(e.type) + ": Dynkin type of the simple system");
        }
        c.expect(found, std::string(e.type) + ": mark-3 case found");
    }
    bool e8_a8 = false;
    for (const auto& k : gray_wolf_inner(catalog_base(sys("E8"))))
        e8_a8 = e8_a8 || (k.kind == InnerKind::Mark3 && k.h_type == "A8" && k.fibre_dim == 16 && k.fibre_pattern == "CP(8)");
    c.expect(e8_a8, "E8: h of type A8 with fibre CP(8) of dimension 16");
}

void wolf(Criterion& c) {
    for (auto t : testing_support::types_up_to(4)) {
        if (t.rank < 2) continue;   // A1: the highest root is simple, no Wolf twistor
        auto rs = build_root_system(t);
        Base b = catalog_base(rs);
        WolfTwistor w = wolf_twistor(b);
        const RootId gamma = b.highest();
        for (RootId a = 0; a < rs->size(); ++a) {
            if (a == gamma || a == rs->neg(gamma)) continue;
            const int p = rs->cartan(a, gamma);
            c.expect(p >= -1 && p <= 1, t.str() + ": pairing with the highest root");
        }
        CanonicalSeries s = canonical_series(w.datum);
        c.expect(s.terms.size() >= 3 && s.terms[1] == RootSet(rs->size(), {gamma}) && s.terms[2].empty(), t.str() + ": l^2, l^3");
        c.expect(check_3symmetric(w.k, w.j2, w.j2.conjugate()).pass(), t.str() + ": j2 is 3-symmetric");
    }
}

// --- determinism -----------------------------------------------------------

struct Golden {
    std::string name;
    int code;
    std::vector<std::string> args;
};

std::vector<std::string> split_args(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, any = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            any = true;
        } else if (!quoted && (ch == ' ' || ch == '\t')) {
            if (any) out.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += ch;
            any = true;
        }
    }
    if (any) out.push_back(cur);
    return out;
}

std::vector<Golden> golden_commands() {
    std::ifstream in(std::string(TRISYM_GOLDEN_DIR) + "/commands.txt");
    std::vector<Golden> out;
    static const std::regex line_re(R"(^([a-z0-9_]+)[ \t]+([0-9]+)[ \t]+(.*)$)");
    for (std::string line; std::getline(in, line);) {
        std::smatch m;
        if (std::regex_match(line, m, line_re)) out.push_back({m[1], std::stoi(m[2]), split_args(m[3])});
    }
    return out;
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return out + "'";
}

std::pair<int, std::string> run_cli(const Golden& g) {
    std::string cmd = shell_quote(TRISYM_CLI_PATH);
    for (const auto& a : g.args) cmd += " " + shell_quote(a);
    cmd += " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void determinism(Criterion& c) {
    auto commands = golden_commands();
    c.expect(!commands.empty(), "golden command list is empty");
    for (const auto& g : commands) {
        auto first = run_cli(g);
        auto second = run_cli(g);
        std::ifstream f(std::string(TRISYM_GOLDEN_DIR) + "/" + g.name + ".txt", std::ios::binary);
        std::stringstream expected;
        expected << f.rdbuf();
        c.expect(first == second, g.name + ": repeated runs differ");
        c.expect(first.first == g.code, g.name + ": exit code " + std::to_string(first.first));
        c.expect(first.second == expected.str(), g.name + ": output differs from the recorded transcript");
    }
}

}  // namespace

int main() {
    struct Entry {
        int number;
        const char* title;
        std::function<void(Criterion&)> run;
    };
    const std::vector<Entry> entries = {
        {1, "G2 gradings and degree-3 fibrations", g2_tables},
        {2, "SU(4): gradings, triviality, flip, second base, counter-example", su4_suite},
        {3, "Sp(3) twistor space of CP(5)", sp3_suite},
        {4, "integrable iff parabolic recovery, exhaustive candidates", equivalence},
        {5, "series equals grading, level additivity (rank <= 4, all A)", grading_series},
        {6, "degree-3 and degree-2 soundness (rank <= 4, all A)", degree3_soundness},
        {7, "inner 3-symmetric classification", classification},
        {8, "Wolf twistor spaces (rank 2..4)", wolf},
        {9, "determinism of golden CLI commands", determinism},
    };
    int failed = 0;
    for (const auto& e : entries) {
        Criterion c;
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        std::cout << "criterion " << e.number << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << e.title << " ("
                  << c.checks() << " checks)\n";
        for (const auto& p : c.problems()) std::cout << "    " << p << "\n";
        failed += c.passed() ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
