#include "trisym/report.hpp"

#include <sstream>

namespace trisym {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string subset_text(const std::vector<int>& one_based_subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < one_based_subset.size(); ++i) s += (i ? "," : "") + std::to_string(one_based_subset[i]);
    return s + "}";
}

Roots texts(const RootSystem& rs, const std::vector<RootId>& ids) {
    Roots out;
    for (RootId a : ids) out.push_back(rs.text(a));
    return out;
}

std::string check_text(const CheckLine& c) {
    if (c.holds) return c.name + ": ok";
    return c.name + ": FAIL (" + join(c.witnesses, "; ") + ")";
}

}  // namespace

std::vector<int> one_based(const std::vector<int>& subset) {
    std::vector<int> out;
    for (int i : subset) out.push_back(i + 1);
    return out;
}

std::string direct_sum(const Roots& roots) { return roots.empty() ? "{0}" : join(roots, " ⊕ "); }

std::string real_sum(const RealSpace& s) {
    std::vector<std::string> parts;
    if (s.cartan) parts.push_back("t");
    for (const auto& r : s.real) parts.push_back("[" + r + "]");
    return parts.empty() ? "{0}" : join(parts, " ⊕ ");
}

Roots GradingReport::level_set(int r) const {
    Roots out;
    for (const auto& [root, l] : levels)
        if (l == r) out.push_back(root);
    return out;
}

// ---------------------------------------------------------------- builders

RootsReport make_roots_report(const RootSystem& rs) {
    RootsReport r{rs.type().str(), rs.ambient_dim(), {}};
    for (RootId a = 0; a < rs.size(); ++a) r.roots.push_back(rs.text(a));
    return r;
}

BaseReport make_base_report(const Base& base) {
    const RootSystem& rs = base.rs();
    BaseReport r;
    r.type = rs.type().str();
    r.simple = texts(rs, base.simple());
    r.positive = texts(rs, base.positives());
    r.highest = rs.text(base.highest());
    r.marks = base.coefficients(base.highest());
    return r;
}

GradingReport make_grading_report(const GradedDecomposition& g) {
    GradingReport r;
    for (RootId a = 0; a < g.rs().size(); ++a) r.levels.emplace_back(g.rs().text(a), g.level(a));
    r.max_level = g.max_level();
    return r;
}

SeriesReport make_series_report(const ParabolicDatum& datum) {
    SeriesReport r;
    for (const auto& t : canonical_series(datum).terms) r.terms.push_back(root_texts(datum.rs(), t));
    auto cmp = check_series_equals_grading(datum);
    r.equals_grading = cmp.equal;
    r.mismatches = cmp.mismatches;
    return r;
}

RealSpace make_real_space(const WeightSpaceSet& s, const Base& base) {
    RealSpace r;
    r.cartan = s.cartan;
    r.roots = root_texts(s.system(), s.roots);
    for (RootId a : s.roots.ids())
        if (base.is_positive(a) || !s.roots.contains(s.system().neg(a))) r.real.push_back(s.system().text(a));
    return r;
}

Fib3Report make_fib3_report(const Fibration3& fib) {
    Fib3Report r;
    r.h = make_real_space(fib.h(), fib.datum().base());
    r.m_plus = root_texts(fib.m_plus().system(), fib.m_plus().roots);
    r.m_minus = root_texts(fib.m_minus().system(), fib.m_minus().roots);
    r.trivial = fib.trivial();
    return r;
}

Fib3Report make_flip_report(const GradedDecomposition& g) {
    WeightSpaceSet m = j2_flip(g);
    const RootSystemPtr& sys = g.datum().base().system();
    Fib3Report r;
    r.h = make_real_space(WeightSpaceSet(sys, true, g.level_zero()), g.datum().base());
    r.m_plus = root_texts(*sys, m.roots);
    r.m_minus = root_texts(*sys, m.conjugate().roots);
    r.trivial = true;
    return r;
}

Fib2Report make_fib2_report(const SymmetricPair& pair, const Base& base) {
    return {make_real_space(pair.f, base), make_real_space(pair.q, base)};
}

CheckLine make_check_line(const InclusionCheck& c) { return {c.name, c.holds, c.witnesses}; }

ChecksReport make_checks_report(const CheckReport& r) {
    ChecksReport out;
    for (const auto& c : r.checks) out.checks.push_back(make_check_line(c));
    out.pass = r.pass();
    return out;
}

CandidateReport make_candidate_report(const TwistorCandidate& c) {
    return {root_texts(c.space().rs(), c.n_plus().roots)};
}

IntegrabilitySummary make_integrability_report(const TwistorCandidate& c) {
    const RootSystem& rs = c.space().rs();
    IntegrabilityReport ir = integrability(c);
    IntegrabilitySummary r;
    r.n_plus = root_texts(rs, c.n_plus().roots);
    r.bracket_m = root_texts(rs, ir.bracket_m.roots);
    r.bracket_h = root_texts(rs, ir.bracket_h.roots);
    r.second = root_texts(rs, ir.second.roots);
    r.conditions = {make_check_line(ir.first_condition), make_check_line(ir.second_condition)};
    r.integrable = ir.pass();
    return r;
}

RecoveryReport make_recovery_report(const Recovery& rec) {
    const RootSystem& rs = rec.l_plus.system();
    RecoveryReport r;
    r.success = rec.success();
    r.failure = rec.success() ? "" : to_string(rec.failure);
    r.witness = rec.witness;
    r.l_plus = root_texts(rs, rec.l_plus.roots);
    if (rec.success()) {
        r.base = texts(rs, rec.base->simple());
        r.A = one_based(rec.subset);
        r.fibre_dim = rec.fibre->dim;
        r.fibre_type = rec.fibre->type();
        r.h_type = rec.fibre->h_type;
        r.fibre_roots = root_texts(rs, rec.fibre->roots);
    }
    return r;
}

CompatReport make_compat_report(const TwistorCandidate& c, const WeightSpaceSet& m_plus) {
    const RootSystem& rs = c.space().rs();
    CompatReport r;
    for (const auto& [label, target] : {std::pair{std::string("m+"), m_plus}, std::pair{std::string("m-"), m_plus.conjugate()}}) {
        CompatibilityReport cr = is_degree3_compatible(c, target);
        if (r.g1.empty()) r.g1 = root_texts(rs, cr.g1.roots);
        CompatSide side;
        side.target = label;
        side.g1_test = make_check_line(cr.g1_test);
        side.simple_test = make_check_line(cr.simple_test);
        side.g1_test.name = "g^1 ⊆ " + label;
        side.simple_test.name = "A ⊆ " + label;
        side.agree = cr.agree;
        side.compatible = cr.compatible();
        side.rederived_equal = cr.rederived_equal;
        r.sides.push_back(std::move(side));
    }
    r.A = one_based(recover_parabolic(c).subset);
    r.compatible = r.sides.front().compatible;
    return r;
}

WolfReport make_wolf_report(const Base& base) {
    const RootSystem& rs = base.rs();
    WolfTwistor w = wolf_twistor(base);
    WolfReport r;
    r.highest = rs.text(base.highest());
    for (RootId b : base.simple()) r.simple_pairings.push_back(w.pairing_with_highest[static_cast<std::size_t>(b)]);
    r.A = one_based(w.datum.subset());
    r.k = make_real_space(w.k, base);
    r.l_plus = root_texts(rs, w.j1.roots);
    r.j2 = root_texts(rs, w.j2.roots);
    for (const auto& t : canonical_series(w.datum).terms) r.series.push_back(root_texts(rs, t));
    r.pairings_in_range = true;   // wolf_twistor throws otherwise
    r.j2_3symmetric = check_3symmetric(w.k, w.j2, w.j2.conjugate()).pass();
    return r;
}

ClassifyReport make_classify_report(const Base& base) {
    const RootSystem& rs = base.rs();
    ClassifyReport r;
    r.type = rs.type().str();
    r.marks = base.coefficients(base.highest());
    for (const auto& c : gray_wolf_inner(base))
        r.cases.push_back({to_string(c.kind), one_based(c.subset), c.h_type, texts(rs, c.h_simple_system), c.fibre_dim,
                           c.fibre_pattern});
    return r;
}

// ---------------------------------------------------------------- JSON

void to_json(Json& j, const RootsReport& v) {
    j = Json{{"type", v.type}, {"ambient_dim", v.ambient_dim}, {"roots", v.roots}};
}
void from_json(const Json& j, RootsReport& v) {
    j.at("type").get_to(v.type);
    j.at("ambient_dim").get_to(v.ambient_dim);
    j.at("roots").get_to(v.roots);
}

void to_json(Json& j, const BaseReport& v) {
    j = Json{{"type", v.type}, {"simple", v.simple}, {"positive", v.positive}, {"highest", v.highest}, {"marks", v.marks}};
}
void from_json(const Json& j, BaseReport& v) {
    j.at("type").get_to(v.type);
    j.at("simple").get_to(v.simple);
    j.at("positive").get_to(v.positive);
    j.at("highest").get_to(v.highest);
    j.at("marks").get_to(v.marks);
}

void to_json(Json& j, const GradingReport& v) {
    Json levels = Json::object();
    for (const auto& [root, l] : v.levels) levels[root] = l;
    j = Json{{"levels", levels}, {"max_level", v.max_level}};
}
void from_json(const Json& j, GradingReport& v) {
    v.levels.clear();
    for (const auto& [root, l] : j.at("levels").items()) v.levels.emplace_back(root, l.get<int>());
    j.at("max_level").get_to(v.max_level);
}

void to_json(Json& j, const SeriesReport& v) {
    j = Json{{"terms", v.terms}, {"equals_grading", v.equals_grading}, {"mismatches", v.mismatches}};
}
void from_json(const Json& j, SeriesReport& v) {
    j.at("terms").get_to(v.terms);
    j.at("equals_grading").get_to(v.equals_grading);
    j.at("mismatches").get_to(v.mismatches);
}

void to_json(Json& j, const RealSpace& v) { j = Json{{"cartan", v.cartan}, {"roots", v.roots}, {"real", v.real}}; }
void from_json(const Json& j, RealSpace& v) {
    j.at("cartan").get_to(v.cartan);
    j.at("roots").get_to(v.roots);
    j.at("real").get_to(v.real);
}

void to_json(Json& j, const Fib3Report& v) {
    j = Json{{"h", v.h}, {"m_plus", v.m_plus}, {"m_minus", v.m_minus}, {"trivial", v.trivial}};
}
void from_json(const Json& j, Fib3Report& v) {
    j.at("h").get_to(v.h);
    j.at("m_plus").get_to(v.m_plus);
    j.at("m_minus").get_to(v.m_minus);
    j.at("trivial").get_to(v.trivial);
}

void to_json(Json& j, const Fib2Report& v) { j = Json{{"f", v.f}, {"q", v.q}}; }
void from_json(const Json& j, Fib2Report& v) {
    j.at("f").get_to(v.f);
    j.at("q").get_to(v.q);
}

void to_json(Json& j, const CheckLine& v) {
    j = Json{{"name", v.name}, {"holds", v.holds}, {"witnesses", v.witnesses}};
}
void from_json(const Json& j, CheckLine& v) {
    j.at("name").get_to(v.name);
    j.at("holds").get_to(v.holds);
    j.at("witnesses").get_to(v.witnesses);
}

void to_json(Json& j, const ChecksReport& v) { j = Json{{"checks", v.checks}, {"pass", v.pass}}; }
void from_json(const Json& j, ChecksReport& v) {
    j.at("checks").get_to(v.checks);
    j.at("pass").get_to(v.pass);
}

void to_json(Json& j, const CandidateReport& v) { j = Json{{"n_plus", v.n_plus}}; }
void from_json(const Json& j, CandidateReport& v) { j.at("n_plus").get_to(v.n_plus); }

void to_json(Json& j, const IntegrabilitySummary& v) {
    j = Json{{"n_plus", v.n_plus},       {"bracket_m", v.bracket_m},   {"bracket_h", v.bracket_h},
             {"second", v.second},       {"conditions", v.conditions}, {"integrable", v.integrable}};
}
void from_json(const Json& j, IntegrabilitySummary& v) {
    j.at("n_plus").get_to(v.n_plus);
    j.at("bracket_m").get_to(v.bracket_m);
    j.at("bracket_h").get_to(v.bracket_h);
    j.at("second").get_to(v.second);
    j.at("conditions").get_to(v.conditions);
    j.at("integrable").get_to(v.integrable);
}

void to_json(Json& j, const RecoveryReport& v) {
    j = Json{{"l_plus", v.l_plus},         {"base", v.base},       {"A", v.A},
             {"fibre_dim", v.fibre_dim},   {"fibre_type", v.fibre_type}, {"h_type", v.h_type},
             {"fibre_roots", v.fibre_roots}, {"success", v.success}, {"failure", v.failure},
             {"witness", v.witness}};
}
void from_json(const Json& j, RecoveryReport& v) {
    j.at("l_plus").get_to(v.l_plus);
    j.at("base").get_to(v.base);
    j.at("A").get_to(v.A);
    j.at("fibre_dim").get_to(v.fibre_dim);
    j.at("fibre_type").get_to(v.fibre_type);
    j.at("h_type").get_to(v.h_type);
    j.at("fibre_roots").get_to(v.fibre_roots);
    j.at("success").get_to(v.success);
    j.at("failure").get_to(v.failure);
    j.at("witness").get_to(v.witness);
}

void to_json(Json& j, const CompatSide& v) {
    j = Json{{"target", v.target}, {"g1_test", v.g1_test}, {"simple_test", v.simple_test},
             {"agree", v.agree},   {"compatible", v.compatible}};
    j["rederived_equal"] = v.rederived_equal ? Json(*v.rederived_equal) : Json(nullptr);
}
void from_json(const Json& j, CompatSide& v) {
    j.at("target").get_to(v.target);
    j.at("g1_test").get_to(v.g1_test);
    j.at("simple_test").get_to(v.simple_test);
    j.at("agree").get_to(v.agree);
    j.at("compatible").get_to(v.compatible);
    const Json& r = j.at("rederived_equal");
    v.rederived_equal = r.is_null() ? std::nullopt : std::optional<bool>(r.get<bool>());
}

void to_json(Json& j, const CompatReport& v) {
    j = Json{{"g1", v.g1}, {"A", v.A}, {"sides", v.sides}, {"compatible", v.compatible}};
}
void from_json(const Json& j, CompatReport& v) {
    j.at("g1").get_to(v.g1);
    j.at("A").get_to(v.A);
    j.at("sides").get_to(v.sides);
    j.at("compatible").get_to(v.compatible);
}

void to_json(Json& j, const WolfReport& v) {
    j = Json{{"highest", v.highest},
             {"simple_pairings", v.simple_pairings},
             {"A", v.A},
             {"k", v.k},
             {"l_plus", v.l_plus},
             {"j2", v.j2},
             {"series", v.series},
             {"pairings_in_range", v.pairings_in_range},
             {"j2_3symmetric", v.j2_3symmetric}};
}
void from_json(const Json& j, WolfReport& v) {
    j.at("highest").get_to(v.highest);
    j.at("simple_pairings").get_to(v.simple_pairings);
    j.at("A").get_to(v.A);
    j.at("k").get_to(v.k);
    j.at("l_plus").get_to(v.l_plus);
    j.at("j2").get_to(v.j2);
    j.at("series").get_to(v.series);
    j.at("pairings_in_range").get_to(v.pairings_in_range);
    j.at("j2_3symmetric").get_to(v.j2_3symmetric);
}

void to_json(Json& j, const CaseReport& v) {
    j = Json{{"kind", v.kind},           {"A", v.A},
             {"h_type", v.h_type},       {"h_simple_system", v.h_simple_system},
             {"fibre_dim", v.fibre_dim}, {"fibre_pattern", v.fibre_pattern}};
}
void from_json(const Json& j, CaseReport& v) {
    j.at("kind").get_to(v.kind);
    j.at("A").get_to(v.A);
    j.at("h_type").get_to(v.h_type);
    j.at("h_simple_system").get_to(v.h_simple_system);
    j.at("fibre_dim").get_to(v.fibre_dim);
    j.at("fibre_pattern").get_to(v.fibre_pattern);
}

void to_json(Json& j, const ClassifyReport& v) {
    j = Json{{"type", v.type}, {"marks", v.marks}, {"cases", v.cases}};
}
void from_json(const Json& j, ClassifyReport& v) {
    j.at("type").get_to(v.type);
    j.at("marks").get_to(v.marks);
    j.at("cases").get_to(v.cases);
}

void to_json(Json& j, const SweepItem& v) {
    j = Json{{"check", v.check}, {"label", v.label}, {"status", v.status}, {"ok", v.ok}, {"detail", v.detail}};
}
void from_json(const Json& j, SweepItem& v) {
    j.at("check").get_to(v.check);
    j.at("label").get_to(v.label);
    j.at("status").get_to(v.status);
    j.at("ok").get_to(v.ok);
    j.at("detail").get_to(v.detail);
}

void to_json(Json& j, const SweepReport& v) {
    Json summary = Json::object();
    for (const auto& [k, n] : v.summary) summary[k] = n;
    j = Json{{"type", v.type}, {"items", v.items}, {"summary", summary}, {"pass", v.pass}};
}
void from_json(const Json& j, SweepReport& v) {
    j.at("type").get_to(v.type);
    j.at("items").get_to(v.items);
    v.summary.clear();
    for (const auto& [k, n] : j.at("summary").items()) v.summary.emplace_back(k, n.get<int>());
    j.at("pass").get_to(v.pass);
}

// ---------------------------------------------------------------- text

std::string render_text(const RootsReport& r) {
    std::ostringstream os;
    os << r.type << ": " << r.roots.size() << " roots in dimension " << r.ambient_dim << "\n";
    for (const auto& s : r.roots) os << s << "\n";
    return os.str();
}

std::string render_text(const BaseReport& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.simple.size(); ++i) os << "beta" << i + 1 << " = " << r.simple[i] << "\n";
    os << "positive roots (" << r.positive.size() << "):\n";
    for (const auto& s : r.positive) os << "  " << s << "\n";
    os << "highest root = " << r.highest << "\n";
    os << "marks =";
    for (int m : r.marks) os << " " << m;
    os << "\n";
    return os.str();
}

std::string render_text(const GradingReport& r) {
    std::ostringstream os;
    for (int l = 1; l <= std::max(1, r.max_level); ++l) os << "g^" << l << " = " << direct_sum(r.level_set(l)) << "\n";
    os << "max_level = " << r.max_level << "\n";
    return os.str();
}

std::string render_text(const SeriesReport& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.terms.size(); ++i) os << "l_" << i + 1 << " = " << direct_sum(r.terms[i]) << "\n";
    os << "series equals grading: " << yes_no(r.equals_grading) << "\n";
    for (const auto& m : r.mismatches) os << "  " << m << "\n";
    return os.str();
}

std::string render_text(const Fib3Report& r) {
    std::ostringstream os;
    os << "h = " << real_sum(r.h) << "\n";
    os << "m+ = " << direct_sum(r.m_plus) << "\n";
    os << "m- = " << direct_sum(r.m_minus) << "\n";
    os << "trivial (H = K): " << yes_no(r.trivial) << "\n";
    return os.str();
}

std::string render_text(const Fib2Report& r) {
    std::ostringstream os;
    os << "f = " << real_sum(r.f) << "\n";
    os << "q = " << real_sum(r.q) << "\n";
    return os.str();
}

std::string render_text(const ChecksReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) os << check_text(c) << "\n";
    os << "result: " << (r.pass ? "pass" : "fail") << "\n";
    return os.str();
}

std::string render_text(const CandidateReport& r) { return "n+ = " + direct_sum(r.n_plus) + "\n"; }

std::string render_text(const IntegrabilitySummary& r) {
    std::ostringstream os;
    os << "n+ = " << direct_sum(r.n_plus) << "\n";
    os << "[n+,n+]^m = " << direct_sum(r.bracket_m) << "\n";
    os << "[n+,n+]^h = " << direct_sum(r.bracket_h) << "\n";
    os << "[[n+,n+]^h,n+] = " << direct_sum(r.second) << "\n";
    for (const auto& c : r.conditions) os << check_text(c) << "\n";
    os << "integrable: " << yes_no(r.integrable) << "\n";
    return os.str();
}

std::string render_text(const RecoveryReport& r) {
    std::ostringstream os;
    os << "l+ = " << direct_sum(r.l_plus) << "\n";
    if (!r.success) {
        os << "recovery failed: " << r.failure << ": " << r.witness << "\n";
        return os.str();
    }
    os << "base = " << join(r.base, ", ") << "\n";
    os << "A = " << subset_text(r.A) << "\n";
    os << "fibre dimension = " << r.fibre_dim << "\n";
    os << "fibre type = " << r.fibre_type << "\n";
    os << "h type = " << r.h_type << "\n";
    return os.str();
}

std::string render_text(const CompatReport& r) {
    std::ostringstream os;
    os << "A = " << subset_text(r.A) << "\n";
    os << "g^1 = " << direct_sum(r.g1) << "\n";
    for (const auto& s : r.sides) {
        os << check_text(s.g1_test) << "\n";
        os << check_text(s.simple_test) << "\n";
        os << "criteria agree: " << yes_no(s.agree) << "\n";
        if (s.rederived_equal) os << "re-derived fibration equals (h, " << s.target << "): " << yes_no(*s.rederived_equal) << "\n";
    }
    os << "compatible with m+: " << yes_no(r.compatible) << "\n";
    return os.str();
}

std::string render_text(const WolfReport& r) {
    std::ostringstream os;
    os << "highest root = " << r.highest << "\n";
    os << "(beta_i/gamma) =";
    for (int p : r.simple_pairings) os << " " << p;
    os << "\n";
    os << "A = " << subset_text(r.A) << "\n";
    os << "k = " << real_sum(r.k) << "\n";
    os << "l+ = " << direct_sum(r.l_plus) << "\n";
    for (std::size_t i = 1; i < r.series.size(); ++i) os << "l_" << i + 1 << " = " << direct_sum(r.series[i]) << "\n";
    os << "m+ = " << direct_sum(r.j2) << "\n";
    os << "m+ is 3-symmetric: " << yes_no(r.j2_3symmetric) << "\n";
    return os.str();
}

std::string render_text(const ClassifyReport& r) {
    std::ostringstream os;
    os << r.type << " marks:";
    for (int m : r.marks) os << " " << m;
    os << "\n";
    for (const auto& c : r.cases)
        os << c.kind << " A=" << subset_text(c.A) << " h=" << c.h_type << " simple=" << direct_sum(c.h_simple_system)
           << " fibre_dim=" << c.fibre_dim << " fibre=" << (c.fibre_pattern.empty() ? "unidentified" : c.fibre_pattern)
           << "\n";
    if (r.cases.empty()) os << "no inner cases\n";
    return os.str();
}

std::string render_text(const SweepReport& r) {
    std::ostringstream os;
    for (const auto& it : r.items) {
        os << it.check << " " << it.label << ": " << it.status << "\n";
        for (const auto& d : it.detail) os << "  " << d << "\n";
    }
    for (const auto& [k, n] : r.summary) os << k << " = " << n << "\n";
    os << "result: " << (r.pass ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace trisym
