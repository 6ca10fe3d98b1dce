#pragma once

// Plain-data reports for every command. Text and JSON are both rendered
// from these values; from_json is the exact inverse of to_json.

#include "trisym/classify.hpp"
#include "trisym/fibration.hpp"
#include "trisym/parabolic.hpp"
#include "trisym/twistor.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trisym {

using Json = nlohmann::ordered_json;
using Roots = std::vector<std::string>;

struct RootsReport {
    std::string type;
    int ambient_dim = 0;
    Roots roots;
    bool operator==(const RootsReport&) const = default;
};

struct BaseReport {
    std::string type;
    Roots simple;
    Roots positive;
    std::string highest;
    std::vector<int> marks;
    bool operator==(const BaseReport&) const = default;
};

struct GradingReport {
    std::vector<std::pair<std::string, int>> levels;   // every root, id order
    int max_level = 0;
    Roots level_set(int r) const;
    bool operator==(const GradingReport&) const = default;
};

struct SeriesReport {
    std::vector<Roots> terms;
    bool equals_grading = true;
    std::vector<std::string> mismatches;
    bool operator==(const SeriesReport&) const = default;
};

/// A negation-closed weight space set in real form: `real` holds one root
/// of each opposite pair (the positive one for the base in use).
struct RealSpace {
    bool cartan = false;
    Roots roots;
    Roots real;
    bool operator==(const RealSpace&) const = default;
};

struct Fib3Report {
    RealSpace h;
    Roots m_plus;
    Roots m_minus;
    bool trivial = true;
    bool operator==(const Fib3Report&) const = default;
};

struct Fib2Report {
    RealSpace f;
    RealSpace q;
    bool operator==(const Fib2Report&) const = default;
};

struct CheckLine {
    std::string name;
    bool holds = true;
    std::vector<std::string> witnesses;
    bool operator==(const CheckLine&) const = default;
};

struct ChecksReport {
    std::vector<CheckLine> checks;
    bool pass = true;
    bool operator==(const ChecksReport&) const = default;
};

struct CandidateReport {
    Roots n_plus;
    bool operator==(const CandidateReport&) const = default;
};

struct IntegrabilitySummary {
    Roots n_plus;
    Roots bracket_m;
    Roots bracket_h;
    Roots second;
    std::vector<CheckLine> conditions;
    bool integrable = true;
    bool operator==(const IntegrabilitySummary&) const = default;
};

struct RecoveryReport {
    bool success = false;
    std::string failure;
    std::string witness;
    Roots l_plus;
    Roots base;
    std::vector<int> A;   // 1-based
    int fibre_dim = 0;
    std::string fibre_type;
    std::string h_type;
    Roots fibre_roots;
    bool operator==(const RecoveryReport&) const = default;
};

struct CompatSide {
    std::string target;   // "m+" or "m-"
    CheckLine g1_test;
    CheckLine simple_test;
    bool agree = true;
    bool compatible = false;
    std::optional<bool> rederived_equal;
    bool operator==(const CompatSide&) const = default;
};

struct CompatReport {
    Roots g1;
    std::vector<int> A;
    std::vector<CompatSide> sides;
    bool compatible = false;   // with the given m+
    bool operator==(const CompatReport&) const = default;
};

struct WolfReport {
    std::string highest;
    std::vector<int> simple_pairings;   // (beta_i/gamma)
    std::vector<int> A;
    RealSpace k;
    Roots l_plus;
    Roots j2;
    std::vector<Roots> series;
    bool pairings_in_range = true;
    bool j2_3symmetric = true;
    bool operator==(const WolfReport&) const = default;
};

struct CaseReport {
    std::string kind;
    std::vector<int> A;
    std::string h_type;
    Roots h_simple_system;
    int fibre_dim = 0;
    std::string fibre_pattern;
    bool operator==(const CaseReport&) const = default;
};

struct ClassifyReport {
    std::string type;
    std::vector<int> marks;
    std::vector<CaseReport> cases;
    bool operator==(const ClassifyReport&) const = default;
};

struct SweepItem {
    std::string check;
    std::string label;
    std::string status;
    bool ok = true;
    std::vector<std::string> detail;
    bool operator==(const SweepItem&) const = default;
};

struct SweepReport {
    std::string type;
    std::vector<SweepItem> items;
    std::vector<std::pair<std::string, int>> summary;
    bool pass = true;
    bool operator==(const SweepReport&) const = default;
};

// builders
RootsReport make_roots_report(const RootSystem& rs);
BaseReport make_base_report(const Base& base);
GradingReport make_grading_report(const GradedDecomposition& g);
SeriesReport make_series_report(const ParabolicDatum& datum);
RealSpace make_real_space(const WeightSpaceSet& s, const Base& base);
Fib3Report make_fib3_report(const Fibration3& fib);
Fib3Report make_flip_report(const GradedDecomposition& g);
Fib2Report make_fib2_report(const SymmetricPair& pair, const Base& base);
CheckLine make_check_line(const InclusionCheck& c);
ChecksReport make_checks_report(const CheckReport& r);
CandidateReport make_candidate_report(const TwistorCandidate& c);
IntegrabilitySummary make_integrability_report(const TwistorCandidate& c);
RecoveryReport make_recovery_report(const Recovery& r);
CompatReport make_compat_report(const TwistorCandidate& c, const WeightSpaceSet& m_plus);
WolfReport make_wolf_report(const Base& base);
ClassifyReport make_classify_report(const Base& base);
std::vector<int> one_based(const std::vector<int>& subset);

// JSON
#define TRISYM_JSON_DECL(T)             \
    void to_json(Json& j, const T& v);  \
    void from_json(const Json& j, T& v);
TRISYM_JSON_DECL(RootsReport)
TRISYM_JSON_DECL(BaseReport)
TRISYM_JSON_DECL(GradingReport)
TRISYM_JSON_DECL(SeriesReport)
TRISYM_JSON_DECL(RealSpace)
TRISYM_JSON_DECL(Fib3Report)
TRISYM_JSON_DECL(Fib2Report)
TRISYM_JSON_DECL(CheckLine)
TRISYM_JSON_DECL(ChecksReport)
TRISYM_JSON_DECL(CandidateReport)
TRISYM_JSON_DECL(IntegrabilitySummary)
TRISYM_JSON_DECL(RecoveryReport)
TRISYM_JSON_DECL(CompatSide)
TRISYM_JSON_DECL(CompatReport)
TRISYM_JSON_DECL(WolfReport)
TRISYM_JSON_DECL(CaseReport)
TRISYM_JSON_DECL(ClassifyReport)
TRISYM_JSON_DECL(SweepItem)
TRISYM_JSON_DECL(SweepReport)
#undef TRISYM_JSON_DECL

// text
std::string render_text(const RootsReport& r);
std::string render_text(const BaseReport& r);
std::string render_text(const GradingReport& r);
std::string render_text(const SeriesReport& r);
std::string render_text(const Fib3Report& r);
std::string render_text(const Fib2Report& r);
std::string render_text(const ChecksReport& r);
std::string render_text(const CandidateReport& r);
std::string render_text(const IntegrabilitySummary& r);
std::string render_text(const RecoveryReport& r);
std::string render_text(const CompatReport& r);
std::string render_text(const WolfReport& r);
std::string render_text(const ClassifyReport& r);
std::string render_text(const SweepReport& r);

/// "[a] ⊕ [b]" or "{0}".
std::string direct_sum(const Roots& roots);
/// "t ⊕ [[a]] ⊕ [[b]]", "t", "[[a]]" or "{0}".
std::string real_sum(const RealSpace& s);

}  // namespace trisym
