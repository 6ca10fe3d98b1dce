#pragma once

#include "trisym/fibration.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trisym {

/// A homogeneous space G/H of equal rank: h contains the Cartan subalgebra,
/// is negation-closed and closed under brackets; m is the complement.
class EqualRankSpace {
public:
    explicit EqualRankSpace(WeightSpaceSet h);
    /// h = t plus the given roots and their negatives.
    static EqualRankSpace from_roots(const RootSystemPtr& rs, const std::vector<RootId>& h_roots);

    const RootSystemPtr& system() const { return h_.rs; }
    const RootSystem& rs() const { return *h_.rs; }
    const WeightSpaceSet& h() const { return h_; }
    const WeightSpaceSet& m() const { return m_; }
    std::vector<WeightSpaceSet> partition() const { return {h_, m_}; }
    /// Opposite pairs (a, -a) of m with a < -a, sorted by a.
    const std::vector<std::pair<RootId, RootId>>& opposite_pairs() const { return pairs_; }

private:
    WeightSpaceSet h_, m_;
    std::vector<std::pair<RootId, RootId>> pairs_;
};

/// A t-stable maximal isotropic subspace n+ of m.
class TwistorCandidate {
public:
    TwistorCandidate(EqualRankSpace space, WeightSpaceSet n_plus);

    const EqualRankSpace& space() const { return space_; }
    const WeightSpaceSet& n_plus() const { return n_plus_; }

private:
    EqualRankSpace space_;
    WeightSpaceSet n_plus_;
};

/// n+ = m ∩ (positive roots of the base).
TwistorCandidate nplus_from_base(const EqualRankSpace& space, const Base& base);

struct IntegrabilityReport {
    WeightSpaceSet bracket;     // [n+, n+]
    WeightSpaceSet bracket_m;   // [n+, n+]^m
    WeightSpaceSet bracket_h;   // [n+, n+]^h
    WeightSpaceSet second;      // [[n+, n+]^h, n+]
    InclusionCheck first_condition;
    InclusionCheck second_condition;
    bool pass() const { return first_condition.holds && second_condition.holds; }
};

IntegrabilityReport integrability(const TwistorCandidate& candidate);

struct FibreInfo {
    RootSet roots;          // h-part together with its negatives
    int dim = 0;            // real dimension
    std::string h_type;     // Dynkin type of the root subsystem of h
    std::string pattern;    // "point", "CP(k)", or empty when not recognized
    std::string type() const { return pattern.empty() ? "unidentified" : pattern; }
};

/// Fibre H/K of a recovered twistor fibration, with `h_part` = [n+,n+]^h.
/// Positivity inside h is taken from `ambient`.
FibreInfo fibre_info(const EqualRankSpace& space, const WeightSpaceSet& h_part, const Base& ambient);

/// Recognizes a complex projective space H/K from the isotropic part
/// V = [n+,n+]^h of a graded subalgebra; returns "point", "CP(k)" or "".
std::string projective_pattern(const RootSystem& rs, const RootSet& v, const Base& ambient);

enum class RecoveryFailure { None, Isotropy, Closedness, Positivity, LevelMismatch };
std::string to_string(RecoveryFailure f);

struct Recovery {
    RecoveryFailure failure = RecoveryFailure::None;
    std::string witness;
    WeightSpaceSet h_part;   // [n+, n+]^h
    WeightSpaceSet l_plus;   // [n+, n+]^h + n+
    std::optional<Base> base;
    std::vector<int> subset;
    std::optional<FibreInfo> fibre;
    bool success() const { return failure == RecoveryFailure::None; }
    ParabolicDatum datum() const;
};

/// Rebuilds the parabolic whose nilradical is [n+,n+]^h + n+, or reports the
/// first property that fails (isotropy, closedness, positivity, levels).
Recovery recover_parabolic(const TwistorCandidate& candidate);

struct CompatibilityReport {
    WeightSpaceSet g1;
    InclusionCheck g1_test;        // g^1 ⊆ m+
    InclusionCheck simple_test;    // every simple root of A lies in m+
    bool agree = true;
    /// Set when compatible: the degree-3 fibration of the recovered grading
    /// equals (h, m+, m-) of the space.
    std::optional<bool> rederived_equal;
    bool compatible() const { return g1_test.holds && simple_test.holds; }
};

/// Requires a successful recovery of `candidate`.
CompatibilityReport is_degree3_compatible(const TwistorCandidate& candidate, const WeightSpaceSet& m_plus);

inline constexpr int kMaxEnumeratedPairs = 16;

/// All 2^p candidates, one root chosen per opposite pair of m. Candidate k
/// takes the larger id of pair i when bit i of k is set.
std::vector<TwistorCandidate> enumerate_candidates(const EqualRankSpace& space);
TwistorCandidate candidate_at(const EqualRankSpace& space, unsigned long index);

/// Id of the reflection of root a in root b.
RootId reflect(const RootSystem& rs, RootId a, RootId b);

/// Orbits of the Weyl group of h acting on candidates: one class index per
/// candidate, numbered in order of first appearance.
std::vector<int> weyl_classes(const EqualRankSpace& space, const std::vector<TwistorCandidate>& candidates);

}  // namespace trisym
