#pragma once

#include "trisym/parabolic.hpp"
#include "trisym/rootset.hpp"

#include <string>
#include <vector>

namespace trisym {

/// A t-stable subspace of the complexified algebra: optionally the Cartan
/// subalgebra plus a sum of root spaces.
struct WeightSpaceSet {
    RootSystemPtr rs;
    bool cartan = false;
    RootSet roots;

    WeightSpaceSet() = default;
    WeightSpaceSet(RootSystemPtr system, bool with_cartan, RootSet root_set);
    static WeightSpaceSet of(RootSystemPtr system, const std::vector<RootId>& ids, bool with_cartan = false);
    static WeightSpaceSet empty(RootSystemPtr system) { return of(std::move(system), {}); }

    const RootSystem& system() const { return *rs; }
    bool negation_closed() const;
    /// No cartan and roots disjoint from their negatives.
    bool isotropic() const;
    /// Image under complex conjugation: negated roots, same cartan flag.
    WeightSpaceSet conjugate() const;
    /// Real form: roots together with their negatives.
    WeightSpaceSet symmetrized() const;
    bool subset_of(const WeightSpaceSet& o) const;

    friend bool operator==(const WeightSpaceSet& a, const WeightSpaceSet& b) {
        return a.rs == b.rs && a.cartan == b.cartan && a.roots == b.roots;
    }
};

WeightSpaceSet operator|(const WeightSpaceSet& a, const WeightSpaceSet& b);

/// [U, V] at the weight-space level.
WeightSpaceSet bracket_set(const WeightSpaceSet& u, const WeightSpaceSet& v);

/// Component of U along the member `onto` of a partition of the roots.
WeightSpaceSet project(const WeightSpaceSet& u, std::size_t onto, const std::vector<WeightSpaceSet>& partition);
void validate_partition(const std::vector<WeightSpaceSet>& partition);

struct InclusionCheck {
    std::string name;
    bool holds = true;
    std::vector<std::string> witnesses;
};

/// Tests [U, V] ⊆ target, naming each offending root sum.
InclusionCheck check_bracket_inclusion(std::string name, const WeightSpaceSet& u, const WeightSpaceSet& v,
                                       const WeightSpaceSet& target);
/// Tests U ⊆ target.
InclusionCheck check_inclusion(std::string name, const WeightSpaceSet& u, const WeightSpaceSet& target);

struct CheckReport {
    std::vector<InclusionCheck> checks;
    bool pass() const;
    std::vector<std::string> failures() const;
};

/// h = levels ≡ 0 (mod 3) with the Cartan, m+ = levels ≡ 1, m- = levels ≡ 2.
class Fibration3 {
public:
    explicit Fibration3(const GradedDecomposition& grading);

    const ParabolicDatum& datum() const { return datum_; }
    const WeightSpaceSet& h() const { return h_; }
    const WeightSpaceSet& m_plus() const { return m_plus_; }
    const WeightSpaceSet& m_minus() const { return m_minus_; }
    /// No level is a nonzero multiple of 3, so H = K.
    bool trivial() const { return trivial_; }

private:
    ParabolicDatum datum_;
    WeightSpaceSet h_, m_plus_, m_minus_;
    bool trivial_ = true;
};

Fibration3 degree3(const GradedDecomposition& grading);

/// Structural checks of a splitting g = h + m+ + m-: brackets
/// [m+,m+] ⊆ m-, [m-,m-] ⊆ m+, [m+,m-] ⊆ h, [h,m+] ⊆ m+, [h,m-] ⊆ m-, [h,h] ⊆ h.
CheckReport check_3symmetric(const WeightSpaceSet& h, const WeightSpaceSet& m_plus, const WeightSpaceSet& m_minus);
CheckReport check_3symmetric(const Fibration3& fib);

/// f = even levels with the Cartan, q = odd levels.
struct SymmetricPair {
    WeightSpaceSet f;
    WeightSpaceSet q;
};

SymmetricPair degree2(const GradedDecomposition& grading);
CheckReport check_symmetric(const SymmetricPair& pair);

/// level 1 together with the negatives of level 2; requires max_level <= 2.
WeightSpaceSet j2_flip(const GradedDecomposition& grading);

}  // namespace trisym
