#pragma once

#include "trisym/fibration.hpp"
#include "trisym/twistor.hpp"

#include <string>
#include <vector>

namespace trisym {

/// Twistor space of the Wolf space attached to a base: A is the set of
/// simple roots pairing to 1 with the highest root.
struct WolfTwistor {
    ParabolicDatum datum;
    GradedDecomposition grading;
    WeightSpaceSet k;    // level 0 with the Cartan
    WeightSpaceSet j1;   // l+
    WeightSpaceSet j2;   // j2_flip(grading)
    /// (alpha/gamma) for every root, indexed by root id.
    std::vector<int> pairing_with_highest;
};

WolfTwistor wolf_twistor(const Base& base);

enum class InnerKind { Singleton1, Singleton2, Pair11, Mark3 };
std::string to_string(InnerKind k);

struct InnerCase {
    InnerKind kind = InnerKind::Singleton1;
    std::vector<int> subset;
    std::vector<RootId> h_simple_system;
    std::string h_type;
    int cartan_rank = 0;
    int fibre_dim = 0;
    std::string fibre_pattern;
    RootSet fibre_roots;
};

/// Inner 3-symmetric spaces G/H attached to a base: singletons of mark 1
/// or 2, pairs of mark-1 roots, and mark-3 roots.
std::vector<InnerCase> gray_wolf_inner(const Base& base);

struct MaximalRankSubalgebra {
    WeightSpaceSet h;
    std::vector<RootId> simple_system;   // (B - {delta}) + {-gamma}
    DynkinComponents type;
    RootSet level3;                      // roots with n_delta = 3
};

/// h_delta = t + roots with n_delta in {0, ±3}; requires n_delta(gamma) = 3.
MaximalRankSubalgebra borel_de_siebenthal(const Base& base, int delta);

/// Number of roots of a simple type.
int root_count(const SimpleType& t);

}  // namespace trisym
