#pragma once

#include "trisym/rootset.hpp"
#include "trisym/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace trisym {

/// A base together with a subset A of its simple roots, given as sorted
/// 0-based positions in base.simple().
class ParabolicDatum {
public:
    ParabolicDatum(Base base, std::vector<int> subset);

    const Base& base() const { return base_; }
    const RootSystem& rs() const { return base_.rs(); }
    const std::vector<int>& subset() const { return subset_; }
    bool in_subset(int simple_index) const;
    std::vector<RootId> subset_roots() const;
    /// "{1,3}" style, 1-based.
    std::string subset_label() const;

private:
    Base base_;
    std::vector<int> subset_;
};

/// Parses a 1-based subset: "13", "1,3", "{1,3}"; "" / "-" / "{}" is empty.
/// Bare digit strings are read one index per digit.
std::vector<int> parse_subset(std::string_view text, int rank);
std::string format_subset(const std::vector<int>& subset);

/// The level map alpha -> n_A(alpha) and its level sets g^r.
class GradedDecomposition {
public:
    explicit GradedDecomposition(const ParabolicDatum& datum);

    const ParabolicDatum& datum() const { return datum_; }
    const RootSystem& rs() const { return datum_.rs(); }
    int level(RootId a) const { return level_[static_cast<std::size_t>(a)]; }
    const std::vector<int>& levels() const { return level_; }
    int max_level() const { return max_level_; }

    /// Index set of g^r; empty for levels that do not occur.
    RootSet level_set(int r) const;
    /// Roots with level > 0: the nilradical l+.
    RootSet positive_part() const;
    /// Roots with level 0: the roots of k_A.
    RootSet level_zero() const { return level_set(0); }
    RootSet levels_where(bool (*pred)(int)) const;

private:
    ParabolicDatum datum_;
    std::vector<int> level_;
    int max_level_ = 0;
};

GradedDecomposition grade(const ParabolicDatum& datum);

/// l_1 = l+, l_{i+1} = [l_1, l_i], listed until (and including) the first
/// empty term.
struct CanonicalSeries {
    std::vector<RootSet> terms;
};

CanonicalSeries canonical_series(const ParabolicDatum& datum);

struct SeriesComparison {
    bool equal = true;
    int terms = 0;
    std::vector<std::string> mismatches;
};

/// Compares l_i with {alpha : level(alpha) >= i} for every i.
SeriesComparison check_series_equals_grading(const ParabolicDatum& datum);

/// The grading element v with <v, beta> = [beta in A] on every simple root,
/// lying in the span of the simple roots; <v, alpha> = level(alpha).
Vec canonical_element(const ParabolicDatum& datum);

}  // namespace trisym
