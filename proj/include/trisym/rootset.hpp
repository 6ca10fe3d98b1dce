#pragma once

#include "trisym/rootsys.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace trisym {

/// A subset of the roots of one system, stored as a membership mask.
/// Iteration (ids()) is always in increasing root id.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(int universe) : mask_(static_cast<std::size_t>(universe), 0) {}
    RootSet(int universe, const std::vector<RootId>& ids) : RootSet(universe) {
        for (RootId a : ids) insert(a);
    }

    int universe() const { return static_cast<int>(mask_.size()); }
    bool contains(RootId a) const { return mask_[static_cast<std::size_t>(a)] != 0; }
    void insert(RootId a) { mask_[static_cast<std::size_t>(a)] = 1; }
    void erase(RootId a) { mask_[static_cast<std::size_t>(a)] = 0; }
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<RootId> ids() const;

    RootSet negated(const RootSystem& rs) const;
    bool subset_of(const RootSet& o) const;
    bool disjoint(const RootSet& o) const;

    RootSet& operator|=(const RootSet& o);
    RootSet& operator&=(const RootSet& o);
    RootSet& operator-=(const RootSet& o);
    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
    friend RootSet operator-(RootSet a, const RootSet& b) { return a -= b; }
    friend bool operator==(const RootSet&, const RootSet&) = default;

private:
    std::vector<char> mask_;
};

/// "[a] ⊕ [b] ⊕ ..." in root-id order, "{0}" when empty.
std::string format_direct_sum(const RootSystem& rs, const RootSet& s);
std::vector<std::string> root_texts(const RootSystem& rs, const RootSet& s);

}  // namespace trisym
