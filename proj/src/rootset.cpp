#include "trisym/rootset.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisym {

int RootSet::count() const {
    return static_cast<int>(std::count(mask_.begin(), mask_.end(), 1));
}

std::vector<RootId> RootSet::ids() const {
    std::vector<RootId> out;
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) out.push_back(static_cast<RootId>(i));
    return out;
}

RootSet RootSet::negated(const RootSystem& rs) const {
    RootSet out(universe());
    for (RootId a : ids()) out.insert(rs.neg(a));
    return out;
}

bool RootSet::subset_of(const RootSet& o) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && !o.mask_[i]) return false;
    return true;
}

bool RootSet::disjoint(const RootSet& o) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && o.mask_[i]) return false;
    return true;
}

RootSet& RootSet::operator|=(const RootSet& o) {
    if (o.mask_.size() != mask_.size()) throw std::invalid_argument("root sets over different systems");
    for (std::size_t i = 0; i < mask_.size(); ++i) mask_[i] = static_cast<char>(mask_[i] | o.mask_[i]);
    return *this;
}

RootSet& RootSet::operator&=(const RootSet& o) {
    if (o.mask_.size() != mask_.size()) throw std::invalid_argument("root sets over different systems");
    for (std::size_t i = 0; i < mask_.size(); ++i) mask_[i] = static_cast<char>(mask_[i] & o.mask_[i]);
    return *this;
}

RootSet& RootSet::operator-=(const RootSet& o) {
    if (o.mask_.size() != mask_.size()) throw std::invalid_argument("root sets over different systems");
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (o.mask_[i]) mask_[i] = 0;
    return *this;
}

std::string format_direct_sum(const RootSystem& rs, const RootSet& s) {
    auto ids = s.ids();
    if (ids.empty()) return "{0}";
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " ⊕ " : "") + rs.text(ids[i]);
    return out;
}

std::vector<std::string> root_texts(const RootSystem& rs, const RootSet& s) {
    std::vector<std::string> out;
    for (RootId a : s.ids()) out.push_back(rs.text(a));
    return out;
}

}  // namespace trisym
