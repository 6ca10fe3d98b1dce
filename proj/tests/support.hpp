#pragma once

#include "oracle.hpp"
#include "trisym/rootsys.hpp"
#include "trisym/rootset.hpp"

#include <string>
#include <vector>

namespace testing_support {

inline std::vector<trisym::SimpleType> types_up_to(int max_rank) {
    std::vector<trisym::SimpleType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({'B', n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
    for (int n = 4; n <= max_rank; ++n) out.push_back({'D', n});
    for (int n = 6; n <= max_rank && n <= 8; ++n) out.push_back({'E', n});
    if (max_rank >= 4) out.push_back({'F', 4});
    if (max_rank >= 2) out.push_back({'G', 2});
    return out;
}

inline std::vector<trisym::SimpleType> classical_up_to(int max_rank) {
    std::vector<trisym::SimpleType> out;
    for (auto t : types_up_to(max_rank))
        if (t.label <= 'D') out.push_back(t);
    return out;
}

inline std::string name(const trisym::SimpleType& t) { return t.str(); }

inline oracle::VecSet vectors(const trisym::RootSystem& rs, const trisym::RootSet& s) {
    oracle::VecSet out;
    for (auto a : s.ids()) out.insert(rs.root(a));
    return out;
}

inline oracle::VecSet vectors(const trisym::RootSystem& rs, const std::vector<trisym::RootId>& ids) {
    oracle::VecSet out;
    for (auto a : ids) out.insert(rs.root(a));
    return out;
}

inline oracle::VecSet all_vectors(const trisym::RootSystem& rs) {
    return oracle::VecSet(rs.roots().begin(), rs.roots().end());
}

inline oracle::VecSet parse_set(const std::string& text) {
    auto v = trisym::parse_vec_list(text);
    return oracle::VecSet(v.begin(), v.end());
}

inline trisym::RootSet ids_of(const trisym::RootSystem& rs, const std::string& text) {
    return trisym::RootSet(rs.size(), rs.parse_roots(text));
}

}  // namespace testing_support
