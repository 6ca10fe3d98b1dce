#include "trisym/twistor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace trisym {

EqualRankSpace::EqualRankSpace(WeightSpaceSet h) : h_(std::move(h)) {
    if (!h_.rs) throw std::invalid_argument("space without a root system");
    const RootSystem& rs = *h_.rs;
    if (!h_.cartan)
        throw InputError("h must contain the Cartan subalgebra: only equal-rank spaces (rank H = rank G) are supported");
    for (RootId a : h_.roots.ids())
        if (!h_.roots.contains(rs.neg(a))) throw InputError("h is not negation-closed: it misses " + rs.text(rs.neg(a)));
    InclusionCheck closed = check_bracket_inclusion("[h,h] ⊆ h", h_, h_, h_);
    if (!closed.holds) throw InputError("h is not a subalgebra: " + closed.witnesses.front() + " lies outside h");
    RootSet all(rs.size());
    for (RootId a = 0; a < rs.size(); ++a) all.insert(a);
    m_ = WeightSpaceSet(h_.rs, false, all - h_.roots);
    for (RootId a : m_.roots.ids())
        if (a < rs.neg(a)) pairs_.emplace_back(a, rs.neg(a));
}

EqualRankSpace EqualRankSpace::from_roots(const RootSystemPtr& rs, const std::vector<RootId>& h_roots) {
    return EqualRankSpace(WeightSpaceSet::of(rs, h_roots, true).symmetrized());
}

TwistorCandidate::TwistorCandidate(EqualRankSpace space, WeightSpaceSet n_plus)
    : space_(std::move(space)), n_plus_(std::move(n_plus)) {
    const RootSystem& rs = space_.rs();
    if (n_plus_.rs != space_.system()) throw std::invalid_argument("candidate over a different root system");
    if (n_plus_.cartan) throw InputError("n+ must not contain the Cartan subalgebra");
    for (RootId a : n_plus_.roots.ids()) {
        if (!space_.m().roots.contains(a)) throw InputError("n+ root " + rs.text(a) + " lies in h, not in m");
        if (n_plus_.roots.contains(rs.neg(a)))
            throw InputError("n+ is not isotropic: it contains both " + rs.text(a) + " and " + rs.text(rs.neg(a)));
    }
    if (2 * n_plus_.roots.count() != space_.m().roots.count())
        throw InputError("n+ has " + std::to_string(n_plus_.roots.count()) + " roots; a maximal isotropic subspace of m needs " +
                         std::to_string(space_.m().roots.count() / 2));
}

TwistorCandidate nplus_from_base(const EqualRankSpace& space, const Base& base) {
    if (base.system() != space.system()) throw std::invalid_argument("base over a different root system");
    WeightSpaceSet n = WeightSpaceSet::empty(space.system());
    for (RootId a : space.m().roots.ids())
        if (base.is_positive(a)) n.roots.insert(a);
    return TwistorCandidate(space, n);
}

IntegrabilityReport integrability(const TwistorCandidate& candidate) {
    const auto& n = candidate.n_plus();
    const auto parts = candidate.space().partition();
    IntegrabilityReport r;
    r.bracket = bracket_set(n, n);
    r.bracket_h = project(r.bracket, 0, parts);
    r.bracket_m = project(r.bracket, 1, parts);
    r.second = bracket_set(r.bracket_h, n);
    r.first_condition = check_inclusion("[n+,n+]^m ⊆ n+", r.bracket_m, n);
    r.second_condition = check_inclusion("[[n+,n+]^h,n+] ⊆ n+", r.second, n);
    return r;
}

std::string projective_pattern(const RootSystem& rs, const RootSet& v, const Base& ambient) {
    const auto ids = v.ids();
    if (ids.empty()) return "point";
    const int k = static_cast<int>(ids.size());
    auto type_of_span = [&]() {
        auto sub = generated_subsystem(rs, ids);
        return dynkin_type(rs, subsystem_simple_roots(ambient, sub));
    };
    bool abelian = true, pairwise_positive = true;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (rs.sum(ids[i], ids[j]) != kNoRoot) abelian = false;
            if (dot(rs.root(ids[i]), rs.root(ids[j])).sign() <= 0) pairwise_positive = false;
        }
    if (abelian && pairwise_positive) {
        if (type_of_span() == DynkinComponents{SimpleType{'A', k}}) return "CP(" + std::to_string(k) + ")";
        return "";
    }
    // contact shape: one top root, the rest pairing off to it
    if (k % 2 == 1 && k >= 3) {
        for (RootId top : ids) {
            bool ok = true;
            int paired = 0;
            for (RootId a : ids) {
                if (a == top) continue;
                int partners = 0;
                for (RootId b : ids)
                    if (b != top && b != a && rs.sum(a, b) != kNoRoot) {
                        if (rs.sum(a, b) != top) ok = false;
                        ++partners;
                    }
                if (partners != 1) ok = false;
                ++paired;
            }
            if (!ok || paired != k - 1) continue;
            const int q = (k - 1) / 2;
            if (type_of_span() == DynkinComponents{SimpleType{'C', q + 1}}) return "CP(" + std::to_string(k) + ")";
            return "";
        }
    }
    return "";
}

FibreInfo fibre_info(const EqualRankSpace& space, const WeightSpaceSet& h_part, const Base& ambient) {
    const RootSystem& rs = space.rs();
    FibreInfo info;
    info.roots = h_part.roots | h_part.roots.negated(rs);
    info.dim = 2 * h_part.roots.count();
    info.h_type = format_dynkin(dynkin_type(rs, subsystem_simple_roots(ambient, space.h().roots.ids())));
    info.pattern = projective_pattern(rs, h_part.roots, ambient);
    return info;
}

std::string to_string(RecoveryFailure f) {
    switch (f) {
        case RecoveryFailure::None: return "none";
        case RecoveryFailure::Isotropy: return "isotropy";
        case RecoveryFailure::Closedness: return "closedness";
        case RecoveryFailure::Positivity: return "positivity";
        case RecoveryFailure::LevelMismatch: return "level mismatch";
    }
    return "unknown";
}

ParabolicDatum Recovery::datum() const {
    if (!base) throw std::logic_error("no recovered parabolic");
    return ParabolicDatum(*base, subset);
}

Recovery recover_parabolic(const TwistorCandidate& candidate) {
    const RootSystem& rs = candidate.space().rs();
    IntegrabilityReport ir = integrability(candidate);
    Recovery rec;
    rec.h_part = ir.bracket_h;
    rec.l_plus = ir.bracket_h | candidate.n_plus();
    const RootSet& s = rec.l_plus.roots;

    for (RootId a : s.ids())
        if (s.contains(rs.neg(a))) {
            rec.failure = RecoveryFailure::Isotropy;
            rec.witness = rs.text(a) + " and " + rs.text(rs.neg(a)) + " both lie in l+";
            return rec;
        }
    const auto ids = s.ids();
    for (RootId a : ids)
        for (RootId b : ids) {
            RootId c = rs.sum(a, b);
            if (c != kNoRoot && !s.contains(c)) {
                rec.failure = RecoveryFailure::Closedness;
                rec.witness = rs.text(a) + " + " + rs.text(b) + " = " + rs.text(c) + " is not in l+";
                return rec;
            }
        }
    PositiveSystemResult ps = find_positive_system(candidate.space().system(), ids);
    if (!ps.base) {
        rec.failure = RecoveryFailure::Positivity;
        rec.witness = ps.failure;
        return rec;
    }
    rec.base = ps.base;
    for (int i = 0; i < rec.base->rank(); ++i)
        if (s.contains(rec.base->simple_root(i))) rec.subset.push_back(i);
    GradedDecomposition g(rec.datum());
    RootSet positive = g.positive_part();
    if (positive != s) {
        rec.failure = RecoveryFailure::LevelMismatch;
        auto extra = (positive - s).ids();
        auto missing = (s - positive).ids();
        rec.witness = !extra.empty() ? rs.text(extra.front()) + " has positive level but is not in l+"
                                     : rs.text(missing.front()) + " is in l+ but has level " +
                                           std::to_string(g.level(missing.front()));
        return rec;
    }
    rec.fibre = fibre_info(candidate.space(), rec.h_part, *rec.base);
    return rec;
}

CompatibilityReport is_degree3_compatible(const TwistorCandidate& candidate, const WeightSpaceSet& m_plus) {
    const EqualRankSpace& space = candidate.space();
    if (m_plus.rs != space.system()) throw std::invalid_argument("m+ over a different root system");
    if (!m_plus.isotropic() || (m_plus.roots | m_plus.roots.negated(space.rs())) != space.m().roots)
        throw InputError("m+ is not an invariant almost complex structure on m (it must pick one root of each opposite pair)");
    Recovery rec = recover_parabolic(candidate);
    if (!rec.success())
        throw InputError("the candidate does not recover a parabolic (" + to_string(rec.failure) + ": " + rec.witness + ")");
    GradedDecomposition g(rec.datum());
    CompatibilityReport r;
    r.g1 = WeightSpaceSet(space.system(), false, g.level_set(1));
    r.g1_test = check_inclusion("g^1 ⊆ m+", r.g1, m_plus);
    r.simple_test = check_inclusion("A ⊆ m+", WeightSpaceSet::of(space.system(), rec.datum().subset_roots()), m_plus);
    r.agree = r.g1_test.holds == r.simple_test.holds;
    if (r.compatible()) {
        Fibration3 fib(g);
        r.rederived_equal = fib.h() == space.h() && fib.m_plus() == m_plus;
    }
    return r;
}

TwistorCandidate candidate_at(const EqualRankSpace& space, unsigned long index) {
    const auto& pairs = space.opposite_pairs();
    WeightSpaceSet n = WeightSpaceSet::empty(space.system());
    for (std::size_t i = 0; i < pairs.size(); ++i) n.roots.insert(((index >> i) & 1UL) ? pairs[i].second : pairs[i].first);
    return TwistorCandidate(space, n);
}

std::vector<TwistorCandidate> enumerate_candidates(const EqualRankSpace& space) {
    const auto p = space.opposite_pairs().size();
    if (p > static_cast<std::size_t>(kMaxEnumeratedPairs))
        throw InputError("m has " + std::to_string(p) + " opposite pairs; enumeration is limited to " +
                         std::to_string(kMaxEnumeratedPairs));
    std::vector<TwistorCandidate> out;
    out.reserve(std::size_t{1} << p);
    for (unsigned long k = 0; k < (1UL << p); ++k) out.push_back(candidate_at(space, k));
    return out;
}

RootId reflect(const RootSystem& rs, RootId a, RootId b) {
    return rs.require(rs.root(a) - scale(QSqrt3(rs.cartan(a, b)), rs.root(b)));
}

std::vector<int> weyl_classes(const EqualRankSpace& space, const std::vector<TwistorCandidate>& candidates) {
    const RootSystem& rs = space.rs();
    std::map<std::vector<RootId>, std::size_t> index;
    for (std::size_t i = 0; i < candidates.size(); ++i) index[candidates[i].n_plus().roots.ids()] = i;
    std::vector<std::size_t> parent(candidates.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (RootId b : space.h().roots.ids()) {
        std::vector<RootId> perm(static_cast<std::size_t>(rs.size()));
        for (RootId a = 0; a < rs.size(); ++a) perm[static_cast<std::size_t>(a)] = reflect(rs, a, b);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            std::vector<RootId> image;
            for (RootId a : candidates[i].n_plus().roots.ids()) image.push_back(perm[static_cast<std::size_t>(a)]);
            std::sort(image.begin(), image.end());
            auto it = index.find(image);
            if (it == index.end()) continue;   // only when the candidate list is partial
            parent[find(i)] = find(it->second);
        }
    }
    std::vector<int> out(candidates.size());
    std::map<std::size_t, int> label;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        auto [it, fresh] = label.emplace(find(i), static_cast<int>(label.size()));
        out[i] = it->second;
    }
    return out;
}

}  // namespace trisym
