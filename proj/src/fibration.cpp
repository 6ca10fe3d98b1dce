#include "trisym/fibration.hpp"

#include <stdexcept>

namespace trisym {

namespace {

void same_system(const WeightSpaceSet& a, const WeightSpaceSet& b) {
    if (!a.rs || !b.rs || a.rs != b.rs) throw std::invalid_argument("weight space sets over different root systems");
}

int mod3(int r) { return ((r % 3) + 3) % 3; }

}  // namespace

WeightSpaceSet::WeightSpaceSet(RootSystemPtr system, bool with_cartan, RootSet root_set)
    : rs(std::move(system)), cartan(with_cartan), roots(std::move(root_set)) {
    if (!rs) throw std::invalid_argument("weight space set without a root system");
    if (roots.universe() != rs->size()) throw std::invalid_argument("root set does not match its root system");
}

WeightSpaceSet WeightSpaceSet::of(RootSystemPtr system, const std::vector<RootId>& ids, bool with_cartan) {
    int n = system->size();
    return WeightSpaceSet(std::move(system), with_cartan, RootSet(n, ids));
}

bool WeightSpaceSet::negation_closed() const { return roots.negated(*rs) == roots; }

bool WeightSpaceSet::isotropic() const { return !cartan && roots.disjoint(roots.negated(*rs)); }

WeightSpaceSet WeightSpaceSet::conjugate() const { return WeightSpaceSet(rs, cartan, roots.negated(*rs)); }

WeightSpaceSet WeightSpaceSet::symmetrized() const { return WeightSpaceSet(rs, cartan, roots | roots.negated(*rs)); }

bool WeightSpaceSet::subset_of(const WeightSpaceSet& o) const {
    same_system(*this, o);
    return (!cartan || o.cartan) && roots.subset_of(o.roots);
}

WeightSpaceSet operator|(const WeightSpaceSet& a, const WeightSpaceSet& b) {
    same_system(a, b);
    return WeightSpaceSet(a.rs, a.cartan || b.cartan, a.roots | b.roots);
}

WeightSpaceSet bracket_set(const WeightSpaceSet& u, const WeightSpaceSet& v) {
    same_system(u, v);
    const RootSystem& rs = *u.rs;
    WeightSpaceSet out = WeightSpaceSet::empty(u.rs);
    const auto vi = v.roots.ids();
    for (RootId a : u.roots.ids())
        for (RootId b : vi) {
            if (b == rs.neg(a)) {
                out.cartan = true;
                continue;
            }
            RootId s = rs.sum(a, b);
            if (s != kNoRoot) out.roots.insert(s);
        }
    if (u.cartan) out.roots |= v.roots;
    if (v.cartan) out.roots |= u.roots;
    return out;
}

void validate_partition(const std::vector<WeightSpaceSet>& partition) {
    if (partition.empty()) throw std::invalid_argument("empty partition");
    const RootSystem& rs = *partition.front().rs;
    RootSet seen(rs.size());
    int cartans = 0;
    for (const auto& p : partition) {
        same_system(partition.front(), p);
        if (!seen.disjoint(p.roots)) throw std::invalid_argument("partition members overlap");
        seen |= p.roots;
        cartans += p.cartan ? 1 : 0;
    }
    if (seen.count() != rs.size()) throw std::invalid_argument("partition does not cover every root");
    if (cartans != 1) throw std::invalid_argument("the Cartan subalgebra must lie in exactly one partition member");
}

WeightSpaceSet project(const WeightSpaceSet& u, std::size_t onto, const std::vector<WeightSpaceSet>& partition) {
    validate_partition(partition);
    if (onto >= partition.size()) throw std::out_of_range("projection target outside the partition");
    const WeightSpaceSet& target = partition[onto];
    same_system(u, target);
    return WeightSpaceSet(u.rs, u.cartan && target.cartan, u.roots & target.roots);
}

InclusionCheck check_bracket_inclusion(std::string name, const WeightSpaceSet& u, const WeightSpaceSet& v,
                                       const WeightSpaceSet& target) {
    same_system(u, v);
    same_system(u, target);
    const RootSystem& rs = *u.rs;
    InclusionCheck c{std::move(name), true, {}};
    const auto vi = v.roots.ids();
    for (RootId a : u.roots.ids())
        for (RootId b : vi) {
            if (b == rs.neg(a)) {
                if (!target.cartan) c.witnesses.push_back(rs.text(a) + " + " + rs.text(b) + " lands in the Cartan");
                continue;
            }
            RootId s = rs.sum(a, b);
            if (s != kNoRoot && !target.roots.contains(s))
                c.witnesses.push_back(rs.text(a) + " + " + rs.text(b) + " = " + rs.text(s));
        }
    if (u.cartan)
        for (RootId b : (v.roots - target.roots).ids()) c.witnesses.push_back("[t, " + rs.text(b) + "]");
    if (v.cartan)
        for (RootId a : (u.roots - target.roots).ids()) c.witnesses.push_back("[" + rs.text(a) + ", t]");
    c.holds = c.witnesses.empty();
    return c;
}

InclusionCheck check_inclusion(std::string name, const WeightSpaceSet& u, const WeightSpaceSet& target) {
    same_system(u, target);
    InclusionCheck c{std::move(name), true, {}};
    if (u.cartan && !target.cartan) c.witnesses.push_back("t");
    for (RootId a : (u.roots - target.roots).ids()) c.witnesses.push_back(u.rs->text(a));
    c.holds = c.witnesses.empty();
    return c;
}

bool CheckReport::pass() const {
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

std::vector<std::string> CheckReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.holds) out.push_back(c.name);
    return out;
}

Fibration3::Fibration3(const GradedDecomposition& grading) : datum_(grading.datum()) {
    const RootSystemPtr& sys = datum_.base().system();
    const int n = sys->size();
    RootSet h(n), mp(n), mm(n);
    for (RootId a = 0; a < n; ++a) {
        int r = grading.level(a);
        switch (mod3(r)) {
            case 0:
                h.insert(a);
                if (r != 0) trivial_ = false;
                break;
            case 1: mp.insert(a); break;
            default: mm.insert(a); break;
        }
    }
    h_ = WeightSpaceSet(sys, true, h);
    m_plus_ = WeightSpaceSet(sys, false, mp);
    m_minus_ = WeightSpaceSet(sys, false, mm);
    if (m_minus_ != m_plus_.conjugate()) throw std::logic_error("m- is not the conjugate of m+");
    validate_partition({h_, m_plus_, m_minus_});
}

Fibration3 degree3(const GradedDecomposition& grading) { return Fibration3(grading); }

CheckReport check_3symmetric(const WeightSpaceSet& h, const WeightSpaceSet& m_plus, const WeightSpaceSet& m_minus) {
    CheckReport r;
    r.checks.push_back(check_bracket_inclusion("[m+,m+] ⊆ m-", m_plus, m_plus, m_minus));
    r.checks.push_back(check_bracket_inclusion("[m-,m-] ⊆ m+", m_minus, m_minus, m_plus));
    r.checks.push_back(check_bracket_inclusion("[m+,m-] ⊆ h", m_plus, m_minus, h));
    r.checks.push_back(check_bracket_inclusion("[h,m+] ⊆ m+", h, m_plus, m_plus));
    r.checks.push_back(check_bracket_inclusion("[h,m-] ⊆ m-", h, m_minus, m_minus));
    r.checks.push_back(check_bracket_inclusion("[h,h] ⊆ h", h, h, h));
    return r;
}

CheckReport check_3symmetric(const Fibration3& fib) { return check_3symmetric(fib.h(), fib.m_plus(), fib.m_minus()); }

SymmetricPair degree2(const GradedDecomposition& grading) {
    const RootSystemPtr& sys = grading.datum().base().system();
    const int n = sys->size();
    RootSet f(n), q(n);
    for (RootId a = 0; a < n; ++a) (grading.level(a) % 2 == 0 ? f : q).insert(a);
    return {WeightSpaceSet(sys, true, f), WeightSpaceSet(sys, false, q)};
}

CheckReport check_symmetric(const SymmetricPair& pair) {
    CheckReport r;
    r.checks.push_back(check_bracket_inclusion("[q,q] ⊆ f", pair.q, pair.q, pair.f));
    r.checks.push_back(check_bracket_inclusion("[f,q] ⊆ q", pair.f, pair.q, pair.q));
    r.checks.push_back(check_bracket_inclusion("[f,f] ⊆ f", pair.f, pair.f, pair.f));
    return r;
}

WeightSpaceSet j2_flip(const GradedDecomposition& grading) {
    if (grading.max_level() >= 3)
        throw InputError("the grading reaches level " + std::to_string(grading.max_level()) +
                         "; the flag manifold is not itself the 3-symmetric base");
    const RootSystemPtr& sys = grading.datum().base().system();
    RootSet m = grading.level_set(1) | grading.level_set(2).negated(*sys);
    return WeightSpaceSet(sys, false, m);
}

}  // namespace trisym
