#pragma once

#include "trisym/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trisym {

using RootId = int;
inline constexpr RootId kNoRoot = -1;

struct SimpleType {
    char label = 'A';
    int rank = 1;

    std::string str() const { return std::string(1, label) + std::to_string(rank); }
    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Parses "G2", "A3", "e8" ... and checks the combination is a catalog type.
SimpleType parse_simple_type(std::string_view text);
void check_simple_type(const SimpleType& t);

/// A reduced root system of simple type, realized in exact coordinates.
///
/// Root ids are positions in the lexicographically sorted list of root
/// vectors. Negation, addition and Cartan pairings are tabulated once at
/// construction; everything downstream works on ids.
class RootSystem {
public:
    static std::shared_ptr<const RootSystem> build(SimpleType type);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int ambient_dim() const { return dim_; }
    int size() const { return static_cast<int>(roots_.size()); }

    const Vec& root(RootId id) const { return roots_.at(static_cast<std::size_t>(id)); }
    const std::vector<Vec>& roots() const { return roots_; }
    std::string text(RootId id) const { return format_vec(root(id)); }

    std::optional<RootId> find(const Vec& v) const;
    /// Like find() but throws InputError naming the offending vector.
    RootId require(const Vec& v) const;
    RootId parse_root(std::string_view text) const;
    std::vector<RootId> parse_roots(std::string_view text) const;

    RootId neg(RootId id) const { return neg_[static_cast<std::size_t>(id)]; }
    /// Id of alpha + beta, or kNoRoot when the sum is not a root (or is zero).
    RootId sum(RootId a, RootId b) const {
        return sum_[static_cast<std::size_t>(a) * roots_.size() + static_cast<std::size_t>(b)];
    }
    /// 2<a,b>/<b,b>, always an integer in [-3, 3].
    int cartan(RootId a, RootId b) const {
        return cartan_[static_cast<std::size_t>(a) * roots_.size() + static_cast<std::size_t>(b)];
    }
    const QSqrt3& norm2(RootId id) const { return norm2_[static_cast<std::size_t>(id)]; }

    /// The catalog simple roots (Bourbaki ordering; G2 uses the planar table's
    /// base {(-3,r3),(2,0)}).
    const std::vector<RootId>& catalog_simple() const { return catalog_simple_; }

private:
    RootSystem() = default;
    void tabulate();
    // integer encoding of a vector: (denom*a, denom*b) per coordinate
    std::optional<std::vector<long>> key(const Vec& v) const;

    SimpleType type_;
    int dim_ = 0;
    std::vector<Vec> roots_;
    long denom_ = 1;
    std::vector<std::vector<long>> keys_;
    std::map<std::vector<long>, RootId> index_;
    std::vector<RootId> neg_;
    std::vector<RootId> sum_;
    std::vector<std::int8_t> cartan_;
    std::vector<QSqrt3> norm2_;
    std::vector<RootId> catalog_simple_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(SimpleType type) { return RootSystem::build(type); }
RootSystemPtr build_root_system(char label, int rank);

/// 2<a,b>/<b,b> for arbitrary vectors that are roots of rs.
int cartan_pairing(const RootSystem& rs, const Vec& a, const Vec& b);

using Coefficients = std::vector<int>;

/// An ordered simple system with its positive roots, coefficient table and
/// highest root.
class Base {
public:
    const RootSystemPtr& system() const { return rs_; }
    const RootSystem& rs() const { return *rs_; }
    int rank() const { return static_cast<int>(simple_.size()); }

    const std::vector<RootId>& simple() const { return simple_; }
    RootId simple_root(int i) const { return simple_.at(static_cast<std::size_t>(i)); }
    bool is_positive(RootId id) const { return positive_[static_cast<std::size_t>(id)]; }
    std::vector<RootId> positives() const;
    RootId highest() const { return highest_; }

    /// n_beta(alpha) for every simple beta, in simple-root order.
    const Coefficients& coefficients(RootId id) const { return coeffs_[static_cast<std::size_t>(id)]; }
    int height(RootId id) const;
    /// Index of `id` in the simple list, or -1.
    int simple_index(RootId id) const;

    friend bool operator==(const Base& x, const Base& y) {
        return x.rs_ == y.rs_ && x.simple_ == y.simple_;
    }

private:
    friend Base validate_base(const RootSystemPtr&, const std::vector<RootId>&);
    friend std::vector<QSqrt3> solve_coordinates(const Base&, const Vec&);
    RootSystemPtr rs_;
    std::vector<Vec> gram_inverse_;
    std::vector<RootId> simple_;
    std::vector<char> positive_;
    std::vector<Coefficients> coeffs_;
    RootId highest_ = kNoRoot;
};

/// Checks that `candidate` is a base of rs and computes its data. Throws
/// InputError naming a witness root when it is not.
Base validate_base(const RootSystemPtr& rs, const std::vector<RootId>& candidate);
Base catalog_base(const RootSystemPtr& rs);

/// Exact decomposition of an arbitrary vector over the simple roots; throws
/// InputError when the vector is not in their span.
std::vector<QSqrt3> solve_coordinates(const Base& base, const Vec& v);
Coefficients decompose(const Base& base, const Vec& alpha);

/// Positive roots are those with <v, alpha> > 0; simple roots are the
/// indecomposable positives, ordered by decreasing root id.
Base base_from_regular_vector(const RootSystemPtr& rs, const Vec& v);

struct PositiveSystemResult {
    std::optional<Base> base;
    Vec regular_vector;     // ambient vector inducing `base`, when found
    std::string failure;    // which property failed, with witness
};

/// Finds a base whose positive roots contain S, when S is closed and
/// S and -S are disjoint. Feasibility is decided by Fourier-Motzkin
/// elimination over the catalog simple-root coordinates.
PositiveSystemResult find_positive_system(const RootSystemPtr& rs, const std::vector<RootId>& S);

using DynkinComponents = std::vector<SimpleType>;

/// Cartan matrix of an ordered list of roots.
std::vector<std::vector<int>> cartan_matrix(const RootSystem& rs, const std::vector<RootId>& system);

/// Identifies the Dynkin type of a simple system (independent roots with an
/// admissible Cartan matrix). Components are returned sorted.
DynkinComponents dynkin_type(const RootSystem& rs, const std::vector<RootId>& system);
std::string format_dynkin(const DynkinComponents& comps);

/// Smallest negation-closed, addition-closed root subset containing `seed`.
std::vector<RootId> generated_subsystem(const RootSystem& rs, const std::vector<RootId>& seed);

/// Simple roots of a closed symmetric subsystem, taking positivity from
/// `ambient` (the subsystem's positive roots are subsystem ∩ ambient
/// positives).
std::vector<RootId> subsystem_simple_roots(const Base& ambient, const std::vector<RootId>& subsystem);

}  // namespace trisym
