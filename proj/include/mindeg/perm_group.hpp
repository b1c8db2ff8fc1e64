#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <vector>

#include "mindeg/perm.hpp"

namespace mindeg {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultElementCap = 20000;

/// A permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain built on first use.
///
/// Base points are the smallest points moved at each level, so the chain
/// (and everything derived from it) is a pure function of the generator list.
class PermGroup {
public:
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    BigInt order() const;
    bool contains(const Permutation& p) const;
    bool is_trivial() const { return order() == 1; }

    /// Orbit partition of the points; each orbit sorted, orbits ordered by
    /// smallest element.
    std::vector<std::vector<Pt>> orbits() const;
    bool is_transitive() const;

    /// Subgroup fixing omega, generated by (deduplicated) Schreier generators.
    PermGroup point_stabilizer(Pt omega) const;

    /// Orbit of a point together with transversal elements u_x, base^{u_x} = x.
    struct OrbitTransversal {
        std::vector<Pt> points;                 // discovery order
        std::vector<Permutation> reps;          // aligned with points
    };
    OrbitTransversal orbit_transversal(Pt omega) const;

    /// All elements in a deterministic order (product of transversals,
    /// orbit points taken in increasing order at every level).
    /// Throws if the order exceeds `cap`.
    std::vector<Permutation> elements(std::size_t cap = kDefaultElementCap) const;

    const std::vector<Pt>& base() const;

private:
    struct Level {
        Pt base = 0;
        std::vector<Permutation> gens;
        std::vector<Pt> orbit;                  // discovery order
        std::vector<int> pos;                   // point -> index into orbit, -1 if absent
        std::vector<Permutation> transversal;   // aligned with orbit
        std::size_t pairs_done = 0;             // processed (orbit idx, gen idx) pairs, row-major by orbit
    };

    void ensure_chain() const;
    void build_chain() const;

    std::size_t degree_;
    std::vector<Permutation> generators_;
    mutable std::vector<Level> levels_;
    mutable std::vector<Pt> base_;
    mutable bool chain_built_ = false;
};

/// Brute-force closure of a generating set; independent of the chain.
/// Throws if the closure exceeds `cap`.
std::vector<Permutation> closure_elements(std::size_t degree,
                                          const std::vector<Permutation>& gens,
                                          std::size_t cap = 2000000);

} // namespace mindeg
