#pragma once

#include <cstdint>
#include <vector>

#include "mindeg/group_ops.hpp"
#include "mindeg/lattice.hpp"

namespace mindeg {

/// An exact minimal-degree result together with its verified witness: a
/// collection of subgroups whose coset actions combine to a faithful
/// representation of the smallest possible total degree.
struct MuCertificate {
    std::size_t value = 0;
    std::vector<Subgroup> witness;
    std::size_t induced_degree = 0;
    bool faithful = false;
};

/// Exact minimal faithful permutation degree. The trivial group gets 0.
/// Search: minimum-weight cover of the minimal normal subgroups, where a
/// subgroup class of index w covers every minimal normal subgroup that is not
/// inside its core. Witness ties break on (size, lexicographic class list).
MuCertificate minimal_degree(const PermGroup& g, const LatticeOptions& opts = {});
MuCertificate minimal_degree(const SubgroupLattice& lat);

/// Shortcut valid when G has a unique minimal normal subgroup: the minimal
/// representation is transitive, so take the smallest-index core-free subgroup.
/// Throws if the uniqueness hypothesis fails.
MuCertificate minimal_degree_transitive(const PermGroup& g, const LatticeOptions& opts = {});
MuCertificate minimal_degree_transitive(const SubgroupLattice& lat);

/// Total degree and faithfulness of the coset action on the disjoint union of
/// the witness coset spaces. Pure certificate checking.
std::pair<std::size_t, bool> verify_representation(const TablePtr& g,
                                                   const std::vector<Subgroup>& witness);

/// mu of an abelian group: the sum of its primary cyclic orders.
std::uint64_t mu_abelian(const AbelianType& t);

/// psi(k) = sum over primes p | k of the largest power of p dividing k; psi(1)=0.
std::uint64_t psi(std::uint64_t k);

/// mu of the dihedral group of the given (even) order 2^r * n, n odd:
///   n = 1: 2^r for r <= 2, else 2^(r-1);  n > 1: psi(n) for r = 1, else
///   2^(r-1) + psi(n). Throws on odd input.
std::uint64_t mu_dihedral(std::uint64_t order);

} // namespace mindeg
