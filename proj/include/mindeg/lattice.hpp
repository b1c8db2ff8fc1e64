#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mindeg/group_table.hpp"

namespace mindeg {

struct SubgroupClass {
    Subgroup representative; // canonically smallest member of the class
    std::size_t length = 0;  // number of conjugates
    Subgroup core;           // intersection of the class = core of every member
    std::size_t index = 0;   // |G : representative|
};

struct SubgroupLattice {
    TablePtr table;
    std::vector<Subgroup> all;         // every subgroup, sorted by (order, members)
    std::vector<SubgroupClass> classes; // sorted by (index, representative)
};

struct LatticeOptions {
    std::size_t max_group_order = 2000; // soft guard, raiseable up to the hard ceiling
    unsigned threads = 1;
    double timeout_secs = 0; // 0 = unlimited
    std::string cache_dir;   // empty = no disk cache
};

/// Hard ceiling on lattice enumeration regardless of the configured guard.
inline constexpr std::size_t kLatticeHardCeiling = 8000;

/// Enumerate every subgroup of G by saturating joins H v <x> starting from the
/// cyclic subgroups, then group them into conjugacy classes with cores.
SubgroupLattice all_subgroups(const PermGroup& g, const LatticeOptions& opts = {});

/// Classes only (same computation; convenience accessor per the lattice).
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, const LatticeOptions& opts = {});

/// Smallest index of a core-free subgroup with a deterministic representative.
/// Never empty in practice: the trivial subgroup is core-free.
std::optional<std::pair<std::size_t, Subgroup>> min_index_core_free(const SubgroupLattice& lat);

/// Canonical content hash of a group's generator image tables (cache key).
std::uint64_t group_cache_hash(const PermGroup& g);

} // namespace mindeg
