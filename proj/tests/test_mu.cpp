#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "mindeg/mu.hpp"
#include "mindeg/named_groups.hpp"

using namespace mindeg;

namespace {

PermGroup q8_regular() {
    auto gi = from_cycles(8, {{1, 2, 5, 6}, {3, 4, 7, 8}});
    auto gj = from_cycles(8, {{1, 3, 5, 7}, {2, 8, 6, 4}});
    return PermGroup(8, {gi, gj});
}

PermGroup klein() { return direct_product(cyclic_regular(2), cyclic_regular(2)); }

// Exhaustive oracle: try every collection of at most k subgroups (k = number
// of minimal normal subgroups; an irredundant faithful collection never needs
// more), over ALL subgroups, with no class reduction and no bounding.
std::size_t oracle_mu(const SubgroupLattice& lat) {
    if (lat.table->size() == 1) return 0;
    std::size_t k = minimal_normal_subgroups(lat.table).size();
    std::vector<std::pair<std::size_t, Bitset>> subs; // (index, core members)
    for (const auto& s : lat.all)
        subs.emplace_back(lat.table->size() / s.order, core(lat.table, s).members);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    auto rec = [&](auto&& self, std::size_t start, const Bitset& inter, std::size_t w,
                   std::size_t depth) -> void {
        if (inter.count() == 1) {
            best = std::min(best, w);
            return;
        }
        if (depth == k) return;
        for (std::size_t i = start; i < subs.size(); ++i) {
            Bitset next = inter;
            next &= subs[i].second;
            self(self, i + 1, next, w + subs[i].first, depth + 1);
        }
    };
    Bitset full(lat.table->size());
    for (std::size_t e = 0; e < lat.table->size(); ++e) full.set(e);
    rec(rec, 0, full, 0, 0);
    return best;
}

PermGroup subgroup_as_group(const Subgroup& s) {
    std::vector<Permutation> gens;
    for (auto e : s.generator_hints) gens.push_back(s.parent->element(e));
    return PermGroup(s.parent->group().degree(), gens);
}

} // namespace

TEST_CASE("minimal degree basics") {
    auto t = minimal_degree(trivial_group(1));
    CHECK(t.value == 0);
    CHECK(t.witness.empty());
    CHECK(t.faithful);

    CHECK(minimal_degree(cyclic_regular(2)).value == 2);

    auto q8 = minimal_degree(q8_regular());
    CHECK(q8.value == 8);
    REQUIRE(q8.witness.size() == 1);
    CHECK(q8.witness[0].order == 1); // only the regular representation works

    auto v4 = minimal_degree(klein());
    CHECK(v4.value == 4);
    // two index-2 subgroups and the regular representation tie at 4;
    // the count tie-break picks the single-constituent witness
    REQUIRE(v4.witness.size() == 1);
    CHECK(v4.witness[0].order == 1);

    CHECK(minimal_degree(symmetric_group(4)).value == 4);
    CHECK(minimal_degree(cyclic_regular(12)).value == 7);
    CHECK(minimal_degree(alternating_group(5)).value == 5);
    // C2 x Alt(5): 2 + 5, additivity across the simple factor
    CHECK(minimal_degree(direct_product(cyclic_regular(2), alternating_group(5))).value == 7);
}

TEST_CASE("certificates verify and degrees add up") {
    for (auto g : {q8_regular(), klein(), symmetric_group(4), cyclic_regular(12),
                   dihedral_group(6), alternating_group(4)}) {
        auto lat = all_subgroups(g);
        auto cert = minimal_degree(lat);
        CHECK(cert.faithful);
        CHECK(cert.induced_degree == cert.value);
        auto ver = verify_representation(lat.table, cert.witness);
        CHECK(ver.first == cert.value);
        CHECK(ver.second);
    }
}

TEST_CASE("verify_representation examples") {
    auto q8 = q8_regular();
    auto lat = all_subgroups(q8);
    auto triv = trivial_subgroup(lat.table);
    CHECK(verify_representation(lat.table, {triv}) == std::pair<std::size_t, bool>{8, true});
    auto i = subgroup_generated(lat.table, {lat.table->index_of(q8.generators()[0])});
    CHECK(verify_representation(lat.table, {i}) == std::pair<std::size_t, bool>{2, false});

    auto vl = all_subgroups(klein());
    auto a = subgroup_generated(vl.table, {vl.table->index_of(vl.table->group().generators()[0])});
    auto b = subgroup_generated(vl.table, {vl.table->index_of(vl.table->group().generators()[1])});
    CHECK(verify_representation(vl.table, {a, b}) == std::pair<std::size_t, bool>{4, true});
    // duplicates add degree but never coverage
    CHECK(verify_representation(vl.table, {a, a}) == std::pair<std::size_t, bool>{4, false});
    CHECK(verify_representation(vl.table, {}).second == false);
}

TEST_CASE("transitive shortcut agrees where it applies") {
    for (auto g : {q8_regular(), symmetric_group(4), alternating_group(4), dihedral_group(4)}) {
        auto lat = all_subgroups(g);
        auto a = minimal_degree_transitive(lat);
        auto b = minimal_degree(lat);
        CHECK(a.value == b.value);
        CHECK(a.faithful);
        CHECK(a.witness.size() == 1);
    }
    CHECK_THROWS_AS(minimal_degree_transitive(klein()), std::invalid_argument);
    CHECK_THROWS_AS(minimal_degree_transitive(cyclic_regular(12)), std::invalid_argument);
}

TEST_CASE("exhaustive cover oracle over all subgroups") {
    std::vector<PermGroup> corpus{
        q8_regular(),
        klein(),
        direct_product(klein(), cyclic_regular(2)), // C2^3
        cyclic_regular(12),
        symmetric_group(4),
        alternating_group(4),
        dihedral_group(6),
        dihedral_group(4),
        direct_product(cyclic_regular(2), cyclic_regular(4)),
        dihedral_group(9),
    };
    for (const auto& g : corpus) {
        auto lat = all_subgroups(g);
        CHECK(minimal_degree(lat).value == oracle_mu(lat));
    }
}

TEST_CASE("psi") {
    CHECK(psi(1) == 0);
    CHECK(psi(12) == 7);
    CHECK(psi(15) == 8);
    CHECK(psi(30) == 10);
    CHECK(psi(64) == 64);
    CHECK_THROWS_AS(psi(0), std::invalid_argument);
}

TEST_CASE("dihedral closed form") {
    CHECK(mu_dihedral(8) == 4);
    CHECK(mu_dihedral(6) == 3);
    CHECK(mu_dihedral(12) == 5);
    CHECK(mu_dihedral(2) == 2);
    CHECK(mu_dihedral(4) == 4);
    CHECK(mu_dihedral(16) == 8);
    CHECK_THROWS_AS(mu_dihedral(9), std::invalid_argument);
    // against exact search (the full sweep to order 200 runs in acceptance)
    for (unsigned m = 1; m <= 40; ++m)
        CHECK(mu_dihedral(2 * m) == minimal_degree(dihedral_group(m)).value);
}

TEST_CASE("abelian closed form") {
    CHECK(mu_abelian(AbelianType{{4, 3}}) == 7);
    CHECK(mu_abelian(AbelianType{{2, 2, 2, 2}}) == 8);
    CHECK(mu_abelian(AbelianType{}) == 0);
    for (auto g : {cyclic_regular(12), cyclic_regular(36), klein(),
                   direct_product(cyclic_regular(4), cyclic_regular(6)),
                   direct_product(klein(), cyclic_regular(9))}) {
        auto tab = std::make_shared<const GroupTable>(g);
        CHECK(mu_abelian(abelian_invariants(tab)) == minimal_degree(g).value);
    }
}

TEST_CASE("nilpotent additivity samples") {
    auto q8 = q8_regular();
    auto d8 = dihedral_group(4);
    CHECK(minimal_degree(direct_product(q8, d8)).value == 8 + 4);
    CHECK(minimal_degree(direct_product(q8, cyclic_regular(2))).value == 8 + 2);
    CHECK(minimal_degree(direct_product(cyclic_regular(4), cyclic_regular(4))).value == 4 + 4);
    CHECK(minimal_degree(direct_product(d8, cyclic_regular(9))).value == 4 + 9);
}

TEST_CASE("monotonicity over a small lattice") {
    auto lat = all_subgroups(symmetric_group(4));
    auto mu_g = minimal_degree(lat).value;
    for (const auto& s : lat.all) CHECK(minimal_degree(subgroup_as_group(s)).value <= mu_g);
}
