#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include "mindeg/group_ops.hpp"
#include "mindeg/lattice.hpp"
#include "mindeg/named_groups.hpp"

using namespace mindeg;

namespace {

PermGroup q8_regular() {
    auto gi = from_cycles(8, {{1, 2, 5, 6}, {3, 4, 7, 8}});
    auto gj = from_cycles(8, {{1, 3, 5, 7}, {2, 8, 6, 4}});
    return PermGroup(8, {gi, gj});
}

// Independent oracle: join saturation over randomly shuffled element orderings,
// written without any of the lattice module's pruning.
std::set<Bitset> oracle_subgroups(const GroupTable& t, unsigned seed) {
    std::vector<std::uint32_t> elems(t.size());
    for (std::uint32_t i = 0; i < t.size(); ++i) elems[i] = i;
    std::mt19937 rng(seed);
    std::shuffle(elems.begin(), elems.end(), rng);

    std::set<Bitset> found;
    std::vector<std::pair<Bitset, std::vector<std::uint32_t>>> work;
    auto add = [&](const std::vector<std::uint32_t>& gens) {
        Bitset m = t.closure(gens);
        if (found.insert(m).second) work.emplace_back(std::move(m), gens);
    };
    add({});
    for (auto x : elems) add({x});
    for (std::size_t i = 0; i < work.size(); ++i)
        for (auto x : elems) {
            if (work[i].first.test(x)) continue;
            auto gens = work[i].second;
            gens.push_back(x);
            add(gens);
        }
    return found;
}

Bitset conj_members(const GroupTable& t, const Bitset& b, std::uint32_t g) {
    Bitset out(t.size());
    for (auto e : b.to_indices()) out.set(t.conj(e, g));
    return out;
}

} // namespace

TEST_CASE("textbook lattices") {
    auto q8 = all_subgroups(q8_regular());
    CHECK(q8.all.size() == 6);
    CHECK(q8.classes.size() == 6); // Hamiltonian: every subgroup normal
    for (const auto& c : q8.classes) CHECK(c.length == 1);
    std::multiset<std::size_t> q8_orders;
    for (const auto& s : q8.all) q8_orders.insert(s.order);
    CHECK(q8_orders == std::multiset<std::size_t>{1, 2, 4, 4, 4, 8});

    auto s3 = all_subgroups(symmetric_group(3));
    CHECK(s3.all.size() == 6);
    REQUIRE(s3.classes.size() == 4);
    std::multiset<std::size_t> s3_orders;
    for (const auto& c : s3.classes) s3_orders.insert(c.representative.order);
    CHECK(s3_orders == std::multiset<std::size_t>{1, 2, 3, 6});

    auto v4 = all_subgroups(direct_product(cyclic_regular(2), cyclic_regular(2)));
    CHECK(v4.all.size() == 5);

    CHECK(all_subgroups(symmetric_group(4)).all.size() == 30);
    CHECK(all_subgroups(symmetric_group(4)).classes.size() == 11);
}

TEST_CASE("random-restart saturation oracle") {
    for (auto make : {+[] { return q8_regular(); }, +[] { return symmetric_group(4); },
                      +[] { return dihedral_group(6); }}) {
        auto lat = all_subgroups(make());
        std::set<Bitset> mine;
        for (const auto& s : lat.all) mine.insert(s.members);
        CHECK(mine.size() == lat.all.size());
        for (unsigned seed : {1u, 7u, 42u}) CHECK(oracle_subgroups(*lat.table, seed) == mine);
    }
}

TEST_CASE("class bookkeeping: Lagrange, normalizers, cores") {
    auto lat = all_subgroups(symmetric_group(4));
    const auto& t = *lat.table;
    std::size_t total = 0;
    for (const auto& c : lat.classes) {
        total += c.length;
        CHECK(t.size() % c.representative.order == 0);
        CHECK(c.index == t.size() / c.representative.order);
        // class length * |normalizer| = |G|, normalizer by brute force
        std::size_t nz = 0;
        for (std::uint32_t g = 0; g < t.size(); ++g)
            if (conj_members(t, c.representative.members, g) == c.representative.members) ++nz;
        CHECK(c.length * nz == t.size());
    }
    CHECK(total == lat.all.size());

    // for every subgroup: the class core equals the intersection of all
    // conjugates, and equals the coset-action kernel
    for (const auto& s : lat.all) {
        Bitset inter = s.members;
        for (std::uint32_t g = 0; g < t.size(); ++g) inter &= conj_members(t, s.members, g);
        CHECK(core(lat.table, s).members == inter);
    }
    for (const auto& c : lat.classes) {
        CHECK(c.core.members.subset_of(c.representative.members));
        CHECK(core(lat.table, c.representative).members == c.core.members);
    }
}

TEST_CASE("minimal-index core-free subgroup") {
    auto q8 = all_subgroups(q8_regular());
    auto r = min_index_core_free(q8);
    REQUIRE(r.has_value());
    CHECK(r->first == 8);
    CHECK(r->second.order == 1);

    auto v4 = min_index_core_free(
        all_subgroups(direct_product(cyclic_regular(2), cyclic_regular(2))));
    REQUIRE(v4.has_value());
    CHECK(v4->first == 4);
    CHECK(v4->second.order == 1);

    auto s4 = min_index_core_free(all_subgroups(symmetric_group(4)));
    REQUIRE(s4.has_value());
    CHECK(s4->first == 4);
    CHECK(s4->second.order == 6);
}

TEST_CASE("order guards") {
    CHECK_THROWS_WITH_AS(all_subgroups(symmetric_group(7)),
                         doctest::Contains("--max-order"), std::invalid_argument);
    LatticeOptions big;
    big.max_group_order = 100000;
    CHECK_THROWS_WITH_AS(all_subgroups(symmetric_group(8), big),
                         doctest::Contains("hard ceiling"), std::invalid_argument);
}

TEST_CASE("timeout") {
    LatticeOptions o;
    o.timeout_secs = 1e-9;
    CHECK_THROWS_AS(all_subgroups(symmetric_group(4), o), std::runtime_error);
}

TEST_CASE("threads give the same lattice") {
    LatticeOptions par;
    par.threads = 4;
    auto a = all_subgroups(symmetric_group(4));
    auto b = all_subgroups(symmetric_group(4), par);
    REQUIRE(a.all.size() == b.all.size());
    for (std::size_t i = 0; i < a.all.size(); ++i) CHECK(a.all[i].members == b.all[i].members);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].representative.members == b.classes[i].representative.members);
        CHECK(a.classes[i].core.members == b.classes[i].core.members);
        CHECK(a.classes[i].length == b.classes[i].length);
    }
}

TEST_CASE("disk cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "mindeg-cache-test";
    std::filesystem::remove_all(dir);
    LatticeOptions o;
    o.cache_dir = dir.string();
    auto g = symmetric_group(4);
    auto a = all_subgroups(g, o);
    CHECK(std::filesystem::exists(dir));
    bool has_file = false;
    for (auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".lat") has_file = true;
    CHECK(has_file);
    auto b = all_subgroups(g, o); // served from cache
    REQUIRE(a.all.size() == b.all.size());
    for (std::size_t i = 0; i < a.all.size(); ++i) CHECK(a.all[i].members == b.all[i].members);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].representative.members == b.classes[i].representative.members);
        CHECK(a.classes[i].core.members == b.classes[i].core.members);
        CHECK(a.classes[i].length == b.classes[i].length);
        CHECK(a.classes[i].index == b.classes[i].index);
    }
    // a truncated cache file is ignored, not trusted
    for (auto& e : std::filesystem::directory_iterator(dir))
        std::filesystem::resize_file(e.path(), 12);
    auto c = all_subgroups(g, o);
    CHECK(c.all.size() == a.all.size());
    std::filesystem::remove_all(dir);
}
