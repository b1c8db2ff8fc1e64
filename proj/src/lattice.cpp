#include "mindeg/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace mindeg {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool enabled = false;
    void check() const {
        if (enabled && Clock::now() > end)
            throw std::runtime_error("subgroup lattice enumeration timed out");
    }
};

Bitset conjugate_members(const GroupTable& t, const Bitset& b, std::uint32_t g) {
    Bitset out(t.size());
    for (std::uint32_t e : b.to_indices()) out.set(t.conj(e, g));
    return out;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
}

// ---- disk cache ------------------------------------------------------------

constexpr std::uint32_t kCacheMagic = 0x4d444c54; // "MDLT"
constexpr std::uint32_t kCacheVersion = 1;

template <typename T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
bool get(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return bool(is);
}

std::filesystem::path cache_path(const std::string& dir, std::uint64_t hash) {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.lat", static_cast<unsigned long long>(hash));
    return std::filesystem::path(dir) / name;
}

void save_cache(const std::filesystem::path& path, std::uint64_t hash,
                const SubgroupLattice& lat) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) return; // cache is best-effort
        put(os, kCacheMagic);
        put(os, kCacheVersion);
        put(os, hash);
        put(os, static_cast<std::uint64_t>(lat.table->size()));
        put(os, static_cast<std::uint32_t>(lat.table->group().degree()));
        put(os, static_cast<std::uint32_t>(lat.all.size()));
        for (const auto& s : lat.all) {
            auto idx = s.members.to_indices();
            put(os, static_cast<std::uint32_t>(idx.size()));
            for (auto e : idx) put(os, e);
        }
        put(os, static_cast<std::uint32_t>(lat.classes.size()));
        auto id_of = [&](const Subgroup& s) -> std::uint32_t {
            auto it = std::lower_bound(lat.all.begin(), lat.all.end(), s, subgroup_less);
            return static_cast<std::uint32_t>(it - lat.all.begin());
        };
        for (const auto& c : lat.classes) {
            put(os, id_of(c.representative));
            put(os, static_cast<std::uint32_t>(c.length));
            put(os, id_of(c.core));
            put(os, static_cast<std::uint64_t>(c.index));
        }
        if (!os) return;
    }
    std::filesystem::rename(tmp, path, ec);
}

std::optional<SubgroupLattice> load_cache(const std::filesystem::path& path,
                                          std::uint64_t hash, const TablePtr& table) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    std::uint32_t magic, version, degree, nall;
    std::uint64_t h, order;
    if (!get(is, magic) || magic != kCacheMagic) return std::nullopt;
    if (!get(is, version) || version != kCacheVersion) return std::nullopt;
    if (!get(is, h) || h != hash) return std::nullopt;
    if (!get(is, order) || order != table->size()) return std::nullopt;
    if (!get(is, degree) || degree != table->group().degree()) return std::nullopt;
    if (!get(is, nall)) return std::nullopt;
    SubgroupLattice lat;
    lat.table = table;
    lat.all.reserve(nall);
    for (std::uint32_t i = 0; i < nall; ++i) {
        std::uint32_t k;
        if (!get(is, k) || k > table->size()) return std::nullopt;
        Bitset m(table->size());
        for (std::uint32_t j = 0; j < k; ++j) {
            std::uint32_t e;
            if (!get(is, e) || e >= table->size()) return std::nullopt;
            m.set(e);
        }
        try {
            lat.all.push_back(subgroup_from_members(table, std::move(m)));
        } catch (const std::exception&) {
            return std::nullopt; // corrupt record
        }
    }
    std::uint32_t nclasses;
    if (!get(is, nclasses)) return std::nullopt;
    lat.classes.reserve(nclasses);
    for (std::uint32_t i = 0; i < nclasses; ++i) {
        std::uint32_t rep, len, cor;
        std::uint64_t index;
        if (!get(is, rep) || !get(is, len) || !get(is, cor) || !get(is, index)) return std::nullopt;
        if (rep >= nall || cor >= nall) return std::nullopt;
        SubgroupClass c;
        c.representative = lat.all[rep];
        c.length = len;
        c.core = lat.all[cor];
        c.index = static_cast<std::size_t>(index);
        lat.classes.push_back(std::move(c));
    }
    return lat;
}

// ---- enumeration -----------------------------------------------------------

struct Candidate {
    Bitset members;
    std::vector<std::uint32_t> hints;
};

// All joins H v <x> for x outside H, pruned to one x per H-coset.
std::vector<Candidate> joins_of(const GroupTable& t, const Subgroup& h) {
    std::vector<Candidate> out;
    std::size_t n = t.size();
    if (h.order == n) return out;
    std::vector<char> done(n, 0);
    auto hmembers = h.element_indices();
    for (std::uint32_t x = 0; x < n; ++x) {
        if (done[x] || h.contains(x)) continue;
        for (std::uint32_t e : hmembers) done[t.mul(e, x)] = 1;
        Candidate c;
        c.hints = h.generator_hints;
        c.hints.push_back(x);
        c.members = t.closure(c.hints);
        out.push_back(std::move(c));
    }
    return out;
}

void enumerate_all(const TablePtr& table, const LatticeOptions& opts, const Deadline& dl,
                   std::vector<Subgroup>& all) {
    const GroupTable& t = *table;
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> seen;
    std::vector<Subgroup> list;
    auto add = [&](Bitset m, std::vector<std::uint32_t> hints) {
        if (seen.emplace(m, static_cast<std::uint32_t>(list.size())).second) {
            Subgroup s;
            s.parent = table;
            s.order = m.count();
            s.members = std::move(m);
            s.generator_hints = std::move(hints);
            list.push_back(std::move(s));
        }
    };

    add(t.closure({}), {});
    for (std::uint32_t x = 0; x < t.size(); ++x) add(t.closure({x}), {x});
    std::sort(list.begin(), list.end(), subgroup_less);
    seen.clear();
    for (std::uint32_t i = 0; i < list.size(); ++i) seen[list[i].members] = i;

    unsigned nthreads = std::max(1u, opts.threads);
    std::size_t next = 0;
    while (next < list.size()) {
        dl.check();
        std::size_t last = list.size();
        if (nthreads == 1 || last - next < 4) {
            for (std::size_t i = next; i < last; ++i) {
                dl.check();
                for (auto& c : joins_of(t, list[i])) add(std::move(c.members), std::move(c.hints));
            }
        } else {
            std::vector<std::vector<Candidate>> found(nthreads);
            std::mutex mx;
            std::size_t cursor = next;
            std::exception_ptr err;
            auto worker = [&](unsigned w) {
                try {
                    for (;;) {
                        std::size_t i;
                        {
                            std::lock_guard<std::mutex> lk(mx);
                            if (cursor >= last) return;
                            i = cursor++;
                        }
                        dl.check();
                        auto js = joins_of(t, list[i]);
                        auto& mine = found[w];
                        mine.insert(mine.end(), std::make_move_iterator(js.begin()),
                                    std::make_move_iterator(js.end()));
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lk(mx);
                    if (!err) err = std::current_exception();
                }
            };
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
            for (auto& th : pool) th.join();
            if (err) std::rethrow_exception(err);
            for (auto& bucket : found)
                for (auto& c : bucket) add(std::move(c.members), std::move(c.hints));
        }
        next = last;
    }
    all = std::move(list);
    std::sort(all.begin(), all.end(), subgroup_less);
}

} // namespace

std::uint64_t group_cache_hash(const PermGroup& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t v) { h = (h ^ v) * 0x100000001b3ULL; };
    mix(g.degree());
    auto gens = g.generators();
    std::sort(gens.begin(), gens.end());
    mix(gens.size());
    for (const auto& p : gens)
        for (Pt i = 0; i < p.degree(); ++i) mix(p(i));
    return h;
}

SubgroupLattice all_subgroups(const PermGroup& g, const LatticeOptions& opts) {
    BigInt order = const_cast<PermGroup&>(g).order();
    if (order > BigInt(kLatticeHardCeiling))
        throw std::invalid_argument(
            "group order " + order.str() + " exceeds the lattice hard ceiling of " +
            std::to_string(kLatticeHardCeiling) + "; subgroup enumeration refused");
    std::size_t ord = static_cast<std::size_t>(order);
    if (ord > opts.max_group_order)
        throw std::invalid_argument(
            "group order " + std::to_string(ord) + " exceeds max_group_order = " +
            std::to_string(opts.max_group_order) + "; raise it with --max-order");

    auto table = std::make_shared<GroupTable>(g, ord + 1);
    std::uint64_t hash = group_cache_hash(g);
    if (!opts.cache_dir.empty()) {
        if (auto lat = load_cache(cache_path(opts.cache_dir, hash), hash, table)) return *lat;
    }

    Deadline dl;
    if (opts.timeout_secs > 0) {
        dl.enabled = true;
        dl.end = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(opts.timeout_secs));
    }

    table->build_mul_table();
    SubgroupLattice lat;
    lat.table = table;
    enumerate_all(table, opts, dl, lat.all);

    // conjugacy classes; the class core is the intersection of the class
    const GroupTable& t = *table;
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> id;
    for (std::uint32_t i = 0; i < lat.all.size(); ++i) id[lat.all[i].members] = i;
    std::vector<char> assigned(lat.all.size(), 0);
    auto gens = t.generator_indices();
    for (std::uint32_t i = 0; i < lat.all.size(); ++i) {
        if (assigned[i]) continue;
        dl.check();
        std::vector<std::uint32_t> orbit{i};
        assigned[i] = 1;
        Bitset inter = lat.all[i].members;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (std::uint32_t ge : gens) {
                Bitset m = conjugate_members(t, lat.all[orbit[k]].members, ge);
                std::uint32_t j = id.at(m);
                if (!assigned[j]) {
                    assigned[j] = 1;
                    inter &= m;
                    orbit.push_back(j);
                }
            }
        SubgroupClass c;
        c.representative = lat.all[i]; // smallest in canonical order: orbit scan is ascending
        c.length = orbit.size();
        c.core = lat.all[id.at(inter)];
        c.index = t.size() / c.representative.order;
        lat.classes.push_back(std::move(c));
    }
    std::sort(lat.classes.begin(), lat.classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.representative.members < b.representative.members;
    });

    if (!opts.cache_dir.empty()) save_cache(cache_path(opts.cache_dir, hash), hash, lat);
    return lat;
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, const LatticeOptions& opts) {
    return all_subgroups(g, opts).classes;
}

std::optional<std::pair<std::size_t, Subgroup>> min_index_core_free(const SubgroupLattice& lat) {
    const SubgroupClass* best = nullptr;
    for (const auto& c : lat.classes)
        if (c.core.order == 1 && (!best || c.index < best->index)) best = &c;
    if (!best) return std::nullopt;
    return std::make_pair(best->index, best->representative);
}

} // namespace mindeg
