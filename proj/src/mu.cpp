#include "mindeg/mu.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace mindeg {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// One usable cover step: the cheapest class with a given core.
struct Choice {
    std::size_t weight = 0;
    Bitset core;
    std::uint32_t cls = 0; // index into lattice.classes
};

// Exact completion costs per state. A state is the running intersection of
// chosen cores — always a subgroup, so the state space is the lattice itself.
struct Solver {
    const SubgroupLattice* lat;
    std::vector<Choice> choices;
    std::unordered_map<Bitset, std::uint32_t, BitsetHash> state_id;
    std::vector<std::size_t> dw; // min remaining weight to reach {1}
    std::vector<std::size_t> dc; // min constituent count among weight-optimal completions
    std::size_t mu = 0;

    // witness search (tie-break refinement)
    std::vector<std::uint32_t> pick, best_pick;
    std::size_t nodes = 0;
    static constexpr std::size_t kNodeBudget = 500000;

    void build() {
        const auto& classes = lat->classes;
        std::unordered_map<Bitset, char, BitsetHash> core_seen;
        for (std::uint32_t ci = 0; ci < classes.size(); ++ci) {
            const auto& c = classes[ci];
            if (c.core.order == lat->table->size()) continue; // G itself: no progress
            if (!core_seen.emplace(c.core.members, 1).second) continue; // same core, higher weight
            choices.push_back({c.index, c.core.members, ci});
        }
        // lat->all is sorted by order ascending, so every strictly smaller
        // intersection state is finished before it is needed
        const auto& all = lat->all;
        for (std::uint32_t i = 0; i < all.size(); ++i) state_id[all[i].members] = i;
        dw.assign(all.size(), kInf);
        dc.assign(all.size(), kInf);
        dw[0] = dc[0] = 0; // trivial subgroup
        for (std::uint32_t i = 1; i < all.size(); ++i)
            for (const auto& ch : choices) {
                Bitset next = all[i].members;
                next &= ch.core;
                if (next == all[i].members) continue;
                std::uint32_t j = state_id.at(next);
                if (dw[j] == kInf) continue;
                std::size_t w = ch.weight + dw[j];
                std::size_t c = dc[j] + 1;
                if (w < dw[i] || (w == dw[i] && c < dc[i])) {
                    dw[i] = w;
                    dc[i] = c;
                }
            }
        mu = dw.back(); // full group is the last state
    }

    std::vector<std::uint32_t> greedy_witness() const {
        std::vector<std::uint32_t> out;
        Bitset s = lat->all.back().members;
        std::uint32_t cur = static_cast<std::uint32_t>(lat->all.size() - 1);
        while (dw[cur] > 0) {
            bool stepped = false;
            for (const auto& ch : choices) {
                Bitset next = s;
                next &= ch.core;
                if (next == s) continue;
                std::uint32_t j = state_id.at(next);
                if (dw[j] != kInf && ch.weight + dw[j] == dw[cur] && dc[j] + 1 == dc[cur]) {
                    out.push_back(ch.cls);
                    s = std::move(next);
                    cur = j;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) throw std::logic_error("witness reconstruction failed");
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool better(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

    // Exhaust weight-optimal covers in class order for the canonical witness;
    // a deterministic node budget caps pathological tie counts, in which case
    // the best witness seen so far stands.
    void dfs(std::size_t pos, const Bitset& s, std::uint32_t sid, std::size_t w) {
        if (++nodes > kNodeBudget) return;
        if (dw[sid] == 0) {
            if (better(pick, best_pick)) best_pick = pick;
            return;
        }
        if (pos == choices.size()) return;
        if (w + dw[sid] > mu) return;                       // admissible: exact completion cost
        if (pick.size() + dc[sid] > best_pick.size()) return; // count is the next tie-break key
        const auto& ch = choices[pos];
        Bitset next = s;
        next &= ch.core;
        if (!(next == s)) {
            pick.push_back(ch.cls);
            std::uint32_t j = state_id.at(next);
            if (w + ch.weight + dw[j] <= mu) dfs(pos + 1, next, j, w + ch.weight);
            pick.pop_back();
            if (nodes > kNodeBudget) return;
        }
        dfs(pos + 1, s, sid, w);
    }
};

} // namespace

std::pair<std::size_t, bool> verify_representation(const TablePtr& g,
                                                   const std::vector<Subgroup>& witness) {
    std::size_t degree = 0;
    Bitset inter(g->size());
    for (std::size_t e = 0; e < g->size(); ++e) inter.set(e);
    for (const auto& h : witness) {
        if (h.members.size() != g->size() || h.order == 0)
            throw std::invalid_argument("witness subgroup does not live in the given group");
        auto res = coset_action(g, h);
        degree += res.action.degree();
        inter &= res.kernel.members;
    }
    return {degree, inter.count() == 1};
}

MuCertificate minimal_degree(const SubgroupLattice& lat) {
    MuCertificate cert;
    if (lat.table->size() == 1) {
        cert.faithful = true;
        return cert;
    }
    Solver s;
    s.lat = &lat;
    s.build();
    s.best_pick = s.greedy_witness();
    s.dfs(0, lat.all.back().members, static_cast<std::uint32_t>(lat.all.size() - 1), 0);

    cert.value = s.mu;
    for (auto ci : s.best_pick) cert.witness.push_back(lat.classes[ci].representative);
    auto ver = verify_representation(lat.table, cert.witness);
    cert.induced_degree = ver.first;
    cert.faithful = ver.second;
    if (!cert.faithful || cert.induced_degree != cert.value)
        throw std::logic_error("minimal-degree certificate failed verification");
    return cert;
}

MuCertificate minimal_degree(const PermGroup& g, const LatticeOptions& opts) {
    return minimal_degree(all_subgroups(g, opts));
}

MuCertificate minimal_degree_transitive(const SubgroupLattice& lat) {
    if (lat.table->size() == 1) {
        MuCertificate cert;
        cert.faithful = true;
        return cert;
    }
    auto normals = minimal_normal_subgroups(lat.table);
    if (normals.size() != 1)
        throw std::invalid_argument(
            "transitive shortcut needs a unique minimal normal subgroup; found " +
            std::to_string(normals.size()));
    auto r = min_index_core_free(lat);
    if (!r) throw std::logic_error("no core-free subgroup found"); // cannot happen
    MuCertificate cert;
    cert.value = r->first;
    cert.witness = {r->second};
    auto ver = verify_representation(lat.table, cert.witness);
    cert.induced_degree = ver.first;
    cert.faithful = ver.second;
    if (!cert.faithful || cert.induced_degree != cert.value)
        throw std::logic_error("transitive certificate failed verification");
    return cert;
}

MuCertificate minimal_degree_transitive(const PermGroup& g, const LatticeOptions& opts) {
    return minimal_degree_transitive(all_subgroups(g, opts));
}

std::uint64_t mu_abelian(const AbelianType& t) {
    std::uint64_t s = 0;
    for (auto f : t.factors) s += f;
    return s;
}

std::uint64_t psi(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("psi needs a positive argument");
    std::uint64_t s = 0;
    for (std::uint64_t p = 2; p * p <= k; ++p)
        if (k % p == 0) {
            std::uint64_t q = 1;
            while (k % p == 0) {
                k /= p;
                q *= p;
            }
            s += q;
        }
    if (k > 1) s += k; // leftover prime
    return s;
}

std::uint64_t mu_dihedral(std::uint64_t order) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("dihedral groups here have even order >= 2");
    unsigned r = 0;
    std::uint64_t n = order;
    while (n % 2 == 0) {
        n /= 2;
        ++r;
    }
    std::uint64_t half = std::uint64_t{1} << (r - 1);
    if (n == 1) return r <= 2 ? (half * 2) : half;
    return r == 1 ? psi(n) : half + psi(n);
}

} // namespace mindeg
