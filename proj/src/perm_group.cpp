#include "mindeg/perm_group.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace mindeg {

namespace {

int smallest_moved(const Permutation& p) {
    for (std::size_t i = 0; i < p.degree(); ++i)
        if (p(static_cast<Pt>(i)) != i) return static_cast<int>(i);
    return -1;
}

} // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.degree() != degree_)
            throw std::invalid_argument("generator degree mismatch");
}

void PermGroup::ensure_chain() const {
    if (!chain_built_) {
        build_chain();
        chain_built_ = true;
    }
}

void PermGroup::build_chain() const {
    levels_.clear();
    base_.clear();

    struct LevelExt {
        std::vector<std::size_t> done; // per orbit point: number of gens processed
    };
    std::vector<LevelExt> ext;

    auto add_generator = [&](std::size_t j, const Permutation& g) {
        if (g.is_identity()) return;
        if (j == levels_.size()) {
            Level lvl;
            lvl.base = static_cast<Pt>(smallest_moved(g));
            lvl.pos.assign(degree_, -1);
            lvl.orbit.push_back(lvl.base);
            lvl.pos[lvl.base] = 0;
            lvl.transversal.push_back(Permutation::identity(degree_));
            levels_.push_back(std::move(lvl));
            ext.push_back({});
            ext.back().done.push_back(0);
        }
        levels_[j].gens.push_back(g);
    };

    auto extend_orbit = [&](std::size_t j) {
        Level& L = levels_[j];
        std::size_t i = 0;
        while (i < L.orbit.size()) {
            for (const auto& s : L.gens) {
                Pt y = s(L.orbit[i]);
                if (L.pos[y] < 0) {
                    L.pos[y] = static_cast<int>(L.orbit.size());
                    L.orbit.push_back(y);
                    L.transversal.push_back(L.transversal[i] * s);
                }
            }
            ++i;
        }
        ext[j].done.resize(L.orbit.size(), 0);
    };

    // Strip through levels k.. ; returns the level at which the residue must
    // be installed, or npos if it sifted to the identity.
    auto strip = [&](Permutation h, std::size_t k, std::size_t* out_level) -> std::optional<Permutation> {
        for (std::size_t l = k; l < levels_.size(); ++l) {
            Pt x = h(levels_[l].base);
            if (levels_[l].pos[x] < 0) {
                *out_level = l;
                return h;
            }
            h = h * levels_[l].transversal[levels_[l].pos[x]].inverse();
        }
        if (h.is_identity()) return std::nullopt;
        *out_level = levels_.size();
        return h;
    };

    for (const auto& g : generators_) add_generator(0, g);
    if (levels_.empty()) return;

    // add_generator may grow levels_, so index it afresh after every call.
    std::size_t i = levels_.size() - 1;
    while (true) {
        extend_orbit(i);
        bool added = false;
        for (std::size_t xi = 0; xi < levels_[i].orbit.size() && !added; ++xi) {
            while (ext[i].done[xi] < levels_[i].gens.size()) {
                std::size_t gi = ext[i].done[xi]++;
                Pt x = levels_[i].orbit[xi];
                Pt y = levels_[i].gens[gi](x);
                Permutation h = levels_[i].transversal[xi] * levels_[i].gens[gi] *
                                levels_[i].transversal[levels_[i].pos[y]].inverse();
                if (h.is_identity()) continue;
                std::size_t at;
                auto r = strip(std::move(h), i + 1, &at);
                if (r) {
                    // r fixes bases 0..at-1, so it is a strong generator for
                    // every level from i+1 through at.
                    for (std::size_t l = i + 1; l <= at; ++l) add_generator(l, *r);
                    i = at < levels_.size() ? at : levels_.size() - 1;
                    added = true;
                    break;
                }
            }
        }
        if (!added) {
            if (i == 0) break;
            --i;
        }
    }

    for (const auto& lvl : levels_) base_.push_back(lvl.base);
}

BigInt PermGroup::order() const {
    ensure_chain();
    BigInt n = 1;
    for (const auto& lvl : levels_) n *= static_cast<unsigned>(lvl.orbit.size());
    return n;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_)
        throw std::invalid_argument("degree mismatch in membership test");
    ensure_chain();
    Permutation h = p;
    for (const auto& lvl : levels_) {
        Pt x = h(lvl.base);
        if (lvl.pos[x] < 0) return false;
        h = h * lvl.transversal[lvl.pos[x]].inverse();
    }
    return h.is_identity();
}

const std::vector<Pt>& PermGroup::base() const {
    ensure_chain();
    return base_;
}

std::vector<std::vector<Pt>> PermGroup::orbits() const {
    std::vector<int> owner(degree_, -1);
    std::vector<std::vector<Pt>> out;
    for (std::size_t start = 0; start < degree_; ++start) {
        if (owner[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<Pt> orb{static_cast<Pt>(start)};
        owner[start] = id;
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const auto& g : generators_) {
                Pt y = g(orb[i]);
                if (owner[y] < 0) {
                    owner[y] = id;
                    orb.push_back(y);
                }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

bool PermGroup::is_transitive() const {
    return degree_ > 0 && orbits().size() == 1;
}

PermGroup::OrbitTransversal PermGroup::orbit_transversal(Pt omega) const {
    if (omega >= degree_) throw std::invalid_argument("point out of range");
    OrbitTransversal ot;
    std::vector<int> pos(degree_, -1);
    ot.points.push_back(omega);
    ot.reps.push_back(Permutation::identity(degree_));
    pos[omega] = 0;
    for (std::size_t i = 0; i < ot.points.size(); ++i)
        for (const auto& g : generators_) {
            Pt y = g(ot.points[i]);
            if (pos[y] < 0) {
                pos[y] = static_cast<int>(ot.points.size());
                ot.points.push_back(y);
                ot.reps.push_back(ot.reps[i] * g);
            }
        }
    return ot;
}

PermGroup PermGroup::point_stabilizer(Pt omega) const {
    auto ot = orbit_transversal(omega);
    std::vector<int> pos(degree_, -1);
    for (std::size_t i = 0; i < ot.points.size(); ++i) pos[ot.points[i]] = static_cast<int>(i);
    std::unordered_set<Permutation, PermHash> seen;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < ot.points.size(); ++i)
        for (const auto& g : generators_) {
            Pt y = g(ot.points[i]);
            Permutation h = ot.reps[i] * g * ot.reps[pos[y]].inverse();
            if (h.is_identity()) continue;
            if (seen.insert(h).second) gens.push_back(std::move(h));
        }
    return PermGroup(degree_, std::move(gens));
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
    ensure_chain();
    if (order() > cap)
        throw std::runtime_error("element enumeration cap exceeded (order " +
                                 order().str() + " > cap " + std::to_string(cap) + ")");
    std::vector<Permutation> acc{Permutation::identity(degree_)};
    for (std::size_t k = levels_.size(); k-- > 0;) {
        const Level& L = levels_[k];
        std::vector<Pt> sorted_orbit = L.orbit;
        std::sort(sorted_orbit.begin(), sorted_orbit.end());
        std::vector<Permutation> next;
        next.reserve(acc.size() * sorted_orbit.size());
        for (Pt x : sorted_orbit) {
            const Permutation& u = L.transversal[L.pos[x]];
            for (const auto& e : acc) next.push_back(e * u);
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<Permutation> closure_elements(std::size_t degree,
                                          const std::vector<Permutation>& gens,
                                          std::size_t cap) {
    std::unordered_set<Permutation, PermHash> seen;
    std::vector<Permutation> out{Permutation::identity(degree)};
    seen.insert(out[0]);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            Permutation h = out[i] * g;
            if (seen.insert(h).second) {
                if (seen.size() > cap) throw std::runtime_error("closure cap exceeded");
                out.push_back(std::move(h));
            }
        }
    return out;
}

} // namespace mindeg
