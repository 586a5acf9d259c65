#include "beauville/bray.hpp"

#include <random>
#include <set>

namespace beauville {

namespace {

void require_involution(const Permutation& t) {
    if (t.is_identity() || !(t * t).is_identity()) throw std::invalid_argument("t is not an involution");
}

}  // namespace

Permutation bray_element(const Permutation& t, const Permutation& g) {
    require_involution(t);
    const Permutation c = t * t.conjugated_by(g);
    const std::uint64_t o = c.order();
    const auto r = static_cast<std::int64_t>(o / 2);
    return o % 2 == 0 ? c.pow(r) : g * c.pow(r);
}

BrayCandidate build_candidate_from_x(const Permutation& t, const Permutation& x1, const Permutation& x2,
                                     const Permutation& u, std::int64_t j1, std::int64_t j2) {
    require_involution(t);
    if (!u.commutes_with(t)) throw std::invalid_argument("u does not commute with t");
    BrayCandidate c;
    c.t = t;
    c.u = u;
    c.j1 = j1;
    c.j2 = j2;
    c.first = make_triple(x1, x1.pow(j1).conjugated_by(u));
    c.second = make_triple(x2, x2.pow(j2).conjugated_by(u));
    for (const auto* tr : {&c.first, &c.second}) {
        if (tr->x.conjugated_by(t) != tr->x.inverse() || tr->y.conjugated_by(t) != tr->y.inverse())
            throw std::logic_error("Bray candidate: t does not invert x_i and y_i");
    }
    return c;
}

BrayCandidate build_candidate(const Permutation& t, const Permutation& g1, const Permutation& g2, const Permutation& u,
                              std::int64_t j1, std::int64_t j2) {
    require_involution(t);
    BrayCandidate c =
        build_candidate_from_x(t, t * t.conjugated_by(g1), t * t.conjugated_by(g2), u, j1, j2);
    c.g1 = g1;
    c.g2 = g2;
    return c;
}

std::vector<BrayFind> bray_scan(const PermGroup& G, const Permutation& t, const BrayScanOptions& opts) {
    require_involution(t);
    for (const auto& s : G.generators())
        if (!G.contains(s.conjugated_by(t))) throw std::invalid_argument("t does not normalize the group");
    std::vector<BrayFind> out;
    if (opts.trials == 0) return out;

    std::optional<ClassTable> table;
    if (G.order() <= opts.limits.class_cap) table.emplace(G, opts.limits);
    const ClassTable* T = table ? &*table : nullptr;
    auto generates_G = [&](const Permutation& x, const Permutation& y) {
        return PermGroup(G.degree(), {x, y}).order() == G.order();
    };

    for (std::size_t trial = 0; trial < opts.trials; ++trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(trial)};
        std::mt19937_64 rng(seq);
        const Permutation g1 = G.random_element(rng);
        const Permutation g2 = G.random_element(rng);
        const Permutation x1 = t * t.conjugated_by(g1);
        const Permutation x2 = t * t.conjugated_by(g2);
        const std::uint64_t o1 = x1.order(), o2 = x2.order();
        if (o1 < 2 || o2 < 2) continue;

        std::vector<Permutation> us;
        for (std::size_t k = 0; k < opts.pool; ++k) us.push_back(bray_element(t, G.random_element(rng)));
        const std::size_t base = us.size();
        for (std::size_t a = 0; a < base; ++a)
            for (std::size_t b = 0; b < base; ++b)
                if (a != b) us.push_back(us[a] * us[b]);

        std::set<Permutation> powers_x1;
        for (std::uint64_t k = 0; k < o1; ++k) powers_x1.insert(x1.pow(static_cast<std::int64_t>(k)));

        bool done = false;
        for (const auto& u : us) {
            if (done) break;
            if (powers_x1.count(x1.conjugated_by(u))) continue;  // u normalizes <x1>
            std::vector<std::int64_t> j1s, j2s;
            for (std::uint64_t j = 1; j < o1; ++j) {
                const auto tr = make_triple(x1, x1.pow(static_cast<std::int64_t>(j)).conjugated_by(u));
                if (is_hyperbolic(tr.type) && generates_G(tr.x, tr.y)) j1s.push_back(static_cast<std::int64_t>(j));
            }
            if (j1s.empty()) continue;
            for (std::uint64_t j = 1; j < o2; ++j) {
                const auto tr = make_triple(x2, x2.pow(static_cast<std::int64_t>(j)).conjugated_by(u));
                if (is_hyperbolic(tr.type) && generates_G(tr.x, tr.y)) j2s.push_back(static_cast<std::int64_t>(j));
            }
            for (auto j1 : j1s) {
                for (auto j2 : j2s) {
                    BrayCandidate c = build_candidate(t, g1, g2, u, j1, j2);
                    if (!sigma_check(G, c.first, c.second, opts.limits, T).disjoint) continue;
                    out.push_back({BeauvilleStructure{c.first, c.second, G}, std::move(c)});
                    done = true;
                    break;
                }
                if (done) break;
            }
        }
    }
    return out;
}

}  // namespace beauville
