#include "beauville/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <tuple>
#include <unordered_map>

namespace beauville {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::uint64_t checked_order(const PermGroup& G, const Limits& limits, const char* what) {
    auto n = G.order_u64();
    if (!n || *n > limits.class_cap || *n >= kUnset)
        throw BudgetExceeded(std::string(what) + ": group order " + G.order().str() + " exceeds the element budget of " +
                             std::to_string(limits.class_cap));
    return *n;
}

std::vector<Permutation> nontrivial_generators(const PermGroup& G) {
    std::vector<Permutation> out;
    for (const auto& g : G.generators())
        if (!g.is_identity()) out.push_back(g);
    return out;
}

std::string class_label(std::uint64_t order, std::size_t index) {
    std::string s = std::to_string(order);
    if (index < 26) return s + static_cast<char>('A' + index);
    return s + "Z" + std::to_string(index - 25);
}

}  // namespace

ClassTable::ClassTable(PermGroup G, Limits limits) : G_(std::move(G)) {
    const std::uint64_t N = checked_order(G_, limits, "class table");
    const auto gens = nontrivial_generators(G_);
    if (gens.size() > std::numeric_limits<std::uint16_t>::max()) throw std::invalid_argument("too many generators");

    class_id_.assign(N, kUnset);
    parent_.assign(N, kUnset);
    via_.assign(N, 0);

    struct Raw {
        std::uint64_t root;
        std::uint64_t size;
        Permutation min;
    };
    std::vector<Raw> raw;
    std::deque<std::uint64_t> queue;
    for (std::uint64_t r = 0; r < N; ++r) {
        if (class_id_[r] != kUnset) continue;
        const auto id = static_cast<std::uint32_t>(raw.size());
        class_id_[r] = id;
        queue.assign(1, r);
        Raw cls{r, 0, G_.unrank(r)};
        while (!queue.empty()) {
            const std::uint64_t q = queue.front();
            queue.pop_front();
            ++cls.size;
            const Permutation e = G_.unrank(q);
            if (e < cls.min) cls.min = e;
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                const std::uint64_t c = G_.rank(e.conjugated_by(gens[gi]));
                if (class_id_[c] != kUnset) continue;
                class_id_[c] = id;
                parent_[c] = static_cast<std::uint32_t>(q);
                via_[c] = static_cast<std::uint16_t>(gi);
                queue.push_back(c);
            }
        }
        raw.push_back(std::move(cls));
    }

    // Deterministic order: element order, then class size, then representative.
    std::vector<std::size_t> perm(raw.size());
    std::vector<std::uint64_t> orders(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        perm[k] = k;
        orders[k] = raw[k].min.order();
    }
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(orders[a], raw[a].size, raw[a].min) < std::tie(orders[b], raw[b].size, raw[b].min);
    });
    std::vector<std::uint32_t> newid(raw.size());
    for (std::size_t k = 0; k < perm.size(); ++k) newid[perm[k]] = static_cast<std::uint32_t>(k);
    for (auto& c : class_id_) c = newid[c];

    std::map<std::uint64_t, std::size_t> per_order;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        const Raw& r = raw[perm[k]];
        ConjClass cc;
        cc.representative = r.min;
        cc.size = r.size;
        cc.element_order = orders[perm[k]];
        cc.cycle_type = r.min.cycle_type();
        cc.label = class_label(cc.element_order, per_order[cc.element_order]++);
        classes_.push_back(std::move(cc));
        root_.push_back(r.root);
    }
    for (std::size_t k = 0; k < classes_.size(); ++k)
        root_to_rep_inv_.push_back(path_from_root(G_.rank(classes_[k].representative)).inverse());

    power_closure_.assign(classes_.size(), std::vector<bool>(classes_.size(), false));
    for (std::size_t k = 0; k < classes_.size(); ++k) {
        const auto& x = classes_[k].representative;
        Permutation p(x.degree());
        for (std::uint64_t j = 0; j < classes_[k].element_order; ++j) {
            power_closure_[k][class_of(p)] = true;
            p = p * x;
        }
    }
}

Permutation ClassTable::path_from_root(std::uint64_t r) const {
    const auto gens = nontrivial_generators(G_);
    std::vector<std::uint16_t> steps;
    while (parent_[r] != kUnset) {
        steps.push_back(via_[r]);
        r = parent_[r];
    }
    Permutation w(G_.degree());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) w = w * gens[*it];
    return w;
}

std::size_t ClassTable::class_of(const Permutation& p) const { return class_id_[G_.rank(p)]; }

Permutation ClassTable::witness(const Permutation& p) const {
    const std::uint64_t r = G_.rank(p);
    return root_to_rep_inv_[class_id_[r]] * path_from_root(r);
}

std::optional<Permutation> ClassTable::conjugator(const Permutation& u, const Permutation& v) const {
    const std::uint64_t ru = G_.rank(u), rv = G_.rank(v);
    if (class_id_[ru] != class_id_[rv]) return std::nullopt;
    // root^a = u, root^b = v  =>  u^(a^-1 b) = v
    return path_from_root(ru).inverse() * path_from_root(rv);
}

std::size_t ClassTable::power_class(std::size_t c, std::int64_t k) const {
    return class_of(classes_.at(c).representative.pow(k));
}

std::optional<std::size_t> ClassTable::find_label(const std::string& label) const {
    for (std::size_t k = 0; k < classes_.size(); ++k)
        if (classes_[k].label == label) return k;
    return std::nullopt;
}

std::optional<Permutation> is_conjugate(const PermGroup& G, const Permutation& u, const Permutation& v, Limits limits,
                                        const ClassTable* table, ConjugacyStats* stats) {
    if (u.degree() != G.degree() || v.degree() != G.degree()) throw DegreeMismatch("is_conjugate: degree mismatch");
    if (!G.contains(u) || !G.contains(v)) throw NotAMember("is_conjugate: element outside the group");
    if (u == v) return Permutation(G.degree());
    if (u.order() != v.order() || u.cycle_type() != v.cycle_type()) {
        if (stats) ++stats->fast_rejects;
        return std::nullopt;
    }
    if (stats) ++stats->tests;
    if (table) return table->conjugator(u, v);

    if (!G.order_u64()) throw BudgetExceeded("is_conjugate: group too large to index elements");
    const auto gens = nontrivial_generators(G);
    const std::uint64_t target = G.rank(v);
    struct Node {
        std::uint64_t parent;
        std::uint16_t via;
    };
    std::unordered_map<std::uint64_t, Node> seen;
    std::deque<std::pair<std::uint64_t, Permutation>> queue;
    const std::uint64_t start = G.rank(u);
    seen.emplace(start, Node{start, 0});
    queue.emplace_back(start, u);
    auto trace = [&](std::uint64_t r) {
        std::vector<std::uint16_t> steps;
        while (r != start) {
            steps.push_back(seen[r].via);
            r = seen[r].parent;
        }
        Permutation w(G.degree());
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) w = w * gens[*it];
        return w;
    };
    while (!queue.empty()) {
        auto [r, e] = std::move(queue.front());
        queue.pop_front();
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            Permutation c = e.conjugated_by(gens[gi]);
            const std::uint64_t rc = G.rank(c);
            if (seen.count(rc)) continue;
            seen.emplace(rc, Node{r, static_cast<std::uint16_t>(gi)});
            if (rc == target) return trace(rc);
            if (seen.size() > limits.class_cap)
                throw BudgetExceeded("is_conjugate: class of " + u.to_cycle_string() + " exceeds the budget of " +
                                     std::to_string(limits.class_cap) + " elements");
            queue.emplace_back(rc, std::move(c));
        }
    }
    return std::nullopt;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& G, Limits limits) {
    return ClassTable(G, limits).classes();
}

std::vector<Permutation> all_elements(const PermGroup& G, Limits limits) {
    const std::uint64_t N = checked_order(G, limits, "element enumeration");
    std::vector<Permutation> out;
    out.reserve(N);
    for (std::uint64_t r = 0; r < N; ++r) out.push_back(G.unrank(r));
    return out;
}

std::vector<Permutation> centralizer_elements(const PermGroup& G, const Permutation& x, Limits limits) {
    const std::uint64_t N = checked_order(G, limits, "centralizer");
    std::vector<Permutation> out;
    for (std::uint64_t r = 0; r < N; ++r) {
        Permutation g = G.unrank(r);
        if (g.commutes_with(x)) out.push_back(std::move(g));
    }
    return out;
}

PermGroup centralizer(const PermGroup& G, const Permutation& x, Limits limits) {
    const auto elems = centralizer_elements(G, x, limits);
    std::vector<Permutation> gens;
    PermGroup H(G.degree());
    for (const auto& e : elems) {
        if (H.order() == elems.size()) break;
        if (H.contains(e)) continue;
        gens.push_back(e);
        H = PermGroup(G.degree(), gens);
    }
    return H;
}

std::vector<Permutation> inverters(const PermGroup& G, const Permutation& x, Limits limits) {
    const std::uint64_t N = checked_order(G, limits, "inverters");
    const Permutation xi = x.inverse();
    std::vector<Permutation> out;
    for (std::uint64_t r = 0; r < N; ++r) {
        Permutation g = G.unrank(r);
        if (x.conjugated_by(g) == xi) out.push_back(std::move(g));
    }
    return out;
}

std::vector<ConjClass> strongly_real_classes(const ClassTable& T) {
    const auto& G = T.group();
    std::vector<Permutation> involutions;
    const std::uint64_t N = *G.order_u64();
    for (std::uint64_t r = 0; r < N; ++r)
        if (T.classes()[T.class_of_rank(r)].element_order == 2) involutions.push_back(G.unrank(r));
    std::vector<ConjClass> out;
    for (const auto& c : T.classes()) {
        const auto& x = c.representative;
        if (c.element_order <= 2) {
            out.push_back(c);
            continue;
        }
        const Permutation xi = x.inverse();
        for (const auto& t : involutions) {
            if (x.conjugated_by(t) == xi) {
                out.push_back(c);
                break;
            }
        }
    }
    return out;
}

std::vector<ConjClass> strongly_real_classes(const PermGroup& G, Limits limits) {
    return strongly_real_classes(ClassTable(G, limits));
}

std::vector<ConjClass> real_classes(const ClassTable& T) {
    std::vector<ConjClass> out;
    for (std::size_t k = 0; k < T.size(); ++k)
        if (T.class_of(T.classes()[k].representative.inverse()) == k) out.push_back(T.classes()[k]);
    return out;
}

}  // namespace beauville
