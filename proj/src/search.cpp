#include "beauville/search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <thread>

namespace beauville {

std::string to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string SearchCertificate::summary() const {
    return std::to_string(x_classes) + " x-classes, " + std::to_string(pairs) + " (x,y) orbit representatives, " +
           std::to_string(hyperbolic) + " hyperbolic, " + std::to_string(inverted) + " inverted, " +
           std::to_string(generating) + " generating, " + std::to_string(distinct_profiles) + " distinct profiles";
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t k) { b[k / 64] |= std::uint64_t{1} << (k % 64); }
bool test_bit(const Bits& b, std::size_t k) { return b[k / 64] >> (k % 64) & 1u; }
bool meets(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

// Union of the power closures of the classes of x, y, z; identity removed.
Bits sigma_bits(const ClassTable& T, std::initializer_list<const Permutation*> elems) {
    Bits s = make_bits(T.size());
    for (const auto* e : elems) {
        const auto& pc = T.power_closure(T.class_of(*e));
        for (std::size_t k = 1; k < pc.size(); ++k)
            if (pc[k]) set_bit(s, k);
    }
    return s;
}

// Representatives of the C_G(x)-orbits (by conjugation) on the elements of
// the allowed classes, smallest rank first.
std::vector<Permutation> centralizer_orbit_reps(const ClassTable& T, const Permutation& x,
                                                const std::vector<bool>& allowed, const Limits& limits) {
    const PermGroup& G = T.group();
    const std::uint64_t N = *G.order_u64();
    const PermGroup C = centralizer(G, x, limits);
    std::vector<Permutation> cg;
    for (const auto& g : C.generators())
        if (!g.is_identity()) cg.push_back(g);
    std::vector<bool> seen(N, false);
    std::vector<Permutation> reps;
    std::deque<Permutation> queue;
    for (std::uint64_t r = 0; r < N; ++r) {
        if (seen[r] || !allowed[T.class_of_rank(r)]) continue;
        seen[r] = true;
        Permutation y = G.unrank(r);
        reps.push_back(y);
        queue.assign(1, std::move(y));
        while (!queue.empty()) {
            Permutation e = std::move(queue.front());
            queue.pop_front();
            for (const auto& c : cg) {
                Permutation f = e.conjugated_by(c);
                const std::uint64_t rf = G.rank(f);
                if (seen[rf]) continue;
                seen[rf] = true;
                queue.push_back(std::move(f));
            }
        }
    }
    return reps;
}

// Automorphisms realised as conjugation by elements of N >= G, grouped by
// their class in Out(G): cosets of G*C_N(G) in N.
class AutData {
public:
    AutData(const PermGroup& G, const AutomorphismSource& src, const Limits& limits)
        : N_(src.overgroup ? *src.overgroup : G), limits_(limits) {
        if (N_.degree() != G.degree()) throw std::invalid_argument("overgroup has a different degree");
        for (const auto& g : G.generators()) {
            if (!N_.contains(g)) throw std::invalid_argument("overgroup does not contain the group");
            for (const auto& n : N_.generators())
                if (!G.contains(g.conjugated_by(n))) throw std::invalid_argument("overgroup does not normalize the group");
        }
        elements_ = all_elements(N_, limits);
        std::vector<Permutation> mgens = G.generators();
        for (const auto& n : elements_) {
            bool central = true;
            for (const auto& g : G.generators()) central = central && n.commutes_with(g);
            if (central && !n.is_identity()) mgens.push_back(n);
        }
        M_ = PermGroup(G.degree(), std::move(mgens));
        const BigInt index = N_.order() / M_.order();
        if (index > 64) throw std::invalid_argument("more than 64 outer automorphism classes");
        for (const auto& n : elements_) {
            if (reps_.size() == static_cast<std::size_t>(index)) break;
            if (coset_of_or_none(n) < 0) reps_.push_back(n);
        }
    }

    std::size_t coset_of(const Permutation& n) const { return static_cast<std::size_t>(coset_of_or_none(n)); }
    std::size_t outer_classes() const { return reps_.size(); }

    struct Inverter {
        Permutation t;
        std::size_t coset;
    };
    std::vector<Inverter> inverters_of(const Permutation& x) const {
        const Permutation xi = x.inverse();
        std::vector<Inverter> out;
        for (const auto& n : elements_)
            if (x.conjugated_by(n) == xi) out.push_back({n, coset_of(n)});
        return out;
    }

private:
    PermGroup N_, M_;
    Limits limits_;
    std::vector<Permutation> elements_;
    std::vector<Permutation> reps_;

    int coset_of_or_none(const Permutation& n) const {
        for (std::size_t i = 0; i < reps_.size(); ++i)
            if (M_.contains(n * reps_[i].inverse())) return static_cast<int>(i);
        return -1;
    }
};

std::uint64_t inverter_mask(const std::vector<AutData::Inverter>& inv, const Permutation& y) {
    const Permutation yi = y.inverse();
    std::uint64_t mask = 0;
    for (const auto& t : inv)
        if (!(mask >> t.coset & 1u) && y.conjugated_by(t.t) == yi) mask |= std::uint64_t{1} << t.coset;
    return mask;
}

struct Entry {
    Bits sigma;
    std::uint64_t mask = 0;
    Permutation x, y;
};

struct ClassOutcome {
    SearchCertificate counts;
    std::vector<Entry> entries;
};

struct PairFilter {
    std::vector<bool> x_classes, y_classes;
    std::optional<std::uint64_t> z_order;
    bool require_hyperbolic = true;
    bool strongly_real = false;
};

// Examine all (x, y) orbit representatives for one class of x.
ClassOutcome examine_class(const ClassTable& T, std::size_t c, const PairFilter& f, const AutData* aut,
                           const Limits& limits) {
    ClassOutcome out;
    const PermGroup& G = T.group();
    const Permutation& x = T.classes()[c].representative;
    const std::uint64_t lx = T.classes()[c].element_order;
    std::vector<AutData::Inverter> inv;
    if (f.strongly_real) {
        inv = aut->inverters_of(x);
        if (inv.empty()) return out;
    }
    for (const auto& y : centralizer_orbit_reps(T, x, f.y_classes, limits)) {
        ++out.counts.pairs;
        const Permutation xy = x * y;
        const std::uint64_t lz = xy.order();
        if (f.z_order && lz != *f.z_order) continue;
        const TripleType type{lx, y.order(), lz};
        if (f.require_hyperbolic && !is_hyperbolic(type)) continue;
        ++out.counts.hyperbolic;
        std::uint64_t mask = 0;
        if (f.strongly_real) {
            mask = inverter_mask(inv, y);
            if (!mask) continue;
        }
        ++out.counts.inverted;
        if (PermGroup(G.degree(), {x, y}).order() != G.order()) continue;
        ++out.counts.generating;
        const Permutation z = xy.inverse();
        out.entries.push_back({sigma_bits(T, {&x, &y, &z}), mask, x, y});
    }
    return out;
}

// Run examine_class over the selected classes in order, `jobs` at a time,
// handing each outcome to `consume` in class order until it returns true.
void for_each_class(const ClassTable& T, const PairFilter& f, const AutData* aut, const Limits& limits, unsigned jobs,
                    const std::function<bool(ClassOutcome&)>& consume) {
    std::vector<std::size_t> todo;
    for (std::size_t c = 1; c < T.size(); ++c)
        if (f.x_classes[c]) todo.push_back(c);
    jobs = std::max(1u, jobs);
    for (std::size_t start = 0; start < todo.size(); start += jobs) {
        const std::size_t end = std::min(todo.size(), start + jobs);
        std::vector<ClassOutcome> batch(end - start);
        if (end - start == 1) {
            batch[0] = examine_class(T, todo[start], f, aut, limits);
        } else {
            std::vector<std::thread> threads;
            std::vector<std::exception_ptr> errors(end - start);
            for (std::size_t i = start; i < end; ++i)
                threads.emplace_back([&, i] {
                    try {
                        batch[i - start] = examine_class(T, todo[i], f, aut, limits);
                    } catch (...) {
                        errors[i - start] = std::current_exception();
                    }
                });
            for (auto& t : threads) t.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (auto& o : batch) {
            o.counts.x_classes = 1;
            if (consume(o)) return;
        }
    }
}

void accumulate(SearchCertificate& a, const SearchCertificate& b) {
    a.x_classes += b.x_classes;
    a.pairs += b.pairs;
    a.hyperbolic += b.hyperbolic;
    a.inverted += b.inverted;
    a.generating += b.generating;
}

const AutData::Inverter* pick_inverter(const std::vector<AutData::Inverter>& inv, const Permutation& y, std::size_t coset) {
    const Permutation yi = y.inverse();
    for (const auto& t : inv)
        if (t.coset == coset && y.conjugated_by(t.t) == yi) return &t;
    return nullptr;
}

}  // namespace

UnmixedSearchResult search_unmixed(const PermGroup& G, const SearchOptions& opts) {
    UnmixedSearchResult res;
    const ClassTable T(G, opts.limits);
    std::optional<AutData> aut;
    if (opts.strongly_real) aut.emplace(G, opts.automorphisms, opts.limits);

    PairFilter f;
    f.x_classes.assign(T.size(), true);
    f.y_classes.assign(T.size(), true);
    f.x_classes[0] = f.y_classes[0] = false;
    f.strongly_real = opts.strongly_real;

    std::vector<Entry> keys;
    std::map<std::pair<Bits, std::uint64_t>, std::size_t> index;
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    for_each_class(T, f, aut ? &*aut : nullptr, opts.limits, opts.jobs, [&](ClassOutcome& o) {
        accumulate(res.certificate, o.counts);
        for (auto& e : o.entries) {
            auto key = std::make_pair(e.sigma, e.mask);
            if (index.count(key)) continue;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (meets(keys[i].sigma, e.sigma)) continue;
                if (opts.strongly_real && !(keys[i].mask & e.mask)) continue;
                hit = {i, keys.size()};
                break;
            }
            index.emplace(std::move(key), keys.size());
            keys.push_back(std::move(e));
            if (hit) return true;
        }
        return false;
    });
    res.certificate.distinct_profiles = keys.size();

    if (!hit) {
        const bool conclusive = !opts.strongly_real || opts.automorphisms.complete;
        res.status = conclusive ? SearchStatus::Absent : SearchStatus::Inconclusive;
        if (!conclusive) res.note = "automorphism source not known to be complete";
        return res;
    }
    const Entry& a = keys[hit->first];
    const Entry& b = keys[hit->second];
    res.status = SearchStatus::Found;
    res.structure = BeauvilleStructure{make_triple(a.x, a.y), make_triple(b.x, b.y), G};
    if (opts.strongly_real) {
        const std::uint64_t common = a.mask & b.mask;
        std::size_t coset = 0;
        while (!(common >> coset & 1u)) ++coset;
        const auto inv_a = aut->inverters_of(a.x);
        const auto inv_b = aut->inverters_of(b.x);
        const auto* ta = pick_inverter(inv_a, a.y, coset);
        const auto* tb = pick_inverter(inv_b, b.y, coset);
        res.phi1 = ta->t;
        res.phi2 = tb->t;
        // Prefer a single automorphism when one inverts both triples.
        for (const auto& t : inv_a) {
            if (a.y.conjugated_by(t.t) == a.y.inverse() && b.x.conjugated_by(t.t) == b.x.inverse() &&
                b.y.conjugated_by(t.t) == b.y.inverse()) {
                res.phi1 = res.phi2 = t.t;
                break;
            }
        }
    }
    return res;
}

StronglyGeneratedResult strongly_generated_search(const PermGroup& G, std::uint64_t l, std::uint64_t m, std::uint64_t n,
                                                  const SearchOptions& opts) {
    StronglyGeneratedResult res;
    const ClassTable T(G, opts.limits);
    const AutData aut(G, opts.automorphisms, opts.limits);
    PairFilter f;
    f.x_classes.assign(T.size(), false);
    f.y_classes.assign(T.size(), false);
    for (std::size_t c = 1; c < T.size(); ++c) {
        f.x_classes[c] = T.classes()[c].element_order == l;
        f.y_classes[c] = T.classes()[c].element_order == m;
    }
    f.z_order = n;
    f.require_hyperbolic = false;
    f.strongly_real = true;
    std::optional<Entry> found;
    for_each_class(T, f, &aut, opts.limits, opts.jobs, [&](ClassOutcome& o) {
        accumulate(res.certificate, o.counts);
        if (o.entries.empty()) return false;
        found = std::move(o.entries.front());
        return true;
    });
    if (!found) {
        res.status = opts.automorphisms.complete ? SearchStatus::Absent : SearchStatus::Inconclusive;
        return res;
    }
    std::size_t coset = 0;
    while (!(found->mask >> coset & 1u)) ++coset;
    const auto inv = aut.inverters_of(found->x);
    res.status = SearchStatus::Found;
    res.witness = StronglyGenerated{make_triple(found->x, found->y), pick_inverter(inv, found->y, coset)->t};
    return res;
}

std::optional<StronglyGenerated> strongly_generated(const PermGroup& G, std::uint64_t l, std::uint64_t m,
                                                    std::uint64_t n, const SearchOptions& opts) {
    auto r = strongly_generated_search(G, l, m, n, opts);
    if (r.status == SearchStatus::Inconclusive)
        throw std::runtime_error("strongly_generated: no witness among the supplied automorphisms, which are not "
                                 "known to be all of Aut(G)");
    return r.witness;
}

// --- mixed ---------------------------------------------------------------------

namespace {

Permutation outer_element(const PermGroup& G, const PermGroup& G0) {
    for (const auto& g : G.generators())
        if (!G0.contains(g)) return g;
    throw std::invalid_argument("subgroup contains every generator");
}

std::optional<Permutation> order_filter_witness(const PermGroup& G, const PermGroup& G0, const Limits& limits) {
    const ClassTable T(G, limits);
    for (const auto& c : T.classes())
        if (!G0.contains(c.representative) && c.element_order % 4 != 0) return c.representative;
    return std::nullopt;
}

// Squares of the elements of G \ G0, as classes of T (a table of G0 or G).
struct OuterSquares {
    std::vector<bool> classes;
    std::vector<std::optional<Permutation>> witness;  // an outer g per class
};

OuterSquares outer_squares(const PermGroup& G0, const Permutation& g0, const ClassTable& T, const Limits& limits) {
    OuterSquares q{std::vector<bool>(T.size(), false), std::vector<std::optional<Permutation>>(T.size())};
    for (const auto& h : all_elements(G0, limits)) {
        const Permutation g = h * g0;
        const std::size_t c = T.class_of(g * g);
        if (!q.classes[c]) {
            q.classes[c] = true;
            q.witness[c] = g;
        }
    }
    return q;
}

// pi: class of e  ->  class of e^g0 (identity map when T is a table of G).
std::vector<std::size_t> outer_action(const ClassTable& T, const Permutation& g0) {
    std::vector<std::size_t> pi(T.size());
    for (std::size_t c = 0; c < T.size(); ++c) pi[c] = T.class_of(T.classes()[c].representative.conjugated_by(g0));
    return pi;
}

Bits apply_action(const Bits& s, const std::vector<std::size_t>& pi) {
    Bits out(s.size(), 0);
    for (std::size_t c = 0; c < pi.size(); ++c)
        if (test_bit(s, c)) set_bit(out, pi[c]);
    return out;
}

std::string class_list(const ClassTable& T, const Bits& s) {
    std::string out;
    for (std::size_t c = 0; c < T.size(); ++c)
        if (test_bit(s, c)) out += (out.empty() ? "" : ",") + T.classes()[c].label;
    return "{" + out + "}";
}

}  // namespace

bool mixed_order_filter(const PermGroup& G, const PermGroup& G0, Limits limits) {
    if (!is_subgroup(G0, G) || G0.order() * 2 != G.order()) throw std::invalid_argument("G0 is not of index 2 in G");
    return !order_filter_witness(G, G0, limits).has_value();
}

Report verify_mixed(const PermGroup& G, const Permutation& x, const Permutation& y, const MixedOptions& opts) {
    Report r;
    r.group = opts.group_name;
    r.claim = std::string("mixed Beauville structure") + (opts.strict ? " (strict: Sigma over G, identity counts)" : "");
    const Permutation z = (x * y).inverse();
    const bool members = x.degree() == G.degree() && y.degree() == G.degree() && G.contains(x) && G.contains(y);
    r.add("elements lie in the group", members);
    if (!members) return r;
    const PermGroup G0(G.degree(), {x, y});
    r.fact("type", TripleType{x.order(), y.order(), z.order()}.str());
    r.fact("|<x,y,z>|", G0.order().str());
    const bool index2 = G0.order() * 2 == G.order();
    r.add("<x,y,z> has index 2", index2, "|G| / |<x,y,z>| = " + BigInt(G.order() / G0.order()).str() +
                                            (G.order() % G0.order() == 0 ? "" : " (not an integer)"));
    if (!index2) return r;
    r.add("condition 1: xyz = 1", (x * y * z).is_identity());

    const Permutation g0 = outer_element(G, G0);
    const ClassTable T = opts.strict ? ClassTable(G, opts.limits) : ClassTable(G0, opts.limits);
    const Bits sigma = sigma_bits(T, {&x, &y, &z});
    r.fact("Sigma(x,y,z) minus identity", class_list(T, sigma));

    // Condition 2 does not depend on g: g and h*g0 act alike on G0-classes.
    const Bits image = apply_action(sigma, outer_action(T, g0));
    Bits shared(sigma.size(), 0);
    for (std::size_t i = 0; i < shared.size(); ++i) shared[i] = sigma[i] & image[i];
    auto& c2 = r.add("condition 2: Sigma(x,y,z) meets Sigma(x^g,y^g,z^g) only in 1", !meets(sigma, image),
                     "shared classes " + class_list(T, shared));
    c2.witnesses = {{"g", g0.to_cycle_string()}};

    const OuterSquares q = outer_squares(G0, g0, T, opts.limits);
    std::optional<std::size_t> bad;
    for (std::size_t c = 0; c < T.size() && !bad; ++c) {
        const bool in_sigma = c == 0 ? opts.strict : test_bit(sigma, c);
        if (in_sigma && q.classes[c]) bad = c;
    }
    auto& c3 = r.add("condition 3: g^2 not in Sigma(x,y,z)", !bad,
                     opts.strict ? "identity included" : "identity excluded");
    if (bad) c3.witnesses = {{"g", q.witness[*bad]->to_cycle_string()}, {"g^2 class", T.classes()[*bad].label}};

    std::optional<Permutation> lemma;
    for (const auto& h : all_elements(G0, opts.limits)) {
        const Permutation g = h * g0;
        if (g.order() % 4 != 0) {
            lemma = g;
            break;
        }
    }
    auto& c4 = r.add("every element outside <x,y,z> has order divisible by 4", !lemma);
    if (lemma) c4.witnesses = {{"g", lemma->to_cycle_string()}, {"order", std::to_string(lemma->order())}};
    return r;
}

MixedSearchResult search_mixed(const PermGroup& G, const MixedOptions& opts) {
    MixedSearchResult res;
    for (const auto& H : index_two_subgroups(G)) {
        MixedSubgroupNote note;
        // Report a short generating set: keep a generator only if it enlarges the group.
        std::vector<Permutation> kept;
        BigInt so_far = 1;
        for (const auto& g : H.generators()) {
            if (so_far == H.order()) break;
            kept.push_back(g);
            const BigInt o = PermGroup(G.degree(), kept).order();
            if (o == so_far) kept.pop_back();
            so_far = o;
        }
        note.subgroup = "<";
        for (const auto& g : kept) note.subgroup += (note.subgroup.size() > 1 ? ", " : "") + g.to_cycle_string();
        note.subgroup += ">";
        note.filter_witness = order_filter_witness(G, H, opts.limits);
        note.order_filter = !note.filter_witness;
        if (!note.order_filter) {
            res.subgroups.push_back(std::move(note));
            continue;
        }
        const Permutation g0 = outer_element(G, H);
        const ClassTable T0(H, opts.limits);
        const ClassTable TG(G, opts.limits);
        const ClassTable& T = opts.strict ? TG : T0;
        const OuterSquares q = outer_squares(H, g0, T, opts.limits);
        const auto pi = outer_action(T, g0);

        // Every involution a square of an outer element => x, y, z of odd order.
        note.odd_reduction = true;
        for (std::size_t c = 0; c < T0.size(); ++c) {
            if (T0.classes()[c].element_order != 2) continue;
            const std::size_t tc = opts.strict ? TG.class_of(T0.classes()[c].representative) : c;
            if (!q.classes[tc]) note.odd_reduction = false;
        }
        PairFilter f;
        f.x_classes.assign(T0.size(), true);
        f.x_classes[0] = false;
        if (note.odd_reduction)
            for (std::size_t c = 0; c < T0.size(); ++c)
                if (T0.classes()[c].element_order % 2 == 0) f.x_classes[c] = false;
        f.y_classes = f.x_classes;
        f.require_hyperbolic = false;
        std::map<Bits, bool> verdicts;
        std::optional<std::pair<Permutation, Permutation>> hit;
        for_each_class(T0, f, nullptr, opts.limits, 1, [&](ClassOutcome& o) {
            for (const auto& e : o.entries) {
                ++note.triples;
                const Permutation z = (e.x * e.y).inverse();
                if (note.odd_reduction && z.order() % 2 == 0) continue;
                const Bits sigma = opts.strict ? sigma_bits(TG, {&e.x, &e.y, &z}) : e.sigma;
                auto [it, fresh] = verdicts.emplace(sigma, false);
                if (!fresh) continue;
                bool ok = !meets(sigma, apply_action(sigma, pi));
                if (opts.strict && q.classes[0]) ok = false;
                for (std::size_t c = 1; c < T.size() && ok; ++c)
                    if (test_bit(sigma, c) && q.classes[c]) ok = false;
                it->second = ok;
                if (ok) {
                    hit = std::make_pair(e.x, e.y);
                    return true;
                }
            }
            return false;
        });
        note.profiles = verdicts.size();
        res.subgroups.push_back(std::move(note));
        if (hit) {
            res.status = SearchStatus::Found;
            res.structure = hit;
            return res;
        }
    }
    return res;
}

}  // namespace beauville
