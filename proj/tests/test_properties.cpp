// Fast paths checked against brute-force oracles on small groups.
#include "doctest.h"

#include <random>
#include <set>
#include <unordered_set>

#include "beauville/dataset.hpp"

using namespace beauville;

namespace {

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

// Closure by multiplying out generators: independent of the stabilizer chain.
ElementSet closure(const PermGroup& G) {
    ElementSet seen{Permutation(G.degree())};
    std::vector<Permutation> todo{Permutation(G.degree())};
    while (!todo.empty()) {
        const auto p = todo.back();
        todo.pop_back();
        for (const auto& g : G.generators()) {
            auto q = p * g;
            if (seen.insert(q).second) todo.push_back(std::move(q));
        }
    }
    return seen;
}

std::optional<Permutation> naive_conjugate(const std::vector<Permutation>& elems, const Permutation& u,
                                           const Permutation& v) {
    for (const auto& g : elems)
        if (u.conjugated_by(g) == v) return g;
    return std::nullopt;
}

// Sigma as an explicit set of elements.
ElementSet naive_sigma(const std::vector<Permutation>& elems, const GeneratingTriple& t) {
    ElementSet out;
    for (const auto& s : {t.x, t.y, t.z}) {
        auto p = s;
        for (std::uint64_t k = 0; k < s.order(); ++k, p = p * s)
            for (const auto& g : elems) out.insert(p.conjugated_by(g));
    }
    return out;
}

bool naive_disjoint(const ElementSet& a, const ElementSet& b) {
    for (const auto& p : a)
        if (!p.is_identity() && b.count(p)) return false;
    return true;
}

const std::vector<std::string> kSmall = {"A5", "S5", "A6", "A6_6pt", "S6_6pt", "SL2(5)", "PSL2(5)"};

}  // namespace

TEST_CASE("group order and membership against closure") {
    for (const std::string name : kSmall) {
        CAPTURE(name);
        const auto G = bundled(name).group;
        const auto elems = closure(G);
        CHECK(G.order() == elems.size());
        for (const auto& p : elems) CHECK(G.contains(p));
        std::set<std::uint64_t> ranks;
        for (const auto& p : all_elements(G)) {
            CHECK(elems.count(p));
            ranks.insert(G.rank(p));
        }
        CHECK(ranks.size() == elems.size());
    }
}

TEST_CASE("is_conjugate against brute force") {
    for (const std::string name : {"A5", "S5", "SL2(5)"}) {
        CAPTURE(name);
        const auto G = bundled(name).group;
        const auto elems = all_elements(G);
        const ClassTable T(G);
        for (const auto& u : elems)
            for (std::size_t k = 0; k < elems.size(); k += 3) {
                const auto& v = elems[k];
                const bool expect = naive_conjugate(elems, u, v).has_value();
                const auto w = is_conjugate(G, u, v);
                REQUIRE(w.has_value() == expect);
                if (w) CHECK(u.conjugated_by(*w) == v);
                const auto wt = is_conjugate(G, u, v, {}, &T);
                REQUIRE(wt.has_value() == expect);
                if (wt) CHECK(u.conjugated_by(*wt) == v);
                CHECK((T.class_of(u) == T.class_of(v)) == expect);
            }
    }
    // Sampled on a larger group.
    const auto G = bundled("A6").group;
    const auto elems = all_elements(G);
    std::mt19937_64 rng(kDefaultSeed);
    for (int k = 0; k < 400; ++k) {
        const auto u = G.random_element(rng);
        const auto v = (k % 2) ? u.conjugated_by(G.random_element(rng)) : G.random_element(rng);
        CHECK(is_conjugate(G, u, v).has_value() == naive_conjugate(elems, u, v).has_value());
    }
}

TEST_CASE("class table invariants") {
    for (const std::string name : kSmall) {
        CAPTURE(name);
        const auto G = bundled(name).group;
        const auto elems = all_elements(G);
        const ClassTable T(G);
        BigInt total = 0;
        for (std::size_t c = 0; c < T.size(); ++c) {
            const auto& cl = T.classes()[c];
            total += cl.size;
            // |class| = |G| / |C_G(x)|
            CHECK(cl.size * centralizer_elements(G, cl.representative).size() == G.order());
            CHECK(cl.representative.order() == cl.element_order);
            // the representative is the least element of its class
            for (const auto& g : elems) CHECK(cl.representative <= cl.representative.conjugated_by(g));
            for (std::int64_t k : {-1, 2, 3}) {
                auto p = Permutation(G.degree());
                const auto& r = cl.representative;
                for (std::int64_t i = 0; i < (k < 0 ? 1 : k); ++i) p = p * (k < 0 ? r.inverse() : r);
                CHECK(T.power_class(c, k) == T.class_of(p));
            }
        }
        CHECK(total == G.order());
        CHECK(T.classes()[T.identity_class()].representative.is_identity());
        for (const auto& p : elems) CHECK(T.classes()[T.class_of(p)].representative.conjugated_by(T.witness(p)) == p);
    }
}

TEST_CASE("strongly real and real classes against brute force") {
    for (const std::string name : kSmall) {
        CAPTURE(name);
        const auto G = bundled(name).group;
        const auto elems = all_elements(G);
        const ClassTable T(G);
        std::set<std::size_t> sr, re;
        for (const auto& c : strongly_real_classes(T)) sr.insert(T.class_of(c.representative));
        for (const auto& c : real_classes(T)) re.insert(T.class_of(c.representative));
        for (std::size_t c = 0; c < T.size(); ++c) {
            const auto& x = T.classes()[c].representative;
            bool strongly = false, real = false;
            for (const auto& t : elems) {
                if (x.conjugated_by(t) != x.inverse()) continue;
                real = true;
                if ((t * t).is_identity()) strongly = true;
            }
            CHECK(sr.count(c) == strongly);
            CHECK(re.count(c) == real);
            CHECK(inverters(G, x).size() == (real ? centralizer_elements(G, x).size() : 0));
        }
    }
}

TEST_CASE("Sigma disjointness against explicit sets") {
    std::mt19937_64 rng(kDefaultSeed);
    for (const std::string name : {"A5", "A6", "SL2(5)", "S5"}) {
        CAPTURE(name);
        const auto G = bundled(name).group;
        const auto elems = all_elements(G);
        const ClassTable T(G);
        for (int k = 0; k < 40; ++k) {
            const auto t1 = make_triple(G.random_element(rng), G.random_element(rng));
            const auto t2 = make_triple(G.random_element(rng), G.random_element(rng));
            const bool expect = naive_disjoint(naive_sigma(elems, t1), naive_sigma(elems, t2));
            CHECK(sigma_disjoint(G, t1, t2) == expect);
            const auto sc = sigma_check(G, t1, t2);
            CHECK(sc.disjoint == expect);
            if (sc.witness) {
                const auto& [a, b, w] = *sc.witness;
                CHECK(a.conjugated_by(w) == b);
                CHECK_FALSE(a.is_identity());
            }
        }
    }
}

TEST_CASE("Sigma is conjugation invariant") {
    std::mt19937_64 rng(5);
    const auto G = bundled("A6").group;
    for (int k = 0; k < 30; ++k) {
        const auto t1 = make_triple(G.random_element(rng), G.random_element(rng));
        const auto t2 = make_triple(G.random_element(rng), G.random_element(rng));
        const auto g = G.random_element(rng), h = G.random_element(rng);
        const auto u1 = make_triple(t1.x.conjugated_by(g), t1.y.conjugated_by(g));
        const auto u2 = make_triple(t2.x.conjugated_by(h), t2.y.conjugated_by(h));
        CHECK(sigma_disjoint(G, t1, t2) == sigma_disjoint(G, u1, u2));
    }
}

TEST_CASE("hyperbolicity against exact rationals") {
    for (std::uint64_t l = 1; l <= 30; ++l)
        for (std::uint64_t m = 1; m <= 30; ++m)
            for (std::uint64_t n = 1; n <= 30; ++n)
                CHECK(is_hyperbolic({l, m, n}) == (m * n + l * n + l * m < l * m * n));
}

TEST_CASE("generates against closure") {
    std::mt19937_64 rng(9);
    const auto G = bundled("S5").group;
    for (int k = 0; k < 60; ++k) {
        const std::vector<Permutation> S{G.random_element(rng), G.random_element(rng)};
        CHECK(generates(G, S) == (closure(PermGroup(G.degree(), S)).size() == 120));
    }
}
