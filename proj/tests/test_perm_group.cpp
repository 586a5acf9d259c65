#include "doctest.h"

#include <random>
#include <unordered_set>

#include "beauville/dataset.hpp"

using namespace beauville;

namespace {

Permutation P(const char* s, std::size_t n) { return Permutation::from_cycles(s, n); }

std::size_t closure_size(const PermGroup& G) {
    std::unordered_set<Permutation, PermutationHash> seen{Permutation(G.degree())};
    std::vector<Permutation> q{Permutation(G.degree())};
    for (std::size_t i = 0; i < q.size(); ++i)
        for (const auto& s : G.generators())
            if (auto p = q[i] * s; seen.insert(p).second) q.push_back(p);
    return q.size();
}

const Permutation sx1 = P("(2,9,5,6)(3,4,7,8)", 10), sy1 = P("(1,3,8,5)(2,6,10,4)", 10);
const Permutation sx2 = P("(1,9,4,6,2)(3,5,7,10,8)", 10), sy2 = P("(1,3,2,5,7)(4,8,6,10,9)", 10);

}  // namespace

TEST_CASE("build_group orders") {
    CHECK(build_group(3, {P("(1,2)", 3), P("(1,2,3)", 3)}).order() == 6);
    CHECK(build_group(4, {Permutation(4)}).order() == 1);
    CHECK(build_group(4, {}).order() == 1);
    const auto H = build_group(10, {sx2, sy2});
    CHECK(H.order() == 360);
    CHECK(closure_size(H) == 360);
}

TEST_CASE("M24 order needs more than 32 bits") {
    const auto M24 = bundled("M24");
    CHECK(M24.group.order() == BigInt("244823040"));
    CHECK(bundled("J2").group.order() == 604800);
}

TEST_CASE("membership") {
    const auto A5 = bundled("A5").group;
    CHECK(A5.contains(Permutation(5)));
    CHECK(A5.contains(P("(1,2,3)", 5)));
    CHECK_FALSE(A5.contains(P("(1,2)", 5)));
    const auto C3 = build_group(3, {P("(1,2,3)", 3)});
    CHECK_FALSE(C3.contains(P("(1,2)", 3)));
    CHECK(C3.contains(P("(1,3,2)", 3)));
}

TEST_CASE("generates") {
    const auto A6 = bundled("A6").group;
    const std::vector<Permutation> s1{sx1, sy1}, id{Permutation(10)};
    CHECK(generates(A6, s1));
    CHECK_FALSE(generates(A6, id));
    const auto A5 = bundled("A5").group;
    const std::vector<Permutation> five{P("(1,2,3,4,5)", 5)};
    CHECK_FALSE(generates(A5, five));
    const std::vector<Permutation> odd{P("(1,2)", 5)};
    CHECK_THROWS_AS(generates(A5, odd), NotAMember);
}

TEST_CASE("rank is a bijection onto 0..|G|-1") {
    const auto G = bundled("S5").group;
    std::set<std::uint64_t> ranks;
    for (std::uint64_t r = 0; r < 120; ++r) {
        const auto p = G.unrank(r);
        CHECK(G.rank(p) == r);
        ranks.insert(G.rank(p));
    }
    CHECK(ranks.size() == 120);
    CHECK_FALSE(bundled("A5").group.try_rank(P("(1,2)", 5)).has_value());
}

TEST_CASE("base prefix is honoured") {
    const auto G = PermGroup(6, {P("(1,2,3,4,5,6)", 6), P("(1,2)", 6)}, GroupOptions{{5, 4}});
    CHECK(G.order() == 720);
    CHECK(G.base()[0] == 5);
    CHECK(G.base()[1] == 4);
}

TEST_CASE("Lagrange on random elements") {
    std::mt19937_64 rng(kDefaultSeed);
    for (const std::string name : {"M11", "M12", "J1", "A8"}) {
        const auto ds = bundled(name);
        for (int k = 0; k < 50; ++k) {
            const auto p = ds.group.random_element(rng);
            CHECK(ds.group.contains(p));
            CHECK(ds.group.order() % p.order() == 0);
        }
    }
}

TEST_CASE("index two subgroups") {
    CHECK(index_two_subgroups(bundled("A6").group).empty());
    const auto S6 = bundled("S6").group;
    const auto h = index_two_subgroups(S6);
    REQUIRE(h.size() == 1);
    CHECK(h[0].order() == 360);
    CHECK(is_subgroup(bundled("A6").group, h[0]));
    const auto PG = bundled("PGammaL2(9)").group;
    const auto three = index_two_subgroups(PG);
    CHECK(three.size() == 3);
    for (const auto& H : three) {
        CHECK(2 * H.order() == PG.order());
        for (const auto& g : PG.generators()) {
            CHECK(H.contains(g * g));
            for (const auto& k : PG.generators()) CHECK(H.contains(commutator(g, k)));
        }
    }
    CHECK(index_two_subgroups(bundled("M10").group).size() == 1);
}

TEST_CASE("derived subgroups and perfection") {
    CHECK(is_perfect(bundled("A5").group));
    CHECK(is_perfect(bundled("SL2(5)").group));
    CHECK_FALSE(is_perfect(bundled("S5").group));
    CHECK(derived_subgroup(bundled("S6").group).order() == 360);
    const auto A4 = normal_closure(bundled("S5").group, {P("(1,2,3)", 5)});
    CHECK(A4.order() == 60);
}

TEST_CASE("every bundled group of order at most 1e5 matches its closure") {
    for (const auto& name : bundled_names()) {
        const auto ds = bundled(name);
        if (ds.group.order() > 100000) continue;
        CAPTURE(name);
        CHECK(BigInt(closure_size(ds.group)) == ds.group.order());
    }
}
