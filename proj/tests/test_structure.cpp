#include "doctest.h"

#include <random>
#include <set>

#include "beauville/dataset.hpp"

using namespace beauville;

namespace {

Permutation P(const char* s, std::size_t n = 10) { return Permutation::from_cycles(s, n); }

// The degree-10 A6 data.
const Permutation X1 = P("(2,9,5,6)(3,4,7,8)"), Y1 = P("(1,3,8,5)(2,6,10,4)");
const Permutation X2 = P("(1,9,4,6,2)(3,5,7,10,8)"), Y2 = P("(1,3,2,5,7)(4,8,6,10,9)");
const Permutation g_outer = P("(1,10)(2,8)(3,6)(4,5)(7,9)");

std::set<std::uint64_t> orders(const SigmaProfile& s) {
    std::set<std::uint64_t> o;
    for (const auto& e : s.classes) o.insert(e.element_order);
    return o;
}

}  // namespace

TEST_CASE("make_triple and types") {
    const auto id = make_triple(Permutation(4), Permutation(4));
    CHECK(id.type == TripleType{1, 1, 1});
    CHECK(id.z.is_identity());
    const auto t1 = make_triple(X1, Y1), t2 = make_triple(X2, Y2);
    CHECK(t1.type == TripleType{4, 4, 4});
    CHECK(t2.type == TripleType{5, 5, 5});
    CHECK((t1.x * t1.y * t1.z).is_identity());
    CHECK(type_string(t1.type, t2.type) == "((4,4,4),(5,5,5))");
}

TEST_CASE("hyperbolicity is exact") {
    CHECK(is_hyperbolic({4, 4, 4}));
    CHECK(is_hyperbolic({2, 3, 7}));
    CHECK(is_hyperbolic({5, 5, 5}));
    CHECK_FALSE(is_hyperbolic({2, 3, 6}));
    CHECK_FALSE(is_hyperbolic({2, 4, 4}));
    CHECK_FALSE(is_hyperbolic({3, 3, 3}));
    CHECK_FALSE(is_hyperbolic({2, 2, 100}));
    CHECK_FALSE(is_hyperbolic({1, 1, 1}));
    // near the boundary with large entries
    CHECK(is_hyperbolic({2, 3, 1000000007}));
}

TEST_CASE("Sigma profiles") {
    const auto A6 = bundled("A6").group;
    CHECK(sigma_profile(A6, make_triple(Permutation(10), Permutation(10))).classes.size() == 1);
    CHECK(orders(sigma_profile(A6, make_triple(X1, Y1))) == std::set<std::uint64_t>{1, 2, 4});
    const auto five = orders(sigma_profile(A6, make_triple(X2, Y2)));
    CHECK(five == std::set<std::uint64_t>{1, 5});
}

TEST_CASE("Sigma disjointness") {
    const auto A6 = bundled("A6").group;
    const auto t1 = make_triple(X1, Y1), t2 = make_triple(X2, Y2);
    CHECK_FALSE(sigma_disjoint(A6, t1, t1));
    const auto sc = sigma_check(A6, t1, t2);
    CHECK(sc.disjoint);
    CHECK(sc.shared_primes.empty());
    CHECK(sc.conjugacy_tests == 0);

    // Two (5,5,5) triples of A5 sharing a 5-class.
    const auto A5 = bundled("A5").group;
    const auto x = P("(1,2,3,4,5)", 5);
    std::optional<GeneratingTriple> t;
    for (const auto& y : all_elements(A5)) {
        const auto c = make_triple(x, y);
        if (c.type == TripleType{5, 5, 5} && generates(A5, std::vector<Permutation>{x, y})) {
            t = c;
            break;
        }
    }
    REQUIRE(t);
    const auto u = make_triple(t->x.conjugated_by(P("(1,2,3)", 5)), t->y.conjugated_by(P("(1,2,3)", 5)));
    const auto s = sigma_check(A5, *t, u);
    CHECK_FALSE(s.disjoint);
    REQUIRE(s.witness);
    const auto& [a, b, w] = *s.witness;
    CHECK(a.conjugated_by(w) == b);
    CHECK(a.order() == 5);
}

TEST_CASE("verify_unmixed") {
    const auto A6 = bundled("A6").group;
    const auto t1 = make_triple(X1, Y1), t2 = make_triple(X2, Y2);
    const auto r = verify_unmixed(A6, t1, t2, {{}, nullptr, "A6"});
    CHECK(r.pass());
    CHECK(r.fact_value("type") == "((4,4,4),(5,5,5))");
    CHECK(r.group == "A6");

    const auto dup = verify_unmixed(A6, t1, t1);
    CHECK_FALSE(dup.pass());
    REQUIRE(dup.find("Sigma disjoint"));
    CHECK_FALSE(dup.find("Sigma disjoint")->pass);
    CHECK(dup.find("triple 1 generates")->pass);

    // Not a member: the outer involution.
    const auto bad = verify_unmixed(A6, make_triple(g_outer, Y1), t2);
    CHECK_FALSE(bad.find("elements lie in the group")->pass);

    // Non-hyperbolic and non-generating candidates fail on those conditions.
    const auto small = make_triple(X1 * X1, Y1 * Y1);
    const auto r2 = verify_unmixed(A6, small, t2);
    CHECK_FALSE(r2.find("triple 1 generates")->pass);
    CHECK_FALSE(r2.find("triple 1 hyperbolic")->pass);
}

TEST_CASE("automorphisms") {
    const auto A6 = bundled("A6").group;
    const auto phi = Automorphism::conjugation(A6, g_outer);
    CHECK(phi.apply(X1) == X1.inverse());
    CHECK_THROWS_AS(Automorphism::conjugation(A6, P("(1,2)")), InvalidAutomorphism);

    std::vector<Permutation> images;
    for (const auto& g : A6.generators()) images.push_back(g.conjugated_by(g_outer));
    const auto psi = Automorphism::from_images(A6, images);
    CHECK(psi.form() == Automorphism::Form::Images);
    CHECK(psi.apply(Y2) == phi.apply(Y2));
    CHECK_THROWS_AS(psi.conjugator(), std::logic_error);

    // a has order 4, so sending it to an element of order 5 is not a homomorphism.
    REQUIRE(A6.generators()[0].order() == 4);
    std::vector<Permutation> wrong = A6.generators();
    wrong[0] = X2;
    CHECK_THROWS_AS(Automorphism::from_images(A6, wrong), InvalidAutomorphism);
    std::vector<Permutation> trivial(A6.generators().size(), Permutation(10));
    CHECK_THROWS_AS(Automorphism::from_images(A6, trivial), InvalidAutomorphism);
}

TEST_CASE("inner differences") {
    const auto A6 = bundled("A6").group;
    const auto phi = Automorphism::conjugation(A6, g_outer);
    const auto psi = Automorphism::conjugation(A6, g_outer * X1);
    const auto w = inner_difference(A6, psi, phi);
    REQUIRE(w);
    for (const auto& g : A6.generators()) CHECK(phi.apply(g).conjugated_by(*w) == psi.apply(g));
    CHECK_FALSE(inner_difference(A6, phi, Automorphism::identity(A6)));
}

TEST_CASE("strongly real verification") {
    const auto A6 = bundled("A6").group;
    const BeauvilleStructure S{make_triple(X1, Y1), make_triple(X2, Y2), A6};
    CHECK(verify_strongly_real(S, Automorphism::conjugation(A6, g_outer)));
    CHECK_FALSE(verify_strongly_real(S, Automorphism::identity(A6)));

    // Two automorphisms that differ by an inner one.
    const auto psi = Automorphism::conjugation(A6, g_outer);
    const auto r = strongly_real_report(S, psi, psi);
    CHECK(r.pass());
    CHECK(r.find("phi_1 and phi_2 differ by an inner automorphism"));

    // Conjugation stability: conj(g^h) inverts (x^h, y^h).
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const auto h = A6.random_element(rng);
        const BeauvilleStructure Sh{make_triple(X1.conjugated_by(h), Y1.conjugated_by(h)),
                                    make_triple(X2.conjugated_by(h), Y2.conjugated_by(h)), A6};
        CHECK(verify_strongly_real(Sh, Automorphism::conjugation(A6, g_outer.conjugated_by(h))));
    }
}

TEST_CASE("type is invariant under conjugation") {
    const auto G = bundled("M11").group;
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto x = G.random_element(rng), y = G.random_element(rng), g = G.random_element(rng);
        CHECK(make_triple(x, y).type == make_triple(x.conjugated_by(g), y.conjugated_by(g)).type);
    }
}

TEST_CASE("J1 table structure is inverted by a") {
    const auto J1 = bundled("J1");
    const auto el = evaluate_row(bundled_row("J1"), J1);
    CHECK(el.candidate.first.type == TripleType{19, 19, 11});
    CHECK(el.candidate.second.x.order() == 15);
    const BeauvilleStructure S{el.candidate.first, el.candidate.second, J1.group};
    CHECK(verify_strongly_real(S, Automorphism::conjugation(J1.group, J1.generator('a'))));
    CHECK(verify_unmixed(J1.group, S.first, S.second).pass());
}

TEST_CASE("prime divisors") {
    CHECK(prime_divisors(1).empty());
    CHECK(prime_divisors(60) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_divisors(97) == std::vector<std::uint64_t>{97});
}
