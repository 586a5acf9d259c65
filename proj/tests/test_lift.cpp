#include "doctest.h"

#include "beauville/dataset.hpp"
#include "beauville/lift.hpp"

using namespace beauville;

namespace {
Permutation P(const char* s, std::size_t n) { return Permutation::from_cycles(s, n); }
}

TEST_CASE("SL2(5) over PSL2(5)") {
    const auto ds = bundled("SL2(5)");
    const auto q = quotient_map(ds);
    REQUIRE(q);
    CHECK(q->is_homomorphism());
    CHECK(q->kernel().order() == 2);
    CHECK(q->is_surjective_onto(bundled("PSL2(5)").group));
    CHECK_FALSE(q->is_injective());

    const auto elts = all_elements(ds.group);
    const Permutation central = q->kernel().generators().front();
    const auto single = check_lift(ds.group, *q, {central});
    CHECK_FALSE(single.image_generates);
    CHECK_FALSE(single.generates_cover);

    // Image inside a proper subgroup: an element and its square.
    const auto g = ds.group.generators()[1];
    const auto proper = check_lift(ds.group, *q, {g, g * g});
    CHECK_FALSE(proper.image_generates);

    std::size_t lifted = 0;
    for (std::size_t i = 0; i < elts.size(); i += 7)
        for (std::size_t j = 0; j < elts.size(); j += 3) {
            const auto c = check_lift(ds.group, *q, {elts[i], elts[j]});
            CHECK(c.consistent());
            lifted += c.image_generates;
        }
    CHECK(lifted > 0);
}

TEST_CASE("lift preconditions") {
    // Not perfect.
    const auto S5 = bundled("S5").group;
    const Homomorphism sign(S5, {Permutation(2), Permutation(2), P("(1,2)", 2)});
    REQUIRE(sign.is_homomorphism());
    CHECK_THROWS_AS(check_lift(S5, sign, {S5.generators()[0]}), LiftPreconditionFailed);

    // Perfect, but the kernel is not central: A5 x A5 onto the first factor.
    const auto a = P("(1,2,3)", 10), b = P("(1,2,3,4,5)", 10);
    const auto c = P("(6,7,8)", 10), d = P("(6,7,8,9,10)", 10);
    const PermGroup G(10, {a, b, c, d});
    REQUIRE(G.order() == 3600);
    const Homomorphism proj(G, {P("(1,2,3)", 5), P("(1,2,3,4,5)", 5), Permutation(5), Permutation(5)});
    REQUIRE(proj.is_homomorphism());
    CHECK_THROWS_AS(check_lift(G, proj, {a, b}), LiftPreconditionFailed);

    // Not a homomorphism.
    const auto ds = bundled("SL2(5)");
    const Homomorphism bad(ds.group, {P("(1,2,3)", 5), P("(1,2)(3,4)", 5)});
    CHECK_FALSE(bad.is_homomorphism());
    CHECK_THROWS_AS(check_lift(ds.group, bad, ds.group.generators()), LiftPreconditionFailed);
}

TEST_CASE("structure lift through a trivial kernel") {
    const auto A6 = bundled("A6").group;
    const Homomorphism id(A6, A6.generators());
    const auto x1 = P("(2,9,5,6)(3,4,7,8)", 10), y1 = P("(1,3,8,5)(2,6,10,4)", 10);
    const auto x2 = P("(1,9,4,6,2)(3,5,7,10,8)", 10), y2 = P("(1,3,2,5,7)(4,8,6,10,9)", 10);
    const auto r = check_structure_lift(A6, id, make_triple(x1, y1), make_triple(x2, y2));
    CHECK(r.faithful_triple);
    CHECK(r.quotient_structure);
    CHECK(r.cover_structure);
    CHECK(r.consistent());
}

TEST_CASE("order certificates") {
    const auto J1 = bundled("J1");
    const auto env = J1.binding();
    CHECK(check_order_certificate(env, {{"a", 2}}));
    CHECK_FALSE(check_order_certificate(env, {{"a", 3}}));
    CHECK(check_order_certificate(env, {{"aa^b", 19}, {"aa^{bab}", 15}}));
    const auto lines = order_certificate_lines(env, {{"b", 3}, {"ab", 5}});
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].ok());
    CHECK(lines[1].actual == 7);
    CHECK_FALSE(lines[1].ok());

    const auto cert = parse_certificate("# J1\naa^b 19\n\n  ab 7 # standard\n");
    REQUIRE(cert.size() == 2);
    CHECK(cert[1] == std::pair<std::string, std::uint64_t>{"ab", 7});
    CHECK(check_order_certificate(env, cert));
    CHECK_THROWS(parse_certificate("aa^b\n"));
    CHECK_THROWS_AS(parse_certificate("a( 2\n"), WordParseError);
}
