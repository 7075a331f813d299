#include "doctest.h"

#include "bessel/chargroup.hpp"
#include "bessel/error.hpp"

using namespace bessel;

TEST_SUITE("chargroup") {

TEST_CASE("combine reduces finite orders and adds exponents") {
    const Character xi = Character::generator("xi", 2);
    const Character chi1 = Character::generator("chi1");
    const Character half = Character::nu(1);
    CHECK(combine(half * xi, half * xi, 1) == Character::nu(2));
    CHECK(combine(chi1, chi1, -1).trivial());
    CHECK(combine(Character::nu(-1) * chi1, Character::nu(2), 2) == Character::nu(3) * chi1);
}

TEST_CASE("involution rho* = omega/rho") {
    const Character chi1 = Character::generator("chi1");
    const Character chi2 = Character::generator("chi2");
    CHECK(involution(Character(), Character::nu(-1) * chi1.inverse()) == Character::nu(1) * chi1);
    CHECK(involution(chi1 * chi2, Character::nu(-1)) == Character::nu(1) * chi1 * chi2);
    const Character w = chi1 * Character::nu(3);
    const Character rho = chi2 * Character::nu(-1);
    CHECK(involution(w, involution(w, rho)) == rho);
}

TEST_CASE("parsing and rendering round trip") {
    CharacterContext ctx;
    ctx.declare_text("chi1 order=inf ramified=false\nsigma order=inf ramified=false\nxi order=2 ramified=false\n");
    const Character c = ctx.parse("nu^-1/2 * chi1^-1 * sigma");
    CHECK(c.nu2() == -1);
    CHECK(ctx.parse(c.str()) == c);
    CHECK(ctx.parse(c.pretty()) == c);
    CHECK(ctx.parse("xi^3") == ctx.parse("xi"));
    CHECK(ctx.parse("1").trivial());
    CHECK_THROWS_AS(ctx.parse("chi9"), UnknownGenerator);
    CHECK_THROWS_AS(ctx.parse("nu^x"), ParseError);
}

TEST_CASE("parse_declaring introduces unknown names") {
    CharacterContext ctx;
    std::vector<std::string> fresh;
    const Character c = ctx.parse_declaring("nu^1/2 * tau", &fresh);
    REQUIRE(fresh.size() == 1);
    CHECK(fresh[0] == "tau");
    CHECK(ctx.has("tau"));
    CHECK(c == Character::nu(1) * Character::generator("tau"));
}

TEST_CASE("generic-position equality logs each assumption once") {
    CharacterContext ctx;
    ctx.declare_text("chi1 order=inf ramified=false\nchi2 order=inf ramified=false\nxi order=2 ramified=false\n"
                     "assert xi != 1\n");
    CHECK(ctx.equals(Character::nu(2), Character::nu(2)).equal);

    const auto before = ctx.assumption_log().size();
    CHECK_FALSE(ctx.eq(ctx.gen("xi"), Character()));
    CHECK(ctx.assumption_log().size() == before);

    CHECK_FALSE(ctx.eq(ctx.gen("chi1"), ctx.gen("chi2")));
    CHECK_FALSE(ctx.eq(ctx.gen("chi1"), ctx.gen("chi2")));
    CHECK_FALSE(ctx.eq(ctx.gen("chi2"), ctx.gen("chi1")));
    int hits = 0;
    for (const auto& s : ctx.assumption_log())
        if (s.find("chi1") != std::string::npos && s.find("chi2") != std::string::npos) ++hits;
    CHECK(hits == 1);
}

TEST_CASE("characters differing in nu never coincide") {
    CharacterContext ctx;
    ctx.declare_line("chi1 order=inf ramified=false");
    const auto before = ctx.assumption_log().size();
    CHECK(ctx.ne(Character::nu(1) * ctx.gen("chi1"), ctx.gen("chi1")));
    CHECK(ctx.assumption_log().size() == before);
}

TEST_CASE("ramification flags") {
    CHECK(is_unramified(Character::nu(3)));
    CHECK_FALSE(is_unramified(Character::generator("xi", 2, false)));
    CHECK(is_unramified(Character::nu(1) * Character::generator("sigma")));
}

TEST_CASE("multiset helpers") {
    const Character a = Character::nu(1), b = Character::nu(-1);
    const CharMultiset m{a, b, a};
    CHECK(count(m, a) == 2);
    CHECK(multiset_equal(m, CharMultiset{a, a, b}));
    CHECK(is_submultiset(CharMultiset{a, a}, m));
    CHECK_FALSE(is_submultiset(CharMultiset{b, b}, m));
    CHECK(multiset_equal(multiset_minus(m, CharMultiset{a}), CharMultiset{a, b}));
    CHECK(multiset_equal(multiset_intersection(m, CharMultiset{a, a, a}), CharMultiset{a, a}));
    CHECK(as_set(m).size() == 2);
}

}
