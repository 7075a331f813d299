#include "doctest.h"

#include "bessel/error.hpp"
#include "bessel/tsmod.hpp"

using namespace bessel;

namespace {
TModule blk(const Character& c, int len = 1) { return TModule({{c, len}}); }
}

TEST_SUITE("tsmod") {

TEST_CASE("basic invariants of S, E[f] and i_*") {
    const Character chi = Character::generator("chi1");
    const TSModule s = TSModule::S();
    CHECK(degree(s) == 1);
    CHECK(pi0(s).empty());
    CHECK(kappa(s).empty());
    CHECK(is_perfect(s));

    const TSModule f = fiber_ext(blk(chi, 2), {1});
    CHECK(degree(f) == 1);
    CHECK(pi0(f) == blk(chi, 2));
    CHECK(kappa(f) == blk(chi, 1));
    CHECK_FALSE(is_perfect(f));

    const TSModule i = TSModule::finite(blk(Character::nu(-3)));
    CHECK(degree(i) == 0);
    CHECK(pi0(i) == blk(Character::nu(-3)));
    CHECK(kappa(i) == pi0(i));
}

TEST_CASE("perfectness") {
    const Character chi = Character::generator("chi1");
    CHECK(is_perfect(universal_extension(blk(chi))));
    CHECK_FALSE(is_perfect(direct_sum(TSModule::finite(blk(chi)), TSModule::S())));
}

TEST_CASE("universal extensions") {
    const Character chi = Character::generator("chi1");
    CHECK(universal_extension(TModule()) == TSModule::S());
    CHECK(universal_extension(blk(chi)) == twist_ts(universal_extension(blk(Character())), chi));
    CHECK_THROWS_AS(universal_extension(TModule({{chi, 1}, {chi, 1}})), NotCyclic);
}

TEST_CASE("fiber products") {
    const Character chi1 = Character::generator("chi1"), chi2 = Character::generator("chi2");
    const Character h = Character::nu(1);
    const TSModule e2 = fiber_ext(blk(h, 2), {2});
    CHECK(e2 == universal_extension(blk(h, 2)));
    CHECK(kappa(e2).empty());

    // kill one component of a four-character X
    const TModule x({{Character(), 1}, {chi1, 1}, {chi2, 1}, {chi1 * chi2, 1}});
    const TSModule k = fiber_ext_kernel(x, blk(chi1));
    CHECK(kappa(k) == blk(chi1));
    CHECK(pi0(k) == x);
    CHECK(degree(k) == 1);

    CHECK_THROWS_AS(fiber_ext(TModule({{chi1, 1}, {chi1, 1}}), {1, 1}), MonodromyViolation);
}

TEST_CASE("twists") {
    const Character chi = Character::generator("chi1"), mu = Character::generator("mu");
    CHECK(twist_ts(TSModule::S(), chi) == TSModule::S());
    CHECK(twist_ts(universal_extension(blk(chi)), mu) == universal_extension(blk(mu * chi)));
    CHECK(twist_ts(direct_sum(TSModule::finite(blk(Character())), TSModule::S()), Character::nu(2)) ==
          direct_sum(TSModule::finite(blk(Character::nu(2))), TSModule::S()));
}

TEST_CASE("T-invariants and coinvariants") {
    const Character chi = Character::generator("chi1"), other = Character::generator("chi2");
    auto d = dims_T(TSModule::S(), chi);
    CHECK(d.inv == 0);
    CHECK(d.coinv == 1);
    d = dims_T(TSModule::finite(blk(chi)), chi);
    CHECK(d.inv == 1);
    CHECK(d.coinv == 1);
    const TSModule e = universal_extension(TModule({{chi, 1}, {other, 2}}));
    for (const auto& c : {chi, other, Character()}) {
        d = dims_T(e, c);
        CHECK(d.inv == 0);
        CHECK(d.coinv == 1);
    }
}

TEST_CASE("Kirillov quotient") {
    const Character chi = Character::generator("chi1"), xi = Character::generator("xi", 2);
    const Character s = Character::generator("sigma"), h = Character::nu(1);
    CHECK(kirillov_quotient(fiber_ext(blk(chi, 2), {1})) == universal_extension(blk(chi)));
    CHECK(kirillov_quotient(direct_sum(TSModule::S(), TSModule::finite(blk(chi)))) == TSModule::S());
    const TSModule va = direct_sum(TSModule::finite(blk(xi * h * s)), universal_extension(blk(h * s)));
    CHECK(kirillov_quotient(va) == universal_extension(blk(h * s)));
}

TEST_CASE("Mellin functors on small objects") {
    const Character rho = Character::generator("r");
    const Character nu1 = Character::nu(2) * rho, nu2 = Character::nu(4) * rho;
    CHECK(mellin_lower(rho, universal_extension(blk(nu2))) ==
          direct_sum(TSModule::S(), TSModule::finite(blk(nu2))));
    CHECK(mellin_upper(rho, TSModule::finite(blk(nu1))) == TSModule::S());
    CHECK(mellin_lower(rho, TSModule::S()) == TSModule::S());
    CHECK(mellin_lower(rho, TSModule::finite(blk(nu1, 2))) == fiber_ext(blk(nu1, 2), {1}));
    CHECK(mellin_upper(rho, universal_extension(blk(nu1, 2))) == TSModule::zero());
    CHECK_THROWS_AS(mellin_lower(rho, universal_extension(blk(nu1, 3))), OutsideComputableClass);
}

TEST_CASE("Grothendieck classes") {
    const Character chi = Character::generator("chi1"), w = Character::generator("omega_pi");
    CHECK(grothendieck_class(TSModule::S()) == GrothendieckClass{1, {}});
    CHECK(grothendieck_class(universal_extension(blk(chi))) == GrothendieckClass{1, {chi}});
    const Character n32 = Character::nu(3);
    const auto g = grothendieck_class(universal_extension(TModule({{n32, 1}, {n32 * w, 1}})));
    CHECK(g.deg == 1);
    CHECK(multiset_equal(g.ss, {n32, n32 * w}));
}

}
