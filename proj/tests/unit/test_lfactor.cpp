#include "doctest.h"

#include "bessel/lfactor.hpp"

using namespace bessel;

TEST_SUITE("lfactor") {

TEST_CASE("Tate factors") {
    const Character s = Character::generator("sigma");
    const Character chi = Character::generator("chi1");
    CHECK(tate(Character::nu(3) * s).pretty() == "L(s, ν^{3/2}σ)");
    CHECK(tate(Character::generator("xi", 2, false)).trivial());
    CHECK(tate(Character::nu(3) * chi, -3) == tate(chi, 0));
}

TEST_CASE("L-factors of TS-modules") {
    const Character s = Character::generator("sigma"), chi = Character::generator("chi1");
    CHECK(lfactor_of(TSModule::S()).is_one());
    const Character m = Character::nu(-1) * s;
    const auto l = lfactor_of(universal_extension(TModule({{m, 2}})));
    CHECK(l == LFactorProduct({tate(m), tate(m)}));
    CHECK(l.pretty() == "L(s, ν^{-1/2}σ)^2");
    CHECK(lfactor_of(direct_sum(TSModule::finite(TModule({{chi, 1}})), TSModule::S())) == LFactorProduct({tate(chi)}));
}

TEST_CASE("division") {
    const Character s = Character::generator("sigma"), chi = Character::generator("chi1");
    const LFactorProduct a({tate(s), tate(chi * s)});
    const LFactorProduct b({tate(chi * s)});
    CHECK(divides(b, a));
    CHECK(divide(a, b) == LFactorProduct({tate(s)}));
    CHECK_FALSE(divides(LFactorProduct({tate(chi * s)}), LFactorProduct({tate(s)})));
    CHECK(multiply(divide(a, b), b) == a);
}

TEST_CASE("rendering") {
    const Character s = Character::generator("sigma");
    CHECK(LFactorProduct().str() == "1");
    const LFactorProduct one({tate(Character::nu(1) * s)});
    CHECK(one.pretty() == "L(s, ν^{1/2}σ)");
    CHECK(one.polynomial().find("q^{-1/2}") != std::string::npos);
}

TEST_CASE("twisting is factorwise") {
    const Character s = Character::generator("sigma"), mu = Character::generator("mu");
    const LFactorProduct p({tate(Character::nu(1) * s), tate(s)});
    CHECK(twist(p, mu) == LFactorProduct({tate(Character::nu(1) * s * mu), tate(s * mu)}));
}

TEST_CASE("half-integer rendering") {
    CHECK(half_text(3) == "3/2");
    CHECK(half_text(-2) == "-1");
    CHECK(half_text(0) == "0");
}

}
