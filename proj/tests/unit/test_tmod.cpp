#include "doctest.h"

#include "bessel/tmod.hpp"

using namespace bessel;

TEST_SUITE("tmod") {

TEST_CASE("invariants, coinvariants and generalized eigenspaces") {
    const Character h = Character::nu(1);
    auto d = inv_coinv_dims(TModule({{h, 1}, {h, 1}}), h);
    CHECK(d.inv == 2);
    CHECK(d.coinv == 2);
    CHECK(d.gen_eig == 2);

    d = inv_coinv_dims(TModule({{Character::nu(-1), 2}}), Character::nu(-1));
    CHECK(d.inv == 1);
    CHECK(d.coinv == 1);
    CHECK(d.gen_eig == 2);

    d = inv_coinv_dims(TModule(), h);
    CHECK(d.inv == 0);
    CHECK(d.coinv == 0);
    CHECK(d.gen_eig == 0);
}

TEST_CASE("cyclicity") {
    const Character chi1 = Character::generator("chi1");
    CHECK(is_cyclic(TModule({{Character(), 3}})));
    CHECK_FALSE(is_cyclic(TModule({{chi1, 1}, {chi1, 1}})));
    CHECK(is_cyclic(TModule({{Character::nu(1), 1}, {chi1 * Character::nu(1), 1}})));
}

TEST_CASE("twist, semisimplification, sums") {
    const Character chi1 = Character::generator("chi1");
    CHECK(twist(TModule({{Character(), 2}}), Character::nu(3)) == TModule({{Character::nu(3), 2}}));
    CHECK(multiset_equal(semisimplify(TModule({{Character::nu(1), 2}})), {Character::nu(1), Character::nu(1)}));
    const TModule s = direct_sum(TModule({{chi1, 1}}), TModule({{chi1, 1}}));
    CHECK(s.blocks().size() == 2);
    CHECK_FALSE(is_cyclic(s));
    CHECK(s.dimension() == 2);
}

TEST_CASE("cyclic_from merges equal characters") {
    const Character h = Character::nu(1);
    const TModule x = TModule::cyclic_from({h, Character(), h});
    CHECK(x == TModule({{Character(), 1}, {h, 2}}));
    CHECK(is_cyclic(x));
}

TEST_CASE("block order does not affect equality") {
    const Character a = Character::nu(1), b = Character::generator("chi1");
    CHECK(TModule({{a, 1}, {b, 2}}) == TModule({{b, 2}, {a, 1}}));
}

}
