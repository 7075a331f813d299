#include "doctest.h"

#include <cstdlib>

#include "bessel/verify.hpp"

using namespace bessel;

TEST_SUITE("verify") {

TEST_CASE("finite model enumerates its characters") {
    const FiniteModel m(5, 4);
    CHECK(m.M() == 10);
    // nu^(k/2) with |k| <= 2B, times the M-th roots of unity
    CHECK(m.elements().size() == static_cast<std::size_t>((4 * 4 + 1) * 10));
    CHECK(m.elements(1).size() == static_cast<std::size_t>((4 * 1 + 1) * 10));
    CHECK(m.quadratic().pow(2).trivial());
    CHECK_FALSE(m.quadratic().trivial());
}

TEST_CASE("table identities over all types") {
    const Report r = check_tables();
    for (const auto& f : r.failures) MESSAGE(f.check << " | " << f.instance << " | " << f.detail);
    CHECK(r.failure_count == 0);
    CHECK(r.checks.at("BETA1") > 0);
    CHECK(r.checks.at("divisibility") > 0);
}

TEST_CASE("combinatorics on the small model") {
    const Report r = check_combinatorics(FiniteModel(5, 4));
    for (const auto& f : r.failures) MESSAGE(f.check << " | " << f.instance << " | " << f.detail);
    for (const auto& u : r.unwitnessed) MESSAGE("unwitnessed " << u);
    CHECK(r.passed());
}

TEST_CASE("rho panel contains the Delta characters and their partners") {
    CharacterContext ctx = symbolic_context();
    const ReprSpec s = symbolic_spec(Type::I, ctx);
    const auto p = rho_panel(s, ctx.gen("r"));
    const DeltaSets d = delta_sets(s);
    const Character w = central_character(s);
    for (const auto& c : d.delta_plus) {
        CHECK(contains(p, c));
        CHECK(contains(p, involution(w, c)));
    }
}

}
