#pragma once

#include <map>
#include <string>
#include <vector>

#include "bessel/gsp4.hpp"

namespace bessel {

// Characters nu^(k/2) * zeta^j with |k| <= 2B and zeta of order M = lcm(N, 2),
// so the quadratic character zeta^(M/2) is always available.
class FiniteModel {
public:
    FiniteModel(int N, int B);

    int N() const { return n_; }
    int B() const { return b_; }
    int M() const { return m_; }
    const Character& zeta() const { return zeta_; }
    const Character& quadratic() const { return xi_; }
    // all elements with |nu-exponent| <= bound
    std::vector<Character> elements(int bound) const;
    std::vector<Character> elements() const { return elements(b_); }

private:
    int n_, b_, m_;
    Character zeta_, xi_;
};

struct Counterexample {
    std::string check;
    std::string instance;
    std::string detail;
};

struct Report {
    std::string suite;
    std::string model;
    std::map<std::string, long> checks;     // check -> instances examined
    std::map<std::string, long> witnesses;  // listed exception -> times observed
    std::vector<std::string> unwitnessed;
    std::vector<Counterexample> failures;   // first few per check
    long failure_count = 0;

    bool passed() const { return failure_count == 0 && unwitnessed.empty(); }
};

// Lemmas on the Delta intersections and the exceptional-case corollary,
// by enumeration of every valid instantiation in the model.
Report check_combinatorics(const FiniteModel& model);

// Table identities over all 27 types in symbolic generic position.
Report check_tables();

// Generic-position context used by check_tables, the CLI and the tests:
// chi1, chi2, omega_pi, sigma, r, mu of infinite order and xi of order 2.
CharacterContext symbolic_context();
ReprSpec symbolic_spec(Type t, const CharacterContext& ctx);
// Delta_+, Delta_-, their partners, the rho_pm of the Siegel rows and sigma*r
CharMultiset rho_panel(const ReprSpec& s, const Character& generic);

}  // namespace bessel
