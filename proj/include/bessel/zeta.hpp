#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bessel/chargroup.hpp"

namespace bessel {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& s);
std::string rational_text(const Rational& r);

// sum_k c[k] t^(low + k), trailing zeros trimmed
struct Laurent {
    int low = 0;
    std::vector<Rational> c;

    bool is_zero() const { return c.empty(); }
    Rational eval(const Rational& t) const;
    std::string str() const;
};

// num / prod_c (1 - c t)^e, with no factor (1 - c t) dividing num
struct RationalInT {
    Laurent num;
    std::vector<std::pair<Rational, int>> den;  // sorted by c, e > 0

    Rational eval(const Rational& t) const;
    // denominator expanded as an ordinary polynomial
    std::vector<Rational> den_poly() const;
    std::string str() const;
};

struct Tail {
    Rational mu;               // mu(pi)
    std::vector<Rational> p;   // P_mu(n) = sum p[j] n^j
};

// a_n = 0 for n < n0, explicit values for n0 <= n < m0, and
// a_n = sum_mu mu^n P_mu(n) for n >= m0
struct CoeffFunction {
    int n0 = 0;
    int m0 = 0;
    std::vector<Rational> values;
    std::vector<Tail> tails;

    Rational coefficient(int n) const;
};

// Z(f, chi, s) as a rational function of t = q^-s.  q only enters on evaluation.
RationalInT zeta_integral(const CoeffFunction& f, const Rational& chi);

// Value of the (n-1)-st s-derivative of Z/L at s = 0, as value * log(q)^logq_power.
struct Functional {
    Rational value;
    int logq_power = 0;
};
// profile: mu(pi) -> a_mu(M).  NotRegularizable if it leaves a pole.
Functional regularized_functional(const CoeffFunction& f, const Rational& chi,
                                  const std::map<Rational, int>& profile, int order);
// Pi (1 - mu chi t)^(a_mu) * Z as a Laurent polynomial
Laurent regularized_numerator(const CoeffFunction& f, const Rational& chi,
                              const std::map<Rational, int>& profile);
// the pole orders of Z, indexed by mu(pi)
std::map<Rational, int> minimal_profile(const CoeffFunction& f);

// chi(pi) for a character with integral nu-exponent, nu(pi) = 1/q
Rational value_at_uniformizer(const Character& chi, const Rational& q,
                              const std::map<std::string, Rational>& generator_values);

// rank over Q
int rank(std::vector<std::vector<Rational>> m);

}  // namespace bessel
