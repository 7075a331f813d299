#include "bessel/zeta.hpp"

#include <algorithm>

#include "bessel/error.hpp"

namespace bessel {

using boost::multiprecision::cpp_int;
using Poly = std::vector<Rational>;

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(cpp_int(s));
        cpp_int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(cpp_int(s.substr(0, slash)), den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        throw ParseError("not a rational number: '" + text + "'");
    }
}

std::string rational_text(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Rational rpow(const Rational& x, int e) {
    Rational r = 1;
    Rational b = e < 0 ? Rational(1) / x : x;
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return r;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

Poly scale(Poly a, const Rational& s) {
    for (auto& x : a) x *= s;
    trim(a);
    return a;
}

// (1 - c t)^e
Poly linear_power(const Rational& c, int e) {
    Poly r{Rational(1)};
    for (int i = 0; i < e; ++i) r = mul(r, {Rational(1), -c});
    return r;
}

Poly derivative(const Poly& p) {
    Poly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<int>(i));
    trim(r);
    return r;
}

Rational eval_poly(const Poly& p, const Rational& t) {
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

// exact division by (1 - c t); false if it leaves a remainder
bool divide_linear(Poly& p, const Rational& c) {
    if (p.empty()) return true;
    Poly q(p.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        q[k] = p[k] + carry;
        carry = c * q[k];
    }
    if (p.back() + carry != 0) return false;
    trim(q);
    p = std::move(q);
    return true;
}

Laurent make_laurent(int low, Poly c) {
    std::size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead == c.size()) return {};
    c.erase(c.begin(), c.begin() + static_cast<long>(lead));
    trim(c);
    return {low + static_cast<int>(lead), std::move(c)};
}

Laurent add(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int low = std::min(a.low, b.low);
    Poly pa(static_cast<std::size_t>(a.low - low), Rational(0));
    pa.insert(pa.end(), a.c.begin(), a.c.end());
    Poly pb(static_cast<std::size_t>(b.low - low), Rational(0));
    pb.insert(pb.end(), b.c.begin(), b.c.end());
    return make_laurent(low, add(pa, pb));
}

Laurent mul(const Laurent& a, const Poly& p) { return make_laurent(a.low, mul(a.c, p)); }

// sum_{k>=0} k^j x^k = N_j(x) / (1 - x)^(j+1)
std::vector<Poly> eulerian_numerators(int d) {
    std::vector<Poly> n{{Rational(1)}};
    for (int j = 1; j <= d; ++j) {
        const Poly& prev = n.back();
        Poly a = mul(mul({Rational(0), Rational(1)}, derivative(prev)), {Rational(1), Rational(-1)});
        Poly b = scale(mul({Rational(0), Rational(1)}, prev), Rational(j));
        n.push_back(add(a, b));
    }
    return n;
}

Rational binomial(int n, int k) {
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string term(const Rational& c, int k, bool first) {
    std::string out;
    Rational a = c;
    if (!first) {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    } else if (a < 0 && k != 0 && a == -1) {
        out += "-";
        a = 1;
    }
    if (k == 0 || a != 1) out += rational_text(a);
    if (k != 0) {
        out += "t";
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

Rational Laurent::eval(const Rational& t) const {
    Rational r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) r += c[i] * rpow(t, low + static_cast<int>(i));
    return r;
}

std::string Laurent::str() const {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        out += term(c[i], low + static_cast<int>(i), first);
        first = false;
    }
    return out;
}

Rational RationalInT::eval(const Rational& t) const {
    Rational d = 1;
    for (const auto& [c, e] : den) d *= rpow(1 - c * t, e);
    return num.eval(t) / d;
}

std::vector<Rational> RationalInT::den_poly() const {
    Poly p{Rational(1)};
    for (const auto& [c, e] : den) p = mul(p, linear_power(c, e));
    return p;
}

std::string RationalInT::str() const {
    std::string n = num.str();
    if (den.empty()) return n;
    std::string d;
    for (const auto& [c, e] : den) {
        d += "(1 - " + (c == 1 ? std::string() : rational_text(c)) + "t)";
        if (e != 1) d += "^" + std::to_string(e);
    }
    return "(" + n + ") / " + d;
}

Rational CoeffFunction::coefficient(int n) const {
    if (n < n0) return 0;
    if (n < m0) {
        auto i = static_cast<std::size_t>(n - n0);
        return i < values.size() ? values[i] : Rational(0);
    }
    Rational a = 0;
    for (const auto& tl : tails) a += rpow(tl.mu, n) * eval_poly(tl.p, Rational(n));
    return a;
}

RationalInT zeta_integral(const CoeffFunction& f, const Rational& chi) {
    if (chi == 0) throw InvalidSpec("chi(pi) must be non-zero");
    if (f.m0 < f.n0) throw InvalidSpec("coefficient function needs n0 <= m0");
    for (std::size_t i = 0; i < f.tails.size(); ++i) {
        if (f.tails[i].mu == 0) throw InvalidSpec("tail with mu(pi) = 0");
        for (std::size_t j = 0; j < i; ++j)
            if (f.tails[i].mu == f.tails[j].mu) throw InvalidSpec("tails must have distinct mu values");
    }

    struct Part {
        Laurent num;
        Rational c;
        int e;
    };
    std::vector<Part> parts;

    Poly explicit_part;
    for (int n = f.n0; n < f.m0; ++n) explicit_part.push_back(f.coefficient(n) * rpow(chi, n));
    parts.push_back({make_laurent(f.n0, explicit_part), 0, 0});

    for (const auto& tl : f.tails) {
        Poly p = tl.p;
        trim(p);
        if (p.empty()) continue;
        const int d = static_cast<int>(p.size()) - 1;
        // Q(k) = P(k + m0)
        Poly q(p.size(), Rational(0));
        for (int j = 0; j <= d; ++j)
            for (int i = j; i <= d; ++i) q[j] += p[i] * binomial(i, j) * rpow(Rational(f.m0), i - j);
        const auto nj = eulerian_numerators(d);
        Poly x_num;
        for (int j = 0; j <= d; ++j)
            if (q[j] != 0) x_num = add(x_num, scale(mul(nj[j], linear_power(1, d - j)), q[j]));
        const Rational c = tl.mu * chi;
        for (std::size_t i = 0; i < x_num.size(); ++i) x_num[i] *= rpow(c, static_cast<int>(i) + f.m0);
        parts.push_back({make_laurent(f.m0, x_num), c, d + 1});
    }

    std::map<Rational, int> den;
    for (const auto& pt : parts)
        if (pt.e > 0) den[pt.c] = std::max(den[pt.c], pt.e);
    Laurent num;
    for (const auto& pt : parts) {
        Poly cofactor{Rational(1)};
        for (const auto& [c, e] : den) cofactor = mul(cofactor, linear_power(c, e - (c == pt.c ? pt.e : 0)));
        num = add(num, mul(pt.num, cofactor));
    }

    RationalInT out;
    for (auto& [c, e] : den) {
        while (e > 0 && !num.is_zero() && divide_linear(num.c, c)) --e;
        if (num.is_zero()) e = 0;
        if (e > 0) out.den.push_back({c, e});
    }
    out.num = make_laurent(num.low, num.c);
    return out;
}

Laurent regularized_numerator(const CoeffFunction& f, const Rational& chi, const std::map<Rational, int>& profile) {
    const RationalInT z = zeta_integral(f, chi);
    Laurent g = z.num;
    std::map<Rational, int> extra;
    for (const auto& [mu, a] : profile) extra[mu * chi] += a;
    for (const auto& [c, e] : z.den) {
        auto it = extra.find(c);
        int a = it == extra.end() ? 0 : it->second;
        if (a < e)
            throw NotRegularizable("pole of order " + std::to_string(e) + " at t = 1/" + rational_text(c) +
                                   " exceeds the profile multiplicity " + std::to_string(a));
        it->second -= e;
    }
    for (const auto& [c, a] : extra) g = mul(g, linear_power(c, a));
    return g;
}

Functional regularized_functional(const CoeffFunction& f, const Rational& chi, const std::map<Rational, int>& profile,
                                  int order) {
    if (order < 1) throw InvalidSpec("functional order must be >= 1");
    const Laurent g = regularized_numerator(f, chi, profile);
    // d/ds = -log(q) t d/dt, evaluated at t = 1
    Rational v = 0;
    for (std::size_t i = 0; i < g.c.size(); ++i) v += g.c[i] * rpow(Rational(g.low + static_cast<int>(i)), order - 1);
    if ((order - 1) % 2 == 1) v = -v;
    return {v, order - 1};
}

std::map<Rational, int> minimal_profile(const CoeffFunction& f) {
    std::map<Rational, int> out;
    for (const auto& [c, e] : zeta_integral(f, 1).den) out[c] = e;
    return out;
}

Rational value_at_uniformizer(const Character& chi, const Rational& q,
                              const std::map<std::string, Rational>& generator_values) {
    if (chi.nu2() % 2 != 0) throw InvalidSpec("nu^(1/2) has no rational value at the uniformizer");
    Rational v = rpow(Rational(1) / q, chi.nu2() / 2);
    for (const auto& [name, t] : chi.terms()) {
        if (!t.unramified) throw InvalidSpec(name + " is ramified");
        auto it = generator_values.find(name);
        if (it == generator_values.end()) throw UnknownGenerator("no value given for " + name);
        v *= rpow(it->second, t.exp);
    }
    return v;
}

int rank(std::vector<std::vector<Rational>> m) {
    int r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && r < static_cast<int>(m.size()); ++col) {
        std::size_t piv = static_cast<std::size_t>(r);
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(r)]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(r) || m[i][col] == 0) continue;
            Rational factor = m[i][col] / m[static_cast<std::size_t>(r)][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[static_cast<std::size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

}  // namespace bessel
