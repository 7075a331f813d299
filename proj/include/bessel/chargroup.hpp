#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace bessel {

// One generator occurring in a character word.  order == 0 means infinite.
struct Term {
    int exp = 0;
    int order = 0;
    bool unramified = true;
};

// nu^(nu2/2) * prod g^e.  Finite-order exponents are kept in [0, order).
class Character {
public:
    Character() = default;

    static Character nu(int twice_exponent);
    static Character generator(const std::string& name, int order = 0,
                               bool unramified = true);

    int nu2() const { return nu2_; }
    const std::map<std::string, Term>& terms() const { return terms_; }
    bool trivial() const { return nu2_ == 0 && terms_.empty(); }
    bool has_infinite_order_term() const;

    Character operator*(const Character& o) const;
    Character operator/(const Character& o) const { return *this * o.inverse(); }
    Character inverse() const { return pow(-1); }
    Character pow(int e) const;
    Character& operator*=(const Character& o) { return *this = *this * o; }

    // the character with its nu part removed
    Character unitary_part() const;

    bool operator==(const Character& o) const;
    std::strong_ordering operator<=>(const Character& o) const;

    // "nu^1/2 * chi1^-1", "1" for the trivial character
    std::string str() const;
    // "ν^{1/2}χ₁^{-1}"
    std::string pretty() const;

private:
    void put(const std::string& name, Term t);

    int nu2_ = 0;
    std::map<std::string, Term> terms_;
};

// a * b^e
Character combine(const Character& a, const Character& b, int e);
// rho* = omega / rho
Character involution(const Character& omega, const Character& rho);
bool is_unramified(const Character& chi);

std::string pretty_name(const std::string& name);

struct Generator {
    std::string name;
    int order = 0;
    bool unramified = true;
};

struct EqResult {
    bool equal = false;
    std::string reason;
};

class CharacterContext {
public:
    void declare(const Generator& g);
    // "name order=<n|inf> ramified=<bool>" or "assert <monomial> != 1"
    void declare_line(std::string_view line);
    void declare_text(std::string_view text);

    bool has(const std::string& name) const;
    const Generator& generator(const std::string& name) const;
    const std::vector<Generator>& generators() const { return gens_; }
    Character gen(const std::string& name) const;

    void assert_nontrivial(const Character& c);
    const std::vector<Character>& inequations() const { return ineqs_; }

    Character parse(std::string_view text) const;
    // declares unknown names as infinite-order unramified generators
    Character parse_declaring(std::string_view text,
                              std::vector<std::string>* declared = nullptr);

    // Generic-position equality; undetermined coincidences are logged.
    EqResult equals(const Character& a, const Character& b);
    bool eq(const Character& a, const Character& b) { return equals(a, b).equal; }
    bool ne(const Character& a, const Character& b) { return !eq(a, b); }

    const std::vector<std::string>& assumption_log() const { return log_; }

private:
    Character parse_impl(std::string_view text, bool declaring,
                         std::vector<std::string>* declared);
    bool is_inequation(const Character& d) const;

    std::vector<Generator> gens_;
    std::vector<Character> ineqs_;
    std::vector<std::string> log_;
    std::set<std::string> logged_;
};

// multiset helpers shared by the higher layers
using CharMultiset = std::vector<Character>;

CharMultiset sorted(CharMultiset m);
CharMultiset twist(const CharMultiset& m, const Character& mu);
CharMultiset involution(const Character& omega, const CharMultiset& m);
bool contains(const CharMultiset& m, const Character& c);
std::size_t count(const CharMultiset& m, const Character& c);
bool multiset_equal(const CharMultiset& a, const CharMultiset& b);
bool is_submultiset(const CharMultiset& sub, const CharMultiset& sup);
CharMultiset multiset_union(const CharMultiset& a, const CharMultiset& b);
// a minus b; elements of b missing from a are ignored
CharMultiset multiset_minus(const CharMultiset& a, const CharMultiset& b);
// multiset intersection (min of multiplicities)
CharMultiset multiset_intersection(const CharMultiset& a, const CharMultiset& b);
CharMultiset as_set(const CharMultiset& m);
std::string str(const CharMultiset& m);
std::string pretty(const CharMultiset& m);

}  // namespace bessel
