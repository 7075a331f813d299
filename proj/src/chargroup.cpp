#include "bessel/chargroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bessel/error.hpp"

namespace bessel {

namespace {

int floor_mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

const std::pair<const char*, const char*> kGreek[] = {
    {"sigma", "σ"}, {"omega", "ω"}, {"chi", "χ"}, {"rho", "ρ"},
    {"xi", "ξ"},    {"mu", "μ"},    {"zeta", "ζ"}, {"tau", "τ"},
};

const char* kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

// undo pretty_name so pasted output parses again; juxtaposed names become separate tokens
std::string ascii_name(std::string s) {
    for (auto [ascii, greek] : kGreek) s = replace_all(s, greek, std::string(" ") + ascii);
    for (int d = 0; d < 10; ++d) s = replace_all(s, kSubscripts[d], std::string(1, char('0' + d)));
    return s;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& s, std::string_view whole) {
    if (s.empty()) throw ParseError("empty exponent in '" + std::string(whole) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw ParseError("bad exponent '" + s + "' in '" + std::string(whole) + "'");
    }
    if (used != s.size()) throw ParseError("bad exponent '" + s + "' in '" + std::string(whole) + "'");
    return v;
}

std::string nu_exponent_text(int nu2, bool braces) {
    std::ostringstream os;
    if (nu2 % 2 == 0) {
        os << nu2 / 2;
    } else {
        os << nu2 << "/2";
    }
    if (!braces) return os.str();
    return "{" + os.str() + "}";
}

}  // namespace

std::string pretty_name(const std::string& name) {
    for (auto [ascii, greek] : kGreek) {
        std::string a(ascii);
        if (name.compare(0, a.size(), a) != 0) continue;
        std::string rest = name.substr(a.size());
        bool digits = std::all_of(rest.begin(), rest.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (!digits) {
            if (rest.size() > 1 && rest[0] == '_') return greek + rest;
            continue;
        }
        std::string out = greek;
        for (char c : rest) out += kSubscripts[c - '0'];
        return out;
    }
    return name;
}

Character Character::nu(int twice_exponent) {
    Character c;
    c.nu2_ = twice_exponent;
    return c;
}

Character Character::generator(const std::string& name, int order, bool unramified) {
    Character c;
    c.put(name, Term{1, order, unramified});
    return c;
}

void Character::put(const std::string& name, Term t) {
    if (t.order > 0) t.exp = floor_mod(t.exp, t.order);
    if (t.exp == 0) {
        terms_.erase(name);
    } else {
        terms_[name] = t;
    }
}

bool Character::has_infinite_order_term() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.second.order == 0; });
}

Character Character::operator*(const Character& o) const {
    Character r = *this;
    r.nu2_ += o.nu2_;
    for (const auto& [name, t] : o.terms_) {
        auto it = r.terms_.find(name);
        Term sum = t;
        if (it != r.terms_.end()) sum.exp += it->second.exp;
        r.put(name, sum);
    }
    return r;
}

Character Character::pow(int e) const {
    Character r;
    r.nu2_ = nu2_ * e;
    for (const auto& [name, t] : terms_) {
        Term p = t;
        p.exp = t.exp * e;
        r.put(name, p);
    }
    return r;
}

Character Character::unitary_part() const {
    Character r = *this;
    r.nu2_ = 0;
    return r;
}

bool Character::operator==(const Character& o) const {
    if (nu2_ != o.nu2_ || terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    for (auto b = o.terms_.begin(); b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first || a->second.exp != b->second.exp) return false;
    }
    return true;
}

std::strong_ordering Character::operator<=>(const Character& o) const {
    if (auto c = nu2_ <=> o.nu2_; c != 0) return c;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (auto c = a->first <=> b->first; c != 0) return c;
        if (auto c = a->second.exp <=> b->second.exp; c != 0) return c;
    }
    if (a == terms_.end() && b == o.terms_.end()) return std::strong_ordering::equal;
    return a == terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Character::str() const {
    std::vector<std::string> parts;
    if (nu2_ != 0) {
        if (nu2_ == 2) {
            parts.push_back("nu");
        } else {
            parts.push_back("nu^" + nu_exponent_text(nu2_, false));
        }
    }
    for (const auto& [name, t] : terms_) {
        parts.push_back(t.exp == 1 ? name : name + "^" + std::to_string(t.exp));
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
    return out;
}

std::string Character::pretty() const {
    std::string out;
    if (nu2_ != 0) out += nu2_ == 2 ? "ν" : "ν^" + nu_exponent_text(nu2_, true);
    for (const auto& [name, t] : terms_) {
        out += pretty_name(name);
        if (t.exp != 1) out += "^{" + std::to_string(t.exp) + "}";
    }
    return out.empty() ? "1" : out;
}

Character combine(const Character& a, const Character& b, int e) { return a * b.pow(e); }

Character involution(const Character& omega, const Character& rho) { return omega / rho; }

bool is_unramified(const Character& chi) {
    return std::all_of(chi.terms().begin(), chi.terms().end(),
                       [](const auto& kv) { return kv.second.unramified; });
}

// ---------------------------------------------------------------------------

void CharacterContext::declare(const Generator& g) {
    if (g.name.empty() || g.name == "nu" || g.name == "1")
        throw ParseError("reserved generator name '" + g.name + "'");
    if (!(std::isalpha(static_cast<unsigned char>(g.name[0])) || g.name[0] == '_'))
        throw ParseError("generator name must start with a letter: '" + g.name + "'");
    if (has(g.name)) throw ParseError("generator '" + g.name + "' declared twice");
    if (g.order < 0) throw ParseError("negative order for '" + g.name + "'");
    gens_.push_back(g);
}

void CharacterContext::declare_line(std::string_view raw) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') return;
    if (line.rfind("assert", 0) == 0) {
        std::string body = trim(std::string_view(line).substr(6));
        auto pos = body.find("!=");
        if (pos == std::string::npos || trim(body.substr(pos + 2)) != "1")
            throw ParseError("expected 'assert <monomial> != 1': " + line);
        assert_nontrivial(parse(body.substr(0, pos)));
        return;
    }
    std::istringstream is(line);
    Generator g;
    is >> g.name;
    std::string kv;
    while (is >> kv) {
        auto eqpos = kv.find('=');
        if (eqpos == std::string::npos) throw ParseError("expected key=value in: " + line);
        std::string key = kv.substr(0, eqpos), val = kv.substr(eqpos + 1);
        if (key == "order") {
            g.order = (val == "inf" || val == "infinite") ? 0 : parse_int(val, line);
            if (g.order < 0 || g.order == 1)
                throw ParseError("order must be inf or >= 2: " + line);
        } else if (key == "ramified") {
            if (val != "true" && val != "false") throw ParseError("ramified must be true|false: " + line);
            g.unramified = val == "false";
        } else {
            throw ParseError("unknown key '" + key + "' in: " + line);
        }
    }
    declare(g);
}

void CharacterContext::declare_text(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find_first_of("\n;", start);
        if (end == std::string_view::npos) end = text.size();
        declare_line(text.substr(start, end - start));
        start = end + 1;
    }
}

bool CharacterContext::has(const std::string& name) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Generator& g) { return g.name == name; });
}

const Generator& CharacterContext::generator(const std::string& name) const {
    for (const auto& g : gens_)
        if (g.name == name) return g;
    throw UnknownGenerator("unknown generator '" + name + "'");
}

Character CharacterContext::gen(const std::string& name) const {
    const Generator& g = generator(name);
    return Character::generator(g.name, g.order, g.unramified);
}

void CharacterContext::assert_nontrivial(const Character& c) {
    if (c.trivial()) throw ParseError("inequation monomial is the identity word");
    if (!is_inequation(c)) ineqs_.push_back(c);
}

bool CharacterContext::is_inequation(const Character& d) const {
    Character di = d.inverse();
    return std::any_of(ineqs_.begin(), ineqs_.end(),
                       [&](const Character& c) { return c == d || c == di; });
}

Character CharacterContext::parse(std::string_view text) const {
    return const_cast<CharacterContext*>(this)->parse_impl(text, false, nullptr);
}

Character CharacterContext::parse_declaring(std::string_view text, std::vector<std::string>* declared) {
    return parse_impl(text, true, declared);
}

Character CharacterContext::parse_impl(std::string_view text, bool declaring,
                                       std::vector<std::string>* declared) {
    std::string s = ascii_name(std::string(text));
    s = replace_all(s, "ν", " nu");
    s = replace_all(s, "·", " ");
    for (char& c : s) {
        if (c == '*' || c == '}') c = ' ';
        else if (c == '{' || c == '(' || c == ')') c = '\0';
    }
    s.erase(std::remove(s.begin(), s.end(), '\0'), s.end());
    std::istringstream is(s);
    std::string tok;
    Character out;
    bool any = false;
    while (is >> tok) {
        any = true;
        std::string base = tok, ex;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            base = tok.substr(0, caret);
            ex = tok.substr(caret + 1);
            if (ex.empty()) throw ParseError("dangling '^' in '" + std::string(text) + "'");
        }
        if (base == "1" && ex.empty()) continue;
        if (base == "nu") {
            int twice = 2;
            if (!ex.empty()) {
                auto slash = ex.find('/');
                if (slash == std::string::npos) {
                    twice = 2 * parse_int(ex, text);
                } else {
                    if (ex.substr(slash + 1) != "2")
                        throw ParseError("nu exponents must be integers or halves: '" + std::string(text) + "'");
                    twice = parse_int(ex.substr(0, slash), text);
                }
            }
            out *= Character::nu(twice);
            continue;
        }
        int e = ex.empty() ? 1 : parse_int(ex, text);
        if (!has(base)) {
            if (!declaring) throw UnknownGenerator("unknown generator '" + base + "' in '" + std::string(text) + "'");
            declare(Generator{base, 0, true});
            if (declared) declared->push_back(base);
        }
        out *= gen(base).pow(e);
    }
    if (!any) throw ParseError("empty character expression");
    return out;
}

EqResult CharacterContext::equals(const Character& a, const Character& b) {
    Character d = a / b;
    if (d.trivial()) return {true, "identical words"};
    if (d.nu2() != 0 && !d.has_infinite_order_term())
        return {false, "absolute values differ"};
    if (is_inequation(d)) return {false, "declared inequation"};
    Character di = d.inverse();
    std::string key = std::min(d.str(), di.str());
    if (logged_.insert(key).second) log_.push_back(key + " != 1");
    return {false, "generic position: " + key + " != 1"};
}

// ---------------------------------------------------------------------------

CharMultiset sorted(CharMultiset m) {
    std::sort(m.begin(), m.end());
    return m;
}

CharMultiset twist(const CharMultiset& m, const Character& mu) {
    CharMultiset r;
    r.reserve(m.size());
    for (const auto& c : m) r.push_back(c * mu);
    return r;
}

CharMultiset involution(const Character& omega, const CharMultiset& m) {
    CharMultiset r;
    r.reserve(m.size());
    for (const auto& c : m) r.push_back(omega / c);
    return r;
}

bool contains(const CharMultiset& m, const Character& c) {
    return std::find(m.begin(), m.end(), c) != m.end();
}

std::size_t count(const CharMultiset& m, const Character& c) {
    return static_cast<std::size_t>(std::count(m.begin(), m.end(), c));
}

bool multiset_equal(const CharMultiset& a, const CharMultiset& b) { return sorted(a) == sorted(b); }

bool is_submultiset(const CharMultiset& sub, const CharMultiset& sup) {
    return multiset_minus(sub, sup).empty();
}

CharMultiset multiset_union(const CharMultiset& a, const CharMultiset& b) {
    CharMultiset r = a;
    r.insert(r.end(), b.begin(), b.end());
    return sorted(std::move(r));
}

CharMultiset multiset_minus(const CharMultiset& a, const CharMultiset& b) {
    CharMultiset rest = a, pool = b;
    CharMultiset r;
    for (const auto& c : rest) {
        auto it = std::find(pool.begin(), pool.end(), c);
        if (it != pool.end()) {
            pool.erase(it);
        } else {
            r.push_back(c);
        }
    }
    return sorted(std::move(r));
}

CharMultiset multiset_intersection(const CharMultiset& a, const CharMultiset& b) {
    CharMultiset pool = b, r;
    for (const auto& c : a) {
        auto it = std::find(pool.begin(), pool.end(), c);
        if (it != pool.end()) {
            pool.erase(it);
            r.push_back(c);
        }
    }
    return sorted(std::move(r));
}

CharMultiset as_set(const CharMultiset& m) {
    CharMultiset r = sorted(m);
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::string str(const CharMultiset& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ", " : "") + m[i].str();
    return out + "}";
}

std::string pretty(const CharMultiset& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ", " : "") + m[i].pretty();
    return out + "}";
}

}  // namespace bessel
