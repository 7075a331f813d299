#include "bessel/gsp4.hpp"

#include <algorithm>
#include <array>

#include "bessel/error.hpp"

namespace bessel {

namespace {

Character n(int twice) { return Character::nu(twice); }

const Character kOne;

// Structural comparison, or relation-aware comparison with assumption logging.
struct Cmp {
    CharacterContext* ctx = nullptr;

    bool eq(const Character& a, const Character& b) const { return ctx ? ctx->eq(a, b) : a == b; }
    bool in(const CharMultiset& m, const Character& c) const {
        return std::any_of(m.begin(), m.end(), [&](const Character& x) { return eq(x, c); });
    }
};

struct TypeInfo {
    Type type;
    const char* name;
    bool generic;
    bool jp_zero;
};

constexpr std::array<TypeInfo, 27> kTypes{{
    {Type::I, "I", true, false},         {Type::IIa, "IIa", true, false},
    {Type::IIb, "IIb", false, false},    {Type::IIIa, "IIIa", true, false},
    {Type::IIIb, "IIIb", false, false},  {Type::IVa, "IVa", true, false},
    {Type::IVb, "IVb", false, false},    {Type::IVc, "IVc", false, false},
    {Type::IVd, "IVd", false, false},    {Type::Va, "Va", true, false},
    {Type::Vb, "Vb", false, false},      {Type::Vc, "Vc", false, false},
    {Type::Vd, "Vd", false, false},      {Type::VIa, "VIa", true, false},
    {Type::VIb, "VIb", false, false},    {Type::VIc, "VIc", false, false},
    {Type::VId, "VId", false, false},    {Type::VII, "VII", true, true},
    {Type::VIIIa, "VIIIa", true, true},  {Type::VIIIb, "VIIIb", false, true},
    {Type::IXa, "IXa", true, true},      {Type::IXb, "IXb", false, true},
    {Type::X, "X", true, false},         {Type::XIa, "XIa", true, false},
    {Type::XIb, "XIb", false, false},    {Type::CuspGeneric, "CuspGeneric", true, true},
    {Type::CuspNonGeneric, "CuspNonGeneric", false, true},
}};

const TypeInfo& info(Type t) { return kTypes[static_cast<std::size_t>(t)]; }

// Table of multisets in the normalization of the classification list (no twist).
DeltaSets raw_delta(const ReprSpec& s) {
    const Character& c1 = s.chi1;
    const Character& c2 = s.chi2;
    const Character& x = s.xi;
    const Character& w = s.omega_pi;
    DeltaSets d;
    switch (s.type) {
        case Type::I:
            d.delta = {kOne, c1, c2, c1 * c2};
            d.delta_tilde = d.delta0 = d.delta;
            d.delta_Q = {c1, c1.inverse(), c2, c2.inverse()};
            break;
        case Type::IIa:
            d.delta = {c1, n(1), c1.inverse()};
            d.delta_tilde = d.delta0 = d.delta;
            d.delta_Q = {c1 * n(1), c1.inverse() * n(1)};
            break;
        case Type::IIb:
            d.delta = {c1, n(-1), c1.inverse()};
            d.delta_tilde = d.delta;
            d.delta0 = {n(-1)};
            d.delta_Q = {c1 * n(-1), c1.inverse() * n(-1)};
            break;
        case Type::IIIa:
            d.delta = {n(1), c1 * n(1)};
            d.delta_tilde = d.delta0 = d.delta;
            d.delta_Q = {c1, c1.inverse(), n(2)};
            break;
        case Type::IIIb:
            d.delta = {n(-1), c1 * n(-1)};
            d.delta_tilde = d.delta0 = d.delta;
            d.delta_Q = {c1, c1.inverse(), n(-2)};
            break;
        case Type::IVa:
            d.delta = d.delta_tilde = d.delta0 = {n(3)};
            d.delta_Q = {n(4)};
            break;
        case Type::IVb:
            d.delta = d.delta_tilde = {n(3), n(-1)};
            d.delta0 = {n(-1)};
            d.delta_Q = {n(-4), n(2)};
            break;
        case Type::IVc:
            d.delta = d.delta_tilde = d.delta0 = {n(-3), n(1)};
            d.delta_Q = {n(4), n(-2)};
            break;
        case Type::IVd:
            d.delta = {n(-3)};
            d.tilde_defined = false;
            d.delta_Q = {n(-4)};
            break;
        case Type::Va:
            d.delta = d.delta_tilde = d.delta0 = {n(1), x * n(1)};
            d.delta_Q = {n(2) * x};
            break;
        case Type::Vb:
            d.delta = d.delta_tilde = {n(-1), x * n(1)};
            d.delta0 = {n(-1)};
            d.delta_Q = {x};
            break;
        case Type::Vc:
            // not in the multiset table: the chi_0-twist of Vb
            d.delta = d.delta_tilde = {x * n(-1), n(1)};
            d.delta0 = {x * n(-1)};
            d.delta_Q = {x};
            break;
        case Type::Vd:
            d.delta = {n(-1), x * n(-1)};
            d.tilde_defined = false;
            d.delta_Q = {n(-1) * x};
            break;
        case Type::VIa:
            d.delta = {n(1), n(1), n(1)};
            d.delta_tilde = d.delta0 = {n(1), n(1)};
            d.delta_Q = {n(2), kOne};
            break;
        case Type::VIb:
            d.delta = {n(1)};
            d.tilde_defined = false;
            d.delta_Q = {kOne};
            break;
        case Type::VIc:
            d.delta = d.delta_tilde = d.delta0 = {n(-1)};
            d.delta_Q = {kOne};
            break;
        case Type::VId:
            d.delta = {n(-1), n(-1), n(-1)};
            d.delta_tilde = {n(-1), n(-1)};
            d.delta0 = {n(-1)};
            d.delta_Q = {kOne, n(-2)};
            break;
        case Type::X:
            d.delta = d.delta_tilde = d.delta0 = {kOne, w};
            break;
        case Type::XIa:
            d.delta = d.delta_tilde = d.delta0 = {n(1)};
            break;
        case Type::XIb:
            d.delta = d.delta_tilde = d.delta0 = {n(-1)};
            break;
        default:
            d.tilde_defined = is_generic(s.type);
            break;
    }
    if (d.tilde_defined) d.delta1 = multiset_minus(d.delta_tilde, d.delta0);
    d.delta_plus = twist(d.delta0, n(1));
    d.delta_minus = twist(d.delta0, n(-1));
    auto sort_all = [](DeltaSets& e) {
        for (auto* m : {&e.delta, &e.delta_tilde, &e.delta0, &e.delta1, &e.delta_plus, &e.delta_minus,
                        &e.delta_Q})
            *m = sorted(*m);
    };
    sort_all(d);
    return d;
}

Character raw_omega(const ReprSpec& s) {
    switch (s.type) {
        case Type::I: return s.chi1 * s.chi2;
        case Type::IIIa:
        case Type::IIIb: return s.chi1;
        case Type::X: return s.omega_pi;
        default: return kOne;
    }
}

SiegelRow make_row(PiKind k, Character a, Character b, Character chi_pi, Character rp, Character rm,
                   std::vector<Type> kernel) {
    SiegelRow r;
    r.kind = k;
    r.a = std::move(a);
    r.b = std::move(b);
    r.chi_pi = std::move(chi_pi);
    r.rho_plus = std::move(rp);
    r.rho_minus = std::move(rm);
    r.kernel = std::move(kernel);
    return r;
}

SiegelRow cusp_row(Character central, std::string label, Character chi_pi, Character rp, Character rm,
                   std::vector<Type> kernel) {
    SiegelRow r = make_row(PiKind::Cusp, {}, {}, std::move(chi_pi), std::move(rp), std::move(rm),
                           std::move(kernel));
    r.cusp_omega = std::move(central);
    r.cusp_label = std::move(label);
    return r;
}

std::vector<SiegelRow> raw_rows(const ReprSpec& s) {
    const Character& c1 = s.chi1;
    const Character& c2 = s.chi2;
    const Character& x = s.xi;
    const Character& w = s.omega_pi;
    const Character i1 = c1.inverse();
    using K = PiKind;
    using T = Type;
    switch (s.type) {
        case T::I:
            return {make_row(K::PS, c1, c2, kOne, n(-1), n(1) * c1 * c2, {}),
                    make_row(K::PS, i1, c2, c1, n(-1) * c1, n(1) * c2, {}),
                    make_row(K::PS, c1, c2.inverse(), c2, n(-1) * c2, n(1) * c1, {}),
                    make_row(K::PS, i1, c2.inverse(), c1 * c2, n(-1) * c1 * c2, n(1), {})};
        case T::IIa:
            return {make_row(K::Sp, c1, {}, i1, n(-1) * i1, n(1) * c1, {}),
                    make_row(K::Sp, i1, {}, c1, n(-1) * c1, n(1) * i1, {}),
                    make_row(K::PS, n(-1) * c1, n(-1) * i1, n(1), kOne, kOne, {T::IIb})};
        case T::IIb:
            return {make_row(K::OneDim, c1, {}, i1, n(-1) * i1, n(1) * c1, {}),
                    make_row(K::OneDim, i1, {}, c1, n(-1) * c1, n(1) * i1, {}),
                    make_row(K::PS, n(1) * c1, n(1) * i1, n(-1), n(-2), n(2), {T::IIa})};
        case T::IIIa:
            return {make_row(K::PS, i1, n(-2), n(1) * c1, c1, kOne, {T::IIIb}),
                    make_row(K::PS, c1, n(-2), n(1), kOne, c1, {T::IIIb})};
        case T::IIIb:
            return {make_row(K::PS, i1, n(2), n(-1) * c1, n(-2) * c1, n(2), {T::IIIa}),
                    make_row(K::PS, c1, n(2), n(-1), n(-2), n(2) * c1, {T::IIIa})};
        case T::IVa:
            return {make_row(K::Sp, n(-3), {}, n(3), n(2), n(-2), {T::IVc})};
        case T::IVb:
            return {make_row(K::OneDim, n(-3), {}, n(3), n(2), n(-2), {T::IVd}),
                    make_row(K::PS, n(4), n(-2), n(-1), n(-2), n(2), {T::IVa, T::IVc, T::IVd})};
        case T::IVc:
            return {make_row(K::Sp, n(3), {}, n(-3), n(-4), n(4), {T::IVa}),
                    make_row(K::PS, n(-4), n(2), n(1), kOne, kOne, {T::IVa, T::IVb, T::IVd})};
        case T::IVd:
            return {make_row(K::OneDim, n(3), {}, n(-3), n(-4), n(4), {T::IVb})};
        case T::Va:
            return {make_row(K::Sp, n(-1) * x, {}, n(1), kOne, kOne, {T::Vb}),
                    make_row(K::Sp, n(-1) * x, {}, x * n(1), x, x, {T::Vc})};
        case T::Vb:
            return {make_row(K::Sp, n(1) * x, {}, n(-1), n(-2), n(2), {T::Va}),
                    make_row(K::OneDim, n(-1) * x, {}, n(1) * x, x, x, {T::Vd})};
        case T::Vc:
            return {make_row(K::Sp, n(1) * x, {}, n(-1) * x, n(-2) * x, n(2) * x, {T::Va}),
                    make_row(K::OneDim, n(-1) * x, {}, n(1), kOne, kOne, {T::Vd})};
        case T::Vd:
            return {make_row(K::OneDim, n(1) * x, {}, n(-1) * x, n(-2) * x, n(2) * x, {T::Vb}),
                    make_row(K::OneDim, n(1) * x, {}, n(-1), n(-2), n(2), {T::Vc})};
        case T::VIa:
            return {make_row(K::Sp, n(-1), {}, n(1), kOne, kOne, {T::VIc})};
        case T::VIb:
            return {make_row(K::OneDim, n(-1), {}, n(1), kOne, kOne, {T::VId})};
        case T::VIc:
            return {make_row(K::Sp, n(1), {}, n(-1), n(-2), n(2), {T::VIa})};
        case T::VId:
            return {make_row(K::OneDim, n(1), {}, n(-1), n(-2), n(2), {T::VIb})};
        case T::X:
            return {cusp_row(w, "π_c", kOne, n(-1), n(1) * w, {}),
                    cusp_row(w.inverse(), "π_c^∨", w, n(-1) * w, n(1), {})};
        case T::XIa:
            return {cusp_row(n(-2), "ν^{-1/2}π_c", n(1), kOne, kOne, {T::XIb})};
        case T::XIb:
            return {cusp_row(n(2), "ν^{1/2}π_c", n(-1), n(-2), n(2), {T::XIa})};
        default:
            throw NoSiegelData(type_name(s.type) + " has vanishing Siegel-Jacquet module");
    }
}

void require_valid(const ReprSpec& s, CharacterContext* ctx) {
    for (const auto& v : validate(s, ctx))
        if (!v.convention) throw InvalidSpec(type_name(s.type) + ": violates " + v.condition);
}

// exceptional-case analysis in normalized coordinates
ExceptionalResult exceptional_normalized(const ReprSpec& s, const Character& rho_n, const Cmp& cmp) {
    const DeltaSets d = raw_delta(s);
    const Character omega = raw_omega(s);
    std::vector<Character> cands{rho_n};
    const Character star = involution(omega, rho_n);
    if (!cmp.eq(star, rho_n)) cands.push_back(star);
    std::vector<Character> outside_plus;
    for (const auto& r : cands)
        if (!cmp.in(d.delta_plus, r)) outside_plus.push_back(r);
    if (outside_plus.empty())
        throw InvalidSpec("both " + rho_n.str() + " and its partner lie in Delta_+ of " + type_name(s.type));
    for (const auto& r : outside_plus)
        if (!cmp.in(d.delta_minus, r)) return {ExceptionalCase::NonExceptional, r};
    const Character& r = outside_plus.front();
    if (s.type == Type::IIIa) return {ExceptionalCase::IIIaSpecial, r};
    if (cmp.eq(r, involution(omega, r))) return {ExceptionalCase::Extraordinary, r};
    if (cmp.in(involution(omega, d.delta_plus), r)) return {ExceptionalCase::FullyInducedNonOrdinary, r};
    throw InvalidSpec("no exceptional case applies to " + type_name(s.type) + " at " + rho_n.str());
}

bool is_one(const Cmp& cmp, const Character& c) { return cmp.eq(c, kOne); }

// finite modules for pairs without a split model
CharMultiset degree_zero_chars(const ReprSpec& s, const Character& rho_n, const Cmp& cmp) {
    switch (s.type) {
        case Type::IVd: return is_one(cmp, rho_n) ? CharMultiset{n(-3)} : CharMultiset{};
        case Type::Vd:
            if (is_one(cmp, rho_n)) return {s.xi * n(-1)};
            if (cmp.eq(rho_n, s.xi)) return {n(-1)};
            return {};
        case Type::VIb: return is_one(cmp, rho_n) ? CharMultiset{n(1)} : CharMultiset{};
        default: return raw_delta(s).delta0;
    }
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<Type>& all_types() {
    static const std::vector<Type> types = [] {
        std::vector<Type> v;
        for (const auto& t : kTypes) v.push_back(t.type);
        return v;
    }();
    return types;
}

std::string type_name(Type t) { return info(t).name; }

Type parse_type(const std::string& s) {
    for (const auto& t : kTypes)
        if (s == t.name) return t.type;
    throw ParseError("unknown representation type '" + s + "'");
}

bool is_generic(Type t) { return info(t).generic; }
bool jacquet_vanishes(Type t) { return info(t).jp_zero; }
int whittaker_multiplicity(Type t) { return is_generic(t) ? 1 : 0; }

ReprSpec from_sally_tadic(Type t, const Character& chi1, const Character& chi2, const Character& sigma,
                          const Character& xi, const Character& omega_pi) {
    ReprSpec s{t, chi1, chi2, xi, omega_pi, sigma};
    if (t == Type::IIa || t == Type::IIb) s.sigma = chi1 * sigma;
    return s;
}

Character sally_tadic_sigma(const ReprSpec& s) {
    if (s.type == Type::IIa || s.type == Type::IIb) return s.sigma / s.chi1;
    return s.sigma;
}

std::vector<Violation> validate(const ReprSpec& s, CharacterContext* ctx) {
    Cmp cmp{ctx};
    std::vector<Violation> out;
    auto must_differ = [&](const Character& a, const Character& b, const std::string& text, bool conv = false) {
        if (cmp.eq(a, b)) out.push_back({text, conv});
    };
    const Character& c1 = s.chi1;
    const Character& c2 = s.chi2;
    switch (s.type) {
        case Type::I: {
            const std::pair<Character, const char*> cs[] = {
                {c1, "χ₁"}, {c2, "χ₂"}, {c1 * c2, "χ₁χ₂"}, {c1 / c2, "χ₁χ₂^{-1}"}};
            for (const auto& [c, name] : cs) {
                must_differ(c, n(2), std::string(name) + " ≠ ν");
                must_differ(c, n(-2), std::string(name) + " ≠ ν^{-1}");
            }
            break;
        }
        case Type::IIa:
        case Type::IIb:
            must_differ(c1 * c1, n(2), "χ₁² ≠ ν");
            must_differ(c1 * c1, n(-2), "χ₁² ≠ ν^{-1}");
            must_differ(c1, n(3), "χ₁ ≠ ν^{3/2}");
            must_differ(c1, n(-3), "χ₁ ≠ ν^{-3/2}");
            break;
        case Type::IIIa:
        case Type::IIIb:
            must_differ(c1, kOne, "χ₁ ≠ 1");
            must_differ(c1, n(4), "χ₁ ≠ ν^2");
            must_differ(c1, n(-4), "χ₁ ≠ ν^{-2}");
            // normalization |chi_1| = nu^s, s >= 0; the combinatorics lemmas allow it
            must_differ(c1, n(-2), "χ₁ ≠ ν^{-1}", true);
            break;
        case Type::Va:
        case Type::Vb:
        case Type::Vc:
        case Type::Vd:
            if (!cmp.eq(s.xi * s.xi, kOne)) out.push_back({"χ₀² = 1", false});
            must_differ(s.xi, kOne, "χ₀ ≠ 1");
            break;
        case Type::X:
            must_differ(s.omega_pi, n(2), "ω_π ≠ ν");
            must_differ(s.omega_pi, n(-2), "ω_π ≠ ν^{-1}");
            break;
        case Type::XIa:
        case Type::XIb:
            if (!cmp.eq(s.omega_pi, kOne)) out.push_back({"ω_π = 1", false});
            break;
        default:
            break;
    }
    return out;
}

Character central_character(const ReprSpec& s) { return raw_omega(s) * s.sigma * s.sigma; }

DeltaSets delta_sets(const ReprSpec& s) {
    DeltaSets d = raw_delta(s);
    // Delta_Q is unchanged: its elements are the Klingen characters chi' with
    // omega = chi' omega_tau, and a twist moves sigma into omega_tau only.
    for (auto* m : {&d.delta, &d.delta_tilde, &d.delta0, &d.delta1, &d.delta_plus, &d.delta_minus})
        *m = sorted(twist(*m, s.sigma));
    return d;
}

SplitExistence has_split_bessel(const ReprSpec& s, const Character& rho, CharacterContext* ctx) {
    if (is_generic(s.type)) return {true, 1};
    Cmp cmp{ctx};
    if (cmp.in(raw_delta(s).delta_plus, rho / s.sigma)) return {true, 1};
    return {false, 0};
}

Character SiegelRow::pi_central() const {
    switch (kind) {
        case PiKind::PS: return a * b;
        case PiKind::Sp:
        case PiKind::OneDim: return a * a;
        case PiKind::Cusp: return cusp_omega;
    }
    return {};
}

std::string SiegelRow::sigma_pi_text() const {
    std::string pi;
    switch (kind) {
        case PiKind::PS: pi = "(" + a.pretty() + " × " + b.pretty() + ")"; break;
        case PiKind::Sp: pi = "Sp(" + a.pretty() + ")"; break;
        case PiKind::OneDim: pi = "(" + a.pretty() + "∘det)"; break;
        case PiKind::Cusp: pi = cusp_label; break;
    }
    return pi + " ⊠ " + chi_pi.pretty();
}

std::vector<SiegelRow> siegel_data(const ReprSpec& s) {
    auto rows = raw_rows(s);
    for (auto& r : rows) {
        r.chi_pi *= s.sigma;
        r.rho_plus *= s.sigma;
        r.rho_minus *= s.sigma;
    }
    return rows;
}

std::size_t list_row(Type t) {
    if (jacquet_vanishes(t)) throw NoSiegelData(type_name(t) + " has vanishing Siegel-Jacquet module");
    return (t == Type::IIIb || t == Type::Vd) ? 1 : 0;
}

std::string pair_class_name(PairClass c) {
    switch (c) {
        case PairClass::Ordinary: return "Ordinary";
        case PairClass::NonOrdinary: return "NonOrdinary";
        case PairClass::Extraordinary: return "Extraordinary";
    }
    return "?";
}

PairClass classify_pair(const SiegelRow& row, const Character& omega, const Character& rho,
                        CharacterContext* ctx) {
    Cmp cmp{ctx};
    const Character rp = n(-1) * row.chi_pi;
    const Character rm = involution(omega, rp);
    const bool hp = cmp.eq(rho, rp), hm = cmp.eq(rho, rm);
    if (row.kind == PiKind::OneDim || (!hp && !hm)) return PairClass::Ordinary;
    if (hp && hm) return PairClass::Extraordinary;
    return PairClass::NonOrdinary;
}

FiltrationReport bessel_filtration(const SiegelRow& row, const Character& omega, const Character& rho,
                                   CharacterContext* ctx) {
    Cmp cmp{ctx};
    FiltrationReport f;
    const Character& chi = row.chi_pi;
    const Character rp = n(-1) * chi;
    f.m_index = (cmp.eq(rho, rp) ? 1 : 0) + (cmp.eq(rho, involution(omega, rp)) ? 1 : 0);
    const bool one_dim = row.kind == PiKind::OneDim;
    const bool on_line = one_dim && cmp.eq(rho, row.a * chi);
    const bool off = one_dim && !on_line;

    const TSModule e_chi = universal_extension(TModule::semisimple({chi}));
    const TSModule star = TSModule::finite(TModule::semisimple({omega / chi}));
    f.i3 = off ? TSModule{} : e_chi;
    f.i0 = off ? TSModule{} : star;

    TSModule piece;
    switch (row.kind) {
        case PiKind::PS:
            f.i2_ss = {row.a * chi, row.b * chi};
            piece = universal_extension(TModule::cyclic_from(f.i2_ss));
            break;
        case PiKind::Sp:
            f.i2_ss = {n(1) * row.a * chi};
            piece = universal_extension(TModule::semisimple(f.i2_ss));
            break;
        case PiKind::OneDim:
            f.i2_ss = {n(-1) * row.a * chi};
            piece = TSModule::finite(TModule::semisimple(f.i2_ss));
            break;
        case PiKind::Cusp:
            piece = TSModule::S();
            break;
    }
    f.i2_ss = sorted(f.i2_ss);
    for (int i = 0; i < f.m_index; ++i) f.i1 = direct_sum(f.i1, piece);

    f.beta_upper_i3 = on_line ? e_chi : TSModule{};
    f.beta_upper_i1 = f.i1;
    f.beta_upper_i0 = on_line ? star : TSModule{};
    return f;
}

std::string exceptional_case_name(ExceptionalCase c) {
    switch (c) {
        case ExceptionalCase::NonExceptional: return "NonExceptional";
        case ExceptionalCase::FullyInducedNonOrdinary: return "FullyInducedNonOrdinary";
        case ExceptionalCase::Extraordinary: return "Extraordinary";
        case ExceptionalCase::IIIaSpecial: return "IIIaSpecial";
    }
    return "?";
}

ExceptionalResult exceptional_case(const ReprSpec& s, const Character& rho, CharacterContext* ctx) {
    if (!is_generic(s.type)) throw NotGeneric(type_name(s.type) + " is not generic");
    ExceptionalResult r = exceptional_normalized(s, rho / s.sigma, Cmp{ctx});
    r.representative *= s.sigma;
    return r;
}

TSModule bessel_module(const ReprSpec& s, const Character& rho, CharacterContext* ctx) {
    require_valid(s, ctx);
    Cmp cmp{ctx};
    const bool generic = is_generic(s.type);
    if (jacquet_vanishes(s.type)) return generic ? TSModule::S() : TSModule{};

    const Character rho_n = rho / s.sigma;
    const DeltaSets d = raw_delta(s);
    if (!generic && !cmp.in(d.delta_plus, rho_n)) {
        auto chars = degree_zero_chars(s, rho_n, cmp);
        return twist_ts(TSModule::finite(TModule::semisimple(chars)), s.sigma);
    }

    const TModule x = TModule::cyclic_from(d.delta_tilde);
    TSModule out;
    if (!generic) {
        out = universal_extension(x);
    } else {
        const ExceptionalResult ex = exceptional_normalized(s, rho_n, cmp);
        const bool kernel = ex.which == ExceptionalCase::Extraordinary ||
                            ex.which == ExceptionalCase::FullyInducedNonOrdinary;
        if (!kernel) {
            out = universal_extension(x);
        } else if (s.type == Type::VIa) {
            // two ν^{1/2}-blocks; the critical one is cut off entirely
            out = fiber_ext(TModule::semisimple(d.delta_tilde), {0, 1});
        } else {
            out = fiber_ext_kernel(x, TModule({{n(1) * ex.representative, 1}}));
        }
    }
    return twist_ts(out, s.sigma);
}

TSModule beta_upper(const ReprSpec& s, const Character& rho, CharacterContext* ctx) {
    require_valid(s, ctx);
    Cmp cmp{ctx};
    if (is_generic(s.type) || jacquet_vanishes(s.type)) return {};
    const Character rho_n = rho / s.sigma;
    const DeltaSets d = raw_delta(s);
    TSModule out;
    if (cmp.in(d.delta_plus, rho_n)) {
        out = universal_extension(TModule::cyclic_from(d.delta1));
    } else {
        CharMultiset chars;
        if (s.type == Type::IVd || s.type == Type::Vd || s.type == Type::VIb)
            chars = degree_zero_chars(s, rho_n, cmp);
        out = TSModule::finite(TModule::semisimple(chars));
    }
    return twist_ts(out, s.sigma);
}

CharMultiset regular_lfactor_characters(const ReprSpec& s) {
    const Character& c = s.chi1;
    const Character& c2 = s.chi2;
    const Character& x = s.xi;
    const Character& w = s.omega_pi;
    const Character sg = sally_tadic_sigma(s);
    CharMultiset out;
    switch (s.type) {
        case Type::I: out = {sg, c * sg, c2 * sg, c * c2 * sg}; break;
        case Type::IIa: out = {sg, c * c * sg, n(1) * c * sg}; break;
        case Type::IIb: out = {sg, c * c * sg, n(-1) * c * sg}; break;
        case Type::IIIa: out = {n(1) * c * sg, n(1) * sg}; break;
        case Type::IIIb: out = {n(-1) * c * sg, n(-1) * sg, n(1) * c * sg, n(1) * sg}; break;
        case Type::IVa: out = {n(3) * sg}; break;
        case Type::IVb: out = {n(3) * sg, n(-1) * sg}; break;
        case Type::IVc: out = {n(1) * sg, n(-3) * sg, n(3) * sg}; break;
        case Type::Va: out = {n(1) * sg, n(1) * x * sg}; break;
        case Type::Vb: out = {n(-1) * sg, n(1) * x * sg}; break;
        case Type::Vc: out = {n(1) * sg, n(-1) * x * sg}; break;
        case Type::VIa: out = {n(1) * sg, n(1) * sg}; break;
        case Type::VIc: out = {n(-1) * sg}; break;
        case Type::VId: out = {n(-1) * sg, n(-1) * sg}; break;
        case Type::X: out = {sg, w * sg}; break;
        case Type::XIa: out = {n(1) * sg}; break;
        case Type::XIb: out = {n(-1) * sg}; break;
        default: break;
    }
    return sorted(out);
}

LFactorProduct regular_lfactor(const ReprSpec& s, const Character& rho, const Character& mu,
                               CharacterContext* ctx) {
    require_valid(s, ctx);
    if (!has_split_bessel(s, rho, ctx).exists)
        throw NoBesselModel(type_name(s.type) + " has no split Bessel model at ρ = " + rho.pretty());
    return lfactor_of_chars(twist(regular_lfactor_characters(s), mu));
}

LFactorProduct kl_lfactor(const ReprSpec& s, const Character& rho, const Character& mu,
                          CharacterContext* ctx) {
    if (!has_split_bessel(s, rho, ctx).exists)
        throw NoBesselModel(type_name(s.type) + " has no split Bessel model at ρ = " + rho.pretty());
    // the stored module is delta_P^{-1/2}-normalized, which absorbs the s - 3/2 shift
    return twist(lfactor_of(kirillov_quotient(bessel_module(s, rho, ctx))), mu);
}

LFactorProduct subregular_quotient(const ReprSpec& s, const Character& rho, const Character& mu,
                                   CharacterContext* ctx) {
    const LFactorProduct reg = regular_lfactor(s, rho, mu, ctx);
    const LFactorProduct kl = kl_lfactor(s, rho, mu, ctx);
    if (!divides(kl, reg))
        throw DivisibilityFailure(kl.pretty() + " does not divide " + reg.pretty() + " for " +
                                  type_name(s.type));
    return divide(reg, kl);
}

}  // namespace bessel
