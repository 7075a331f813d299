#include "bessel/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bessel/error.hpp"

namespace bessel {

FiniteModel::FiniteModel(int N, int B) : n_(N), b_(B), m_(std::lcm(N, 2)) {
    if (N < 2) throw InvalidSpec("finite model needs N >= 2");
    if (B < 4) throw InvalidSpec("finite model needs B >= 4");
    zeta_ = Character::generator("zeta", m_, true);
    xi_ = zeta_.pow(m_ / 2);
}

std::vector<Character> FiniteModel::elements(int bound) const {
    std::vector<Character> out;
    for (int k = -2 * bound; k <= 2 * bound; ++k)
        for (int j = 0; j < m_; ++j) out.push_back(Character::nu(k) * zeta_.pow(j));
    return out;
}

namespace {

constexpr std::size_t kStoredPerCheck = 5;

class Recorder {
public:
    explicit Recorder(Report& r) : r_(r) {}

    void ran(const std::string& check) { ++r_.checks[check]; }
    void expect(bool ok, const std::string& check, const std::string& instance, const std::string& detail) {
        ran(check);
        if (ok) return;
        ++r_.failure_count;
        if (stored_[check]++ < kStoredPerCheck) r_.failures.push_back({check, instance, detail});
    }
    void listed(const std::string& key) { r_.witnesses.emplace(key, 0); }
    void witness(const std::string& key) { ++r_.witnesses[key]; }
    void finish() {
        for (const auto& [k, n] : r_.witnesses)
            if (n == 0) r_.unwitnessed.push_back(k);
    }

private:
    Report& r_;
    std::map<std::string, std::size_t> stored_;
};

bool in(const CharMultiset& m, const Character& c) { return contains(m, c); }

std::string set_text(const CharMultiset& m) { return str(sorted(m)); }

std::string describe(const ReprSpec& s) {
    std::string out = type_name(s.type);
    switch (s.type) {
        case Type::I: out += " chi1=" + s.chi1.str() + " chi2=" + s.chi2.str(); break;
        case Type::IIa:
        case Type::IIb:
        case Type::IIIa:
        case Type::IIIb: out += " chi1=" + s.chi1.str(); break;
        case Type::Va:
        case Type::Vb:
        case Type::Vc:
        case Type::Vd: out += " xi=" + s.xi.str(); break;
        case Type::X:
        case Type::XIa:
        case Type::XIb: out += " omega_pi=" + s.omega_pi.str(); break;
        default: break;
    }
    if (!s.sigma.trivial()) out += " sigma=" + s.sigma.str();
    return out;
}

bool has_convention_violation(const ReprSpec& s) {
    auto v = validate(s);
    return std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.convention; });
}

bool valid_up_to_convention(const ReprSpec& s) {
    auto v = validate(s);
    return std::all_of(v.begin(), v.end(), [](const Violation& x) { return x.convention; });
}

std::vector<ReprSpec> instantiations(Type t, const FiniteModel& m) {
    const auto el = m.elements();
    std::vector<ReprSpec> out;
    auto add = [&](ReprSpec s) {
        s.type = t;
        if (valid_up_to_convention(s)) out.push_back(std::move(s));
    };
    switch (t) {
        case Type::I:
            for (const auto& a : el)
                for (const auto& b : el) add({t, a, b, {}, {}, {}});
            break;
        case Type::IIa:
        case Type::IIb:
        case Type::IIIa:
        case Type::IIIb:
            for (const auto& a : el) add({t, a, {}, {}, {}, {}});
            break;
        case Type::Va:
        case Type::Vb:
        case Type::Vc:
        case Type::Vd:
            for (const auto& x : el) add({t, {}, {}, x, {}, {}});
            break;
        case Type::X:
            for (const auto& w : el) add({t, {}, {}, {}, w, {}});
            break;
        default:
            add({t, {}, {}, {}, {}, {}});
            break;
    }
    return out;
}

// rho -> rho* acts transitively on the underlying set
bool single_orbit(const CharMultiset& m, const Character& omega) {
    const CharMultiset s = as_set(m);
    if (s.empty()) return true;
    return std::all_of(s.begin(), s.end(),
                       [&](const Character& b) { return b == s[0] || b == involution(omega, s[0]); });
}

// sigma_Pi ≅ omega ⊗ sigma_Pi^∨, i.e. chi_Pi^2 = omega and pi ≅ pi^∨
bool self_dual_twist(const SiegelRow& row, const Character& omega) {
    if (row.chi_pi * row.chi_pi != omega) return false;
    switch (row.kind) {
        case PiKind::PS: return multiset_equal({row.a, row.b}, {row.a.inverse(), row.b.inverse()});
        case PiKind::Sp:
        case PiKind::OneDim: return row.a == row.a.inverse();
        case PiKind::Cusp: return false;
    }
    return false;
}

// the four alternatives of the exceptional-case corollary, read literally
std::vector<ExceptionalCase> alternatives(const ReprSpec& s, const DeltaSets& d, const Character& omega,
                                          const Character& c) {
    std::vector<ExceptionalCase> out;
    const Character h = Character::nu(-1);
    if (!in(d.delta_plus, c) && !in(d.delta_minus, c)) out.push_back(ExceptionalCase::NonExceptional);
    CharMultiset listed;
    if (s.type == Type::I) listed = {h, h * s.chi1, h * s.chi2, h * s.chi1 * s.chi2};
    if (s.type == Type::IIa) listed = {h * s.chi1, h * s.chi1.inverse()};
    if (s.type == Type::X) listed = {h, h * s.omega_pi};
    if (in(listed, c)) out.push_back(ExceptionalCase::FullyInducedNonOrdinary);
    const bool extra_type =
        s.type == Type::IIa || s.type == Type::Va || s.type == Type::VIa || s.type == Type::XIa;
    if (extra_type && c == involution(omega, c) && in(d.delta_minus, c))
        out.push_back(ExceptionalCase::Extraordinary);
    if (s.type == Type::IIIa && in(multiset_intersection(d.delta_minus, involution(omega, d.delta_minus)), c))
        out.push_back(ExceptionalCase::IIIaSpecial);
    return out;
}

void check_instance(const ReprSpec& s, const FiniteModel& model, Recorder& rec) {
    const std::string inst = describe(s);
    const DeltaSets d = delta_sets(s);
    const Character w = central_character(s);
    const Character one;
    const Character nu = Character::nu(2);
    const Character nu_inv = Character::nu(-2);
    const CharMultiset plus_star = involution(w, d.delta_plus);
    const CharMultiset minus_star = involution(w, d.delta_minus);
    const bool generic = is_generic(s.type);

    // Delta_+ against its partner
    if (generic) {
        auto x = multiset_intersection(d.delta_plus, plus_star);
        rec.expect(x.empty(), "intersection--*", inst, "Delta_+ ∩ Delta_+* = " + set_text(x));
    } else {
        rec.expect(multiset_equal(d.delta_plus, plus_star) && single_orbit(d.delta_plus, w), "intersection--*",
                   inst, "Delta_+ = " + set_text(d.delta_plus) + ", Delta_+* = " + set_text(plus_star));
    }

    // Delta_- ∩ Delta_+
    {
        CharMultiset expected;
        std::string key;
        const bool three = s.type == Type::IIIa || s.type == Type::IIIb;
        if (three && s.chi1 == nu) {
            expected = {s.type == Type::IIIa ? nu : one};
            key = type_name(s.type) + " chi1=nu";
        } else if (three && s.chi1 == nu_inv) {
            expected = {s.type == Type::IIIa ? one : nu_inv};
            key = type_name(s.type) + " chi1=nu^-1";
        }
        auto x = sorted(multiset_intersection(d.delta_minus, d.delta_plus));
        rec.expect(x == sorted(expected), "intersection_+-", inst,
                   "got " + set_text(x) + ", expected " + set_text(expected));
        if (!key.empty() && x == sorted(expected)) rec.witness("intersection_+-: " + key);
    }

    // Delta_- ∩ Delta_-*
    {
        CharMultiset expected;
        switch (s.type) {
            case Type::IIa:
            case Type::IVc:
            case Type::XIa: expected = {one}; break;
            case Type::IIIa: expected = {one, s.chi1}; break;
            case Type::Va: expected = {one, s.xi}; break;
            case Type::VIa: expected = {one, one}; break;
            default: break;
        }
        auto x = sorted(multiset_intersection(d.delta_minus, minus_star));
        rec.expect(x == sorted(expected), "exceptional++*", inst,
                   "got " + set_text(x) + ", expected " + set_text(expected));
        if (!expected.empty() && x == sorted(expected)) rec.witness("exceptional++*: " + type_name(s.type));
    }

    // Delta_- ∩ Delta_+*
    for (const auto& rho : as_set(d.delta_minus)) {
        const Character h = Character::nu(1) * rho;
        if (in(plus_star, rho) && !in(minus_star, rho) && !in(d.delta_plus, rho)) {
            CharMultiset listed;
            if (s.type == Type::I) listed = {one, s.chi1, s.chi2, s.chi1 * s.chi2};
            if (s.type == Type::IIa) listed = {s.chi1, s.chi1.inverse()};
            if (s.type == Type::X) listed = {one, s.omega_pi};
            const bool ok = in(listed, h);
            rec.expect(ok, "exceptional+-*", inst, "rho=" + rho.str() + " not in the listed cases");
            if (ok) rec.witness("exceptional+-*: " + type_name(s.type));
        } else {
            rec.ran("exceptional+-*");
        }
        if (in(minus_star, rho) && in(d.delta_plus, rho)) {
            const bool a = s.type == Type::IIIa && s.chi1 == nu && rho == nu;
            const bool b = s.type == Type::IIIa && s.chi1 == nu_inv && rho == one;
            rec.expect(a || b, "exceptional+-*", inst, "triple intersection at rho=" + rho.str());
            if (a) rec.witness("exceptional+-*: IIIa (chi1,rho)=(nu,nu)");
            if (b) rec.witness("exceptional+-*: IIIa (chi1,rho)=(nu^-1,1)");
        }
    }

    // exceptional-case corollary over every rho of the model
    if (generic) {
        // outside Delta_+ ∪ Delta_- and their partners only the first alternative can hold;
        // a neighbourhood of 1 stands in for those characters
        CharMultiset rhos = multiset_union(multiset_union(d.delta_plus, d.delta_minus), multiset_union(plus_star, minus_star));
        for (const auto& c : model.elements(1)) rhos.push_back(c);
        for (const auto& rho : as_set(rhos)) {
            const Character star = involution(w, rho);
            bool exists = false;
            for (const auto& c : {rho, star}) {
                auto alt = alternatives(s, d, w, c);
                if (alt.size() == 1 && !in(d.delta_plus, c)) exists = true;
            }
            std::string where = inst + " rho=" + rho.str();
            rec.expect(exists, "comb_cases2", where, "no orbit representative satisfies exactly one case");
            try {
                auto er = exceptional_case(s, rho);
                const Character& r = er.representative;
                auto alt = alternatives(s, d, w, r);
                bool ok = (r == rho || r == star) && !in(d.delta_plus, r) && alt.size() == 1 && alt[0] == er.which;
                rec.expect(ok, "comb_cases2", where,
                           "engine picked " + exceptional_case_name(er.which) + " at " + r.str());
                if (ok && er.which != ExceptionalCase::NonExceptional)
                    rec.witness("comb_cases2: " + exceptional_case_name(er.which) + " " + type_name(s.type));
            } catch (const Error& e) {
                rec.expect(false, "comb_cases2", where, std::string(e.kind()) + ": " + e.what());
            }
        }
    }

    // Siegel pairs with an irreducible kernel
    if (generic && !jacquet_vanishes(s.type) && !has_convention_violation(s)) {
        for (const auto& row : siegel_data(s)) {
            const Character rp = Character::nu(-1) * row.chi_pi;
            const Character rm = involution(w, rp);
            rec.expect(rp == row.rho_plus && rm == row.rho_minus, "siegel_rho", inst,
                       "row " + row.sigma_pi_text() + " rho_pm mismatch");
            if (row.kind == PiKind::OneDim || row.kernel.size() != 1 || self_dual_twist(row, w)) continue;
            ReprSpec xi_spec = s;
            xi_spec.type = row.kernel[0];
            const CharMultiset got = as_set(delta_sets(xi_spec).delta_plus);
            const CharMultiset want = as_set({rp, rm});
            const CharMultiset dual = {Character::nu(-1) * w / row.chi_pi, Character::nu(1) * row.chi_pi};
            const bool ok = got == want && multiset_intersection(want, as_set(dual)).empty();
            rec.expect(ok, "combinatoric", inst,
                       "Delta_+(Xi) = " + set_text(got) + ", rho_pm = " + set_text(want) + ", dual " + set_text(dual));
        }
    }

    // the normalization |chi_1| = nu^s, s >= 0 is ambiguous for unitary chi_1:
    // (chi_1, sigma) and (chi_1^-1, chi_1 sigma) describe the same representation
    if ((s.type == Type::IIIa || s.type == Type::IIIb) && s.chi1.nu2() == 0) {
        ReprSpec alt = s;
        alt.chi1 = s.chi1.inverse();
        alt.sigma = s.sigma * s.chi1;
        const DeltaSets da = delta_sets(alt);
        bool ok = central_character(alt) == w && multiset_equal(da.delta, d.delta) &&
                  multiset_equal(da.delta0, d.delta0) && multiset_equal(da.delta_tilde, d.delta_tilde) &&
                  multiset_equal(da.delta_Q, d.delta_Q);
        for (const auto& rho : rho_panel(s, Character::nu(2 * model.B() + 2))) {
            if (!ok) break;
            ok = has_split_bessel(s, rho).exists == has_split_bessel(alt, rho).exists &&
                 bessel_module(s, rho) == bessel_module(alt, rho) && beta_upper(s, rho) == beta_upper(alt, rho);
            if (ok && has_split_bessel(s, rho).exists)
                ok = regular_lfactor(s, rho, {}) == regular_lfactor(alt, rho, {});
        }
        rec.expect(ok, "iiia_convention", inst, "the two normalizations disagree");
        if (ok) rec.witness("iiia_convention: " + type_name(s.type) + " unitary chi1");
    }
}

}  // namespace

Report check_combinatorics(const FiniteModel& model) {
    Report rep;
    rep.suite = "combinatorics";
    rep.model = std::to_string(model.N()) + "," + std::to_string(model.B());
    Recorder rec(rep);
    for (const char* k : {"IIIa chi1=nu", "IIIa chi1=nu^-1", "IIIb chi1=nu", "IIIb chi1=nu^-1"})
        rec.listed(std::string("intersection_+-: ") + k);
    for (const char* k : {"IIa", "IIIa", "IVc", "Va", "VIa", "XIa"}) rec.listed(std::string("exceptional++*: ") + k);
    for (const char* k : {"I", "IIa", "X", "IIIa (chi1,rho)=(nu,nu)", "IIIa (chi1,rho)=(nu^-1,1)"})
        rec.listed(std::string("exceptional+-*: ") + k);
    for (const char* k : {"FullyInducedNonOrdinary I", "FullyInducedNonOrdinary IIa", "FullyInducedNonOrdinary X",
                          "Extraordinary IIa", "Extraordinary Va", "Extraordinary VIa", "Extraordinary XIa",
                          "IIIaSpecial IIIa"})
        rec.listed(std::string("comb_cases2: ") + k);
    rec.listed("iiia_convention: IIIa unitary chi1");
    rec.listed("iiia_convention: IIIb unitary chi1");

    for (Type t : all_types())
        for (const auto& s : instantiations(t, model)) check_instance(s, model, rec);
    rec.finish();
    return rep;
}

// ---------------------------------------------------------------------------

CharacterContext symbolic_context() {
    CharacterContext ctx;
    ctx.declare_text(
        "chi1 order=inf ramified=false\n"
        "chi2 order=inf ramified=false\n"
        "xi order=2 ramified=false\n"
        "omega_pi order=inf ramified=false\n"
        "sigma order=inf ramified=false\n"
        "r order=inf ramified=false\n"
        "mu order=inf ramified=false\n");
    return ctx;
}

ReprSpec symbolic_spec(Type t, const CharacterContext& ctx) {
    ReprSpec s;
    s.type = t;
    s.chi1 = ctx.gen("chi1");
    s.chi2 = ctx.gen("chi2");
    s.xi = ctx.gen("xi");
    s.omega_pi = (t == Type::XIa || t == Type::XIb) ? Character{} : ctx.gen("omega_pi");
    s.sigma = ctx.gen("sigma");
    return s;
}

CharMultiset rho_panel(const ReprSpec& s, const Character& generic) {
    const DeltaSets d = delta_sets(s);
    const Character w = central_character(s);
    CharMultiset p = multiset_union(d.delta_plus, d.delta_minus);
    if (!jacquet_vanishes(s.type)) {
        for (const auto& row : siegel_data(s)) {
            p.push_back(row.rho_plus);
            p.push_back(row.rho_minus);
        }
    }
    p.push_back(s.sigma * generic);
    CharMultiset with_partners = p;
    for (const auto& c : p) with_partners.push_back(involution(w, c));
    return as_set(with_partners);
}

namespace {

int max_blocks_per_character(const TModule& x, const Character& chi) {
    int n = 0;
    for (const auto& b : x.blocks())
        if (b.chi == chi) ++n;
    return n;
}

void check_spec(const ReprSpec& s, CharacterContext& ctx, Recorder& rec) {
    const std::string inst = describe(s);
    const DeltaSets d = delta_sets(s);
    const Character w = central_character(s);
    const int m = whittaker_multiplicity(s.type);

    if (d.tilde_defined) {
        bool ok = is_submultiset(d.delta0, d.delta_tilde) && is_submultiset(d.delta_tilde, d.delta) &&
                  multiset_equal(multiset_minus(d.delta_tilde, d.delta0), d.delta1);
        rec.expect(ok, "delta_chain", inst, "Delta_0 ⊆ Delta~ ⊆ Delta with Delta~ - Delta_0 = Delta_1 fails");
    }

    std::vector<LFactorProduct> lregs;
    for (const auto& rho : rho_panel(s, ctx.gen("r"))) {
        const std::string where = inst + " rho=" + rho.str();
        try {
            const auto split = has_split_bessel(s, rho, &ctx);
            const TSModule beta = bessel_module(s, rho, &ctx);
            const TSModule up = beta_upper(s, rho, &ctx);
            const Character star = involution(w, rho);

            rec.expect(split.exists == has_split_bessel(s, star, &ctx).exists && beta == bessel_module(s, star, &ctx),
                       "duality", where, "beta_rho and beta_rho* differ");
            rec.expect(degree(beta) == split.degree, "degree", where,
                       "degree " + std::to_string(degree(beta)) + " vs existence " + std::to_string(split.degree));

            const auto gb = grothendieck_class(beta);
            const auto gu = grothendieck_class(up);
            rec.expect(gb.deg - gu.deg == m, "BETA1", where,
                       "deg beta_rho - deg beta^rho = " + std::to_string(gb.deg - gu.deg));
            const bool diff_ok = is_submultiset(gu.ss, gb.ss) && multiset_equal(multiset_minus(gb.ss, gu.ss), d.delta0);
            rec.expect(diff_ok, "prop5.3", where,
                       "[beta_rho] - [beta^rho] = " + set_text(multiset_minus(gb.ss, gu.ss)) + " vs Delta_0 " +
                           set_text(d.delta0));

            // cal_L: pi0 = kappa ⊔ pi0 of the Kirillov quotient
            const auto ss_pi0 = semisimplify(pi0(beta));
            const auto split_ss = multiset_union(semisimplify(kappa(beta)), semisimplify(pi0(kirillov_quotient(beta))));
            rec.expect(multiset_equal(ss_pi0, split_ss), "cal_L", where, "pi0 != kappa + L");

            if (split.exists) {
                const TModule p = pi0(beta);
                bool mono = true;
                const bool via = s.type == Type::VIa && rho == s.sigma;
                for (const auto& b : p.blocks()) {
                    int n = max_blocks_per_character(p, b.chi);
                    if (via && b.chi == Character::nu(1) * s.sigma) mono = mono && n == 2;
                    else mono = mono && n <= 1;
                }
                rec.expect(mono, "monodromy", where, "pi0 = " + p.str());

                const auto reg = regular_lfactor(s, rho, {}, &ctx);
                const auto kl = kl_lfactor(s, rho, {}, &ctx);
                rec.expect(divides(kl, reg), "divisibility", where, kl.str() + " does not divide " + reg.str());
                lregs.push_back(reg);
            }

            if (!jacquet_vanishes(s.type)) {
                const auto rows = siegel_data(s);
                for (const auto& row : rows) {
                    const auto f = bessel_filtration(row, w, rho, &ctx);
                    CharMultiset bound = semisimplify(pi0(f.i3));
                    bound = multiset_union(bound, f.i2_ss);
                    bound = multiset_union(bound, semisimplify(pi0(f.i1)));
                    bound = multiset_union(bound, semisimplify(pi0(f.i0)));
                    rec.expect(is_submultiset(ss_pi0, bound), "filtration", where + " row " + row.sigma_pi_text(),
                               "pi0 " + set_text(ss_pi0) + " not within " + set_text(bound));

                    // degree additivity along 0 -> Xi -> I -> Pi -> 0
                    if (!is_generic(s.type) || row.kernel.size() > 1) continue;
                    int deg_i = degree(beta);
                    for (Type kt : row.kernel) {
                        ReprSpec xs = s;
                        xs.type = kt;
                        deg_i += degree(bessel_module(xs, rho, &ctx));
                    }
                    const auto cls = classify_pair(row, w, rho, &ctx);
                    bool ok = cls == PairClass::Ordinary        ? deg_i == 1
                              : cls == PairClass::Extraordinary ? deg_i == 2
                                                                : (deg_i == 1 || deg_i == 2);
                    rec.expect(ok, "addition", where + " row " + row.sigma_pi_text(),
                               pair_class_name(cls) + " pair with deg I~ = " + std::to_string(deg_i));
                }
            }
        } catch (const Error& e) {
            rec.expect(false, "exception", where, e.kind() + ": " + e.what());
        }
    }
    bool same = std::all_of(lregs.begin(), lregs.end(), [&](const LFactorProduct& l) { return l == lregs[0]; });
    rec.expect(same, "rho_independence", inst, "regular L-factor varies with rho");
}

}  // namespace

Report check_tables() {
    Report rep;
    rep.suite = "tables";
    rep.model = "symbolic";
    Recorder rec(rep);
    for (Type t : all_types()) {
        CharacterContext ctx = symbolic_context();
        check_spec(symbolic_spec(t, ctx), ctx, rec);
    }
    rec.finish();
    return rep;
}

}  // namespace bessel
