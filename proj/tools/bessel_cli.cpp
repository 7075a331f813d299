// bessel: command-line front end to the library.
//
// Exit codes: 0 success, 1 domain error or failed check (JSON {"error": {...}} under --json),
// 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bessel/error.hpp"
#include "bessel/gsp4.hpp"
#include "bessel/tables.hpp"
#include "bessel/textio.hpp"
#include "bessel/verify.hpp"
#include "bessel/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace bessel;

namespace {

constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// JSON renderings

json chars_json(const CharMultiset& m) {
    json a = json::array();
    for (const auto& c : sorted(m)) a.push_back(c.str());
    return a;
}

json tmodule_json(const TModule& x) {
    json a = json::array();
    for (const auto& b : x.blocks()) a.push_back({{"character", b.chi.str()}, {"length", b.len}});
    return a;
}

json tsmodule_json(const TSModule& m) {
    json atoms = json::array();
    for (const auto& at : m.atoms()) {
        json quot = json::array();
        for (const auto& p : at.parts()) quot.push_back({{"character", p.chi.str()}, {"length", p.keep}});
        atoms.push_back({{"pi0", tmodule_json(at.pi0())}, {"quot", quot}});
    }
    return {{"text", m.str()},
            {"pretty", m.pretty()},
            {"degree", degree(m)},
            {"perfect", is_perfect(m)},
            {"pi0", tmodule_json(pi0(m))},
            {"kappa", tmodule_json(kappa(m))},
            {"fin", tmodule_json(m.fin())},
            {"atoms", atoms}};
}

json lfactor_json(const LFactorProduct& p) {
    json factors = json::array();
    auto add = [&](const EulerFactor& f, int e) {
        factors.push_back({{"character", f.monomial().str()}, {"shift", half_text(-f.q_exp2())}, {"exponent", e}});
    };
    for (const auto& f : p.denominator()) add(f, 1);
    for (const auto& f : p.numerator()) add(f, -1);
    return {{"text", p.str()}, {"pretty", p.pretty()}, {"factors", factors}};
}

json report_json(const Report& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"check", f.check}, {"instance", f.instance}, {"detail", f.detail}});
    return {{"suite", r.suite},        {"model", r.model},
            {"passed", r.passed()},    {"failure_count", r.failure_count},
            {"checks", r.checks},      {"witnesses", r.witnesses},
            {"unwitnessed", r.unwitnessed}, {"failures", failures}};
}

// ---------------------------------------------------------------------------
// Options shared by the representation subcommands

struct SpecOptions {
    std::string type;
    std::string form = "st";
    std::string chi1 = "chi1", chi2 = "chi2", xi = "xi", omega_pi, sigma = "sigma";
    std::string rho, mu = "1";
    std::string spec_file;
};

struct Session {
    bool as_json = false;
    std::vector<std::string> gens;
    std::string context_file;
    CharacterContext ctx;
    std::vector<std::string> declared;  // generators introduced without a declaration
    std::vector<std::string> warnings;

    void load_context() {
        if (!context_file.empty()) {
            std::ifstream in(context_file);
            if (!in) throw ParseError("cannot open context file '" + context_file + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            ctx.declare_text(ss.str());
        }
        for (const auto& g : gens) ctx.declare_line(g);
    }

    Character parse(const std::string& text) {
        std::vector<std::string> fresh;
        Character c = ctx.parse_declaring(text, &fresh);
        for (const auto& f : fresh) declared.push_back(f + " order=inf ramified=false");
        return c;
    }

    // the quadratic parameter: undeclared names become order-2 generators
    Character parse_quadratic(const std::string& text) {
        CharacterContext probe = ctx;
        std::vector<std::string> fresh;
        probe.parse_declaring(text, &fresh);
        for (const auto& f : fresh) {
            ctx.declare({f, 2, true});
            declared.push_back(f + " order=2 ramified=false");
        }
        return ctx.parse(text);
    }

    json envelope(const std::string& command) const {
        return {{"schema_version", kSchemaVersion}, {"command", command}};
    }

    void finish(json& out) const {
        out["declared"] = declared;
        out["assumptions"] = ctx.assumption_log();
        out["warnings"] = warnings;
    }

    void print_trailer() const {
        for (const auto& d : declared) std::cout << "declared: " << d << "\n";
        for (const auto& a : ctx.assumption_log()) std::cout << "assumed: " << a << "\n";
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    }
};

void read_spec_file(SpecOptions& o, Session& s) {
    std::ifstream in(o.spec_file);
    if (!in) throw ParseError("cannot open spec file '" + o.spec_file + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("spec file: ") + e.what());
    }
    if (j.contains("context")) {
        if (j["context"].is_string())
            s.ctx.declare_text(j["context"].get<std::string>());
        else
            for (const auto& line : j["context"]) s.ctx.declare_line(line.get<std::string>());
    }
    if (j.contains("type")) o.type = j["type"].get<std::string>();
    if (j.contains("form")) o.form = j["form"].get<std::string>();
    if (j.contains("params")) {
        const auto& p = j["params"];
        auto take = [&](const char* k, std::string& dst) {
            if (p.contains(k)) dst = p[k].get<std::string>();
        };
        take("chi1", o.chi1);
        take("chi2", o.chi2);
        take("xi", o.xi);
        take("omega_pi", o.omega_pi);
        take("sigma", o.sigma);
    }
    if (j.contains("rho")) o.rho = j["rho"].get<std::string>();
    if (j.contains("mu")) o.mu = j["mu"].get<std::string>();
}

ReprSpec build_spec(SpecOptions& o, Session& s) {
    if (!o.spec_file.empty()) read_spec_file(o, s);
    if (o.type.empty()) throw CLI::RequiredError("--type");
    const Type t = parse_type(o.type);
    const bool xi_type = t == Type::Va || t == Type::Vb || t == Type::Vc || t == Type::Vd;
    const bool chi_type = t == Type::I || t == Type::IIa || t == Type::IIb || t == Type::IIIa || t == Type::IIIb;
    const Character chi1 = chi_type ? s.parse(o.chi1) : Character();
    const Character chi2 = t == Type::I ? s.parse(o.chi2) : Character();
    const Character xi = xi_type ? s.parse_quadratic(o.xi) : Character();
    Character omega_pi;
    if (t == Type::X) omega_pi = s.parse(o.omega_pi.empty() ? "omega_pi" : o.omega_pi);
    if ((t == Type::XIa || t == Type::XIb) && !o.omega_pi.empty()) omega_pi = s.parse(o.omega_pi);
    const Character sigma = s.parse(o.sigma);
    if (o.form == "st") return from_sally_tadic(t, chi1, chi2, sigma, xi, omega_pi);
    if (o.form == "list") return ReprSpec{t, chi1, chi2, xi, omega_pi, sigma};
    throw CLI::ValidationError("--form", "expected 'st' or 'list'");
}

void add_spec_options(CLI::App* cmd, SpecOptions& o, bool want_rho, bool want_mu) {
    cmd->add_option("--type", o.type, "representation type (I, IIa, ..., XIb, CuspGeneric, CuspNonGeneric)");
    cmd->add_option("--form", o.form, "parameter form: st (Sally-Tadic, default) or list (classification list)")
        ->check(CLI::IsMember({"st", "list"}));
    cmd->add_option("--chi1", o.chi1, "character chi1 (chi for IIa/IIb)");
    cmd->add_option("--chi2", o.chi2, "character chi2");
    cmd->add_option("--xi", o.xi, "quadratic character of the V family");
    cmd->add_option("--omega-pi", o.omega_pi, "central character of the cuspidal pi_c");
    cmd->add_option("--sigma", o.sigma, "twist sigma");
    cmd->add_option("--spec", o.spec_file, "JSON spec {type, form, params, context, rho, mu}");
    if (want_rho) cmd->add_option("--rho", o.rho, "Bessel character rho");
    if (want_mu) cmd->add_option("--mu", o.mu, "twist mu of the L-factor");
}

Character require_rho(SpecOptions& o, Session& s) {
    if (o.rho.empty()) throw CLI::RequiredError("--rho");
    return s.parse(o.rho);
}

void coincidence_warning(const ReprSpec& spec, const DeltaSets& d, Session& s) {
    if (spec.type == Type::VIa || spec.type == Type::VId) return;
    if (as_set(d.delta_tilde).size() < d.delta_tilde.size())
        s.warnings.push_back("coincident characters in Delta~ " + str(sorted(d.delta_tilde)) +
                             "; the tables assume general position");
}

std::string violations_text(const std::vector<Violation>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : "; ") + x.condition + (x.convention ? " (convention)" : "");
    return out;
}

// ---------------------------------------------------------------------------
// Subcommands

int run_classify(SpecOptions& o, Session& s) {
    const ReprSpec spec = build_spec(o, s);
    std::optional<Character> rho;
    if (!o.rho.empty()) rho = s.parse(o.rho);
    const auto violations = validate(spec, &s.ctx);
    const DeltaSets d = delta_sets(spec);
    coincidence_warning(spec, d, s);
    const Character w = central_character(spec);

    json out = s.envelope("classify");
    out["type"] = type_name(spec.type);
    out["generic"] = is_generic(spec.type);
    out["central_character"] = w.str();
    json vj = json::array();
    for (const auto& v : violations) vj.push_back({{"condition", v.condition}, {"convention", v.convention}});
    out["valid"] = violations.empty();
    out["violations"] = vj;
    out["delta_sets"] = {{"delta", chars_json(d.delta)},
                         {"delta_tilde", d.tilde_defined ? chars_json(d.delta_tilde) : json(nullptr)},
                         {"delta0", chars_json(d.delta0)},
                         {"delta1", d.tilde_defined ? chars_json(d.delta1) : json(nullptr)},
                         {"delta_plus", chars_json(d.delta_plus)},
                         {"delta_minus", chars_json(d.delta_minus)},
                         {"delta_Q", chars_json(d.delta_Q)}};
    json rows = json::array();
    if (!jacquet_vanishes(spec.type)) {
        for (const auto& row : siegel_data(spec)) {
            json k = json::array();
            for (Type t : row.kernel) k.push_back(type_name(t));
            json r = {{"sigma_pi", row.sigma_pi_text()},
                      {"chi_pi", row.chi_pi.str()},
                      {"rho_plus", row.rho_plus.str()},
                      {"rho_minus", row.rho_minus.str()},
                      {"kernel", k}};
            if (rho) r["pair_class"] = pair_class_name(classify_pair(row, w, *rho, &s.ctx));
            rows.push_back(r);
        }
    }
    out["siegel_rows"] = rows;
    out["exists"] = nullptr;
    out["exceptional_case"] = nullptr;
    if (rho && violations.empty()) {
        const auto e = has_split_bessel(spec, *rho, &s.ctx);
        out["exists"] = e.exists;
        out["degree"] = e.degree;
        if (is_generic(spec.type) && !jacquet_vanishes(spec.type)) {
            const auto ex = exceptional_case(spec, *rho, &s.ctx);
            out["exceptional_case"] = exceptional_case_name(ex.which);
            out["representative"] = ex.representative.str();
        }
    }
    s.finish(out);

    if (s.as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "type " << type_name(spec.type) << (is_generic(spec.type) ? " (generic)" : "") << "\n";
        std::cout << "omega = " << w.pretty() << "\n";
        std::cout << "valid: " << (violations.empty() ? "yes" : "no: " + violations_text(violations)) << "\n";
        std::cout << "Delta   = " << pretty(sorted(d.delta)) << "\n";
        if (d.tilde_defined) std::cout << "Delta~  = " << pretty(sorted(d.delta_tilde)) << "\n";
        std::cout << "Delta0  = " << pretty(sorted(d.delta0)) << "\n";
        if (d.tilde_defined) std::cout << "Delta1  = " << pretty(sorted(d.delta1)) << "\n";
        std::cout << "Delta+  = " << pretty(sorted(d.delta_plus)) << "\n";
        std::cout << "Delta-  = " << pretty(sorted(d.delta_minus)) << "\n";
        std::cout << "DeltaQ  = " << pretty(sorted(d.delta_Q)) << "\n";
        for (const auto& r : rows) {
            std::cout << "sigma_Pi = " << r["sigma_pi"].get<std::string>() << ", rho+ = " << r["rho_plus"].get<std::string>()
                      << ", rho- = " << r["rho_minus"].get<std::string>();
            if (r.contains("pair_class")) std::cout << ", " << r["pair_class"].get<std::string>();
            std::cout << "\n";
        }
        if (!out["exists"].is_null())
            std::cout << "split Bessel model: " << (out["exists"].get<bool>() ? "yes" : "no") << "\n";
        if (!out["exceptional_case"].is_null())
            std::cout << "exceptional case: " << out["exceptional_case"].get<std::string>() << "\n";
        s.print_trailer();
    }
    return 0;
}

int run_bessel(SpecOptions& o, Session& s) {
    const ReprSpec spec = build_spec(o, s);
    const Character rho = require_rho(o, s);
    coincidence_warning(spec, delta_sets(spec), s);
    const auto e = has_split_bessel(spec, rho, &s.ctx);
    const TSModule m = bessel_module(spec, rho, &s.ctx);
    const TSModule up = beta_upper(spec, rho, &s.ctx);

    json out = s.envelope("bessel");
    out["type"] = type_name(spec.type);
    out["rho"] = rho.str();
    out["exists"] = e.exists;
    out["degree"] = degree(m);
    out["bessel_module"] = tsmodule_json(m);
    out["beta_upper"] = tsmodule_json(up);
    s.finish(out);
    if (s.as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "split Bessel model: " << (e.exists ? "yes" : "no") << "\n";
        std::cout << "degree " << degree(m) << (is_perfect(m) ? ", perfect" : "") << "\n";
        std::cout << "module: " << m.pretty() << "\n";
        std::cout << "beta^rho: " << up.pretty() << "\n";
        s.print_trailer();
    }
    return 0;
}

int run_lfactor(SpecOptions& o, Session& s) {
    const ReprSpec spec = build_spec(o, s);
    const Character rho = require_rho(o, s);
    const Character mu = s.parse(o.mu);
    const LFactorProduct reg = regular_lfactor(spec, rho, mu, &s.ctx);
    const LFactorProduct kl = kl_lfactor(spec, rho, mu, &s.ctx);
    const LFactorProduct q = subregular_quotient(spec, rho, mu, &s.ctx);

    json out = s.envelope("lfactor");
    out["type"] = type_name(spec.type);
    out["rho"] = rho.str();
    out["mu"] = mu.str();
    out["L_reg"] = lfactor_json(reg);
    out["L_Kl"] = lfactor_json(kl);
    out["L_sreg_quotient"] = lfactor_json(q);
    s.finish(out);
    if (s.as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "L_reg  = " << reg.pretty() << "\n";
        std::cout << "L_Kl   = " << kl.pretty() << "\n";
        std::cout << "L_reg / L_Kl = " << q.pretty() << "\n";
        s.print_trailer();
    }
    return 0;
}

struct TablesOptions {
    std::string format = "transcription";
    std::string diff;
};

int run_tables(const TablesOptions& o, Session& s) {
    if (!o.diff.empty()) {
        const TableDiff d = diff_tables(read_transcription(o.diff));
        const auto bad = d.mismatches();
        const auto dev = d.deviations();
        auto cell_json = [](const CellCheck& c) {
            return json{{"line", c.lineno}, {"table", c.table}, {"key", c.key}, {"field", c.field},
                        {"expected", c.expected}, {"got", c.got}, {"flag", c.flag}};
        };
        if (s.as_json) {
            json out = s.envelope("tables");
            out["cells"] = d.cells.size();
            out["mismatches"] = json::array();
            for (const auto& c : bad) out["mismatches"].push_back(cell_json(c));
            out["deviations"] = json::array();
            for (const auto& c : dev) out["deviations"].push_back(cell_json(c));
            s.finish(out);
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& c : bad)
                std::cout << "MISMATCH line " << c.lineno << " " << c.table << " " << c.key << " " << c.field
                          << "\n  table:  " << c.expected << "\n  engine: " << c.got << "\n";
            for (const auto& c : dev)
                std::cout << "deviation (" << c.flag << ") line " << c.lineno << " " << c.table << " " << c.key << " "
                          << c.field << "\n  table:  " << c.expected << "\n  engine: " << c.got << "\n";
            std::cout << d.cells.size() << " cells, " << bad.size() << " mismatches, " << dev.size()
                      << " flagged deviations\n";
        }
        return bad.empty() ? 0 : 1;
    }
    const auto lines = dump_tables();
    if (s.as_json) {
        std::stringstream ss;
        for (const auto& l : lines) ss << l << "\n";
        json out = s.envelope("tables");
        json rows = json::array();
        for (const auto& l : parse_transcription(ss)) {
            json f = json::object();
            for (const auto& [k, v] : l.fields) f[k] = v;
            rows.push_back({{"table", l.table}, {"key", l.key}, {"fields", f}});
        }
        out["rows"] = rows;
        s.finish(out);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
    }
    return 0;
}

struct VerifyOptions {
    std::string suite = "all";
    std::vector<std::string> models;
};

std::pair<int, int> parse_model(const std::string& text) {
    auto parts = split_top(text, {","});
    if (parts.size() != 2) throw CLI::ValidationError("--model", "expected N,B");
    try {
        return {std::stoi(parts[0]), std::stoi(parts[1])};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--model", "expected integers N,B");
    }
}

int run_verify(const VerifyOptions& o, Session& s) {
    std::vector<Report> reports;
    if (o.suite == "tables" || o.suite == "all") reports.push_back(check_tables());
    if (o.suite == "combinatorics" || o.suite == "all") {
        std::vector<std::string> models = o.models;
        if (models.empty()) models = {"5,4", "6,5"};
        for (const auto& m : models) {
            auto [n, b] = parse_model(m);
            reports.push_back(check_combinatorics(FiniteModel(n, b)));
        }
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    if (s.as_json) {
        json out = s.envelope("verify");
        out["passed"] = ok;
        out["reports"] = json::array();
        for (const auto& r : reports) out["reports"].push_back(report_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            long checks = 0;
            for (const auto& [k, n] : r.checks) checks += n;
            std::cout << r.suite << (r.model.empty() ? "" : " " + r.model) << ": " << (r.passed() ? "PASS" : "FAIL")
                      << " (" << checks << " checks, " << r.failure_count << " failures)\n";
            for (const auto& f : r.failures) std::cout << "  " << f.check << " | " << f.instance << " | " << f.detail << "\n";
            for (const auto& u : r.unwitnessed) std::cout << "  not witnessed: " << u << "\n";
        }
    }
    return ok ? 0 : 1;
}

struct ZetaOptions {
    std::string coeffs;
    std::string chi = "1";
    std::string q = "3";
    int order = 1;
    std::string profile;
};

Rational json_rational(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw ParseError("coefficients must be integers or rational strings");
}

CoeffFunction read_coeffs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coefficient file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("coefficient file: ") + e.what());
    }
    CoeffFunction f;
    f.n0 = j.value("n0", 0);
    if (j.contains("values"))
        for (const auto& v : j["values"]) f.values.push_back(json_rational(v));
    f.m0 = j.value("m0", f.n0 + static_cast<int>(f.values.size()));
    if (j.contains("tails"))
        for (const auto& t : j["tails"]) {
            Tail tail{json_rational(t.at("mu")), {}};
            for (const auto& c : t.at("p")) tail.p.push_back(json_rational(c));
            f.tails.push_back(std::move(tail));
        }
    return f;
}

int run_zeta(const ZetaOptions& o, Session& s) {
    const CoeffFunction f = read_coeffs(o.coeffs);
    const Rational chi = parse_rational(o.chi);
    const Rational q = parse_rational(o.q);
    const RationalInT z = zeta_integral(f, chi);
    std::map<Rational, int> profile = minimal_profile(f);
    if (!o.profile.empty()) {
        profile.clear();
        for (const auto& item : split_top(o.profile, {","})) {
            auto kv = split_top(item, {":"});
            if (kv.size() != 2) throw CLI::ValidationError("--profile", "expected mu:a,...");
            profile[parse_rational(kv[0])] = std::stoi(kv[1]);
        }
    }
    const Laurent num = regularized_numerator(f, chi, profile);
    const Functional fn = regularized_functional(f, chi, profile, o.order);
    const std::string logq = "log(" + rational_text(q) + ")";

    json prof = json::object();
    for (const auto& [m, a] : profile) prof[rational_text(m)] = a;
    json out = s.envelope("zeta");
    out["q"] = rational_text(q);
    out["chi"] = rational_text(chi);
    out["zeta_integral"] = z.str();
    out["value_at_s0"] = rational_text(z.eval(1));
    out["profile"] = prof;
    out["regularized_numerator"] = num.str();
    out["order"] = o.order;
    out["functional"] = {{"value", rational_text(fn.value)}, {"logq_power", fn.logq_power}, {"log", logq}};
    if (s.as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "Z(t) = " << z.str() << "   (t = " << rational_text(q) << "^-s)\n";
        std::cout << "regularized numerator: " << num.str() << "\n";
        std::cout << "I^(" << o.order << ") = " << rational_text(fn.value);
        if (fn.logq_power) std::cout << " * " << logq << "^" << fn.logq_power;
        std::cout << "\n";
    }
    return 0;
}

int emit_error(const std::string& kind, const std::string& message, bool as_json, int code) {
    if (as_json) {
        json out = {{"schema_version", kSchemaVersion}, {"error", {{"kind", kind}, {"message", message}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << message << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split Bessel models and regular spinor L-factors of GSp(4)"};
    app.require_subcommand(1);
    Session session;
    app.add_flag("--json", session.as_json, "machine-readable output");
    app.add_option("--gen", session.gens, "declare a generator: \"name order=<n|inf> ramified=<bool>\" or \"assert <monomial> != 1\"");
    app.add_option("--context", session.context_file, "file of generator declarations");

    SpecOptions classify_o, bessel_o, lfactor_o;
    auto* classify = app.add_subcommand("classify", "validity, Delta multisets, Siegel data, exceptional case");
    add_spec_options(classify, classify_o, true, false);
    auto* bessel = app.add_subcommand("bessel", "Bessel module beta_rho and beta^rho");
    add_spec_options(bessel, bessel_o, true, false);
    auto* lfactor = app.add_subcommand("lfactor", "regular, Kirillov and subregular L-factors");
    add_spec_options(lfactor, lfactor_o, true, true);

    TablesOptions tables_o;
    auto* tables = app.add_subcommand("tables", "the seven tables as derived by the engine");
    tables->add_option("--format", tables_o.format, "output format")->check(CLI::IsMember({"transcription"}));
    tables->add_option("--diff", tables_o.diff, "compare against a transcription file");

    VerifyOptions verify_o;
    auto* verify = app.add_subcommand("verify", "brute-force verification suites");
    verify->add_option("--suite", verify_o.suite, "combinatorics, tables or all")
        ->check(CLI::IsMember({"combinatorics", "tables", "all"}));
    verify->add_option("--model", verify_o.models, "finite model N,B (repeatable)");

    ZetaOptions zeta_o;
    auto* zeta = app.add_subcommand("zeta", "zeta integrals of coefficient functions");
    zeta->add_option("--coeffs", zeta_o.coeffs, "JSON coefficient function {n0, m0, values, tails}")->required();
    zeta->add_option("--chi", zeta_o.chi, "chi(pi) as a rational");
    zeta->add_option("--q", zeta_o.q, "residue field size");
    zeta->add_option("--order", zeta_o.order, "derivative order n >= 1")->check(CLI::PositiveNumber);
    zeta->add_option("--profile", zeta_o.profile, "multiplicities mu:a,... (default: the pole orders of Z)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        session.load_context();
        if (*classify) return run_classify(classify_o, session);
        if (*bessel) return run_bessel(bessel_o, session);
        if (*lfactor) return run_lfactor(lfactor_o, session);
        if (*tables) return run_tables(tables_o, session);
        if (*verify) return run_verify(verify_o, session);
        if (*zeta) return run_zeta(zeta_o, session);
    } catch (const CLI::Error& e) {
        return emit_error("UsageError", e.what(), session.as_json, 2);
    } catch (const Error& e) {
        return emit_error(e.kind(), e.what(), session.as_json, 1);
    }
    return 2;
}
