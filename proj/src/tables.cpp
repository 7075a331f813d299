#include "bessel/tables.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "bessel/error.hpp"
#include "bessel/gsp4.hpp"
#include "bessel/textio.hpp"
#include "bessel/verify.hpp"

namespace bessel {

const std::string* TranscriptionLine::field(const std::string& name) const {
    for (const auto& [k, v] : fields)
        if (k == name) return &v;
    return nullptr;
}

std::vector<TranscriptionLine> parse_transcription(std::istream& in) {
    std::vector<TranscriptionLine> out;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> parts;
        std::stringstream ss(t);
        for (std::string p; std::getline(ss, p, '|');) parts.push_back(trim(p));
        std::istringstream head(parts[0]);
        TranscriptionLine line;
        line.lineno = lineno;
        if (!(head >> line.table >> line.key))
            throw ParseError("line " + std::to_string(lineno) + ": expected '<table> <key>'");
        for (std::size_t i = 1; i < parts.size(); ++i) {
            auto eq = parts[i].find('=');
            if (eq == std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": field without '=' in '" + parts[i] + "'");
            std::string k = trim(parts[i].substr(0, eq));
            std::string v = trim(parts[i].substr(eq + 1));
            if (k == "flag")
                line.flag = v;
            else
                line.fields.emplace_back(k, v);
        }
        out.push_back(std::move(line));
    }
    return out;
}

std::vector<TranscriptionLine> read_transcription(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open transcription '" + path + "'");
    return parse_transcription(in);
}

std::vector<CellCheck> TableDiff::mismatches() const {
    std::vector<CellCheck> out;
    for (const auto& c : cells)
        if (!c.ok && c.flag.empty()) out.push_back(c);
    return out;
}

std::vector<CellCheck> TableDiff::deviations() const {
    std::vector<CellCheck> out;
    for (const auto& c : cells)
        if (!c.ok && !c.flag.empty()) out.push_back(c);
    return out;
}

std::vector<CellCheck> TableDiff::flagged_agreeing() const {
    std::vector<CellCheck> out;
    for (const auto& c : cells)
        if (c.ok && !c.flag.empty()) out.push_back(c);
    return out;
}

std::size_t TableDiff::count(const std::string& table) const {
    return std::count_if(cells.begin(), cells.end(), [&](const CellCheck& c) { return c.table == table; });
}

namespace {

// ASCII spelling in the transcription -> label carried by SiegelRow
const std::map<std::string, std::string>& cusp_labels() {
    static const std::map<std::string, std::string> labels{
        {"pi_c", "π_c"}, {"pi_c^v", "π_c^∨"}, {"nu^-1/2 pi_c", "ν^{-1/2}π_c"}, {"nu^1/2 pi_c", "ν^{1/2}π_c"}};
    return labels;
}

// Table-list normalization (sigma = 1) or Sally-Tadic form with a symbolic sigma.
ReprSpec table_spec(Type t, bool sally_tadic, const CharacterContext& ctx) {
    ReprSpec s = symbolic_spec(t, ctx);
    if (!sally_tadic) {
        s.sigma = Character();
        return s;
    }
    return from_sally_tadic(t, s.chi1, s.chi2, ctx.gen("sigma"), s.xi, s.omega_pi);
}

std::string set_text(const CharMultiset& m) { return str(sorted(m)); }

struct RhoCondition {
    enum Kind { All, None, Listed, Not, DeltaMinus, DeltaMinusStar, Other } kind = All;
    CharMultiset listed;
};

RhoCondition parse_condition(const std::string& text, const CharacterContext& ctx) {
    RhoCondition c;
    if (text == "all") return c;
    if (text == "none") c.kind = RhoCondition::None;
    else if (text == "Delta-") c.kind = RhoCondition::DeltaMinus;
    else if (text == "Delta-*") c.kind = RhoCondition::DeltaMinusStar;
    else if (text == "other") c.kind = RhoCondition::Other;
    else if (text.rfind("not ", 0) == 0) {
        c.kind = RhoCondition::Not;
        c.listed = parse_multiset(text.substr(4), ctx);
    } else {
        c.kind = RhoCondition::Listed;
        c.listed = parse_multiset(text, ctx);
    }
    return c;
}

class Checker {
public:
    explicit Checker(TableDiff& out) : out_(out), ctx_(symbolic_context()) {}

    void run(const std::vector<TranscriptionLine>& lines, const std::string& only) {
        for (const auto& l : lines)
            if (l.table == "T5" || l.table == "T6") by_type_[l.table + " " + l.key].push_back(&l);
        for (const auto& l : lines) {
            if (!only.empty() && l.table != only) continue;
            try {
                dispatch(l);
            } catch (const Error& e) {
                record(l, "*", "", std::string(e.kind()) + ": " + e.what(), false);
            }
        }
    }

private:
    void record(const TranscriptionLine& l, const std::string& field, const std::string& expected,
                const std::string& got, bool ok) {
        out_.cells.push_back({l.lineno, l.table, l.key, field, expected, got, l.flag, ok});
    }

    const std::string& need(const TranscriptionLine& l, const std::string& f) {
        const std::string* v = l.field(f);
        if (!v) throw ParseError("line " + std::to_string(l.lineno) + ": missing field '" + f + "'");
        return *v;
    }

    CharMultiset candidates(const ReprSpec& s, const CharMultiset& extra) {
        CharMultiset p = rho_panel(s, ctx_.gen("r"));
        p.push_back(s.sigma);
        for (const auto& c : extra) p.push_back(c);
        return as_set(p);
    }

    void dispatch(const TranscriptionLine& l) {
        if (l.table == "T1") return t1(l);
        if (l.table == "T2") return t2(l);
        if (l.table == "T3") return t3(l);
        if (l.table == "T4") return t4(l);
        if (l.table == "T5" || l.table == "T6") return t56(l);
        if (l.table == "T7") return t7(l);
        throw ParseError("line " + std::to_string(l.lineno) + ": unknown table '" + l.table + "'");
    }

    // the rho column of T1 and T4
    void rho_column(const TranscriptionLine& l, const ReprSpec& s) {
        const RhoCondition cond = parse_condition(need(l, "rho"), ctx_);
        CharMultiset splitting, wrong;
        for (const auto& rho : candidates(s, cond.listed)) {
            const bool exists = has_split_bessel(s, rho).exists;
            bool want = cond.kind == RhoCondition::All;
            if (cond.kind == RhoCondition::Listed) want = contains(cond.listed, rho);
            if (exists) splitting.push_back(rho);
            if (exists != want) wrong.push_back(rho);
        }
        std::string got = splitting.empty() ? "none" : set_text(splitting);
        if (!wrong.empty()) got += " (disagrees at " + set_text(wrong) + ")";
        record(l, "rho", need(l, "rho"), got, wrong.empty());
    }

    void t1(const TranscriptionLine& l) {
        const ReprSpec s = table_spec(parse_type(l.key), false, ctx_);
        const Character want = ctx_.parse(need(l, "omega"));
        const Character got = central_character(s);
        record(l, "omega", want.str(), got.str(), want == got);
        rho_column(l, s);
    }

    void t2(const TranscriptionLine& l) {
        const auto dot = l.key.find('.');
        if (dot == std::string::npos) throw ParseError("T2 key must be <type>.<row>");
        const ReprSpec s = table_spec(parse_type(l.key.substr(0, dot)), false, ctx_);
        const std::size_t idx = std::stoul(l.key.substr(dot + 1));
        const auto rows = siegel_data(s);
        if (idx < 1 || idx > rows.size()) {
            record(l, "row", l.key, std::to_string(rows.size()) + " rows", false);
            return;
        }
        const SiegelRow& row = rows[idx - 1];

        const std::string pi = need(l, "pi");
        const auto open = pi.find('(');
        const std::string kind = pi.substr(0, open);
        const std::string inner = pi.substr(open + 1, pi.size() - open - 2);
        bool ok = false;
        if (kind == "PS") {
            auto ab = split_top(inner, {","});
            ok = row.kind == PiKind::PS && ab.size() == 2 && row.a == ctx_.parse(ab[0]) && row.b == ctx_.parse(ab[1]);
        } else if (kind == "Sp") {
            ok = row.kind == PiKind::Sp && row.a == ctx_.parse(inner);
        } else if (kind == "1") {
            ok = row.kind == PiKind::OneDim && row.a == ctx_.parse(inner);
        } else if (kind == "cusp") {
            auto it = cusp_labels().find(inner);
            ok = row.kind == PiKind::Cusp && it != cusp_labels().end() && it->second == row.cusp_label;
        } else {
            throw ParseError("line " + std::to_string(l.lineno) + ": unknown pi '" + pi + "'");
        }
        record(l, "pi", pi, row.sigma_pi_text(), ok);

        const Character chi = ctx_.parse(need(l, "chi"));
        record(l, "chi", chi.str(), row.chi_pi.str(), chi == row.chi_pi);

        std::vector<std::string> want_k, got_k;
        if (need(l, "kernel") != "0")
            for (const auto& k : split_top(need(l, "kernel"), {","})) want_k.push_back(k);
        for (Type k : row.kernel) got_k.push_back(type_name(k));
        std::sort(want_k.begin(), want_k.end());
        std::sort(got_k.begin(), got_k.end());
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
            return s.empty() ? std::string("0") : s;
        };
        record(l, "kernel", join(want_k), join(got_k), want_k == got_k);

        const Character rp = ctx_.parse(need(l, "rho+"));
        const Character rm = ctx_.parse(need(l, "rho-"));
        record(l, "rho+", rp.str(), row.rho_plus.str(), rp == row.rho_plus);
        record(l, "rho-", rm.str(), row.rho_minus.str(), rm == row.rho_minus);
    }

    void t3(const TranscriptionLine& l) {
        const ReprSpec s = table_spec(parse_type(l.key), false, ctx_);
        const DeltaSets d = delta_sets(s);
        auto cell = [&](const std::string& f, const CharMultiset& got, bool defined) {
            const std::string& v = need(l, f);
            if (v == "-") {
                record(l, f, "-", defined ? set_text(got) : "-", !defined);
                return;
            }
            const CharMultiset want = parse_multiset(v, ctx_);
            record(l, f, set_text(want), defined ? set_text(got) : "-", defined && multiset_equal(want, got));
        };
        cell("Delta", d.delta, true);
        cell("Delta~", d.delta_tilde, d.tilde_defined);
        cell("Delta0", d.delta0, true);
        cell("Delta1", d.delta1, d.tilde_defined);
        cell("Delta+", d.delta_plus, true);
        cell("DeltaQ", d.delta_Q, true);
        const Character w = ctx_.parse(need(l, "omega"));
        record(l, "omega", w.str(), central_character(s).str(), w == central_character(s));
    }

    void t4(const TranscriptionLine& l) {
        const ReprSpec s = table_spec(parse_type(l.key), true, ctx_);
        rho_column(l, s);
        const std::string& text = need(l, "L");
        const Character mu = ctx_.gen("mu");
        if (text == "---") {
            std::string got = "---";
            try {
                got = regular_lfactor(s, s.sigma * ctx_.gen("r"), Character()).str();
            } catch (const NoBesselModel&) {
            }
            record(l, "L", "---", got, got == "---");
            return;
        }
        const LFactorProduct want = parse_lfactor(text, ctx_);
        const RhoCondition cond = parse_condition(need(l, "rho"), ctx_);
        std::string bad, bad_mu;
        for (const auto& rho : candidates(s, cond.listed)) {
            if (!has_split_bessel(s, rho).exists) continue;
            const LFactorProduct got = regular_lfactor(s, rho, Character());
            if (got != want && bad.empty()) bad = got.str() + " at rho = " + rho.str();
            // L(s, Pi, mu, Lambda) = L(s, mu Pi, 1, Lambda'), with Lambda' the mu-twist
            ReprSpec twisted = s;
            twisted.sigma *= mu;
            const LFactorProduct lhs = regular_lfactor(s, rho, mu);
            const LFactorProduct rhs = regular_lfactor(twisted, mu * rho, Character());
            if ((lhs != rhs || lhs != twist(want, mu)) && bad_mu.empty())
                bad_mu = lhs.str() + " vs " + rhs.str() + " at rho = " + rho.str();
        }
        record(l, "L", want.str(), bad.empty() ? want.str() : bad, bad.empty());
        record(l, "L(mu)", twist(want, mu).str(), bad_mu.empty() ? twist(want, mu).str() : bad_mu, bad_mu.empty());
    }

    bool matches(const RhoCondition& c, const ReprSpec& s, const DeltaSets& d, const Character& rho,
                 const std::string& group, const TranscriptionLine* self) {
        const Character w = central_character(s);
        switch (c.kind) {
            case RhoCondition::All: return true;
            case RhoCondition::None: return false;
            case RhoCondition::Listed: return contains(c.listed, rho);
            case RhoCondition::Not: return !contains(c.listed, rho);
            case RhoCondition::DeltaMinus: return contains(d.delta_minus, rho);
            case RhoCondition::DeltaMinusStar: return contains(involution(w, d.delta_minus), rho);
            case RhoCondition::Other: {
                if (!has_split_bessel(s, rho).exists) return false;
                for (const TranscriptionLine* o : by_type_[group]) {
                    if (o == self) continue;
                    const RhoCondition oc = parse_condition(need(*o, "rho"), ctx_);
                    if (oc.kind != RhoCondition::Other && matches(oc, s, d, rho, group, o)) return false;
                }
                return true;
            }
        }
        return false;
    }

    void t56(const TranscriptionLine& l) {
        const ReprSpec s = table_spec(parse_type(l.key), true, ctx_);
        const DeltaSets d = delta_sets(s);
        const Character w = central_character(s);
        const std::string group = l.table + " " + l.key;
        const RhoCondition cond = parse_condition(need(l, "rho"), ctx_);
        CharMultiset extra;
        for (const TranscriptionLine* o : by_type_[group]) {
            auto oc = parse_condition(need(*o, "rho"), ctx_);
            extra.insert(extra.end(), oc.listed.begin(), oc.listed.end());
        }
        const std::string xtext = TModule::cyclic_from(d.delta_tilde).str();
        const std::string* perfect = l.field("perfect");
        int examined = 0;
        std::string bad, bad_perfect;
        std::string want_text;
        for (const auto& rho : candidates(s, extra)) {
            if (!matches(cond, s, d, rho, group, &l)) continue;
            ++examined;
            std::string text = need(l, "module");
            text = replace_word(text, "X", xtext);
            text = replace_word(text, "rhostar", "(" + involution(w, rho).str() + ")");
            text = replace_word(text, "rho", "(" + rho.str() + ")");
            const TSModule want = parse_tsmodule(text, ctx_);
            const TSModule got = bessel_module(s, rho);
            if (want_text.empty()) want_text = want.str();
            const int deg = l.table == "T5" ? 1 : 0;
            if ((got != want || degree(got) != deg) && bad.empty())
                bad = got.str() + " at rho = " + rho.str() + " (expected " + want.str() + ")";
            if (perfect && (is_perfect(got) != (*perfect == "yes")) && bad_perfect.empty())
                bad_perfect = std::string(is_perfect(got) ? "yes" : "no") + " at rho = " + rho.str();
        }
        if (examined == 0) {
            record(l, "rho", need(l, "rho"), "no panel character satisfies the condition", false);
            return;
        }
        record(l, "module", need(l, "module") + " = " + want_text, bad.empty() ? want_text : bad, bad.empty());
        if (perfect) record(l, "perfect", *perfect, bad_perfect.empty() ? *perfect : bad_perfect, bad_perfect.empty());
    }

    // boxed/unboxed characters of one filtration column
    using Column = std::vector<std::pair<Character, bool>>;

    Column parse_column(const std::string& text) {
        Column out;
        if (trim(text) == "0") return out;
        for (auto part : split_top(text, {"+"})) {
            const bool boxed = part.size() >= 2 && part.front() == '[' && part.back() == ']';
            if (boxed) part = part.substr(1, part.size() - 2);
            out.emplace_back(ctx_.parse(part), boxed);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::string column_text(const Column& c) {
        if (c.empty()) return "0";
        std::string s;
        for (const auto& [chi, boxed] : c) {
            if (!s.empty()) s += " + ";
            s += boxed ? "[" + chi.str() + "]" : chi.str();
        }
        return s;
    }

    void t7(const TranscriptionLine& l) {
        const ReprSpec s = table_spec(parse_type(l.key), false, ctx_);
        const auto rows = siegel_data(s);
        const Character w = central_character(s);
        const std::vector<std::string> names{"I3", "I2", "I0"};
        std::vector<Column> want;
        for (const auto& n : names) want.push_back(parse_column(need(l, n)));
        const CharMultiset want_pi0 = parse_multiset(need(l, "pi0"), ctx_);
        std::vector<std::string> bad(4);
        int examined = 0;
        for (const auto& rho : candidates(s, {})) {
            if (!has_split_bessel(s, rho).exists) continue;
            ++examined;
            const auto cols = filtration_columns(rows[list_row(s.type)], w, s, rho);
            for (std::size_t i = 0; i < 3; ++i)
                if (cols.first[i] != want[i] && bad[i].empty())
                    bad[i] = column_text(cols.first[i]) + " at rho = " + rho.str();
            if (!multiset_equal(cols.second, want_pi0) && bad[3].empty())
                bad[3] = set_text(cols.second) + " at rho = " + rho.str();
        }
        if (examined == 0) {
            record(l, "rho", "split", "no splitting character", false);
            return;
        }
        for (std::size_t i = 0; i < 3; ++i)
            record(l, names[i], column_text(want[i]), bad[i].empty() ? column_text(want[i]) : bad[i], bad[i].empty());
        record(l, "pi0", set_text(want_pi0), bad[3].empty() ? set_text(want_pi0) : bad[3], bad[3].empty());
    }

public:
    // I3, I2^ss, I0 with the pi0 constituents boxed greedily in that order
    static std::pair<std::vector<Column>, CharMultiset> filtration_columns(const SiegelRow& row, const Character& w,
                                                                          const ReprSpec& s, const Character& rho) {
        const FiltrationReport f = bessel_filtration(row, w, rho);
        CharMultiset remaining = semisimplify(pi0(bessel_module(s, rho)));
        const CharMultiset all_pi0 = remaining;
        std::vector<CharMultiset> pieces{semisimplify(pi0(f.i3)), f.i2_ss, semisimplify(pi0(f.i0))};
        std::vector<Column> cols;
        for (const auto& piece : pieces) {
            Column c;
            for (const auto& chi : sorted(piece)) {
                auto it = std::find(remaining.begin(), remaining.end(), chi);
                const bool boxed = it != remaining.end();
                if (boxed) remaining.erase(it);
                c.emplace_back(chi, boxed);
            }
            std::sort(c.begin(), c.end());
            cols.push_back(std::move(c));
        }
        return {cols, all_pi0};
    }

private:
    TableDiff& out_;
    CharacterContext ctx_;
    std::map<std::string, std::vector<const TranscriptionLine*>> by_type_;
};

std::string rho_column_text(const ReprSpec& s, const Character& generic) {
    if (has_split_bessel(s, s.sigma * generic).exists) return "all";
    CharMultiset split;
    CharMultiset panel = rho_panel(s, generic);
    panel.push_back(s.sigma);
    for (const auto& rho : as_set(panel))
        if (has_split_bessel(s, rho).exists) split.push_back(rho);
    return split.empty() ? "none" : set_text(split);
}

std::string pi_text(const SiegelRow& row) {
    switch (row.kind) {
        case PiKind::PS: return "PS(" + row.a.str() + ", " + row.b.str() + ")";
        case PiKind::Sp: return "Sp(" + row.a.str() + ")";
        case PiKind::OneDim: return "1(" + row.a.str() + ")";
        case PiKind::Cusp:
            for (const auto& [ascii, label] : cusp_labels())
                if (label == row.cusp_label) return "cusp(" + ascii + ")";
            return "cusp(" + row.cusp_label + ")";
    }
    return "";
}

}  // namespace

TableDiff diff_tables(const std::vector<TranscriptionLine>& lines, const std::string& table) {
    TableDiff out;
    Checker(out).run(lines, table);
    return out;
}

std::vector<std::string> dump_tables() {
    const CharacterContext ctx = symbolic_context();
    const Character r = ctx.gen("r");
    std::vector<std::string> out;
    auto with_jp = [](Type t) { return !jacquet_vanishes(t); };

    for (Type t : all_types()) {
        if (!with_jp(t)) continue;
        const ReprSpec s = table_spec(t, false, ctx);
        out.push_back("T1 " + type_name(t) + " | omega=" + central_character(s).str() + " | rho=" + rho_column_text(s, r));
    }
    for (Type t : all_types()) {
        if (!with_jp(t)) continue;
        const auto rows = siegel_data(table_spec(t, false, ctx));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::string kernel;
            for (Type k : rows[i].kernel) kernel += (kernel.empty() ? "" : ",") + type_name(k);
            out.push_back("T2 " + type_name(t) + "." + std::to_string(i + 1) + " | pi=" + pi_text(rows[i]) +
                          " | chi=" + rows[i].chi_pi.str() + " | kernel=" + (kernel.empty() ? "0" : kernel) +
                          " | rho+=" + rows[i].rho_plus.str() + " | rho-=" + rows[i].rho_minus.str());
        }
    }
    for (Type t : all_types()) {
        if (!with_jp(t)) continue;
        const ReprSpec s = table_spec(t, false, ctx);
        const DeltaSets d = delta_sets(s);
        auto opt = [&](const CharMultiset& m) { return d.tilde_defined ? set_text(m) : std::string("-"); };
        out.push_back("T3 " + type_name(t) + " | Delta=" + set_text(d.delta) + " | Delta~=" + opt(d.delta_tilde) +
                      " | Delta0=" + set_text(d.delta0) + " | Delta1=" + opt(d.delta1) + " | Delta+=" +
                      set_text(d.delta_plus) + " | DeltaQ=" + set_text(d.delta_Q) +
                      " | omega=" + central_character(s).str());
    }
    for (Type t : all_types()) {
        const ReprSpec s = table_spec(t, true, ctx);
        std::string l = "T4 " + type_name(t) + " | rho=" + rho_column_text(s, r) + " | L=";
        CharMultiset panel = rho_panel(s, r);
        panel.push_back(s.sigma);
        std::string value = "---";
        for (const auto& rho : as_set(panel))
            if (has_split_bessel(s, rho).exists) {
                value = regular_lfactor(s, rho, Character()).str();
                break;
            }
        out.push_back(l + value);
    }
    for (Type t : all_types()) {
        const ReprSpec s = table_spec(t, true, ctx);
        CharMultiset panel = rho_panel(s, r);
        panel.push_back(s.sigma);
        panel.push_back(s.sigma * s.xi);
        for (const auto& rho : as_set(panel)) {
            const TSModule m = bessel_module(s, rho);
            const bool one = degree(m) == 1;
            std::string l = std::string(one ? "T5 " : "T6 ") + type_name(t) + " | rho={" + rho.str() + "} | module=" + m.str();
            if (one) l += std::string(" | perfect=") + (is_perfect(m) ? "yes" : "no");
            out.push_back(l);
        }
    }
    for (Type t : all_types()) {
        if (!with_jp(t)) continue;
        const ReprSpec s = table_spec(t, false, ctx);
        CharMultiset panel = rho_panel(s, r);
        auto split = std::find_if(panel.begin(), panel.end(),
                                  [&](const Character& c) { return has_split_bessel(s, c).exists; });
        if (split == panel.end()) continue;
        const Character rho = has_split_bessel(s, r).exists ? r : *split;
        const auto cols = Checker::filtration_columns(siegel_data(s)[list_row(t)], central_character(s), s, rho);
        auto text = [](const std::vector<std::pair<Character, bool>>& c) {
            if (c.empty()) return std::string("0");
            std::string x;
            for (const auto& [chi, boxed] : c) x += (x.empty() ? "" : " + ") + (boxed ? "[" + chi.str() + "]" : chi.str());
            return x;
        };
        out.push_back("T7 " + type_name(t) + " | I3=" + text(cols.first[0]) + " | I2=" + text(cols.first[1]) +
                      " | I0=" + text(cols.first[2]) + " | pi0=" + set_text(cols.second));
    }
    return out;
}

}  // namespace bessel
