#include "bessel/textio.hpp"

#include <algorithm>
#include <cctype>

#include "bessel/error.hpp"

namespace bessel {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_top(std::string_view text, const std::vector<std::string>& seps) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (depth == 0) {
            bool hit = false;
            for (const auto& s : seps) {
                if (text.substr(i, s.size()) == s) {
                    out.push_back(trim(text.substr(start, i - start)));
                    i += s.size();
                    start = i;
                    hit = true;
                    break;
                }
            }
            if (hit) continue;
        }
        ++i;
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    out.push_back(trim(text.substr(start)));
    return out;
}

std::string replace_word(std::string_view text, std::string_view word, std::string_view by) {
    auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    std::string out;
    for (std::size_t i = 0; i < text.size();) {
        if (text.substr(i, word.size()) == word && (i == 0 || !ident(text[i - 1])) &&
            (i + word.size() == text.size() || !ident(text[i + word.size()]))) {
            out += by;
            i += word.size();
        } else {
            out += text[i++];
        }
    }
    return out;
}

namespace {

const std::vector<std::string> kPlus{"+", "⊕"};

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

Block parse_block(const std::string& text, const CharacterContext& ctx) {
    std::string t = trim(text);
    int len = 1;
    // trailing "^(m)"
    if (!t.empty() && t.back() == ')') {
        auto pos = t.rfind("^(");
        if (pos != std::string::npos) {
            std::string num = t.substr(pos + 2, t.size() - pos - 3);
            try {
                len = std::stoi(num);
            } catch (const std::exception&) {
                throw ParseError("bad block length in '" + t + "'");
            }
            if (len < 1) throw ParseError("block length must be positive in '" + t + "'");
            t = trim(t.substr(0, pos));
        }
    }
    return {ctx.parse(t), len};
}

TSModule parse_atom(const std::string& inner, const CharacterContext& ctx) {
    auto sides = split_top(inner, {"->", "→"});
    if (sides.size() == 1) return universal_extension(parse_tmodule(sides[0], ctx));
    if (sides.size() != 2) throw ParseError("bad E[...] term '" + inner + "'");
    const TModule x = parse_tmodule(sides[0], ctx);
    auto quot = split_top(sides[1], {" mod "});
    if (quot.size() == 2) return fiber_ext_kernel(parse_tmodule(quot[0], ctx), TModule({{ctx.parse(quot[1]), 1}}));
    const TModule y = parse_tmodule(sides[1], ctx);
    std::vector<int> keep(x.blocks().size(), 0);
    for (const auto& yb : y.blocks()) {
        int best = -1;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            const Block& xb = x.blocks()[i];
            if (keep[i] != 0 || xb.chi != yb.chi || xb.len < yb.len) continue;
            if (best < 0 || xb.len > x.blocks()[best].len) best = static_cast<int>(i);
        }
        if (best < 0) throw ParseError("image block " + yb.chi.str() + " is not a quotient of " + x.str());
        keep[best] = yb.len;
    }
    return fiber_ext(x, keep);
}

}  // namespace

TModule parse_tmodule(std::string_view text, const CharacterContext& ctx) {
    std::string t = trim(text);
    if (t.empty() || t == "0") return {};
    std::vector<Block> blocks;
    for (const auto& part : split_top(t, kPlus)) blocks.push_back(parse_block(part, ctx));
    return TModule(std::move(blocks));
}

TSModule parse_tsmodule(std::string_view text, const CharacterContext& ctx) {
    std::string t = trim(text);
    if (t.empty() || t == "0") return {};
    TSModule out;
    for (const auto& term : split_top(t, kPlus)) {
        if (term == "S" || term == "𝕊") {
            out = direct_sum(out, TSModule::S());
        } else if (starts_with(term, "E[") && term.back() == ']') {
            out = direct_sum(out, parse_atom(term.substr(2, term.size() - 3), ctx));
        } else if (starts_with(term, "i_*(") && term.back() == ')') {
            out = direct_sum(out, TSModule::finite(parse_tmodule(term.substr(4, term.size() - 5), ctx)));
        } else {
            out = direct_sum(out, TSModule::finite(TModule({parse_block(term, ctx)})));
        }
    }
    return out;
}

LFactorProduct parse_lfactor(std::string_view text, const CharacterContext& ctx) {
    std::string t = trim(text);
    if (t == "1") return {};
    std::vector<EulerFactor> den, num;
    std::size_t i = 0;
    while (true) {
        while (i < t.size() && t[i] == ' ') ++i;
        if (i == t.size()) break;
        if (t.compare(i, 4, "L(s,") != 0) throw ParseError("expected 'L(s, ...)' in '" + t + "'");
        std::size_t close = t.find(')', i);
        if (close == std::string::npos) throw ParseError("unterminated factor in '" + t + "'");
        Character chi = ctx.parse(t.substr(i + 4, close - i - 4));
        i = close + 1;
        int e = 1;
        if (i < t.size() && t[i] == '^') {
            std::size_t j = i + 1;
            if (j < t.size() && t[j] == '-') ++j;
            while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
            try {
                e = std::stoi(t.substr(i + 1, j - i - 1));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + t + "'");
            }
            i = j;
        }
        for (int k = 0; k < std::abs(e); ++k) (e > 0 ? den : num).push_back(tate(chi));
    }
    return LFactorProduct(std::move(den), std::move(num));
}

CharMultiset parse_multiset(std::string_view text, const CharacterContext& ctx) {
    std::string t = trim(text);
    if (t == "∅" || t == "{}" || t.empty()) return {};
    if (t.front() != '{' || t.back() != '}') throw ParseError("expected '{...}' in '" + t + "'");
    CharMultiset out;
    for (const auto& e : split_top(t.substr(1, t.size() - 2), {","})) out.push_back(ctx.parse(e));
    return sorted(out);
}

}  // namespace bessel
