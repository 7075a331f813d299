#include "bessel/tsmod.hpp"

#include <algorithm>

#include "bessel/error.hpp"

namespace bessel {

Atom::Atom(std::vector<AtomPart> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
        if (p.len < 1 || p.keep < 0 || p.keep > p.len)
            throw InvalidSpec("bad atom part " + p.chi.str() + " len=" + std::to_string(p.len) +
                              " keep=" + std::to_string(p.keep));
    }
    std::sort(parts_.begin(), parts_.end());
    // monodromy bound: Y has at most one block per character
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].keep == 0) continue;
        for (std::size_t j = i + 1; j < parts_.size(); ++j) {
            if (parts_[j].keep > 0 && parts_[j].chi == parts_[i].chi)
                throw MonodromyViolation("two blocks of " + parts_[i].chi.str() + " survive in Y");
        }
    }
}

TModule Atom::pi0() const {
    std::vector<Block> bs;
    for (const auto& p : parts_) bs.push_back({p.chi, p.len});
    return TModule(std::move(bs));
}

TModule Atom::image() const {
    std::vector<Block> bs;
    for (const auto& p : parts_)
        if (p.keep > 0) bs.push_back({p.chi, p.keep});
    return TModule(std::move(bs));
}

TModule Atom::kernel() const {
    std::vector<Block> bs;
    for (const auto& p : parts_)
        if (p.len > p.keep) bs.push_back({p.chi, p.len - p.keep});
    return TModule(std::move(bs));
}

bool Atom::perfect() const { return kernel().empty(); }

std::string Atom::str() const {
    if (parts_.empty()) return "S";
    if (perfect()) return "E[" + pi0().str() + "]";
    return "E[" + pi0().str() + " -> " + image().str() + "]";
}

std::string Atom::pretty() const {
    if (parts_.empty()) return "𝕊";
    if (perfect()) return "E[" + pi0().pretty() + "]";
    return "E[" + pi0().pretty() + " → " + image().pretty() + "]";
}

// ---------------------------------------------------------------------------

TSModule::TSModule(TModule fin, std::vector<Atom> atoms) {
    std::vector<Block> fb = fin.blocks();
    for (auto& a : atoms) {
        std::vector<AtomPart> kept;
        for (const auto& p : a.parts()) {
            if (p.keep == 0) {
                fb.push_back({p.chi, p.len});
            } else {
                kept.push_back(p);
            }
        }
        atoms_.emplace_back(std::move(kept));
    }
    fin_ = TModule(std::move(fb));
    std::sort(atoms_.begin(), atoms_.end());
}

TSModule TSModule::S() { return TSModule({}, {Atom{}}); }

TSModule TSModule::finite(const TModule& x) { return TSModule(x, {}); }

std::string TSModule::str() const {
    std::vector<std::string> parts;
    for (const auto& a : atoms_) parts.push_back(a.str());
    for (const auto& b : fin_.blocks())
        parts.push_back("i_*(" + TModule({b}).str() + ")");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

std::string TSModule::pretty() const {
    std::vector<std::string> parts;
    for (const auto& a : atoms_) parts.push_back(a.pretty());
    for (const auto& b : fin_.blocks()) parts.push_back(TModule({b}).pretty());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
    return out;
}

int degree(const TSModule& m) { return static_cast<int>(m.atoms().size()); }

TModule pi0(const TSModule& m) {
    TModule r = m.fin();
    for (const auto& a : m.atoms()) r = direct_sum(r, a.pi0());
    return r;
}

TModule kappa(const TSModule& m) {
    TModule r = m.fin();
    for (const auto& a : m.atoms()) r = direct_sum(r, a.kernel());
    return r;
}

bool is_perfect(const TSModule& m) {
    if (!kappa(m).empty()) return false;
    return std::all_of(m.atoms().begin(), m.atoms().end(),
                       [](const Atom& a) { return is_cyclic(a.pi0()); });
}

TSModule direct_sum(const TSModule& a, const TSModule& b) {
    std::vector<Atom> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    return TSModule(direct_sum(a.fin(), b.fin()), std::move(atoms));
}

TSModule universal_extension(const TModule& x) {
    if (!is_cyclic(x)) throw NotCyclic("E[X] needs cyclic X, got " + x.str());
    std::vector<AtomPart> parts;
    for (const auto& b : x.blocks()) parts.push_back({b.chi, b.len, b.len});
    return TSModule({}, {Atom(std::move(parts))});
}

TSModule fiber_ext(const TModule& x, const std::vector<int>& keep) {
    if (keep.size() != x.blocks().size())
        throw InvalidSpec("quotient spec has " + std::to_string(keep.size()) + " entries for " +
                          std::to_string(x.blocks().size()) + " blocks");
    std::vector<AtomPart> parts;
    for (std::size_t i = 0; i < keep.size(); ++i)
        parts.push_back({x.blocks()[i].chi, x.blocks()[i].len, keep[i]});
    return TSModule({}, {Atom(std::move(parts))});
}

TSModule fiber_ext_kernel(const TModule& x, const TModule& kernel) {
    std::vector<int> keep;
    for (const auto& b : x.blocks()) keep.push_back(b.len);
    for (const auto& k : kernel.blocks()) {
        // prefer the longest block that can absorb the cut
        int best = -1;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (x.blocks()[i].chi != k.chi || keep[i] != x.blocks()[i].len || keep[i] < k.len) continue;
            if (best < 0 || x.blocks()[i].len > x.blocks()[best].len) best = static_cast<int>(i);
        }
        if (best < 0) throw InvalidSpec("kernel block " + k.chi.str() + " does not fit into " + x.str());
        keep[best] -= k.len;
    }
    return fiber_ext(x, keep);
}

TSModule twist_ts(const TSModule& m, const Character& mu) {
    std::vector<Atom> atoms;
    for (const auto& a : m.atoms()) {
        std::vector<AtomPart> parts;
        for (const auto& p : a.parts()) parts.push_back({p.chi * mu, p.len, p.keep});
        atoms.emplace_back(std::move(parts));
    }
    return TSModule(twist(m.fin(), mu), std::move(atoms));
}

TDims dims_T(const TSModule& m, const Character& chi) {
    // finite blocks: one invariant and one coinvariant each.
    // E[f]: from 0 -> i_*(ker f) -> E[f] -> E[Y] -> 0 and E[Y]^chi = 0, dim E[Y]_chi = 1.
    TDims d;
    auto fin = inv_coinv_dims(m.fin(), chi);
    d.inv += fin.inv;
    d.coinv += fin.coinv;
    for (const auto& a : m.atoms()) {
        auto k = inv_coinv_dims(a.kernel(), chi);
        d.inv += k.inv;
        d.coinv += k.coinv + 1;
    }
    return d;
}

TSModule kirillov_quotient(const TSModule& m) {
    std::vector<Atom> atoms;
    for (const auto& a : m.atoms()) {
        std::vector<AtomPart> parts;
        for (const auto& p : a.parts()) parts.push_back({p.chi, p.keep, p.keep});
        atoms.emplace_back(std::move(parts));
    }
    return TSModule({}, std::move(atoms));
}

namespace {

[[noreturn]] void outside(const std::string& what) {
    throw OutsideComputableClass("Mellin functor not determined on " + what);
}

TSModule lower_block(const Character& rho, const Block& b) {
    const Character nu_rho = Character::nu(2) * rho;
    if (b.chi == nu_rho) return TSModule({}, {Atom({{b.chi, b.len, 1}})});
    return TSModule::finite(TModule({b}));
}

TSModule lower_atom(const Character& rho, const Atom& a) {
    if (a.is_S()) return TSModule::S();
    if (a.parts().size() != 1) outside(a.str());
    const AtomPart& p = a.parts()[0];
    const Character nu_rho = Character::nu(2) * rho;
    const Character nu2_rho = Character::nu(4) * rho;
    const TSModule self({}, {a});
    if (p.len == 1) {
        if (p.chi == nu2_rho) return direct_sum(TSModule::S(), TSModule::finite(TModule({{p.chi, 1}})));
        return self;
    }
    if (p.keep == p.len) {
        if (p.len > 2) outside(a.str());
        if (p.chi == nu_rho || p.chi == nu2_rho) return TSModule({}, {Atom({{p.chi, 2, 1}})});
        return self;
    }
    if (p.keep != 1) outside(a.str());
    // E[mu^(m) ->> mu], read off 0 -> i_*(mu^(m-1)) -> E[f] -> E[mu] -> 0
    if (p.chi == nu2_rho) return direct_sum(TSModule::S(), TSModule::finite(TModule({{p.chi, p.len}})));
    if (p.chi == nu_rho) outside(a.str());
    return self;
}

TSModule upper_atom(const Character& rho, const Atom& a) {
    if (a.is_S()) return {};
    if (a.parts().size() != 1) outside(a.str());
    const AtomPart& p = a.parts()[0];
    if (p.keep == p.len && p.len > 2) outside(a.str());
    if (p.keep != p.len && p.keep != 1) outside(a.str());
    if (p.keep != p.len && p.chi == Character::nu(2) * rho) outside(a.str());
    return {};
}

}  // namespace

TSModule mellin_lower(const Character& rho, const TSModule& m) {
    TSModule r;
    for (const auto& b : m.fin().blocks()) r = direct_sum(r, lower_block(rho, b));
    for (const auto& a : m.atoms()) r = direct_sum(r, lower_atom(rho, a));
    return r;
}

TSModule mellin_upper(const Character& rho, const TSModule& m) {
    TSModule r;
    const Character nu_rho = Character::nu(2) * rho;
    for (const auto& b : m.fin().blocks())
        if (b.chi == nu_rho) r = direct_sum(r, TSModule::S());
    for (const auto& a : m.atoms()) r = direct_sum(r, upper_atom(rho, a));
    return r;
}

GrothendieckClass grothendieck_class(const TSModule& m) {
    return {degree(m), semisimplify(pi0(m))};
}

}  // namespace bessel
