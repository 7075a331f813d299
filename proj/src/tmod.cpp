#include "bessel/tmod.hpp"

#include <algorithm>
#include <map>

#include "bessel/error.hpp"

namespace bessel {

TModule::TModule(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_)
        if (b.len < 1) throw InvalidSpec("Jordan block of length " + std::to_string(b.len));
    std::sort(blocks_.begin(), blocks_.end());
}

TModule TModule::semisimple(const CharMultiset& chars) {
    std::vector<Block> bs;
    for (const auto& c : chars) bs.push_back({c, 1});
    return TModule(std::move(bs));
}

TModule TModule::cyclic_from(const CharMultiset& chars) {
    std::map<Character, int> lens;
    for (const auto& c : chars) ++lens[c];
    std::vector<Block> bs;
    for (const auto& [c, n] : lens) bs.push_back({c, n});
    return TModule(std::move(bs));
}

int TModule::dimension() const {
    int d = 0;
    for (const auto& b : blocks_) d += b.len;
    return d;
}

std::string TModule::str() const {
    if (blocks_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += " + ";
        const auto& b = blocks_[i];
        if (b.len > 1)
            out += "(" + b.chi.str() + ")^(" + std::to_string(b.len) + ")";
        else
            out += b.chi.str();
    }
    return out;
}

std::string TModule::pretty() const {
    if (blocks_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += " ⊕ ";
        const auto& b = blocks_[i];
        if (b.len > 1) {
            out += "(" + b.chi.pretty() + ")^(" + std::to_string(b.len) + ")";
        } else {
            out += b.chi.pretty();
        }
    }
    return out;
}

InvCoinv inv_coinv_dims(const TModule& x, const Character& chi) {
    InvCoinv r;
    for (const auto& b : x.blocks()) {
        if (b.chi != chi) continue;
        ++r.inv;
        ++r.coinv;
        r.gen_eig += b.len;
    }
    return r;
}

bool is_cyclic(const TModule& x) {
    const auto& bs = x.blocks();
    for (std::size_t i = 1; i < bs.size(); ++i)
        if (bs[i].chi == bs[i - 1].chi) return false;
    return true;
}

TModule twist(const TModule& x, const Character& mu) {
    std::vector<Block> bs;
    for (const auto& b : x.blocks()) bs.push_back({b.chi * mu, b.len});
    return TModule(std::move(bs));
}

TModule direct_sum(const TModule& x, const TModule& y) {
    std::vector<Block> bs = x.blocks();
    bs.insert(bs.end(), y.blocks().begin(), y.blocks().end());
    return TModule(std::move(bs));
}

CharMultiset semisimplify(const TModule& x) {
    CharMultiset r;
    for (const auto& b : x.blocks())
        for (int i = 0; i < b.len; ++i) r.push_back(b.chi);
    return r;
}

}  // namespace bessel
