#pragma once

#include <string>
#include <vector>

#include "bessel/chargroup.hpp"

namespace bessel {

// Jordan block chi^(len)
struct Block {
    Character chi;
    int len = 1;

    auto operator<=>(const Block&) const = default;
    bool operator==(const Block&) const = default;
};

// Finite-dimensional smooth T-module as a multiset of Jordan blocks.
// Blocks are kept sorted so == is isomorphism.
class TModule {
public:
    TModule() = default;
    explicit TModule(std::vector<Block> blocks);
    // one length-1 block per element
    static TModule semisimple(const CharMultiset& chars);
    // equal characters merged into a single Jordan block
    static TModule cyclic_from(const CharMultiset& chars);

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    int dimension() const;

    bool operator==(const TModule&) const = default;

    std::string str() const;
    std::string pretty() const;

private:
    std::vector<Block> blocks_;
};

struct InvCoinv {
    int inv = 0;
    int coinv = 0;
    int gen_eig = 0;
};

InvCoinv inv_coinv_dims(const TModule& x, const Character& chi);
bool is_cyclic(const TModule& x);
TModule twist(const TModule& x, const Character& mu);
TModule direct_sum(const TModule& x, const TModule& y);
CharMultiset semisimplify(const TModule& x);

}  // namespace bessel
