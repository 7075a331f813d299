#pragma once

#include <string>
#include <vector>

#include "bessel/tsmod.hpp"

namespace bessel {

// Factor (1 - c X)^(-1), X = q^-s, c = mono(pi) q^(q_exp).  Stored through the
// effective character chi * nu^shift, whose nu part carries -q_exp.
class EulerFactor {
public:
    static EulerFactor trivial_factor() { return EulerFactor(); }
    explicit EulerFactor(Character effective) : eff_(std::move(effective)), trivial_(false) {}

    bool trivial() const { return trivial_; }
    const Character& character() const { return eff_; }
    // doubled q exponent of the coefficient
    int q_exp2() const { return -eff_.nu2(); }
    Character monomial() const { return eff_.unitary_part(); }

    bool operator==(const EulerFactor&) const = default;
    auto operator<=>(const EulerFactor&) const = default;

    std::string str() const;       // L(s, nu^1/2 * sigma)
    std::string pretty() const;    // L(s, ν^{1/2}σ)
    std::string polynomial() const;  // (1 - σ(π) q^{-1/2} X)

private:
    EulerFactor() = default;
    Character eff_;
    bool trivial_ = true;
};

// L(chi, s + shift2/2); trivial for ramified chi
EulerFactor tate(const Character& chi, int shift2 = 0);

class LFactorProduct {
public:
    LFactorProduct() = default;
    LFactorProduct(std::vector<EulerFactor> den, std::vector<EulerFactor> num = {});

    const std::vector<EulerFactor>& denominator() const { return den_; }
    const std::vector<EulerFactor>& numerator() const { return num_; }
    bool is_one() const { return den_.empty() && num_.empty(); }
    // number of Euler factors counted with multiplicity, both sides
    std::size_t size() const { return den_.size() + num_.size(); }

    bool operator==(const LFactorProduct&) const = default;

    std::string str() const;
    std::string pretty() const;
    std::string polynomial() const;

private:
    std::vector<EulerFactor> den_;
    std::vector<EulerFactor> num_;
};

LFactorProduct lfactor_of(const TSModule& m, int shift2 = 0);
LFactorProduct lfactor_of_chars(const CharMultiset& chars, int shift2 = 0);
LFactorProduct multiply(const LFactorProduct& a, const LFactorProduct& b);
LFactorProduct divide(const LFactorProduct& a, const LFactorProduct& b);
// true iff a divides b, i.e. b / a has no numerator
bool divides(const LFactorProduct& a, const LFactorProduct& b);
// L(s, chi) -> L(s, mu chi) factorwise
LFactorProduct twist(const LFactorProduct& p, const Character& mu);

// "3/2", "-1", "0"
std::string half_text(int twice);

}  // namespace bessel
