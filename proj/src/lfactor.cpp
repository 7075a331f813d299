#include "bessel/lfactor.hpp"

#include <algorithm>
#include <map>

namespace bessel {

std::string half_text(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

namespace {

// runs of equal factors -> (factor, multiplicity)
std::vector<std::pair<EulerFactor, int>> runs(const std::vector<EulerFactor>& fs) {
    std::vector<std::pair<EulerFactor, int>> out;
    for (const auto& f : fs) {
        if (!out.empty() && out.back().first == f) {
            ++out.back().second;
        } else {
            out.push_back({f, 1});
        }
    }
    return out;
}

template <class Fn>
std::string render(const LFactorProduct& p, Fn factor_text) {
    if (p.is_one()) return "1";
    std::string out;
    auto emit = [&](const std::vector<EulerFactor>& fs, int sign) {
        for (const auto& [f, n] : runs(fs)) {
            if (!out.empty()) out += " ";
            out += factor_text(f);
            int e = sign * n;
            if (e != 1) out += "^" + std::to_string(e);
        }
    };
    emit(p.denominator(), 1);
    emit(p.numerator(), -1);
    return out;
}

}  // namespace

std::string EulerFactor::str() const { return trivial_ ? "1" : "L(s, " + eff_.str() + ")"; }

std::string EulerFactor::pretty() const { return trivial_ ? "1" : "L(s, " + eff_.pretty() + ")"; }

std::string EulerFactor::polynomial() const {
    if (trivial_) return "1";
    std::string c;
    Character mono = monomial();
    if (!mono.trivial()) c += mono.pretty() + "(π) ";
    if (q_exp2() != 0) c += "q^{" + half_text(q_exp2()) + "} ";
    return "(1 - " + c + "X)";
}

EulerFactor tate(const Character& chi, int shift2) {
    if (!is_unramified(chi)) return EulerFactor::trivial_factor();
    return EulerFactor(chi * Character::nu(shift2));
}

LFactorProduct::LFactorProduct(std::vector<EulerFactor> den, std::vector<EulerFactor> num) {
    auto drop_trivial = [](std::vector<EulerFactor>& v) {
        v.erase(std::remove_if(v.begin(), v.end(), [](const EulerFactor& f) { return f.trivial(); }),
                v.end());
        std::sort(v.begin(), v.end());
    };
    drop_trivial(den);
    drop_trivial(num);
    // cancel common factors
    std::vector<EulerFactor> d, n;
    std::size_t i = 0, j = 0;
    while (i < den.size() || j < num.size()) {
        if (j == num.size() || (i < den.size() && den[i] < num[j])) {
            d.push_back(den[i++]);
        } else if (i == den.size() || num[j] < den[i]) {
            n.push_back(num[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    den_ = std::move(d);
    num_ = std::move(n);
}

std::string LFactorProduct::str() const {
    return render(*this, [](const EulerFactor& f) { return f.str(); });
}

std::string LFactorProduct::pretty() const {
    return render(*this, [](const EulerFactor& f) { return f.pretty(); });
}

std::string LFactorProduct::polynomial() const {
    if (is_one()) return "1";
    auto prod = [](const std::vector<EulerFactor>& fs) {
        if (fs.empty()) return std::string("1");
        std::string s;
        for (const auto& [f, n] : runs(fs)) {
            s += f.polynomial();
            if (n != 1) s += "^" + std::to_string(n);
        }
        return s;
    };
    return prod(num_) + " / " + prod(den_);
}

LFactorProduct lfactor_of_chars(const CharMultiset& chars, int shift2) {
    std::vector<EulerFactor> den;
    for (const auto& c : chars) den.push_back(tate(c, shift2));
    return LFactorProduct(std::move(den));
}

LFactorProduct lfactor_of(const TSModule& m, int shift2) {
    return lfactor_of_chars(semisimplify(pi0(m)), shift2);
}

LFactorProduct multiply(const LFactorProduct& a, const LFactorProduct& b) {
    auto den = a.denominator();
    den.insert(den.end(), b.denominator().begin(), b.denominator().end());
    auto num = a.numerator();
    num.insert(num.end(), b.numerator().begin(), b.numerator().end());
    return LFactorProduct(std::move(den), std::move(num));
}

LFactorProduct divide(const LFactorProduct& a, const LFactorProduct& b) {
    return multiply(a, LFactorProduct(b.numerator(), b.denominator()));
}

bool divides(const LFactorProduct& a, const LFactorProduct& b) { return divide(b, a).numerator().empty(); }

LFactorProduct twist(const LFactorProduct& p, const Character& mu) {
    auto tw = [&](const std::vector<EulerFactor>& fs) {
        std::vector<EulerFactor> out;
        for (const auto& f : fs) out.push_back(tate(f.character() * mu));
        return out;
    };
    return LFactorProduct(tw(p.denominator()), tw(p.numerator()));
}

}  // namespace bessel
