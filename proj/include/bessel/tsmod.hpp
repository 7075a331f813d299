#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bessel/tmod.hpp"

namespace bessel {

// A Jordan block of pi0 together with the length of its image in Y.
struct AtomPart {
    Character chi;
    int len = 1;
    int keep = 1;  // 1 <= keep <= len once canonical

    auto operator<=>(const AtomPart&) const = default;
    bool operator==(const AtomPart&) const = default;
};

// Degree-one module E[f] for f: pi0 ->> Y.  No parts means S.
// Parts with keep == 0 are never stored: such a block splits off as a finite
// summand, so TSModule moves it into its finite part.
class Atom {
public:
    Atom() = default;
    explicit Atom(std::vector<AtomPart> parts);

    const std::vector<AtomPart>& parts() const { return parts_; }
    bool is_S() const { return parts_.empty(); }

    TModule pi0() const;
    TModule image() const;
    TModule kernel() const;
    bool perfect() const;

    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;

    std::string str() const;
    std::string pretty() const;

private:
    std::vector<AtomPart> parts_;
};

class TSModule {
public:
    TSModule() = default;
    TSModule(TModule fin, std::vector<Atom> atoms);

    static TSModule zero() { return {}; }
    static TSModule S();
    static TSModule finite(const TModule& x);

    const TModule& fin() const { return fin_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    bool operator==(const TSModule&) const = default;

    std::string str() const;
    std::string pretty() const;

private:
    TModule fin_;
    std::vector<Atom> atoms_;
};

int degree(const TSModule& m);
TModule pi0(const TSModule& m);
TModule kappa(const TSModule& m);
bool is_perfect(const TSModule& m);

TSModule direct_sum(const TSModule& a, const TSModule& b);

// E[X]; NotCyclic unless X is cyclic
TSModule universal_extension(const TModule& x);
// E[f] where block i of X (in X.blocks() order) keeps keep[i] of its length
TSModule fiber_ext(const TModule& x, const std::vector<int>& keep);
// E[X -> X/K]: each block of K is cut from the end of an X-block of the same character
TSModule fiber_ext_kernel(const TModule& x, const TModule& kernel);

TSModule twist_ts(const TSModule& m, const Character& mu);

struct TDims {
    int inv = 0;
    int coinv = 0;
};
TDims dims_T(const TSModule& m, const Character& chi);

TSModule kirillov_quotient(const TSModule& m);

// M_rho and M^rho on the computable class; OutsideComputableClass otherwise.
TSModule mellin_lower(const Character& rho, const TSModule& m);
TSModule mellin_upper(const Character& rho, const TSModule& m);

struct GrothendieckClass {
    int deg = 0;
    CharMultiset ss;
    bool operator==(const GrothendieckClass&) const = default;
};
GrothendieckClass grothendieck_class(const TSModule& m);

}  // namespace bessel
