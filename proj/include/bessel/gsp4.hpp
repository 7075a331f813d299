#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bessel/lfactor.hpp"
#include "bessel/tsmod.hpp"

namespace bessel {

enum class Type {
    I, IIa, IIb, IIIa, IIIb, IVa, IVb, IVc, IVd, Va, Vb, Vc, Vd,
    VIa, VIb, VIc, VId, VII, VIIIa, VIIIb, IXa, IXb, X, XIa, XIb,
    CuspGeneric, CuspNonGeneric,
};

const std::vector<Type>& all_types();
std::string type_name(Type t);
Type parse_type(const std::string& s);
bool is_generic(Type t);
// VII, VIII, IX and the supercuspidals have J_P = 0
bool jacquet_vanishes(Type t);
// Whittaker multiplicity m_Pi
int whittaker_multiplicity(Type t);

// Parameters in the normalization of the classification list; `sigma` is the
// global twist applied on top of it.
struct ReprSpec {
    Type type = Type::I;
    Character chi1;
    Character chi2;
    Character xi;        // quadratic chi_0 of the V family
    Character omega_pi;  // central character of the cuspidal pi_c (X)
    Character sigma;
};

// Sally-Tadic parameterization as used by the L-factor table:
// IIa/IIb are chi St x| sigma and chi 1 x| sigma, so chi1 = chi and the
// normalized twist is chi*sigma.  All other types are literal.
ReprSpec from_sally_tadic(Type t, const Character& chi1, const Character& chi2,
                          const Character& sigma, const Character& xi,
                          const Character& omega_pi);
Character sally_tadic_sigma(const ReprSpec& s);

struct Violation {
    std::string condition;
    // a normalization convention rather than an irreducibility condition
    bool convention = false;
};
// Conditions column; comparisons go through ctx when given
std::vector<Violation> validate(const ReprSpec& s, CharacterContext* ctx = nullptr);

Character central_character(const ReprSpec& s);

struct DeltaSets {
    CharMultiset delta, delta_tilde, delta0, delta1, delta_plus, delta_minus, delta_Q;
    // false where the table leaves the split-model columns blank
    bool tilde_defined = true;
};
DeltaSets delta_sets(const ReprSpec& s);

struct SplitExistence {
    bool exists = false;
    int degree = 0;
};
SplitExistence has_split_bessel(const ReprSpec& s, const Character& rho,
                                CharacterContext* ctx = nullptr);

enum class PiKind { PS, Sp, OneDim, Cusp };

struct SiegelRow {
    PiKind kind = PiKind::PS;
    Character a, b;        // PS(a,b), Sp(a), a o det
    Character cusp_omega;  // central character of a cuspidal pi
    std::string cusp_label;  // "π_c", "π_c^∨", "ν^{-1/2}π_c", ...
    Character chi_pi;
    Character rho_plus, rho_minus;  // as transcribed
    std::vector<Type> kernel;

    Character pi_central() const;
    std::string sigma_pi_text() const;
};
std::vector<SiegelRow> siegel_data(const ReprSpec& s);
// index into siegel_data of the sigma_Pi named in the classification list
std::size_t list_row(Type t);

enum class PairClass { Ordinary, NonOrdinary, Extraordinary };
std::string pair_class_name(PairClass c);
PairClass classify_pair(const SiegelRow& row, const Character& omega, const Character& rho,
                        CharacterContext* ctx = nullptr);

struct FiltrationReport {
    TSModule i3;
    CharMultiset i2_ss;
    TSModule i1;
    TSModule i0;
    TSModule beta_upper_i3, beta_upper_i1, beta_upper_i0;  // level 2 vanishes
    int m_index = 0;
};
FiltrationReport bessel_filtration(const SiegelRow& row, const Character& omega,
                                   const Character& rho, CharacterContext* ctx = nullptr);

enum class ExceptionalCase { NonExceptional, FullyInducedNonOrdinary, Extraordinary, IIIaSpecial };
std::string exceptional_case_name(ExceptionalCase c);

struct ExceptionalResult {
    ExceptionalCase which = ExceptionalCase::NonExceptional;
    Character representative;  // element of {rho, rho*} not in Delta_+
};
ExceptionalResult exceptional_case(const ReprSpec& s, const Character& rho,
                                   CharacterContext* ctx = nullptr);

// delta_P^{-1/2}-normalized beta_rho(Pi)
TSModule bessel_module(const ReprSpec& s, const Character& rho, CharacterContext* ctx = nullptr);
// delta_P^{-1/2}-normalized beta^rho(Pi)
TSModule beta_upper(const ReprSpec& s, const Character& rho, CharacterContext* ctx = nullptr);

LFactorProduct regular_lfactor(const ReprSpec& s, const Character& rho, const Character& mu,
                               CharacterContext* ctx = nullptr);
LFactorProduct kl_lfactor(const ReprSpec& s, const Character& rho, const Character& mu,
                          CharacterContext* ctx = nullptr);
LFactorProduct subregular_quotient(const ReprSpec& s, const Character& rho, const Character& mu,
                                   CharacterContext* ctx = nullptr);

// Table 4 entry in its own parameterization, before the mu-twist
CharMultiset regular_lfactor_characters(const ReprSpec& s);

}  // namespace bessel
