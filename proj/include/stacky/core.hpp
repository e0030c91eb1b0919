#pragma once

#include <string>
#include <vector>

#include "stacky/fraction.hpp"

namespace stacky {

// Signature (g; e_1,...,e_r; delta) of a log stacky curve: coarse genus,
// ascending stabilizer orders, log degree.  The sole input of the pipeline.
struct Signature {
    int g = 0;
    std::vector<int> e;  // each >= 2, sorted ascending
    int delta = 0;

    int r() const { return static_cast<int>(e.size()); }
    int max_e() const;                    // max(1, e_1, ..., e_r)
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.g == b.g && a.e == b.e && a.delta == b.delta;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
    friend bool operator<(const Signature& a, const Signature& b);
};

// Grammar "(g;e1,...,er;d)"; empty e-list written "(g;;d)" or "(g;-;d)".
// The alternate bare grammar "g:e1,...,er:d" is also accepted.
Signature parse_signature(const std::string& text);
std::string format_signature(const Signature& sig);

// Flags the classical tables branch on.  Signatures do not determine them,
// so they are explicit inputs; defaults describe a generic curve.
struct CurveFlags {
    bool hyperelliptic = false;
    bool exceptional = false;  // trigonal or plane quintic
    bool delta_hyperelliptic_fixed = false;
    bool delta_extends_g13 = false;
};

enum class CaseTag {
    NegativeDegree,
    ZeroDegree,
    GenusZeroHyperbolic,
    GenusOneHyperbolic,
    HighGenus,
    ClassicalLog,
};

std::string to_string(CaseTag tag);

// A = deg(K + stacky + Delta) = 2g - 2 + delta + sum_i (1 - 1/e_i).
Fraction deg_canonical(const Signature& sig);

// g(X) + (1/2) sum_i (1 - 1/e_i); log points excluded.
Fraction stacky_genus(const Signature& sig);

// deg floor(dD) = d(2g-2) + d*delta + sum_i floor(d(e_i-1)/e_i).
long long floor_degree(const Signature& sig, long long d);

// dim H^0(X, floor(dD)) by the Riemann-Roch case split; throws
// UnhandledSpecialDivisor for g >= 2 special divisors the formulas
// do not decide (never needed by the theorems).
long long dim_h0(const Signature& sig, long long d);

CaseTag classify(const Signature& sig);

// lcm(1, e_1, ..., e_r); floor_degree is periodic with drift L*A over L.
long long period_lcm(const Signature& sig);

}  // namespace stacky
