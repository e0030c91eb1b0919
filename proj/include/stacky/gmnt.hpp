#pragma once

#include <optional>

namespace stacky {

// Query for the surjectivity of H^0(K+E) (x) H^0(K+E') -> H^0(2K+E+E')
// when g >= 2, or of H^0(D) (x) H^0(D') -> H^0(D+D') when g <= 1.
// Flags are optional; consulting an unset flag raises InsufficientFlags.
struct GmntQuery {
    int g = 2;
    std::optional<bool> hyperelliptic;

    // g >= 2: degrees of the effective twists E, E'.
    long long degE = 0, degEp = 0;
    std::optional<bool> E_hyp_fixed, Ep_hyp_fixed, E_equiv_Ep;

    // g <= 1: divisor degrees (may be negative for g = 0).
    long long degD = 0, degDp = 0;
    std::optional<bool> D_equiv_Dp;  // consulted when g = 1 and both degrees are 2
};

bool gmnt_surjective(const GmntQuery& q);

// Human-readable citation of the table cell or lemma case that decided.
struct GmntVerdict {
    bool surjective = false;
    const char* cell = "";
};
GmntVerdict gmnt_verdict(const GmntQuery& q);

}  // namespace stacky
