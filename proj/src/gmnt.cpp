#include "stacky/gmnt.hpp"

#include <algorithm>

#include "stacky/error.hpp"

namespace stacky {

namespace {

bool get(const std::optional<bool>& flag, const char* name) {
    if (!flag) throw InsufficientFlags(std::string("gmnt: flag '") + name + "' required but unset");
    return *flag;
}

GmntVerdict genus0(const GmntQuery& q) {
    if (q.degD + q.degDp < 0) return {true, "g=0: deg(D+D') < 0"};
    if (q.degD >= 0 && q.degDp >= 0) return {true, "g=0: both degrees nonnegative"};
    return {false, "g=0: mixed signs"};
}

GmntVerdict genus1(const GmntQuery& q) {
    long long a = std::max(q.degD, q.degDp), b = std::min(q.degD, q.degDp);
    if (a < 0 || b < 0) throw Error("gmnt: g=1 expects effective divisors");
    if (b == 1) return {false, "g=1: a factor of degree 1"};
    if (a == 2 && b == 2) {
        bool equiv = get(q.D_equiv_Dp, "D_equiv_Dp");
        if (equiv) return {false, "g=1: degrees (2,2) with D ~ D'"};
        return {true, "g=1: degrees (2,2), D !~ D'"};
    }
    return {true, "g=1: degrees outside the failure cases"};
}

GmntVerdict genus_ge2(const GmntQuery& q) {
    if (q.degE < 0 || q.degEp < 0) throw Error("gmnt: effective divisor degrees must be >= 0");
    long long a = q.degE, b = q.degEp;
    auto fa = q.E_hyp_fixed, fb = q.Ep_hyp_fixed;
    if (a < b) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    if (a == 1 || b == 1) return {false, "table row/column at degree 1"};
    if (a == 0) {  // (0,0)
        if (q.g == 2) return {true, "cell (0,0): g = 2"};
        bool hyp = get(q.hyperelliptic, "hyperelliptic");
        if (hyp) return {false, "cell (0,0): hyperelliptic, g >= 3"};
        return {true, "cell (0,0): nonhyperelliptic"};
    }
    if (a == 2 && b == 0) {
        bool hyp = get(q.hyperelliptic, "hyperelliptic");
        if (!hyp) return {true, "cell (2,0): nonhyperelliptic"};
        bool fixed = get(fa, "E_hyp_fixed");
        if (fixed) return {false, "cell (2,0): E hyperelliptic fixed"};
        return {true, "cell (2,0): E not hyperelliptic fixed"};
    }
    if (a >= 3 && b == 0) return {true, "cell (>=3,0)"};
    if (a == 2 && b == 2) {
        bool equiv = get(q.E_equiv_Ep, "E_equiv_Ep");
        if (!equiv) return {true, "cell (2,2): E !~ E'"};
        bool hyp = get(q.hyperelliptic, "hyperelliptic");
        if (!hyp) return {false, "cell (2,2): E ~ E' on a nonhyperelliptic curve"};
        bool bothfixed = get(fa, "E_hyp_fixed") && get(fb, "Ep_hyp_fixed");
        if (bothfixed) return {false, "cell (2,2): E ~ E', both hyperelliptic fixed"};
        return {true, "cell (2,2): not both hyperelliptic fixed"};
    }
    return {true, "cell (>=3,>=2)"};
}

}  // namespace

GmntVerdict gmnt_verdict(const GmntQuery& q) {
    if (q.g < 0) throw Error("gmnt: negative genus");
    if (q.g == 0) return genus0(q);
    if (q.g == 1) return genus1(q);
    return genus_ge2(q);
}

bool gmnt_surjective(const GmntQuery& q) { return gmnt_verdict(q).surjective; }

}  // namespace stacky
