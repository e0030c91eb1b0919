#include "stacky/effmon.hpp"

#include <algorithm>

#include "stacky/error.hpp"

namespace stacky {

std::string to_string(const EffClass& c) {
    switch (c.kind) {
        case EffClassKind::AllNonnegative: return "AllNonnegative";
        case EffClassKind::TwoThreeGenerated: return "TwoThreeGenerated";
        case EffClassKind::Exceptional:
            return std::string("Exceptional(") +
                   (c.exceptional_case == 1 ? "i" : c.exceptional_case == 2 ? "ii" : "iii") + ")";
    }
    return "?";
}

bool eff_member(const Signature& sig, long long d) {
    return d >= 0 && floor_degree(sig, d) >= 0;
}

EffMonoid eff_compute(const Signature& sig) {
    if (deg_canonical(sig).sign() <= 0)
        throw NotHyperbolic("eff_compute: deg D <= 0 for " + format_signature(sig));

    EffMonoid m;
    m.sig = sig;
    m.period = period_lcm(sig);

    // Scan upward for the first window of L consecutive members.
    long long run = 0;
    long long d = 1;
    for (;; ++d) {
        run = eff_member(sig, d) ? run + 1 : 0;
        if (run == m.period) break;
    }
    m.saturation = static_cast<int>(d - m.period + 1);
    // A window of L consecutive members propagates forward, so the least s
    // with a full window is the saturation; 0 is always a member.
    for (int s = 0; s < m.saturation; ++s) {
        bool all = true;
        for (long long k = s; k < s + m.period; ++k)
            if (!eff_member(sig, k)) {
                all = false;
                break;
            }
        if (all) {
            m.saturation = s;
            break;
        }
    }

    long long g0 = 1;
    while (!eff_member(sig, g0)) ++g0;
    long long bound = m.saturation + g0;

    std::vector<char> member(bound + 1, 0);
    for (long long k = 1; k <= bound; ++k) member[k] = eff_member(sig, k) ? 1 : 0;
    for (long long k = 1; k <= bound; ++k) {
        if (!member[k]) continue;
        bool decomposable = false;
        for (long long a = 1; !decomposable && a <= k / 2; ++a)
            decomposable = member[a] && member[k - a];
        if (!decomposable) m.generators.push_back(static_cast<int>(k));
    }
    return m;
}

EffClass eff_classify(const Signature& sig) {
    if (deg_canonical(sig).sign() <= 0)
        throw NotHyperbolic("eff_classify: deg D <= 0 for " + format_signature(sig));
    EffClass c;
    if (sig.delta >= 2) {
        c.kind = EffClassKind::AllNonnegative;
        return c;
    }
    int r = sig.r();
    bool all2 = std::all_of(sig.e.begin(), sig.e.end(), [](int ei) { return ei == 2; });
    if (sig.delta == 0 && r == 3) {
        c.kind = EffClassKind::Exceptional;
        c.exceptional_case = 1;
    } else if (sig.delta == 0 && r == 4 && sig.e[0] == 2 && sig.e[1] == 2 && sig.e[2] == 2 &&
               sig.e[3] >= 3) {
        c.kind = EffClassKind::Exceptional;
        c.exceptional_case = 2;
    } else if (sig.delta == 0 && r == 5 && all2) {
        c.kind = EffClassKind::Exceptional;
        c.exceptional_case = 3;
    } else {
        c.kind = EffClassKind::TwoThreeGenerated;
    }
    return c;
}

}  // namespace stacky
