#pragma once

#include <string>
#include <vector>

#include "stacky/core.hpp"

namespace stacky {

// Eff(D) = { d >= 0 : deg floor(dD) >= 0 }, the effective monoid of
// D = K + Delta.  Membership depends only on the signature.
struct EffMonoid {
    Signature sig;
    int saturation = 0;              // least s with [s, inf) contained in Eff
    std::vector<int> generators;     // minimal generators, ascending
    long long period = 1;            // lcm(1, e_1, ..., e_r)
};

enum class EffClassKind { AllNonnegative, TwoThreeGenerated, Exceptional };

struct EffClass {
    EffClassKind kind = EffClassKind::TwoThreeGenerated;
    // For Exceptional: 1 = (0;e1,e2,e3;0), 2 = (0;2,2,2,e4>=3;0),
    // 3 = (0;2,2,2,2,2;0) (cases (i)-(iii) of the classification).
    int exceptional_case = 0;
};

std::string to_string(const EffClass& c);

bool eff_member(const Signature& sig, long long d);

// Requires A > 0.  Saturation is found at the first run of L consecutive
// members (sound since floor_degree(d+L) = floor_degree(d) + L*A >= floor);
// generators sieved over [1, s + g0], g0 the least nonzero member.
EffMonoid eff_compute(const Signature& sig);

EffClass eff_classify(const Signature& sig);

}  // namespace stacky
