#pragma once

#include "stacky/poly.hpp"
#include "stacky/presentation.hpp"

namespace stacky {

// Hilbert series numerator over prod (1 - t^{d_i}) for the generator
// degrees d_i; the expansion reproduces dim H^0(floor(dD)) in every degree.
struct HilbertSeries {
    Poly numerator;
    std::vector<int> denominator_exponents;  // ascending, with multiplicity
};

// Throws NumeratorNotStabilized when the truncated numerator fails to
// vanish beyond the sum of the generator degrees (checked out to
// B + 2 * period).
HilbertSeries hilbert_series(const Signature& sig, const Presentation& pres);

// dim H^0 series of the quotient ring presented by gin/generator degrees,
// truncated at max_d (used by the verification oracles).
std::vector<long long> expand_series(const HilbertSeries& hs, long long max_d);

}  // namespace stacky
