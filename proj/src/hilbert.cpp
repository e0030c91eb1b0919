#include "stacky/hilbert.hpp"

#include <algorithm>

#include "stacky/error.hpp"

namespace stacky {

HilbertSeries hilbert_series(const Signature& sig, const Presentation& pres) {
    HilbertSeries hs;
    long long B = 0;
    for (const auto& g : pres.gens) {
        hs.denominator_exponents.push_back(g.degree);
        B += g.degree;
    }
    std::sort(hs.denominator_exponents.begin(), hs.denominator_exponents.end());

    // The numerator can reach past B = sum of generator degrees (already
    // the weighted plane sextic has numerator degree 6 over B = 5), so
    // stabilization is certified on a trailing window of a full period
    // plus the largest generator degree.
    long long L = period_lcm(sig);
    int maxgen = 0;
    for (const auto& g : pres.gens) maxgen = std::max(maxgen, g.degree);
    long long window = L + maxgen + 12;
    long long cutoff = B + 2 * L + maxgen + 12;
    long long horizon = cutoff + window;
    std::vector<long long> series(horizon + 1, 0);
    for (long long d = 0; d <= horizon; ++d) series[d] = dim_h0(sig, d);
    for (int dexp : hs.denominator_exponents) {
        for (long long d = horizon; d >= dexp; --d) series[d] -= series[d - dexp];
    }
    for (long long d = cutoff + 1; d <= horizon; ++d)
        if (series[d] != 0)
            throw NumeratorNotStabilized("hilbert_series: numerator fails to stabilize for " +
                                         format_signature(sig) + " at degree " +
                                         std::to_string(d));
    for (long long d = 0; d <= cutoff; ++d)
        if (series[d] != 0) hs.numerator.add_term(static_cast<int>(d), series[d]);
    return hs;
}

std::vector<long long> expand_series(const HilbertSeries& hs, long long max_d) {
    std::vector<long long> out(max_d + 1, 0);
    for (auto& [e, c] : hs.numerator.terms())
        if (e <= max_d) out[e] = c;
    for (int dexp : hs.denominator_exponents)
        for (long long d = dexp; d <= max_d; ++d) out[d] += out[d - dexp];
    return out;
}

}  // namespace stacky
