#pragma once

#include <string>
#include <vector>

#include "stacky/presentation.hpp"

namespace stacky {

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    Signature sig;
    std::vector<VerificationCheck> checks;
    long long max_degree = 0;

    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
};

// The independent staircase oracle lives in monomial.hpp
// (staircase_count / staircase_counts_up_to); it never consults dim_h0.

// Staircase counts equal dim_h0 in every degree <= N.
VerificationReport hilbert_consistency(const Presentation& pres, const Signature& sig,
                                       long long N);

// Default verification horizon max(30, 2(m+s)) capped at 200; the cap and
// the environment override STACKY_CANON_MAX_DEGREE are applied by the CLI.
long long default_verify_horizon(const Signature& sig);

// Recomputes every embedded appendix row, the effective-monoid table and
// the genus-zero exceptions table, and diffs against the driver output.
VerificationReport tables_regression();

}  // namespace stacky
