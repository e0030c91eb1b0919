#pragma once

#include <optional>

#include "stacky/presentation.hpp"

namespace stacky {

// Table-backed base presentation; throws NotABaseCase when the signature
// matches no embedded pattern.
Presentation base_presentation(const Signature& sig, const CurveFlags& flags, GinKind kind);

// Full driver: dispatches on the case classification and assembles the
// presentation through the base tables and the inductive theorems.
Presentation canonical_presentation(const Signature& sig, const CurveFlags& flags = {},
                                    GinKind kind = GinKind::Generic);

struct DegreeBounds {
    int gen_bound = 0;
    int rel_bound = 0;
    bool exceptional = false;
    bool sharp = false;  // the max(3,e) / 2 max(3,e) branch applies
};
DegreeBounds degree_bounds(const Signature& sig);

// Phi(e_1,...,e_r;t) = sum_{i <= j} t^{e_i + e_j}.
Poly phi_helper(const std::vector<int>& es);

// Normalized flags: g = 2 forces hyperelliptic, genus-4 nonhyperelliptic
// curves are trigonal, flags are ignored for g <= 1.  Throws on
// contradictory combinations.
CurveFlags normalize_flags(const Signature& sig, CurveFlags flags);

}  // namespace stacky
