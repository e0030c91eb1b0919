#pragma once

#include <string>
#include <vector>

#include "stacky/core.hpp"
#include "stacky/monomial.hpp"
#include "stacky/poly.hpp"

namespace stacky {

enum class GinKind { Generic, Pointed };

struct GenEntry {
    VarRef label;
    int degree = 1;
    std::vector<int> pole_orders;  // one entry per stacky point of sig
};

struct RelEntry {
    int degree = 0;
    bool has_lead = false;
    Monomial lead;  // over the presentation's variable table when has_lead
};

// Explicit presentation of a canonical ring: generators with pole
// bookkeeping, relation-degree records, an initial/generic initial ideal,
// Poincare polynomials, and a trace of the construction steps.
struct Presentation {
    Signature sig;
    CurveFlags flags;
    GinKind gin_kind = GinKind::Generic;

    std::vector<GenEntry> gens;  // aligned with vars (position i <-> gens[i])
    VarTable vars;
    std::vector<RelEntry> rels;
    MonomialIdeal gin;
    std::string term_order = "grevlex";

    Poly P_R, P_I;
    std::vector<std::string> trace;

    void rebuild_poincare();                 // P_R, P_I from gens/rels
    void check_invariants() const;           // P_R/P_I consistency, pole sizes
    int gen_position(const VarRef& v) const; // -1 when absent
};

// True when the two ideals agree after some degree-preserving relabeling
// of variables within equal-degree classes (basis choices differ between
// construction routes).
bool gin_equivalent(const MonomialIdeal& a, const VarTable& va, const MonomialIdeal& b,
                    const VarTable& vb);

}  // namespace stacky
