#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stacky/fraction.hpp"
#include "stacky/poly.hpp"
#include "stacky/toric.hpp"

namespace stacky {

// epsilon_i(d1,d2) in {0,1}: 0 iff floor(d(e_i-1)/e_i) splits additively
// over d = d1 + d2 at the i-th stacky point.
int epsilon(const Signature& sig, int i, long long d1, long long d2);

// Multiplication-map surjectivity criterion in degree d: products of
// lower effective degrees span H^0(floor(dD)).  Sufficient, not necessary.
bool generator_superfluous(const Signature& sig, long long d);

// r_d = #{i : e_i >= d} when deg floor(dD) >= r_d; absent otherwise.
std::optional<long long> early_codim(const Signature& sig, long long d);

// Effective Euclidean algorithm: sum_i a_i(t) k[t]_{<= d - deg a_i} equals
// g(t) k[t]_{<= d - deg g} for g = gcd, checked by exact rank computation.
// Polynomials are coefficient vectors, constant term first.
bool effective_euclid_check(const std::vector<std::vector<Fraction>>& polys, int d);

// Presentation of the simplified genus-zero ring: surviving toric
// generators with exact relation data from per-degree linear algebra over
// the function model f_nu = prod (z - t_i)^{-pole_i}.
struct SimplifiedPresentation {
    Signature sig;
    std::vector<PiGenerator> generators;  // survivors, precedence order
    VarTable vars;
    Poly P_R, P_I;
    std::vector<long long> relation_degrees;  // ascending, with multiplicity
    MonomialIdeal initial_ideal;              // grevlex leads of the relation modules
    std::vector<std::string> trace;
};

SimplifiedPresentation simplify_presentation(const MonoidPresentation& pres);
SimplifiedPresentation simplify_toric(const Signature& sig);

// Exact minimal relation degrees of the ring generated by one generic
// element of H^0(d_i D) per listed degree, by kernel/span ranks in each
// degree <= bound.  Generators are modeled as f_d * P_i(t) with random
// P_i, which is basis-independent; used by the simplification pipeline
// and as a cross-check for the inductive one.
struct RelationAnalysis {
    Poly P_I;
    MonomialIdeal initial_ideal;
    bool spanning = true;  // monomials spanned every graded piece
};
RelationAnalysis analyze_relations(const Signature& sig, const std::vector<int>& gen_degrees,
                                   const VarTable& vars, long long bound);

}  // namespace stacky
