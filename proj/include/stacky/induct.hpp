#pragma once

#include <set>
#include <vector>

#include "stacky/presentation.hpp"

namespace stacky {

// Witness for admissibility of (pres.sig, J): the matched distinguished
// generators and the three condition outcomes.
struct AdmissibleWitness {
    std::set<int> J;                      // 1-based stacky indices
    std::vector<int> distinguished;       // generator positions, aligned with J order
    bool ad_i = false, ad_ii = false, ad_iii = false;
    bool admissible() const { return ad_i && ad_ii && ad_iii; }
};

// Hypothesis for adding a stacky point to pres (large canonical degree):
// g >= 2, or g = 1 with r + delta >= 1 on the base, or g = 0 with
// delta >= 2.
bool add_point_hypothesis(const Signature& base);

// Literal evaluation of the floor-degree form of the hypothesis; kept
// separate because the two disagree for g = 1, delta = 0, r <= 2 bases.
bool add_point_hypothesis_direct(const Signature& base);

// Adjoins a stacky point of order e: generators y_2..y_e with poles
// i-1 at the new point, relations with leading terms y_i x_j and y_i y_j,
// block term order, Poincare updates.
Presentation add_stacky_point(const Presentation& pres, int e);

// Genus-zero, 2-saturated variant: adjoins y_2 and z_3 for the new point,
// then raises its order to e through the order-raising theorem.
Presentation add_stacky_point_2sat(const Presentation& pres, int e);

// Checks (Ad-i)-(Ad-iii) for raising the orders at the points indexed by
// J (1-based positions in pres.sig.e).
AdmissibleWitness check_admissible(const Presentation& pres, const std::set<int>& J);

// Raises e_i by one for each i in J (largest order first), adding one
// generator per point and quadratic-in-generators relations.
Presentation raise_orders(const Presentation& pres, const std::set<int>& J);

}  // namespace stacky
