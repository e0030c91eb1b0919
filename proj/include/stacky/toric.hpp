#pragma once

#include <vector>

#include "stacky/core.hpp"
#include "stacky/monomial.hpp"

namespace stacky {

// Element of the projected monoid Pi = {(d,b) : 0 <= b <= deg floor(dD)}.
struct PiElement {
    long long d = 0;
    long long b = 0;  // shifted pole coordinate, b = a - 2d
    friend bool operator==(const PiElement& x, const PiElement& y) {
        return x.d == y.d && x.b == y.b;
    }
    friend bool operator<(const PiElement& x, const PiElement& y) {
        return x.d != y.d ? x.d < y.d : x.b < y.b;
    }
};

// Support vector of a function in S_d, reported in the pole convention:
// stacky[i] / log_pts[j] are pole orders (nonnegative), vanishing is the
// order of zero at infinity, = 2d + b.
struct SupportVector {
    long long d = 0;
    long long vanishing = 0;
    std::vector<long long> stacky;
    std::vector<long long> log_pts;
};

struct PiGenerator {
    PiElement nu;
    SupportVector lift;
};

// Homogeneous monoid relation lhs . nu = rhs . nu; lhs carries the larger
// monomial under the toric term order.
struct MonoidRelation {
    std::vector<int> lhs, rhs;  // exponent vectors over the generator list
    long long degree = 0;
};

struct MonoidPresentation {
    Signature sig;
    std::vector<PiGenerator> generators;  // precedence order (d desc, b asc)
    VarTable vars;                        // one variable per generator
    std::vector<MonoidRelation> relations;
    MonomialIdeal initial_ideal;  // fiber-minimality, pre-simplification
    long long lcm_m = 1;
    int saturation = 0;
};

bool pi_member(const Signature& sig, long long d, long long b);

// Canonical lift: maximal poles at the stacky points greedily from i = r
// down to 1, remainder absorbed at the log points and then at infinity.
SupportVector support_lift(const Signature& sig, const PiElement& nu);

std::vector<PiGenerator> pi_generators(const Signature& sig);

// Minimal congruence generators up to degree 2(m+s), one chain of
// relations per disconnected factorization graph.
std::vector<MonoidRelation> pi_relations(const Signature& sig);

// A monomial is initial iff its Pi-fiber contains a strictly smaller
// monomial under grevlex on the (d desc, b asc) variable order.
MonomialIdeal toric_initial_ideal(const Signature& sig);

// Generators + relations + initial ideal in one pass.
MonoidPresentation toric_presentation(const Signature& sig);

// Variable table for a generator list (one 'x' variable per generator;
// same-degree classes indexed so the smallest b gets the largest index).
VarTable toric_var_table(const std::vector<PiGenerator>& gens);

}  // namespace stacky
