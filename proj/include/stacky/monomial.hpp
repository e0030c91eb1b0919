#pragma once

#include <string>
#include <vector>

namespace stacky {

// Graded variable label: kind in {'x','y','z'}, weighted degree, and an
// index disambiguating several variables of the same kind and degree.
// index 0 means "unique in its class" and is omitted when printing.
struct VarRef {
    char kind = 'x';
    int degree = 1;
    int index = 0;

    friend bool operator==(const VarRef& a, const VarRef& b) {
        return a.kind == b.kind && a.degree == b.degree && a.index == b.index;
    }
    std::string str() const;
};

// Ordered list of variables; position 0 is the largest under the term
// order (variables are compared by their position, not their label).
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<VarRef> vars) : vars_(std::move(vars)) {}

    int size() const { return static_cast<int>(vars_.size()); }
    const VarRef& var(int pos) const { return vars_[pos]; }
    int degree(int pos) const { return vars_[pos].degree; }
    const std::vector<VarRef>& vars() const { return vars_; }

    int push_front(const VarRef& v);  // new highest-precedence variable
    int push_back(const VarRef& v);   // new lowest-precedence variable
    int find(const VarRef& v) const;  // -1 if absent

    std::vector<int> degrees() const;

private:
    std::vector<VarRef> vars_;
};

// Dense exponent vector over a VarTable.
struct Monomial {
    std::vector<int> exps;

    static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    static Monomial var(int nvars, int pos, int exp = 1);

    long long degree(const VarTable& t) const;
    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    bool is_one() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }

    std::string str(const VarTable& t) const;
};

// Weighted graded reverse lexicographic order over the table's variable
// ordering: higher weighted degree wins; on ties the last (right-most)
// nonzero entry of a-b decides, negative meaning a is larger.
bool grevlex_greater(const Monomial& a, const Monomial& b, const VarTable& t);

// Finite set of monomials closed under minimal generation.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    const std::vector<Monomial>& gens() const { return gens_; }
    bool contains(const Monomial& m) const;  // divisibility by some generator
    void add(const Monomial& m);             // keeps the generating set minimal
    bool empty() const { return gens_.empty(); }
    int size() const { return static_cast<int>(gens_.size()); }

    // Re-expresses the generators over a larger table obtained by inserting
    // variables; old position p maps to new position map[p].
    MonomialIdeal remap(const std::vector<int>& pos_map, int new_nvars) const;

    std::string str(const VarTable& t) const;
    std::vector<std::string> monomial_strings(const VarTable& t) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    std::vector<Monomial> gens_;
};

// Number of degree-d monomials over the table avoiding the ideal, plus the
// cumulative variant used by the verification oracles.
long long staircase_count(const MonomialIdeal& gin, const std::vector<int>& var_degrees,
                          long long d);
std::vector<long long> staircase_counts_up_to(const MonomialIdeal& gin,
                                              const std::vector<int>& var_degrees, long long max_d);

}  // namespace stacky
