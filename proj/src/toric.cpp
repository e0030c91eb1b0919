#include "stacky/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "stacky/effmon.hpp"
#include "stacky/error.hpp"

namespace stacky {

namespace {

void require_genus_zero_hyperbolic(const Signature& sig, const char* op) {
    if (sig.g != 0) throw GenusNotZero(std::string(op) + ": genus must be 0");
    if (deg_canonical(sig).sign() <= 0)
        throw NotHyperbolic(std::string(op) + ": deg D <= 0 for " + format_signature(sig));
}

long long sieve_bound(const Signature& sig, int saturation) {
    long long m = period_lcm(sig);
    long long bound = m + saturation;
    if (bound > 10000)
        throw DegreeBoundExceeded("toric: m+s = " + std::to_string(bound) + " exceeds 10000");
    return bound;
}

}  // namespace

bool pi_member(const Signature& sig, long long d, long long b) {
    if (sig.g != 0) throw GenusNotZero("pi_member: genus must be 0");
    return d >= 0 && b >= 0 && b <= floor_degree(sig, d);
}

SupportVector support_lift(const Signature& sig, const PiElement& nu) {
    if (!pi_member(sig, nu.d, nu.b))
        throw NotInPi("support_lift: (" + std::to_string(nu.d) + "," + std::to_string(nu.b) +
                      ") not in Pi of " + format_signature(sig));
    SupportVector v;
    v.d = nu.d;
    v.vanishing = 2 * nu.d + nu.b;
    v.stacky.assign(sig.e.size(), 0);
    v.log_pts.assign(sig.delta, 0);
    long long budget = v.vanishing;  // total pole order to distribute
    for (int i = sig.r() - 1; i >= 0; --i) {
        long long cap = (nu.d * (sig.e[i] - 1)) / sig.e[i];
        v.stacky[i] = std::min(cap, budget);
        budget -= v.stacky[i];
    }
    for (int j = 0; j < sig.delta && budget > 0; ++j) {
        v.log_pts[j] = std::min(nu.d, budget);
        budget -= v.log_pts[j];
    }
    if (budget != 0)
        throw NotInPi("support_lift: unliftable element (budget " + std::to_string(budget) + ")");
    return v;
}

VarTable toric_var_table(const std::vector<PiGenerator>& gens) {
    // Count class sizes per degree.
    std::map<long long, int> class_size;
    for (const auto& g : gens) class_size[g.nu.d]++;
    std::map<long long, int> next_index;  // assigns c, c-1, ... along ascending b
    std::vector<VarRef> vars;
    for (const auto& g : gens) {
        int c = class_size[g.nu.d];
        int idx = 0;
        if (c > 1) {
            if (!next_index.count(g.nu.d)) next_index[g.nu.d] = c;
            idx = next_index[g.nu.d]--;
        }
        vars.push_back(VarRef{'x', static_cast<int>(g.nu.d), idx});
    }
    return VarTable(vars);
}

std::vector<PiGenerator> pi_generators(const Signature& sig) {
    require_genus_zero_hyperbolic(sig, "pi_generators");
    EffMonoid eff = eff_compute(sig);
    long long bound = sieve_bound(sig, eff.saturation);

    std::vector<long long> f(bound + 1);
    for (long long d = 0; d <= bound; ++d) f[d] = floor_degree(sig, d);

    // reach[d] = largest b reachable as a sum of two nonzero elements
    // (intervals [0, f(d1)] + [0, f(d2)] stay intervals), -1 when none.
    std::vector<PiGenerator> gens;
    for (long long d = 1; d <= bound; ++d) {
        if (f[d] < 0) continue;
        long long reach = -1;
        for (long long d1 = 1; d1 < d; ++d1) {
            long long d2 = d - d1;
            if (f[d1] >= 0 && f[d2] >= 0) reach = std::max(reach, f[d1] + f[d2]);
        }
        for (long long b = reach + 1; b <= f[d]; ++b) {
            PiGenerator g;
            g.nu = PiElement{d, b};
            g.lift = support_lift(sig, g.nu);
            gens.push_back(g);
        }
    }
    // Precedence order: d descending, then b ascending.
    std::sort(gens.begin(), gens.end(), [](const PiGenerator& a, const PiGenerator& b) {
        if (a.nu.d != b.nu.d) return a.nu.d > b.nu.d;
        return a.nu.b < b.nu.b;
    });
    return gens;
}

namespace {

// All factorizations of target over the generator list; node budget guards
// against combinatorial blowups outside the intended desk scale.
void enumerate_factorizations(const std::vector<PiGenerator>& gens, const PiElement& target,
                              std::vector<std::vector<int>>& out, long long& budget) {
    std::vector<int> current(gens.size(), 0);
    std::function<void(size_t, long long, long long)> rec = [&](size_t i, long long d,
                                                                long long b) {
        if (--budget < 0) throw DegreeBoundExceeded("pi_relations: factorization budget exceeded");
        if (d == 0 && b == 0) {
            out.push_back(current);
            return;
        }
        if (i == gens.size() || d <= 0 || b < 0) return;
        const auto& nu = gens[i].nu;
        long long maxk = d / nu.d;
        if (nu.b > 0) maxk = std::min(maxk, b / nu.b);
        for (long long k = maxk; k >= 0; --k) {
            current[i] = static_cast<int>(k);
            rec(i + 1, d - k * nu.d, b - k * nu.b);
        }
        current[i] = 0;
    };
    rec(0, target.d, target.b);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<MonoidRelation> pi_relations(const Signature& sig) {
    require_genus_zero_hyperbolic(sig, "pi_relations");
    auto gens = pi_generators(sig);
    EffMonoid eff = eff_compute(sig);
    long long bound = 2 * sieve_bound(sig, eff.saturation);
    VarTable vars = toric_var_table(gens);

    std::vector<MonoidRelation> rels;
    long long budget = 50'000'000;
    for (long long d = 2; d <= bound; ++d) {
        long long fd = floor_degree(sig, d);
        for (long long b = 0; b <= fd; ++b) {
            std::vector<std::vector<int>> facts;
            enumerate_factorizations(gens, PiElement{d, b}, facts, budget);
            if (facts.size() < 2) continue;
            UnionFind uf(static_cast<int>(facts.size()));
            for (size_t i = 0; i < facts.size(); ++i)
                for (size_t j = i + 1; j < facts.size(); ++j) {
                    bool share = false;
                    for (size_t k = 0; k < gens.size() && !share; ++k)
                        share = facts[i][k] > 0 && facts[j][k] > 0;
                    if (share) uf.unite(static_cast<int>(i), static_cast<int>(j));
                }
            // Lexicographically smallest factorization per component.
            std::map<int, std::vector<int>> rep;
            for (size_t i = 0; i < facts.size(); ++i) {
                int c = uf.find(static_cast<int>(i));
                if (!rep.count(c) || facts[i] < rep[c]) rep[c] = facts[i];
            }
            if (rep.size() < 2) continue;
            std::vector<std::vector<int>> comps;
            for (auto& [c, v] : rep) comps.push_back(v);
            std::sort(comps.begin(), comps.end());
            for (size_t i = 0; i + 1 < comps.size(); ++i) {
                MonoidRelation rel;
                rel.degree = d;
                Monomial ma{comps[i]}, mb{comps[i + 1]};
                if (grevlex_greater(ma, mb, vars)) {
                    rel.lhs = comps[i];
                    rel.rhs = comps[i + 1];
                } else {
                    rel.lhs = comps[i + 1];
                    rel.rhs = comps[i];
                }
                rels.push_back(rel);
            }
        }
    }
    return rels;
}

MonomialIdeal toric_initial_ideal(const Signature& sig) {
    require_genus_zero_hyperbolic(sig, "toric_initial_ideal");
    auto gens = pi_generators(sig);
    EffMonoid eff = eff_compute(sig);
    long long bound = 2 * sieve_bound(sig, eff.saturation);
    VarTable vars = toric_var_table(gens);

    // Enumerate monomials by total weighted degree <= bound, fiber by the
    // monoid value, and mark everything except the fiber minimum.
    std::map<std::pair<long long, long long>, Monomial> fiber_min;
    std::vector<std::pair<PiElement, Monomial>> all;
    std::vector<int> current(gens.size(), 0);
    std::function<void(size_t, long long, long long)> rec = [&](size_t i, long long d,
                                                                long long b) {
        if (i == gens.size()) {
            if (d == 0) return;  // skip the trivial monomial
            Monomial m{current};
            auto key = std::make_pair(d, b);
            all.push_back({PiElement{d, b}, m});
            auto it = fiber_min.find(key);
            if (it == fiber_min.end() || grevlex_greater(it->second, m, vars))
                fiber_min[key] = m;
            return;
        }
        long long maxk = (bound - d) / gens[i].nu.d;
        for (long long k = 0; k <= maxk; ++k) {
            current[i] = static_cast<int>(k);
            rec(i + 1, d + k * gens[i].nu.d, b + k * gens[i].nu.b);
        }
        current[i] = 0;
    };
    rec(0, 0, 0);

    std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) {
        if (x.first.d != y.first.d) return x.first.d < y.first.d;
        return grevlex_greater(y.second, x.second, vars);
    });
    MonomialIdeal ideal;
    for (const auto& [nu, m] : all) {
        const Monomial& least = fiber_min.at({nu.d, nu.b});
        if (m == least) continue;
        if (!ideal.contains(m)) ideal.add(m);
    }
    return ideal;
}

MonoidPresentation toric_presentation(const Signature& sig) {
    MonoidPresentation pres;
    pres.sig = sig;
    pres.generators = pi_generators(sig);
    pres.vars = toric_var_table(pres.generators);
    pres.relations = pi_relations(sig);
    pres.initial_ideal = toric_initial_ideal(sig);
    EffMonoid eff = eff_compute(sig);
    pres.lcm_m = period_lcm(sig);
    pres.saturation = eff.saturation;
    return pres;
}

}  // namespace stacky
