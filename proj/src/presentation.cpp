#include "stacky/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "stacky/error.hpp"

namespace stacky {

void Presentation::rebuild_poincare() {
    P_R = Poly();
    P_I = Poly();
    for (const auto& g : gens) P_R.add_term(g.degree, 1);
    for (const auto& r : rels) P_I.add_term(r.degree, 1);
}

void Presentation::check_invariants() const {
    Poly pr, pi;
    for (const auto& g : gens) pr.add_term(g.degree, 1);
    for (const auto& r : rels) pi.add_term(r.degree, 1);
    if (pr != P_R) throw Error("presentation: P_R out of sync with generators");
    if (pi != P_I) throw Error("presentation: P_I out of sync with relations");
    if (static_cast<int>(gens.size()) != vars.size())
        throw Error("presentation: generator/variable mismatch");
    for (const auto& g : gens)
        if (static_cast<int>(g.pole_orders.size()) != sig.r())
            throw Error("presentation: pole vector size mismatch");
}

int Presentation::gen_position(const VarRef& v) const { return vars.find(v); }

bool gin_equivalent(const MonomialIdeal& a, const VarTable& va, const MonomialIdeal& b,
                    const VarTable& vb) {
    if (a.size() != b.size()) return false;
    if (va.size() != vb.size()) return false;

    // Group variable positions by degree on both sides.
    std::map<int, std::vector<int>> classes_a, classes_b;
    for (int i = 0; i < va.size(); ++i) classes_a[va.degree(i)].push_back(i);
    for (int i = 0; i < vb.size(); ++i) classes_b[vb.degree(i)].push_back(i);
    if (classes_a.size() != classes_b.size()) return false;
    for (auto& [deg, pos] : classes_a) {
        auto it = classes_b.find(deg);
        if (it == classes_b.end() || it->second.size() != pos.size()) return false;
    }

    // Try all per-class permutations (classes are tiny in practice).
    std::vector<std::pair<std::vector<int>, std::vector<int>>> cls;
    for (auto& [deg, pos] : classes_a) cls.push_back({pos, classes_b[deg]});

    std::vector<int> map_ab(va.size(), -1);
    std::function<bool(size_t)> try_class = [&](size_t ci) -> bool {
        if (ci == cls.size()) {
            std::vector<Monomial> mapped;
            for (const auto& g : a.gens()) {
                Monomial m = Monomial::one(vb.size());
                for (size_t i = 0; i < g.exps.size(); ++i) m.exps[map_ab[i]] = g.exps[i];
                mapped.push_back(m);
            }
            auto bs = b.gens();
            std::sort(mapped.begin(), mapped.end());
            std::sort(bs.begin(), bs.end());
            return mapped == bs;
        }
        std::vector<int> perm = cls[ci].second;
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t k = 0; k < perm.size(); ++k) map_ab[cls[ci].first[k]] = perm[k];
            if (try_class(ci + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    return try_class(0);
}

}  // namespace stacky
