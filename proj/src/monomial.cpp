#include "stacky/monomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stacky {

std::string VarRef::str() const {
    std::string s(1, kind);
    s += "[" + std::to_string(degree);
    if (index > 0) s += "," + std::to_string(index);
    s += "]";
    return s;
}

int VarTable::push_front(const VarRef& v) {
    vars_.insert(vars_.begin(), v);
    return 0;
}

int VarTable::push_back(const VarRef& v) {
    vars_.push_back(v);
    return size() - 1;
}

int VarTable::find(const VarRef& v) const {
    for (int i = 0; i < size(); ++i)
        if (vars_[i] == v) return i;
    return -1;
}

std::vector<int> VarTable::degrees() const {
    std::vector<int> out(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) out[i] = vars_[i].degree;
    return out;
}

Monomial Monomial::var(int nvars, int pos, int exp) {
    Monomial m = one(nvars);
    m.exps[pos] = exp;
    return m;
}

long long Monomial::degree(const VarTable& t) const {
    long long d = 0;
    for (size_t i = 0; i < exps.size(); ++i) d += static_cast<long long>(exps[i]) * t.degree(i);
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    if (exps.size() != other.exps.size()) return false;
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial m = *this;
    for (size_t i = 0; i < exps.size(); ++i) m.exps[i] += other.exps[i];
    return m;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

std::string Monomial::str(const VarTable& t) const {
    std::string out;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += t.var(i).str();
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

bool grevlex_greater(const Monomial& a, const Monomial& b, const VarTable& t) {
    long long da = a.degree(t), db = b.degree(t);
    if (da != db) return da > db;
    for (int i = t.size() - 1; i >= 0; --i) {
        int diff = a.exps[i] - b.exps[i];
        if (diff != 0) return diff < 0;
    }
    return false;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

void MonomialIdeal::add(const Monomial& m) {
    if (contains(m)) return;
    gens_.erase(std::remove_if(gens_.begin(), gens_.end(),
                               [&](const Monomial& g) { return m.divides(g); }),
                gens_.end());
    gens_.push_back(m);
}

MonomialIdeal MonomialIdeal::remap(const std::vector<int>& pos_map, int new_nvars) const {
    MonomialIdeal out;
    for (const auto& g : gens_) {
        Monomial m = Monomial::one(new_nvars);
        for (size_t i = 0; i < g.exps.size(); ++i) m.exps[pos_map[i]] = g.exps[i];
        out.gens_.push_back(m);
    }
    return out;
}

std::string MonomialIdeal::str(const VarTable& t) const {
    std::string out = "<";
    auto sorted = gens_;
    std::sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) {
        long long da = a.degree(t), db = b.degree(t);
        if (da != db) return da < db;
        return grevlex_greater(a, b, t);
    });
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ", ";
        out += sorted[i].str(t);
    }
    return out + ">";
}

std::vector<std::string> MonomialIdeal::monomial_strings(const VarTable& t) const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.str(t));
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    auto as = a.gens_;
    auto bs = b.gens_;
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());
    return as == bs;
}

std::vector<long long> staircase_counts_up_to(const MonomialIdeal& gin,
                                              const std::vector<int>& var_degrees,
                                              long long max_d) {
    const int n = static_cast<int>(var_degrees.size());
    std::vector<long long> counts(max_d + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    const auto& gens = gin.gens();
    const int ngens = static_cast<int>(gens.size());
    // support[pos] lists (gen, required exponent) pairs touching pos.
    std::vector<std::vector<std::pair<int, int>>> support(n);
    std::vector<int> unmet(ngens, 0);
    for (int g = 0; g < ngens; ++g)
        for (int p = 0; p < n; ++p)
            if (gens[g].exps[p] > 0) {
                support[p].push_back({g, gens[g].exps[p]});
                ++unmet[g];
            }

    std::function<void(int, long long)> dfs = [&](int pos, long long used) {
        if (pos == n) {
            ++counts[used];
            return;
        }
        long long maxk = (max_d - used) / var_degrees[pos];
        std::vector<int> met_here;
        for (long long k = 0; k <= maxk; ++k) {
            // Mark requirements newly satisfied at exponent k.
            bool dead = false;
            for (auto [g, req] : support[pos]) {
                if (req == k) {
                    if (--unmet[g] == 0) dead = true;
                    met_here.push_back(g);
                }
            }
            if (dead) {
                // Any larger exponent keeps the generator satisfied: stop.
                for (int g : met_here) ++unmet[g];
                return;
            }
            dfs(pos + 1, used + k * var_degrees[pos]);
        }
        for (int g : met_here) ++unmet[g];
    };
    dfs(0, 0);
    return counts;
}

long long staircase_count(const MonomialIdeal& gin, const std::vector<int>& var_degrees,
                          long long d) {
    if (d < 0) return 0;
    auto counts = staircase_counts_up_to(gin, var_degrees, d);
    return counts[d];
}

}  // namespace stacky
