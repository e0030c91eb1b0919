#include "stacky/tables.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "stacky/effmon.hpp"
#include "stacky/error.hpp"
#include "stacky/simplify.hpp"
#include "stacky/toric.hpp"

namespace stacky {
namespace tables {

namespace {

long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

GenEntry gen(char kind, int degree, int index, std::vector<int> poles = {}) {
    GenEntry g;
    g.label = VarRef{kind, degree, index};
    g.degree = degree;
    g.pole_orders = std::move(poles);
    return g;
}

Monomial mono(int nvars, std::initializer_list<std::pair<int, int>> factors) {
    Monomial m = Monomial::one(nvars);
    for (auto [pos, exp] : factors) m.exps[pos] += exp;
    return m;
}

void add_rels(Presentation& p, int degree, long long count) {
    for (long long k = 0; k < count; ++k) p.rels.push_back(RelEntry{degree, false, Monomial{}});
}

void finish(Presentation& p) {
    p.rebuild_poincare();
    p.check_invariants();
}

}  // namespace

Presentation classical(int g, const CurveFlags& flags, GinKind kind) {
    Presentation p;
    p.sig = Signature{g, {}, 0};
    p.flags = flags;
    p.gin_kind = kind;

    if (g == 0) {  // trivial ring
        finish(p);
        p.trace.push_back("base: classical g=0 (empty)");
        return p;
    }
    if (g == 1) {  // R = k[u]
        p.vars = VarTable({VarRef{'x', 1, 0}});
        p.gens = {gen('x', 1, 0)};
        finish(p);
        p.trace.push_back("base: classical g=1 (polynomial ring)");
        return p;
    }
    if (g == 2) {  // weighted plane sextic in P(3,1,1)
        p.vars = VarTable({VarRef{'y', 3, 0}, VarRef{'x', 1, 1}, VarRef{'x', 1, 2}});
        p.gens = {gen('y', 3, 0), gen('x', 1, 1), gen('x', 1, 2)};
        add_rels(p, 6, 1);
        p.rels[0].has_lead = true;
        p.rels[0].lead = mono(3, {{0, 2}});
        p.gin.add(mono(3, {{0, 2}}));
        finish(p);
        p.trace.push_back("base: classical g=2");
        return p;
    }

    if (flags.hyperelliptic) {
        // x_1..x_g degree 1, y_1..y_{g-2} degree 2.
        std::vector<VarRef> vars;
        for (int j = 1; j <= g - 2; ++j) vars.push_back(VarRef{'y', 2, j});
        for (int i = 1; i <= g; ++i) vars.push_back(VarRef{'x', 1, i});
        p.vars = VarTable(vars);
        for (int j = 1; j <= g - 2; ++j) p.gens.push_back(gen('y', 2, j));
        for (int i = 1; i <= g; ++i) p.gens.push_back(gen('x', 1, i));
        add_rels(p, 2, binom2(g - 1));
        add_rels(p, 3, static_cast<long long>(g - 1) * (g - 3));
        add_rels(p, 4, binom2(g - 1));
        int n = p.vars.size();
        auto ypos = [&](int j) { return j - 1; };
        auto xpos = [&](int i) { return g - 2 + i - 1; };
        if (kind == GinKind::Pointed) {
            for (int i = 1; i < g - 1; ++i)
                for (int j = i + 1; j <= g - 1; ++j)
                    p.gin.add(mono(n, {{xpos(i), 1}, {xpos(j), 1}}));
            for (int i = 1; i <= g - 1; ++i)
                for (int j = 1; j <= g - 3; ++j)
                    p.gin.add(mono(n, {{xpos(i), 1}, {ypos(j), 1}}));
            for (int i = 1; i <= g - 2; ++i)
                for (int j = i; j <= g - 2; ++j)
                    p.gin.add(mono(n, {{ypos(i), 1}, {ypos(j), 1}}));
        } else {
            for (int i = 1; i <= g - 2; ++i)
                for (int j = i; j <= g - 2; ++j)
                    p.gin.add(mono(n, {{xpos(i), 1}, {xpos(j), 1}}));
            for (int i = 1; i <= g - 2; ++i)
                for (int j = 1; j <= g - 2; ++j) {
                    if (i == g - 2 && j == g - 2) continue;
                    p.gin.add(mono(n, {{xpos(i), 1}, {ypos(j), 1}}));
                }
            for (int i = 1; i <= g - 2; ++i)
                for (int j = i; j <= g - 2; ++j)
                    p.gin.add(mono(n, {{ypos(i), 1}, {ypos(j), 1}}));
        }
        finish(p);
        p.trace.push_back("base: classical hyperelliptic g=" + std::to_string(g));
        return p;
    }

    // Nonhyperelliptic: x_1..x_g in degree 1.
    std::vector<VarRef> vars;
    for (int i = 1; i <= g; ++i) vars.push_back(VarRef{'x', 1, i});
    p.vars = VarTable(vars);
    for (int i = 1; i <= g; ++i) p.gens.push_back(gen('x', 1, i));
    int n = g;
    auto xp = [&](int i) { return i - 1; };
    if (g == 3) {
        add_rels(p, 4, 1);
        p.gin.add(kind == GinKind::Pointed ? mono(n, {{xp(1), 3}, {xp(2), 1}})
                                           : mono(n, {{xp(1), 4}}));
        finish(p);
        p.trace.push_back("base: classical plane quartic");
        return p;
    }
    add_rels(p, 2, binom2(g - 2));
    if (flags.exceptional) add_rels(p, 3, g - 3);
    if (kind == GinKind::Pointed) {
        for (int i = 1; i < g - 2; ++i)
            for (int j = i + 1; j <= g - 2; ++j) p.gin.add(mono(n, {{xp(i), 1}, {xp(j), 1}}));
        for (int i = 1; i <= g - 3; ++i) p.gin.add(mono(n, {{xp(i), 2}, {xp(g - 1), 1}}));
        p.gin.add(mono(n, {{xp(g - 2), 3}, {xp(g - 1), 1}}));
    } else {
        for (int i = 1; i <= g - 3; ++i)
            for (int j = i; j <= g - 3; ++j) p.gin.add(mono(n, {{xp(i), 1}, {xp(j), 1}}));
        for (int i = 1; i <= g - 3; ++i) p.gin.add(mono(n, {{xp(i), 1}, {xp(g - 2), 2}}));
        p.gin.add(mono(n, {{xp(g - 2), 4}}));
    }
    finish(p);
    p.trace.push_back(std::string("base: classical ") +
                      (flags.exceptional ? "exceptional" : "nonexceptional") +
                      " g=" + std::to_string(g));
    return p;
}

namespace {

Presentation log_genus0(int delta, GinKind kind) {
    Presentation p;
    p.sig = Signature{0, {}, delta};
    if (delta <= 1) {
        finish(p);
        p.trace.push_back("base: log classical g=0, trivial");
        return p;
    }
    int ngens = delta - 1;  // delta = 2 -> k[u]
    std::vector<VarRef> vars;
    for (int i = 1; i <= ngens; ++i) vars.push_back(VarRef{'x', 1, ngens == 1 ? 0 : i});
    p.vars = VarTable(vars);
    for (int i = 1; i <= ngens; ++i) p.gens.push_back(gen('x', 1, ngens == 1 ? 0 : i));
    if (delta >= 4) {
        add_rels(p, 2, binom2(delta - 3));
        if (kind == GinKind::Pointed) {
            for (int i = 1; i < delta - 2; ++i)
                for (int j = i + 1; j <= delta - 2; ++j)
                    p.gin.add(mono(ngens, {{i - 1, 1}, {j - 1, 1}}));
        } else {
            for (int i = 1; i <= delta - 3; ++i)
                for (int j = i; j <= delta - 3; ++j)
                    p.gin.add(mono(ngens, {{i - 1, 1}, {j - 1, 1}}));
        }
    }
    finish(p);
    p.trace.push_back("base: rational (log) curve, delta=" + std::to_string(delta));
    return p;
}

Presentation log_genus1(int delta, GinKind /*kind*/) {
    Presentation p;
    p.sig = Signature{1, {}, delta};
    if (delta == 1) {
        p.vars = VarTable({VarRef{'y', 3, 0}, VarRef{'x', 2, 0}, VarRef{'x', 1, 0}});
        p.gens = {gen('y', 3, 0), gen('x', 2, 0), gen('x', 1, 0)};
        add_rels(p, 6, 1);
        p.rels[0].has_lead = true;
        p.rels[0].lead = mono(3, {{0, 2}});
        p.gin.add(mono(3, {{0, 2}}));
    } else if (delta == 2) {
        p.vars = VarTable({VarRef{'y', 2, 0}, VarRef{'x', 1, 1}, VarRef{'x', 1, 2}});
        p.gens = {gen('y', 2, 0), gen('x', 1, 1), gen('x', 1, 2)};
        add_rels(p, 4, 1);
        p.rels[0].has_lead = true;
        p.rels[0].lead = mono(3, {{0, 2}});
        p.gin.add(mono(3, {{0, 2}}));
    } else {
        int n = delta;
        std::vector<VarRef> vars;
        for (int i = 1; i <= n; ++i) vars.push_back(VarRef{'x', 1, i});
        p.vars = VarTable(vars);
        for (int i = 1; i <= n; ++i) p.gens.push_back(gen('x', 1, i));
        if (delta == 3) {
            add_rels(p, 3, 1);
            p.gin.add(mono(n, {{0, 2}, {1, 1}}));
        } else {
            add_rels(p, 2, static_cast<long long>(delta) * (delta - 3) / 2);
            for (int i = 1; i < delta - 1; ++i)
                for (int j = i + 1; j <= delta - 1; ++j) {
                    if (i == delta - 2 && j == delta - 1) continue;
                    p.gin.add(mono(n, {{i - 1, 1}, {j - 1, 1}}));
                }
            p.gin.add(mono(n, {{delta - 3, 2}, {delta - 2, 1}}));
        }
    }
    finish(p);
    p.trace.push_back("base: log genus-1, delta=" + std::to_string(delta));
    return p;
}

Presentation log_delta1_hyperelliptic(int g, GinKind /*kind*/) {
    // z (3), y_1..y_g (2), x_1..x_g (1).
    Presentation p;
    p.sig = Signature{g, {}, 1};
    std::vector<VarRef> vars;
    vars.push_back(VarRef{'z', 3, 0});
    for (int j = 1; j <= g; ++j) vars.push_back(VarRef{'y', 2, j});
    for (int i = 1; i <= g; ++i) vars.push_back(VarRef{'x', 1, i});
    p.vars = VarTable(vars);
    p.gens.push_back(gen('z', 3, 0));
    for (int j = 1; j <= g; ++j) p.gens.push_back(gen('y', 2, j));
    for (int i = 1; i <= g; ++i) p.gens.push_back(gen('x', 1, i));
    add_rels(p, 2, binom2(g - 1));
    add_rels(p, 3, static_cast<long long>(g - 1) * (g - 1));
    add_rels(p, 4, static_cast<long long>(g - 1) * (g + 4) / 2);
    add_rels(p, 5, 2LL * (g - 1));
    add_rels(p, 6, 1);
    int n = p.vars.size();
    auto zp = 0;
    auto yp = [&](int j) { return j; };
    auto xp = [&](int i) { return g + i; };
    for (int i = 1; i < g - 1; ++i)
        for (int j = i + 1; j <= g - 1; ++j) p.gin.add(mono(n, {{xp(i), 1}, {xp(j), 1}}));
    for (int i = 1; i <= g - 1; ++i)
        for (int j = 1; j <= g - 1; ++j) p.gin.add(mono(n, {{yp(i), 1}, {xp(j), 1}}));
    for (int i = 1; i <= g; ++i)
        for (int j = i; j <= g; ++j) {
            if (i == g && j == g) continue;
            p.gin.add(mono(n, {{yp(i), 1}, {yp(j), 1}}));
        }
    for (int i = 1; i <= g - 1; ++i) p.gin.add(mono(n, {{zp, 1}, {xp(i), 1}}));
    for (int i = 1; i <= g - 1; ++i) p.gin.add(mono(n, {{yp(g), 2}, {xp(i), 1}}));
    for (int i = 1; i <= g - 1; ++i) p.gin.add(mono(n, {{zp, 1}, {yp(i), 1}}));
    p.gin.add(mono(n, {{zp, 2}}));
    finish(p);
    p.trace.push_back("base: log delta=1 hyperelliptic g=" + std::to_string(g));
    return p;
}

Presentation log_delta1_nonhyperelliptic(int g, bool exceptional, GinKind /*kind*/) {
    // z (3), y_1, y_2 (2), x_1..x_g (1).
    Presentation p;
    p.sig = Signature{g, {}, 1};
    std::vector<VarRef> vars;
    vars.push_back(VarRef{'z', 3, 0});
    vars.push_back(VarRef{'y', 2, 1});
    vars.push_back(VarRef{'y', 2, 2});
    for (int i = 1; i <= g; ++i) vars.push_back(VarRef{'x', 1, i});
    p.vars = VarTable(vars);
    p.gens.push_back(gen('z', 3, 0));
    p.gens.push_back(gen('y', 2, 1));
    p.gens.push_back(gen('y', 2, 2));
    for (int i = 1; i <= g; ++i) p.gens.push_back(gen('x', 1, i));
    add_rels(p, 2, binom2(g - 2));
    add_rels(p, 3, exceptional ? 3LL * g - 5 : 2LL * g - 2);
    add_rels(p, 4, g + 1);
    add_rels(p, 5, 1);
    add_rels(p, 6, 1);
    int n = p.vars.size();
    int zp = 0, y1 = 1, y2 = 2;
    auto xp = [&](int i) { return 2 + i; };
    for (int i = 1; i < g - 2; ++i)
        for (int j = i + 1; j <= g - 2; ++j) p.gin.add(mono(n, {{xp(i), 1}, {xp(j), 1}}));
    for (int i = 1; i <= g - 1; ++i) {
        p.gin.add(mono(n, {{y1, 1}, {xp(i), 1}}));
        p.gin.add(mono(n, {{y2, 1}, {xp(i), 1}}));
    }
    for (int i = 1; i <= g - 3; ++i) p.gin.add(mono(n, {{xp(i), 2}, {xp(g - 1), 1}}));
    p.gin.add(mono(n, {{y1, 2}}));
    p.gin.add(mono(n, {{y1, 1}, {y2, 1}}));
    p.gin.add(mono(n, {{xp(g - 2), 3}, {xp(g - 1), 1}}));
    for (int i = 1; i <= g - 1; ++i) p.gin.add(mono(n, {{zp, 1}, {xp(i), 1}}));
    p.gin.add(mono(n, {{zp, 1}, {y1, 1}}));
    p.gin.add(mono(n, {{zp, 2}}));
    finish(p);
    p.trace.push_back("base: log delta=1 nonhyperelliptic g=" + std::to_string(g));
    return p;
}

Presentation log_delta2_fixed(int g, GinKind /*kind*/) {
    // Delta hyperelliptic fixed, h = g+1: x_1..x_h (1), y_1..y_{h-1} (2).
    Presentation p;
    p.sig = Signature{g, {}, 2};
    int h = g + 1;
    std::vector<VarRef> vars;
    for (int j = 1; j <= h - 1; ++j) vars.push_back(VarRef{'y', 2, j});
    for (int i = 1; i <= h; ++i) vars.push_back(VarRef{'x', 1, i});
    p.vars = VarTable(vars);
    for (int j = 1; j <= h - 1; ++j) p.gens.push_back(gen('y', 2, j));
    for (int i = 1; i <= h; ++i) p.gens.push_back(gen('x', 1, i));
    add_rels(p, 2, binom2(h - 1));
    add_rels(p, 3, static_cast<long long>(h - 1) * (h - 2));
    add_rels(p, 4, binom2(h));
    int n = p.vars.size();
    auto yp = [&](int j) { return j - 1; };
    auto xp = [&](int i) { return h - 1 + i - 1; };
    for (int i = 1; i < h - 1; ++i)
        for (int j = i + 1; j <= h - 1; ++j) p.gin.add(mono(n, {{xp(i), 1}, {xp(j), 1}}));
    for (int j = 1; j <= h - 2; ++j)
        for (int i = 1; i <= h - 1; ++i) p.gin.add(mono(n, {{yp(j), 1}, {xp(i), 1}}));
    for (int i = 1; i <= h - 1; ++i)
        for (int j = i; j <= h - 1; ++j) p.gin.add(mono(n, {{yp(i), 1}, {yp(j), 1}}));
    finish(p);
    p.trace.push_back("base: log delta=2 hyperelliptic-fixed g=" + std::to_string(g));
    return p;
}

Presentation log_delta2_generic(int g, bool extends_g13, GinKind /*kind*/) {
    // Delta not hyperelliptic fixed, h = g+1: x_1..x_h (1), y (2).
    Presentation p;
    p.sig = Signature{g, {}, 2};
    int h = g + 1;
    std::vector<VarRef> vars;
    vars.push_back(VarRef{'y', 2, 0});
    for (int i = 1; i <= h; ++i) vars.push_back(VarRef{'x', 1, i});
    p.vars = VarTable(vars);
    p.gens.push_back(gen('y', 2, 0));
    for (int i = 1; i <= h; ++i) p.gens.push_back(gen('x', 1, i));
    add_rels(p, 2, binom2(h - 2));
    add_rels(p, 3, extends_g13 ? 2LL * (h - 2) : h - 1);
    add_rels(p, 4, 1);
    int n = p.vars.size();
    int yp = 0;
    auto xp = [&](int i) { return i; };
    for (int i = 1; i < h - 2; ++i)
        for (int j = i + 1; j <= h - 2; ++j) p.gin.add(mono(n, {{xp(i), 1}, {xp(j), 1}}));
    for (int i = 1; i <= h - 3; ++i) p.gin.add(mono(n, {{xp(i), 2}, {xp(h - 1), 1}}));
    for (int i = 1; i <= h - 1; ++i) p.gin.add(mono(n, {{yp, 1}, {xp(i), 1}}));
    p.gin.add(mono(n, {{yp, 2}}));
    p.gin.add(mono(n, {{xp(h - 2), 3}, {xp(h - 1), 1}}));
    finish(p);
    p.trace.push_back("base: log delta=2 generic g=" + std::to_string(g));
    return p;
}

Presentation log_delta_ge3(int g, int delta, GinKind /*kind*/) {
    Presentation p;
    p.sig = Signature{g, {}, delta};
    int h = g + delta - 1;
    std::vector<VarRef> vars;
    for (int i = 1; i <= h; ++i) vars.push_back(VarRef{'x', 1, i});
    p.vars = VarTable(vars);
    for (int i = 1; i <= h; ++i) p.gens.push_back(gen('x', 1, i));
    add_rels(p, 2, binom2(h - 2) + (delta - 3));
    if (delta == 3) add_rels(p, 3, g);
    int n = h;
    auto xp = [&](int i) { return i - 1; };
    for (int i = 1; i < h - 2; ++i)
        for (int j = i + 1; j <= h - 2; ++j) p.gin.add(mono(n, {{xp(i), 1}, {xp(j), 1}}));
    for (int i = 1; i <= delta - 3; ++i) p.gin.add(mono(n, {{xp(i), 1}, {xp(h - 1), 1}}));
    for (int i = delta - 2; i <= h - 2; ++i) p.gin.add(mono(n, {{xp(i), 2}, {xp(h - 1), 1}}));
    finish(p);
    p.trace.push_back("base: log delta>=3 g=" + std::to_string(g));
    return p;
}

}  // namespace

Presentation log_classical(int g, int delta, const CurveFlags& flags, GinKind kind) {
    if (delta < 1) throw Error("log_classical: delta must be >= 1");
    Presentation p;
    if (g == 0) p = log_genus0(delta, kind);
    else if (g == 1) p = log_genus1(delta, kind);
    else if (delta == 1)
        p = flags.hyperelliptic ? log_delta1_hyperelliptic(g, kind)
                                : log_delta1_nonhyperelliptic(g, flags.exceptional, kind);
    else if (delta == 2)
        p = flags.delta_hyperelliptic_fixed ? log_delta2_fixed(g, kind)
                                            : log_delta2_generic(g, flags.delta_extends_g13, kind);
    else p = log_delta_ge3(g, delta, kind);
    p.flags = flags;
    p.gin_kind = kind;
    return p;
}

std::optional<Presentation> genus1_base(const Signature& sig) {
    if (sig.g != 1 || sig.delta != 0 || sig.e.empty()) return std::nullopt;
    bool all2 = std::all_of(sig.e.begin(), sig.e.end(), [](int e) { return e == 2; });
    Presentation p;
    p.sig = sig;
    if (sig.r() == 1) {
        int e = sig.e[0];
        if (e == 2) {
            p.vars = VarTable({VarRef{'y', 6, 0}, VarRef{'x', 4, 0}, VarRef{'x', 1, 0}});
            p.gens = {gen('y', 6, 0, {3}), gen('x', 4, 0, {2}), gen('x', 1, 0, {0})};
            add_rels(p, 12, 1);
            p.rels[0].has_lead = true;
            p.rels[0].lead = mono(3, {{0, 2}});
            p.gin.add(mono(3, {{0, 2}}));
        } else if (e == 3) {
            p.vars = VarTable({VarRef{'y', 5, 0}, VarRef{'x', 3, 0}, VarRef{'x', 1, 0}});
            p.gens = {gen('y', 5, 0, {4}), gen('x', 3, 0, {2}), gen('x', 1, 0, {0})};
            add_rels(p, 10, 1);
            p.rels[0].has_lead = true;
            p.rels[0].lead = mono(3, {{0, 2}});
            p.gin.add(mono(3, {{0, 2}}));
        } else if (e == 4) {
            p.vars = VarTable({VarRef{'y', 4, 0}, VarRef{'x', 3, 0}, VarRef{'x', 1, 0}});
            p.gens = {gen('y', 4, 0, {3}), gen('x', 3, 0, {2}), gen('x', 1, 0, {0})};
            add_rels(p, 9, 1);
            p.rels[0].has_lead = true;
            p.rels[0].lead = mono(3, {{1, 3}});
            p.gin.add(mono(3, {{1, 3}}));
        } else {
            // (1;e;0), e >= 5: u and x_3..x_e; x_d has pole d-1 at Q.
            std::vector<VarRef> vars;
            for (int d = e; d >= 3; --d) vars.push_back(VarRef{'x', d, 0});
            vars.push_back(VarRef{'x', 1, 0});
            p.vars = VarTable(vars);
            for (int d = e; d >= 3; --d) p.gens.push_back(gen('x', d, 0, {d - 1}));
            p.gens.push_back(gen('x', 1, 0, {0}));
            int n = p.vars.size();
            auto pos = [&](int d) { return e - d; };  // x_e at 0, ..., x_3 at e-3
            // Pairs 3 <= i <= j <= e-1 except (3, e-1); pole-order counting
            // pins the spanning family x_e^a x_{e-1} x_3 x_1^b.
            for (int i = 3; i <= e - 1; ++i)
                for (int j = i; j <= e - 1; ++j) {
                    if (i == 3 && j == e - 1) continue;
                    add_rels(p, i + j, 1);
                    auto& rel = p.rels.back();
                    rel.has_lead = true;
                    rel.lead = mono(n, {{pos(i), 1}, {pos(j), 1}});
                    p.gin.add(rel.lead);
                }
        }
        finish(p);
        p.trace.push_back("base: genus-1 stacky " + format_signature(sig));
        return p;
    }
    if (sig.r() == 2 && all2) {
        p.vars = VarTable({VarRef{'y', 4, 0}, VarRef{'x', 2, 0}, VarRef{'x', 1, 0}});
        p.gens = {gen('y', 4, 0, {2, 2}), gen('x', 2, 0, {1, 1}), gen('x', 1, 0, {0, 0})};
        add_rels(p, 8, 1);
        p.rels[0].has_lead = true;
        p.rels[0].lead = mono(3, {{0, 2}});
        p.gin.add(mono(3, {{0, 2}}));
        finish(p);
        p.trace.push_back("base: genus-1 stacky (1;2,2;0)");
        return p;
    }
    if (sig.r() == 3 && all2) {
        p.vars = VarTable({VarRef{'x', 2, 1}, VarRef{'x', 2, 2}, VarRef{'x', 1, 0}});
        p.gens = {gen('x', 2, 1, {1, 1, 1}), gen('x', 2, 2, {1, 1, 1}), gen('x', 1, 0, {0, 0, 0})};
        add_rels(p, 6, 1);
        p.rels[0].has_lead = true;
        p.rels[0].lead = mono(3, {{0, 3}});
        p.gin.add(mono(3, {{0, 3}}));
        finish(p);
        p.trace.push_back("base: genus-1 stacky (1;2,2,2;0)");
        return p;
    }
    return std::nullopt;
}

namespace {

// One embedded genus-zero table row: relation degrees and the printed
// initial ideal, encoded as (degree, class position, exponent) factors
// with class positions counted in the table's own variable order.
struct G0Row {
    std::vector<int> e;
    int delta = 0;
    std::vector<int> rel_degrees;
    std::vector<std::vector<std::array<int, 3>>> gin;
};

const std::vector<G0Row>& g0_rows() {
    static const std::vector<G0Row> rows = {
        {{2, 3, 7}, 0, {42}, {{{21, 1, 2}}}},
        {{2, 3, 8}, 0, {30}, {{{15, 1, 2}}}},
        {{2, 3, 9}, 0, {24}, {{{9, 1, 2}, {6, 1, 1}}}},
        {{2, 3, 10}, 0, {16, 18}, {{{10, 1, 1}, {6, 1, 1}}, {{10, 1, 1}, {8, 1, 1}}, {{9, 1, 2}, {6, 1, 1}}}},
        {{2, 4, 5}, 0, {30}, {{{15, 1, 2}}}},
        {{2, 4, 6}, 0, {22}, {{{11, 1, 2}}}},
        {{2, 4, 7}, 0, {18}, {{{7, 1, 2}, {4, 1, 1}}}},
        {{2, 4, 8}, 0, {12, 14}, {{{8, 1, 1}, {4, 1, 1}}, {{8, 1, 1}, {6, 1, 1}}, {{7, 1, 2}, {4, 1, 1}}}},
        {{2, 5, 5}, 0, {20}, {{{10, 1, 2}}}},
        {{2, 5, 6}, 0, {16}, {{{6, 1, 2}, {4, 1, 1}}}},
        {{2, 5, 7}, 0, {11, 12}, {{{7, 1, 1}, {4, 1, 1}}, {{7, 1, 1}, {5, 1, 1}}, {{6, 1, 2}, {4, 1, 1}}}},
        {{2, 6, 6}, 0, {10, 12},
         {{{6, 1, 1}, {4, 1, 1}}, {{6, 1, 2}}, {{6, 1, 1}, {5, 1, 2}}, {{6, 2, 2}, {4, 1, 2}}}},
        {{3, 3, 4}, 0, {24}, {{{12, 1, 2}}}},
        {{3, 3, 5}, 0, {18}, {{{9, 1, 2}}}},
        {{3, 3, 6}, 0, {15}, {{{6, 1, 2}, {3, 1, 1}}}},
        {{3, 3, 7}, 0, {10, 12}, {{{7, 1, 1}, {3, 1, 1}}, {{7, 1, 1}, {5, 1, 1}}, {{6, 1, 2}, {3, 1, 1}}}},
        {{3, 4, 4}, 0, {16}, {{{8, 1, 2}}}},
        {{3, 4, 5}, 0, {13}, {{{5, 1, 2}, {3, 1, 1}}}},
        {{3, 4, 6}, 0, {9, 10}, {{{6, 1, 1}, {3, 1, 1}}, {{6, 1, 1}, {4, 1, 1}}, {{5, 1, 2}, {3, 1, 1}}}},
        {{3, 5, 5}, 0, {8, 10},
         {{{5, 1, 1}, {3, 1, 1}}, {{5, 1, 2}}, {{5, 1, 1}, {4, 1, 2}}, {{5, 2, 2}, {3, 1, 2}}}},
        {{4, 4, 4}, 0, {12}, {{{4, 1, 3}}}},
        {{4, 4, 5}, 0, {8, 9}, {{{5, 1, 1}, {3, 1, 1}}, {{5, 1, 1}, {4, 1, 1}}, {{4, 1, 3}}}},
        {{4, 5, 5}, 0, {8, 8, 9, 9, 10},
         {{{5, 2, 1}, {3, 1, 1}},
          {{5, 1, 1}, {3, 1, 1}},
          {{5, 1, 1}, {4, 2, 1}},
          {{5, 1, 1}, {4, 1, 1}},
          {{5, 1, 2}},
          {{4, 1, 3}},
          {{5, 2, 1}, {4, 1, 2}}}},
        {{5, 5, 5}, 0, {8, 8, 8, 9, 9, 9, 10, 10, 10},
         {{{5, 3, 1}, {3, 1, 1}},
          {{5, 2, 1}, {3, 1, 1}},
          {{5, 1, 1}, {3, 1, 1}},
          {{5, 2, 1}, {4, 2, 1}},
          {{5, 1, 1}, {4, 2, 1}},
          {{5, 1, 1}, {4, 1, 1}},
          {{5, 1, 1}, {5, 3, 1}},
          {{5, 1, 1}, {5, 2, 1}},
          {{5, 1, 2}},
          {{4, 1, 3}},
          {{5, 2, 1}, {4, 1, 2}},
          {{5, 2, 2}, {4, 1, 1}},
          {{5, 2, 3}}}},
        {{2, 2, 2, 3}, 0, {18}, {{{9, 1, 2}}}},
        {{2, 2, 2, 4}, 0, {14}, {{{7, 1, 2}}}},
        {{2, 2, 2, 5}, 0, {12}, {{{5, 1, 2}, {2, 1, 1}}}},
        {{2, 2, 2, 6}, 0, {8, 10}, {{{6, 1, 1}, {2, 1, 1}}, {{5, 1, 2}}}},
        {{2, 2, 3, 3}, 0, {6, 12}, {{{6, 1, 1}}, {{6, 2, 2}}}},
        {{2, 2, 3, 4}, 0, {10}, {{{4, 1, 2}, {2, 1, 1}}}},
        {{2, 2, 4, 4}, 0, {6, 8},
         {{{4, 1, 1}, {2, 1, 1}}, {{4, 1, 2}}, {{4, 1, 1}, {3, 1, 2}}, {{4, 2, 2}, {2, 1, 2}}}},
        {{2, 3, 3, 3}, 0, {9}, {{{3, 1, 3}}}},
        {{2, 3, 3, 4}, 0, {6, 7}, {{{4, 1, 1}, {2, 1, 1}}, {{4, 1, 1}, {3, 2, 1}}, {{3, 1, 3}}}},
        {{2, 4, 4, 4}, 0, {6, 6, 6, 7, 7, 7, 8, 8, 8},
         {{{4, 3, 1}, {2, 1, 1}},
          {{4, 2, 1}, {2, 1, 1}},
          {{4, 1, 1}, {2, 1, 1}},
          {{4, 2, 1}, {3, 2, 1}},
          {{4, 1, 1}, {3, 2, 1}},
          {{4, 1, 1}, {3, 1, 1}},
          {{4, 1, 1}, {4, 3, 1}},
          {{4, 1, 1}, {4, 2, 1}},
          {{4, 1, 2}},
          {{3, 1, 3}},
          {{4, 2, 1}, {3, 1, 2}},
          {{4, 2, 2}, {3, 1, 1}},
          {{4, 2, 3}}}},
        {{3, 3, 3, 3}, 0, {6, 6},
         {{{3, 1, 1}, {3, 3, 1}}, {{3, 1, 2}}, {{3, 1, 1}, {3, 2, 2}}, {{3, 2, 4}}}},
        {{4, 4, 4, 4}, 0, {6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8, 8},
         {{{3, 1, 1}, {3, 3, 1}},
          {{3, 1, 2}},
          {{4, 4, 1}, {2, 1, 1}},
          {{4, 3, 1}, {2, 1, 1}},
          {{4, 2, 1}, {2, 1, 1}},
          {{4, 1, 1}, {2, 1, 1}},
          {{4, 3, 1}, {3, 3, 1}},
          {{4, 3, 1}, {3, 2, 1}},
          {{4, 2, 1}, {3, 3, 1}},
          {{4, 2, 1}, {3, 2, 1}},
          {{4, 2, 1}, {3, 1, 1}},
          {{4, 1, 1}, {3, 3, 1}},
          {{4, 1, 1}, {3, 2, 1}},
          {{4, 1, 1}, {3, 1, 1}},
          {{4, 2, 1}, {4, 4, 1}},
          {{4, 2, 2}},
          {{4, 1, 1}, {4, 4, 1}},
          {{4, 1, 1}, {4, 3, 1}},
          {{4, 1, 1}, {4, 2, 1}},
          {{4, 1, 2}},
          {{3, 1, 1}, {3, 2, 2}},
          {{4, 3, 2}, {3, 1, 1}},
          {{3, 2, 4}},
          {{4, 2, 1}, {4, 3, 2}},
          {{4, 3, 4}}}},
        {{2, 2, 2, 2, 2}, 0, {10}, {{{5, 1, 2}}}},
        {{2, 2, 2, 2, 3}, 0, {8}, {{{3, 1, 2}, {2, 2, 1}}}},
        {{2, 2, 2, 2, 2, 2}, 0, {4, 6}, {{{2, 1, 1}, {2, 3, 1}}, {{3, 1, 2}}}},
    };
    return rows;
}

// Builds a base presentation from surviving toric generators plus the
// embedded relation/gin data of a table row.
Presentation build_from_row(const Signature& sig, const std::vector<int>& rel_degrees,
                            const std::vector<std::vector<std::array<int, 3>>>& gin_data) {
    SimplifiedPresentation simp = simplify_toric(sig);
    Presentation p;
    p.sig = sig;
    p.vars = simp.vars;
    for (size_t i = 0; i < simp.generators.size(); ++i) {
        const auto& g = simp.generators[i];
        GenEntry entry;
        entry.label = p.vars.var(static_cast<int>(i));
        entry.degree = static_cast<int>(g.nu.d);
        entry.pole_orders.assign(g.lift.stacky.begin(), g.lift.stacky.end());
        p.gens.push_back(entry);
    }
    // Map (degree, class position) onto variable table positions; classes
    // are laid out contiguously in precedence order.
    std::map<int, std::vector<int>> class_positions;
    for (int i = 0; i < p.vars.size(); ++i) class_positions[p.vars.degree(i)].push_back(i);
    auto decode = [&](const std::vector<std::array<int, 3>>& factors) {
        Monomial m = Monomial::one(p.vars.size());
        for (const auto& f : factors) {
            auto it = class_positions.find(f[0]);
            if (it == class_positions.end() || f[1] > static_cast<int>(it->second.size()))
                throw Error("tables: bad gin data for " + format_signature(sig));
            m.exps[it->second[f[1] - 1]] += f[2];
        }
        return m;
    };
    std::vector<Monomial> gin_monomials;
    for (const auto& gdata : gin_data) {
        Monomial m = decode(gdata);
        gin_monomials.push_back(m);
        p.gin.add(m);
    }
    // Relations: degree-matched leads when the matching is unambiguous.
    std::map<int, std::vector<Monomial>> gin_by_degree;
    for (const auto& m : gin_monomials)
        gin_by_degree[static_cast<int>(m.degree(p.vars))].push_back(m);
    std::map<int, int> rel_count;
    for (int d : rel_degrees) rel_count[d]++;
    std::map<int, int> next_in_degree;
    for (int d : rel_degrees) {
        RelEntry rel;
        rel.degree = d;
        auto it = gin_by_degree.find(d);
        if (it != gin_by_degree.end() &&
            static_cast<int>(it->second.size()) == rel_count[d]) {
            rel.has_lead = true;
            rel.lead = it->second[next_in_degree[d]++];
        }
        p.rels.push_back(rel);
    }
    finish(p);
    p.trace.push_back("base: genus-0 table row " + format_signature(sig));
    return p;
}

// Hecke group (0;2,e;1): generators x_2..x_e, relations x_i x_j for
// 3 <= i <= j <= e-1.
Presentation hecke_base(int e) {
    Signature sig{0, {2, e}, 1};
    SimplifiedPresentation simp = simplify_toric(sig);
    Presentation p;
    p.sig = sig;
    p.vars = simp.vars;
    for (size_t i = 0; i < simp.generators.size(); ++i) {
        GenEntry entry;
        entry.label = p.vars.var(static_cast<int>(i));
        entry.degree = static_cast<int>(simp.generators[i].nu.d);
        entry.pole_orders.assign(simp.generators[i].lift.stacky.begin(),
                                 simp.generators[i].lift.stacky.end());
        p.gens.push_back(entry);
    }
    std::map<int, int> pos_of_degree;
    for (int i = 0; i < p.vars.size(); ++i) pos_of_degree[p.vars.degree(i)] = i;
    for (int i = 3; i <= e - 1; ++i)
        for (int j = i; j <= e - 1; ++j) {
            RelEntry rel;
            rel.degree = i + j;
            rel.has_lead = true;
            rel.lead = mono(p.vars.size(), {{pos_of_degree[i], 1}, {pos_of_degree[j], 1}});
            p.rels.push_back(rel);
            p.gin.add(rel.lead);
        }
    finish(p);
    p.trace.push_back("base: Hecke " + format_signature(sig));
    return p;
}

// Generalized Hecke (0;e,e;1): x_2..x_e and y_3..y_e.
Presentation generalized_hecke_base(int e) {
    Signature sig{0, {e, e}, 1};
    SimplifiedPresentation simp = simplify_toric(sig);
    Presentation p;
    p.sig = sig;
    p.vars = simp.vars;
    for (size_t i = 0; i < simp.generators.size(); ++i) {
        GenEntry entry;
        entry.label = p.vars.var(static_cast<int>(i));
        entry.degree = static_cast<int>(simp.generators[i].nu.d);
        entry.pole_orders.assign(simp.generators[i].lift.stacky.begin(),
                                 simp.generators[i].lift.stacky.end());
        p.gens.push_back(entry);
    }
    // Within each degree class of size two, the first (higher precedence)
    // variable plays x, the second plays y.
    std::map<int, std::vector<int>> class_positions;
    for (int i = 0; i < p.vars.size(); ++i) class_positions[p.vars.degree(i)].push_back(i);
    auto xpos = [&](int d) { return class_positions[d][0]; };
    auto ypos = [&](int d) {
        const auto& v = class_positions[d];
        return v.size() > 1 ? v[1] : v[0];
    };
    int n = p.vars.size();
    for (int i = 3; i <= e - 1; ++i)
        for (int j = i; j <= e - 1; ++j) {
            RelEntry rel;
            rel.degree = i + j;
            rel.has_lead = true;
            rel.lead = mono(n, {{xpos(i), 1}, {xpos(j), 1}});
            p.rels.push_back(rel);
            p.gin.add(rel.lead);
        }
    for (int i = 3; i <= e; ++i)
        for (int j = 3; j <= e - 1; ++j) {
            RelEntry rel;
            rel.degree = i + j;
            rel.has_lead = true;
            rel.lead = mono(n, {{xpos(i), 1}, {ypos(j), 1}});
            p.rels.push_back(rel);
            p.gin.add(rel.lead);
        }
    for (int i = 3; i <= e; ++i)
        for (int j = i; j <= e; ++j) {
            RelEntry rel;
            rel.degree = i + j;
            rel.has_lead = true;
            rel.lead = mono(n, {{ypos(i), 1}, {ypos(j), 1}});
            p.rels.push_back(rel);
            p.gin.add(rel.lead);
        }
    finish(p);
    p.trace.push_back("base: generalized Hecke " + format_signature(sig));
    return p;
}

// (0;2,2,2;1): derived base (the reduction lemmas do not reach it); data
// from the toric pipeline.
Presentation base_22201() {
    Signature sig{0, {2, 2, 2}, 1};
    SimplifiedPresentation simp = simplify_toric(sig);
    Presentation p;
    p.sig = sig;
    p.vars = simp.vars;
    for (size_t i = 0; i < simp.generators.size(); ++i) {
        GenEntry entry;
        entry.label = p.vars.var(static_cast<int>(i));
        entry.degree = static_cast<int>(simp.generators[i].nu.d);
        entry.pole_orders.assign(simp.generators[i].lift.stacky.begin(),
                                 simp.generators[i].lift.stacky.end());
        p.gens.push_back(entry);
    }
    for (int d : simp.P_I.degree_multiset()) {
        RelEntry rel;
        rel.degree = d;
        p.rels.push_back(rel);
    }
    p.gin = simp.initial_ideal;
    finish(p);
    p.trace.push_back("base: derived toric base " + format_signature(sig));
    return p;
}

}  // namespace

bool genus0_is_base(const Signature& sig) {
    if (sig.g != 0) return false;
    if (sig.delta == 0) {
        for (const auto& row : g0_rows())
            if (row.e == sig.e) return true;
        return false;
    }
    if (sig.delta == 1 && sig.r() == 2) {
        if (sig.e[0] == 2 && sig.e[1] >= 3) return true;
        if (sig.e[0] == sig.e[1] && sig.e[0] >= 3) return true;
    }
    return sig.delta == 1 && sig.e == std::vector<int>{2, 2, 2};
}

std::optional<Presentation> genus0_base(const Signature& sig) {
    if (!genus0_is_base(sig)) return std::nullopt;
    static std::mutex cache_mutex;
    static std::map<Signature, Presentation> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(sig);
        if (it != cache.end()) return it->second;
    }
    Presentation built;
    if (sig.delta == 0) {
        for (const auto& row : g0_rows())
            if (row.e == sig.e) {
                built = build_from_row(sig, row.rel_degrees, row.gin);
                break;
            }
    } else if (sig.r() == 2 && sig.e[0] == 2) {
        built = hecke_base(sig.e[1]);
    } else if (sig.r() == 2) {
        built = generalized_hecke_base(sig.e[0]);
    } else {
        built = base_22201();
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(sig, built);
    return built;
}

std::vector<Signature> genus0_base_signatures(int max_e) {
    std::vector<Signature> out;
    for (const auto& row : g0_rows()) out.push_back(Signature{0, row.e, row.delta});
    for (int e = 3; e <= max_e; ++e) out.push_back(Signature{0, {2, e}, 1});
    for (int e = 3; e <= max_e; ++e) out.push_back(Signature{0, {e, e}, 1});
    out.push_back(Signature{0, {2, 2, 2}, 1});
    return out;
}

std::vector<EffRow> eff_rows() {
    std::vector<EffRow> rows = {
        {{0, {2, 3, 7}, 0}, {6, 14, 21}, 44},
        {{0, {2, 3, 8}, 0}, {6, 8, 15}, 26},
        {{0, {2, 3, 9}, 0}, {6, 8, 9}, 20},
        {{0, {2, 3, 10}, 0}, {6, 8, 9, 10}, 14},
        {{0, {2, 3, 11}, 0}, {6, 8, 9, 10, 11}, 14},
        {{0, {2, 3, 12}, 0}, {6, 8, 9, 10, 11}, 14},
        {{0, {2, 4, 5}, 0}, {4, 10, 15}, 22},
        {{0, {2, 4, 6}, 0}, {4, 6, 11}, 14},
        {{0, {2, 4, 7}, 0}, {4, 6, 7}, 10},
        {{0, {2, 4, 8}, 0}, {4, 6, 7}, 10},
        {{0, {2, 5, 5}, 0}, {4, 5}, 12},
        {{0, {2, 5, 6}, 0}, {4, 5, 6}, 8},
        {{0, {2, 6, 6}, 0}, {4, 5, 6}, 8},
        {{0, {3, 3, 4}, 0}, {3, 8}, 14},
        {{0, {3, 3, 5}, 0}, {3, 5}, 8},
        {{0, {3, 3, 6}, 0}, {3, 5}, 8},
        {{0, {3, 4, 4}, 0}, {3, 4}, 6},
        {{0, {4, 4, 4}, 0}, {3, 4}, 6},
        {{0, {2, 2, 2, 3}, 0}, {2, 9}, 8},
        {{0, {2, 2, 2, 4}, 0}, {2, 7}, 6},
        {{0, {2, 2, 2, 2, 2}, 0}, {2, 5}, 4},
    };
    // Parametric families.
    for (int e = 13; e <= 16; ++e) rows.push_back({{0, {2, 3, e}, 0}, {6, 8, 9, 10, 11, 13}, 8});
    for (int e = 9; e <= 12; ++e) rows.push_back({{0, {2, 4, e}, 0}, {4, 6, 7, 9}, 6});
    for (int e2 = 5; e2 <= 7; ++e2)
        for (int e3 = std::max(7, e2); e3 <= 9; ++e3)
            rows.push_back({{0, {2, e2, e3}, 0}, {4, 5, 6, 7}, 4});
    for (int e = 7; e <= 10; ++e) rows.push_back({{0, {3, 3, e}, 0}, {3, 5, 7}, 5});
    for (int e1 = 3; e1 <= 4; ++e1)
        for (int e2 = std::max(4, e1); e2 <= 5; ++e2)
            for (int e3 = std::max(5, e2); e3 <= 6; ++e3)
                rows.push_back({{0, {e1, e2, e3}, 0}, {3, 4, 5}, 3});
    for (int e = 5; e <= 8; ++e) rows.push_back({{0, {2, 2, 2, e}, 0}, {2, 5}, 4});
    return rows;
}

const std::vector<ExceptionRow>& genus0_exceptions() {
    static const std::vector<ExceptionRow> rows = {
        {{0, {2, 3, 7}, 0}, 21, 42},   {{0, {2, 3, 8}, 0}, 15, 30},
        {{0, {2, 3, 9}, 0}, 9, 24},    {{0, {2, 4, 5}, 0}, 15, 30},
        {{0, {2, 4, 6}, 0}, 11, 22},   {{0, {2, 4, 7}, 0}, 7, 18},
        {{0, {2, 5, 5}, 0}, 10, 20},   {{0, {2, 5, 6}, 0}, 6, 16},
        {{0, {3, 3, 4}, 0}, 12, 24},   {{0, {3, 3, 5}, 0}, 9, 18},
        {{0, {3, 3, 6}, 0}, 6, 15},    {{0, {3, 4, 4}, 0}, 8, 16},
        {{0, {3, 4, 5}, 0}, 5, 13},    {{0, {4, 4, 4}, 0}, 4, 12},
        {{0, {2, 2, 2, 3}, 0}, 9, 18}, {{0, {2, 2, 2, 4}, 0}, 7, 14},
        {{0, {2, 2, 2, 5}, 0}, 5, 12}, {{0, {2, 2, 3, 3}, 0}, 6, 12},
        {{0, {2, 2, 3, 4}, 0}, 4, 10}, {{0, {2, 3, 3, 3}, 0}, 3, 9},
        {{0, {2, 2, 2, 2, 2}, 0}, 5, 10},
        {{0, {2, 2, 2, 2, 3}, 0}, 3, 8},
    };
    return rows;
}

std::optional<ExceptionRow> genus0_exception_for(const Signature& sig) {
    if (sig.g != 0) return std::nullopt;
    for (const auto& row : genus0_exceptions())
        if (row.sig == sig) return row;
    // (0;2,...,2;0) with r >= 6: generated in degree 3, relations in 6.
    if (sig.delta == 0 && sig.r() >= 6 &&
        std::all_of(sig.e.begin(), sig.e.end(), [](int e) { return e == 2; }))
        return ExceptionRow{sig, 3, 6};
    return std::nullopt;
}

}  // namespace tables
}  // namespace stacky
