#include "stacky/simplify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "stacky/effmon.hpp"
#include "stacky/error.hpp"
#include "stacky/linalg.hpp"

namespace stacky {

int epsilon(const Signature& sig, int i, long long d1, long long d2) {
    if (sig.g != 0) throw GenusNotZero("epsilon: genus must be 0");
    if (i < 1 || i > sig.r()) throw Error("epsilon: stacky index out of range");
    if (d1 < 0 || d2 < 0) throw Error("epsilon: negative degree");
    int e = sig.e[i - 1];
    long long lhs = ((d1 + d2) * (e - 1)) / e;
    long long rhs = (d1 * (e - 1)) / e + (d2 * (e - 1)) / e;
    return lhs == rhs ? 0 : 1;
}

bool generator_superfluous(const Signature& sig, long long d) {
    if (sig.g != 0) throw GenusNotZero("generator_superfluous: genus must be 0");
    if (d < 1 || !eff_member(sig, d)) throw Error("generator_superfluous: d must be in Eff, >= 1");

    std::vector<std::vector<int>> eps_vectors;
    for (long long d1 = 1; d1 <= d / 2; ++d1) {
        long long d2 = d - d1;
        if (!eff_member(sig, d1) || !eff_member(sig, d2)) continue;
        std::vector<int> eps(sig.r());
        for (int i = 1; i <= sig.r(); ++i) eps[i - 1] = epsilon(sig, i, d1, d2);
        eps_vectors.push_back(eps);
    }
    if (eps_vectors.empty()) return false;

    // (i): every stacky index is covered by some decomposition with eps = 0.
    for (int i = 0; i < sig.r(); ++i) {
        bool covered = false;
        for (const auto& eps : eps_vectors) covered = covered || eps[i] == 0;
        if (!covered) return false;
    }
    // (ii): the floor dimension accommodates the pairwise lcm degrees.
    long long bound = floor_degree(sig, d) + 1;
    for (size_t a = 0; a < eps_vectors.size(); ++a)
        for (size_t b = a; b < eps_vectors.size(); ++b) {
            long long lcm_deg = 0;
            for (int i = 0; i < sig.r(); ++i)
                lcm_deg += std::max(eps_vectors[a][i], eps_vectors[b][i]);
            if (bound < lcm_deg) return false;
        }
    return true;
}

std::optional<long long> early_codim(const Signature& sig, long long d) {
    if (sig.g != 0) throw GenusNotZero("early_codim: genus must be 0");
    long long rd = 0;
    for (int ei : sig.e)
        if (ei >= d) ++rd;
    if (floor_degree(sig, d) >= rd) return rd;
    return std::nullopt;
}

namespace {

int poly_degree(const std::vector<Fraction>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i].sign() != 0) return i;
    return -1;
}

std::vector<Fraction> poly_mod(std::vector<Fraction> a, const std::vector<Fraction>& b) {
    int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        Fraction c = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    }
    return a;
}

std::vector<Fraction> poly_gcd(std::vector<Fraction> a, std::vector<Fraction> b) {
    while (poly_degree(b) >= 0) {
        auto r = poly_mod(a, b);
        a = b;
        b = r;
    }
    int d = poly_degree(a);
    if (d >= 0) {
        Fraction lead = a[d];
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Exact rank over Q by Gaussian elimination.
int fraction_rank(std::vector<std::vector<Fraction>> rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    int rank = 0;
    for (size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col].sign() != 0) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank || rows[i][col].sign() == 0) continue;
            Fraction c = rows[i][col] / rows[rank][col];
            for (size_t j = col; j < ncols; ++j) rows[i][j] -= c * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool effective_euclid_check(const std::vector<std::vector<Fraction>>& polys, int d) {
    if (polys.empty()) throw Error("effective_euclid_check: empty input");
    for (const auto& p : polys)
        if (poly_degree(p) < 0) throw Error("effective_euclid_check: zero polynomial");

    long long required = -1;
    for (size_t i = 0; i < polys.size(); ++i)
        for (size_t j = i; j < polys.size(); ++j) {
            auto g = poly_gcd(polys[i], polys[j]);
            long long lcm_deg = poly_degree(polys[i]) + poly_degree(polys[j]) - poly_degree(g);
            required = std::max(required, lcm_deg - 1);
        }
    if (d < required)
        throw Error("effective_euclid_check: degree bound not met (need d >= " +
                    std::to_string(required) + ")");

    std::vector<Fraction> g = polys[0];
    for (size_t i = 1; i < polys.size(); ++i) g = poly_gcd(g, polys[i]);

    std::vector<std::vector<Fraction>> rows;
    for (const auto& p : polys) {
        int dp = poly_degree(p);
        for (int shift = 0; shift + dp <= d; ++shift) {
            std::vector<Fraction> row(d + 1);
            for (int k = 0; k <= dp; ++k) row[shift + k] = p[k];
            rows.push_back(std::move(row));
        }
    }
    int lhs_rank = fraction_rank(std::move(rows));
    int rhs_dim = d - poly_degree(g) + 1;
    return lhs_rank == rhs_dim;
}

namespace {

// Coefficient vector (mod p) of prod_i (z - t_i)^{a_i} * prod_j (z - s_j)^{b_j}.
modp::Row expand_product(const std::vector<std::uint64_t>& roots,
                         const std::vector<long long>& mults) {
    modp::Row poly = {1};
    for (size_t i = 0; i < roots.size(); ++i) {
        for (long long k = 0; k < mults[i]; ++k) {
            modp::Row next(poly.size() + 1, 0);
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] = modp::add(next[j + 1], poly[j]);
                next[j] = modp::sub(next[j], modp::mul(poly[j], roots[i]));
            }
            poly = std::move(next);
        }
    }
    return poly;
}

struct DegreeData {
    std::vector<Monomial> monomials;        // sorted descending under grevlex
    std::vector<modp::Row> kernel;          // basis of I_d in monomial coords
    long long dim_h0_d = 0;
};

}  // namespace

namespace {

RelationAnalysis analyze_relations_scan(const Signature& sig,
                                        const std::vector<int>& gen_degrees,
                                        const VarTable& vars, long long bound) {
    RelationAnalysis out;

    // Deterministic scattered coordinates for the stacky and log points,
    // and a random polynomial factor per generator (a generic element of
    // its graded piece).
    std::mt19937_64 rng(0x5eed0acULL ^ (sig.g * 1000003ULL) ^ sig.delta);
    std::vector<std::uint64_t> roots;
    for (int i = 0; i < sig.r() + sig.delta; ++i)
        roots.push_back(rng() % (modp::P - 7) + 3);

    // Max pole orders of the distinguished spanning function f_d.
    auto max_poles = [&](long long d) {
        std::vector<long long> mults;
        for (int ei : sig.e) mults.push_back((d * (ei - 1)) / ei);
        for (int j = 0; j < sig.delta; ++j) mults.push_back(d);
        return mults;
    };
    std::vector<modp::Row> factors;  // P_i, coefficient vectors
    for (int d : gen_degrees) {
        long long fd = floor_degree(sig, d);
        if (fd < 0) throw Error("analyze_relations: generator degree outside Eff");
        modp::Row poly(fd + 1);
        for (auto& c : poly) c = rng() % modp::P;
        factors.push_back(std::move(poly));
    }
    auto poly_mul = [](const modp::Row& a, const modp::Row& b) {
        modp::Row out_poly(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                out_poly[i + j] = modp::add(out_poly[i + j], modp::mul(a[i], b[j]));
        }
        return out_poly;
    };

    std::map<long long, DegreeData> layers;
    for (long long d = 1; d <= bound; ++d) {
        long long fd = floor_degree(sig, d);
        if (fd < 0) continue;
        DegreeData layer;
        layer.dim_h0_d = fd + 1;

        // Enumerate monomials of weighted degree d over the generators.
        std::vector<int> current(gen_degrees.size(), 0);
        std::function<void(size_t, long long)> rec = [&](size_t i, long long left) {
            if (i == gen_degrees.size()) {
                if (left == 0) layer.monomials.push_back(Monomial{current});
                return;
            }
            long long maxk = left / gen_degrees[i];
            for (long long k = 0; k <= maxk; ++k) {
                current[i] = static_cast<int>(k);
                rec(i + 1, left - k * gen_degrees[i]);
            }
            current[i] = 0;
        };
        rec(0, d);
        std::sort(layer.monomials.begin(), layer.monomials.end(),
                  [&](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b, vars); });

        auto fmax = max_poles(d);
        std::vector<modp::Row> rows;
        for (const auto& m : layer.monomials) {
            // Slack exponents of f_d / prod f_{d_i}^{e_i}: superadditivity
            // of the floors keeps them nonnegative, and the total product
            // degree is exactly f(d) - sum e_i f(d_i) + deg prod P_i^{e_i}
            // <= f(d).
            std::vector<long long> mults = fmax;
            for (size_t gi = 0; gi < gen_degrees.size(); ++gi) {
                if (m.exps[gi] == 0) continue;
                auto gmax = max_poles(gen_degrees[gi]);
                for (size_t j = 0; j < mults.size(); ++j) mults[j] -= m.exps[gi] * gmax[j];
            }
            for (long long v : mults)
                if (v < 0) throw Error("analyze_relations: negative pole slack");
            modp::Row coeffs = expand_product(roots, mults);
            for (size_t gi = 0; gi < gen_degrees.size(); ++gi)
                for (int k = 0; k < m.exps[gi]; ++k) coeffs = poly_mul(coeffs, factors[gi]);
            if (static_cast<long long>(coeffs.size()) > fd + 1)
                throw Error("analyze_relations: product degree exceeds the graded piece");
            coeffs.resize(fd + 1, 0);
            rows.push_back(std::move(coeffs));
        }
        // Spanning check: the monomials must fill H^0(dD).
        modp::RowSpace image(static_cast<int>(fd + 1));
        for (const auto& r : rows) image.insert(r);
        if (image.rank() < layer.dim_h0_d) out.spanning = false;

        layer.kernel = modp::left_kernel(rows, static_cast<int>(fd + 1));
        layers[d] = std::move(layer);
    }

    // Minimal relations per degree: dim I_d minus the span of shifted lower
    // kernels; leads come from echelonizing I_d against the monomial order.
    for (auto& [d, layer] : layers) {
        if (layer.kernel.empty()) continue;
        const auto& mons = layer.monomials;
        std::map<std::vector<int>, int> index_of;
        for (size_t i = 0; i < mons.size(); ++i) index_of[mons[i].exps] = static_cast<int>(i);

        modp::RowSpace lower(static_cast<int>(mons.size()));
        for (size_t gi = 0; gi < gen_degrees.size(); ++gi) {
            long long dlow = d - gen_degrees[gi];
            auto it = layers.find(dlow);
            if (it == layers.end()) continue;
            for (const auto& kv : it->second.kernel) {
                modp::Row shifted(mons.size(), 0);
                for (size_t mi = 0; mi < it->second.monomials.size(); ++mi) {
                    if (kv[mi] == 0) continue;
                    Monomial m = it->second.monomials[mi];
                    m.exps[gi] += 1;
                    shifted[index_of.at(m.exps)] = kv[mi];
                }
                lower.insert(std::move(shifted));
            }
        }
        int new_rels = static_cast<int>(layer.kernel.size()) - lower.rank();
        if (new_rels > 0) out.P_I.add_term(static_cast<int>(d), new_rels);

        // Leading monomials of I_d = pivot coordinates of the kernel in
        // echelon form (monomials are sorted descending under grevlex).
        {
            std::vector<modp::Row> work = layer.kernel;
            int rank = 0;
            for (size_t col = 0; col < mons.size() && rank < static_cast<int>(work.size());
                 ++col) {
                int pivot = -1;
                for (size_t i = rank; i < work.size(); ++i)
                    if (work[i][col] != 0) {
                        pivot = static_cast<int>(i);
                        break;
                    }
                if (pivot < 0) continue;
                std::swap(work[rank], work[pivot]);
                for (size_t i = 0; i < work.size(); ++i) {
                    if (static_cast<int>(i) == rank || work[i][col] == 0) continue;
                    std::uint64_t c = modp::mul(work[i][col], modp::inv(work[rank][col]));
                    for (size_t j = col; j < mons.size(); ++j)
                        work[i][j] = modp::sub(work[i][j], modp::mul(c, work[rank][j]));
                }
                out.initial_ideal.add(mons[col]);
                ++rank;
            }
        }
    }
    return out;
}

}  // namespace

RelationAnalysis analyze_relations(const Signature& sig, const std::vector<int>& gen_degrees,
                                   const VarTable& vars, long long verify_bound) {
    // Relations and Groebner leads of these rings live in small degrees;
    // scan there and certify completeness of the lead ideal by the cheap
    // staircase count against dim_h0, extending the scan only on demand.
    int maxdeg = 1;
    for (int d : gen_degrees) maxdeg = std::max(maxdeg, d);
    long long scan = std::min<long long>(verify_bound, 2LL * maxdeg + 2);
    for (;;) {
        RelationAnalysis out = analyze_relations_scan(sig, gen_degrees, vars, scan);
        if (!out.spanning) return out;
        auto counts = staircase_counts_up_to(out.initial_ideal, vars.degrees(), verify_bound);
        long long mismatch = -1;
        for (long long d = 0; d <= verify_bound; ++d) {
            long long fd = floor_degree(sig, d);
            long long dim = d == 0 ? 1 : (fd < 0 ? 0 : fd + 1);
            if (counts[d] != dim) {
                mismatch = d;
                break;
            }
        }
        if (mismatch < 0) return out;
        if (scan >= verify_bound)
            throw Error("analyze_relations: lead ideal incomplete at degree " +
                        std::to_string(mismatch) + " for " + format_signature(sig));
        scan = std::min(verify_bound, std::max(mismatch, scan) + maxdeg);
    }
}

SimplifiedPresentation simplify_presentation(const MonoidPresentation& pres) {
    const Signature& sig = pres.sig;
    SimplifiedPresentation out;
    out.sig = sig;

    // Drop superfluous generators, largest degree first.
    std::vector<PiGenerator> survivors = pres.generators;
    std::vector<long long> degrees;
    for (const auto& g : survivors) degrees.push_back(g.nu.d);
    std::sort(degrees.rbegin(), degrees.rend());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (long long d : degrees) {
        if (!generator_superfluous(sig, d)) continue;
        size_t before = survivors.size();
        survivors.erase(std::remove_if(survivors.begin(), survivors.end(),
                                       [&](const PiGenerator& g) { return g.nu.d == d; }),
                        survivors.end());
        if (survivors.size() != before)
            out.trace.push_back("dropped " + std::to_string(before - survivors.size()) +
                                " superfluous generator(s) in degree " + std::to_string(d));
    }
    out.generators = survivors;
    out.vars = toric_var_table(survivors);
    std::vector<int> degrees_only;
    for (const auto& g : survivors) {
        out.P_R.add_term(static_cast<int>(g.nu.d), 1);
        degrees_only.push_back(static_cast<int>(g.nu.d));
    }

    long long bound = 2 * (pres.lcm_m + pres.saturation);
    RelationAnalysis analysis = analyze_relations(sig, degrees_only, out.vars, bound);
    if (!analysis.spanning)
        throw Error("simplify_presentation: surviving generators fail to span " +
                    format_signature(sig));
    out.P_I = analysis.P_I;
    out.initial_ideal = analysis.initial_ideal;
    for (int deg : out.P_I.degree_multiset()) out.relation_degrees.push_back(deg);
    out.trace.push_back("relation degrees recomputed by exact rank counts to degree " +
                        std::to_string(bound));
    return out;
}

SimplifiedPresentation simplify_toric(const Signature& sig) {
    // The simplification pipeline needs only generators with their lifts;
    // skip the congruence and fiber-minimal ideal of the full presentation.
    MonoidPresentation pres;
    pres.sig = sig;
    pres.generators = pi_generators(sig);
    pres.vars = toric_var_table(pres.generators);
    pres.lcm_m = period_lcm(sig);
    pres.saturation = eff_compute(sig).saturation;
    return simplify_presentation(pres);
}

}  // namespace stacky
