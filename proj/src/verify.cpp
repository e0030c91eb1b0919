#include "stacky/verify.hpp"

#include <algorithm>
#include <sstream>

#include "stacky/effmon.hpp"
#include "stacky/error.hpp"
#include "stacky/present.hpp"
#include "stacky/tables.hpp"

namespace stacky {

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerificationCheck& c) { return c.pass; });
}

void VerificationReport::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(VerificationCheck{name, pass, detail});
}

long long default_verify_horizon(const Signature& sig) {
    long long bound = 30;
    if (deg_canonical(sig).sign() > 0) {
        long long m = period_lcm(sig);
        long long s = eff_compute(sig).saturation;
        bound = std::max<long long>(30, 2 * (m + s));
    }
    return std::min<long long>(bound, 200);
}

VerificationReport hilbert_consistency(const Presentation& pres, const Signature& sig,
                                       long long N) {
    VerificationReport report;
    report.sig = sig;
    report.max_degree = N;
    auto counts = staircase_counts_up_to(pres.gin, pres.vars.degrees(), N);
    for (long long d = 0; d <= N; ++d) {
        long long expected = dim_h0(sig, d);
        if (counts[d] != expected) {
            std::ostringstream os;
            os << "degree " << d << ": staircase " << counts[d] << " != dim " << expected;
            report.add("staircase=dim_h0", false, os.str());
            return report;
        }
    }
    report.add("staircase=dim_h0", true,
               "all degrees <= " + std::to_string(N) + " for " + format_signature(sig));
    return report;
}

namespace {

void staircase_row_check(VerificationReport& out, const Signature& sig, const CurveFlags& flags,
                         GinKind kind, const std::string& label) {
    Presentation p = canonical_presentation(sig, flags, kind);
    long long N = default_verify_horizon(sig);
    auto sub = hilbert_consistency(p, sig, N);
    out.add(label + " staircase", sub.all_pass(),
            sub.checks.empty() ? "" : sub.checks.front().detail);
}

std::string poly_diff(const Poly& got, const Poly& want) {
    return "got " + got.str() + ", table " + want.str();
}

}  // namespace

VerificationReport tables_regression() {
    VerificationReport report;

    // --- Table Ia/Ib: classical curves, parametric in g. ---
    for (int g = 0; g <= 10; ++g) {
        std::vector<CurveFlags> variants;
        CurveFlags generic;
        if (g >= 2) {
            CurveFlags hyp;
            hyp.hyperelliptic = true;
            variants.push_back(hyp);
        }
        if (g >= 3 && g != 4) variants.push_back(generic);
        if (g >= 5) {
            CurveFlags exc;
            exc.exceptional = true;
            variants.push_back(exc);
        }
        if (g == 4) {
            CurveFlags exc;
            exc.exceptional = true;
            variants.push_back(exc);
        }
        if (g <= 1) variants.push_back(generic);
        for (const auto& flags : variants) {
            Signature sig{g, {}, 0};
            Presentation p = canonical_presentation(sig, flags, GinKind::Pointed);
            // P(R;t) per Table Ia.
            Poly want_pr;
            if (g == 1) want_pr.add_term(1, 1);
            else if (g == 2) {
                want_pr.add_term(1, 2);
                want_pr.add_term(3, 1);
            } else if (g >= 3 && flags.hyperelliptic) {
                want_pr.add_term(1, g);
                want_pr.add_term(2, g - 2);
            } else if (g >= 3) {
                want_pr.add_term(1, g);
            }
            std::string label = "Ia g=" + std::to_string(g) +
                                (flags.hyperelliptic ? " hyp" : flags.exceptional ? " exc" : "");
            report.add(label + " P_R", p.P_R == want_pr, poly_diff(p.P_R, want_pr));
            Poly want_pi;
            if (g == 2) want_pi.add_term(6, 1);
            else if (g == 3 && !flags.hyperelliptic) want_pi.add_term(4, 1);
            else if (g >= 3 && flags.hyperelliptic) {
                want_pi.add_term(2, (g - 1LL) * (g - 2) / 2);
                want_pi.add_term(3, (g - 1LL) * (g - 3));
                want_pi.add_term(4, (g - 1LL) * (g - 2) / 2);
            } else if (g >= 4) {
                want_pi.add_term(2, (g - 2LL) * (g - 3) / 2);
                if (flags.exceptional) want_pi.add_term(3, g - 3);
            }
            report.add(label + " P_I", p.P_I == want_pi, poly_diff(p.P_I, want_pi));
            if (g >= 2) staircase_row_check(report, sig, flags, GinKind::Pointed, label + " (Ib pointed)");
            if (g >= 2) staircase_row_check(report, sig, flags, GinKind::Generic, label + " (Ib generic)");
        }
    }

    // --- Table IIa/IIb: log classical curves. ---
    for (int g = 0; g <= 10; ++g) {
        for (int delta = 1; delta <= 8; ++delta) {
            std::vector<CurveFlags> variants;
            CurveFlags generic;
            variants.push_back(generic);
            if (g >= 2 && delta <= 2) {
                CurveFlags hyp;
                hyp.hyperelliptic = true;
                variants.push_back(hyp);
                if (delta == 2) {
                    CurveFlags fixed = hyp;
                    fixed.delta_hyperelliptic_fixed = true;
                    variants.push_back(fixed);
                }
            }
            if (g >= 5 && delta <= 2) {
                CurveFlags exc;
                exc.exceptional = true;
                variants.push_back(exc);
                if (delta == 2) {
                    CurveFlags g13 = exc;
                    g13.delta_extends_g13 = true;
                    variants.push_back(g13);
                }
            }
            for (const auto& flags : variants) {
                Signature sig{g, {}, delta};
                std::string label = "IIa g=" + std::to_string(g) + " d=" + std::to_string(delta);
                if (flags.hyperelliptic) label += " hyp";
                if (flags.delta_hyperelliptic_fixed) label += " fixed";
                if (flags.exceptional) label += " exc";
                if (flags.delta_extends_g13) label += " g13";
                Presentation p = canonical_presentation(sig, flags, GinKind::Pointed);
                Poly want_pr;
                int h = g + delta - 1;
                if (g == 0) {
                    if (delta >= 2) want_pr.add_term(1, delta == 2 ? 1 : delta - 1);
                } else if (g == 1) {
                    if (delta == 1) want_pr = Poly::term(1) + Poly::term(2) + Poly::term(3);
                    else if (delta == 2) {
                        want_pr.add_term(1, 2);
                        want_pr.add_term(2, 1);
                    } else want_pr.add_term(1, delta);
                } else if (delta == 1) {
                    want_pr.add_term(1, g);
                    want_pr.add_term(2, flags.hyperelliptic ? g : 2);
                    want_pr.add_term(3, 1);
                } else if (delta == 2 && flags.delta_hyperelliptic_fixed) {
                    want_pr.add_term(1, h);
                    want_pr.add_term(2, h - 1);
                } else if (delta == 2) {
                    want_pr.add_term(1, h);
                    want_pr.add_term(2, 1);
                } else {
                    want_pr.add_term(1, h);
                }
                report.add(label + " P_R", p.P_R == want_pr, poly_diff(p.P_R, want_pr));
                if (deg_canonical(sig).sign() > 0)
                    staircase_row_check(report, sig, flags, GinKind::Pointed, label + " (IIb)");
            }
        }
    }

    // --- Table III: genus-1 stacky base cases. ---
    for (int e = 2; e <= 12; ++e) {
        Signature sig{1, {e}, 0};
        Presentation p = canonical_presentation(sig);
        Poly want_pr = Poly::term(1);
        Poly want_pi;
        if (e == 2) {
            want_pr += Poly::term(4) + Poly::term(6);
            want_pi.add_term(12, 1);
        } else if (e == 3) {
            want_pr += Poly::term(3) + Poly::term(5);
            want_pi.add_term(10, 1);
        } else if (e == 4) {
            want_pr += Poly::term(3) + Poly::term(4);
            want_pi.add_term(9, 1);
        } else {
            want_pr += Poly::range(3, e);
            std::vector<int> es;
            for (int k = 3; k <= e - 1; ++k) es.push_back(k);
            want_pi = phi_helper(es);
            want_pi.add_term(e + 2, -1);
        }
        std::string label = "III (1;" + std::to_string(e) + ";0)";
        report.add(label + " P_R", p.P_R == want_pr, poly_diff(p.P_R, want_pr));
        report.add(label + " P_I", p.P_I == want_pi, poly_diff(p.P_I, want_pi));
        staircase_row_check(report, sig, CurveFlags{}, GinKind::Generic, label);
    }
    {
        Presentation p = canonical_presentation(Signature{1, {2, 2}, 0});
        Poly want_pr = Poly::term(1) + Poly::term(2) + Poly::term(4);
        Poly want_pi = Poly::term(8);
        report.add("III (1;2,2;0) P_R", p.P_R == want_pr, poly_diff(p.P_R, want_pr));
        report.add("III (1;2,2;0) P_I", p.P_I == want_pi, poly_diff(p.P_I, want_pi));
        staircase_row_check(report, Signature{1, {2, 2}, 0}, CurveFlags{}, GinKind::Generic,
                            "III (1;2,2;0)");
        Presentation q = canonical_presentation(Signature{1, {2, 2, 2}, 0});
        Poly want_qr = Poly::term(1);
        want_qr.add_term(2, 2);
        Poly want_qi = Poly::term(6);
        report.add("III (1;2,2,2;0) P_R", q.P_R == want_qr, poly_diff(q.P_R, want_qr));
        report.add("III (1;2,2,2;0) P_I", q.P_I == want_qi, poly_diff(q.P_I, want_qi));
        staircase_row_check(report, Signature{1, {2, 2, 2}, 0}, CurveFlags{}, GinKind::Generic,
                            "III (1;2,2,2;0)");
    }

    // --- Table IVa/IVb and the other genus-zero bases. ---
    for (const auto& sig : tables::genus0_base_signatures(12)) {
        Presentation base = base_presentation(sig, CurveFlags{}, GinKind::Generic);
        Presentation driver = canonical_presentation(sig);
        std::string label = "IV " + format_signature(sig);
        report.add(label + " P_R", base.P_R == driver.P_R, poly_diff(driver.P_R, base.P_R));
        report.add(label + " P_I", base.P_I == driver.P_I, poly_diff(driver.P_I, base.P_I));
        report.add(label + " gin",
                   gin_equivalent(base.gin, base.vars, driver.gin, driver.vars),
                   "table " + base.gin.str(base.vars) + " vs " + driver.gin.str(driver.vars));
        staircase_row_check(report, sig, CurveFlags{}, GinKind::Generic, label);
    }

    // --- Effective monoid table. ---
    for (const auto& row : tables::eff_rows()) {
        EffMonoid eff = eff_compute(row.sig);
        bool ok = eff.generators == row.generators && eff.saturation == row.saturation;
        std::ostringstream os;
        os << "generators {";
        for (size_t i = 0; i < eff.generators.size(); ++i)
            os << (i ? "," : "") << eff.generators[i];
        os << "} sat " << eff.saturation;
        report.add("Eff " + format_signature(row.sig), ok, os.str());
    }

    // --- Genus-zero exceptions table. ---
    for (const auto& row : tables::genus0_exceptions()) {
        Presentation p = canonical_presentation(row.sig);
        bool ok = p.P_R.degree() == row.deg_PR && p.P_I.degree() == row.deg_PI;
        std::ostringstream os;
        os << "deg P_R " << p.P_R.degree() << " (table " << row.deg_PR << "), deg P_I "
           << p.P_I.degree() << " (table " << row.deg_PI << ")";
        report.add("exception " + format_signature(row.sig), ok, os.str());
    }
    for (int r = 6; r <= 9; ++r) {
        Signature sig{0, std::vector<int>(r, 2), 0};
        Presentation p = canonical_presentation(sig);
        bool ok = p.P_R.degree() == 3 && p.P_I.degree() == 6;
        report.add("exception " + format_signature(sig), ok,
                   "deg P_R " + std::to_string(p.P_R.degree()) + ", deg P_I " +
                       std::to_string(p.P_I.degree()));
    }
    return report;
}

}  // namespace stacky
