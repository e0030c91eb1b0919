#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stacky/effmon.hpp"
#include "stacky/error.hpp"
#include "stacky/gmnt.hpp"
#include "stacky/hilbert.hpp"
#include "stacky/present.hpp"
#include "stacky/simplify.hpp"
#include "stacky/tables.hpp"
#include "stacky/toric.hpp"
#include "stacky/verify.hpp"

using json = nlohmann::json;
using namespace stacky;

namespace {

constexpr const char* kVersion = "1";

json envelope(const std::string& command, const std::string& signature, json payload) {
    return json{{"command", command},
                {"signature", signature},
                {"payload", std::move(payload)},
                {"version", kVersion}};
}

json poly_json(const Poly& p) {
    json terms = json::object();
    for (auto& [e, c] : p.terms()) terms[std::to_string(e)] = c;
    return json{{"terms", terms}, {"string", p.str()}};
}

json presentation_json(const Presentation& p) {
    json gens = json::array();
    for (const auto& g : p.gens)
        gens.push_back(json{{"label", g.label.str()}, {"degree", g.degree},
                            {"poles", g.pole_orders}});
    json rels = json::array();
    for (const auto& r : p.rels) rels.push_back(r.degree);
    return json{{"signature", format_signature(p.sig)},
                {"generators", gens},
                {"relation_degrees", rels},
                {"gin", p.gin.monomial_strings(p.vars)},
                {"term_order", p.term_order},
                {"P_R", poly_json(p.P_R)},
                {"P_I", poly_json(p.P_I)},
                {"trace", p.trace}};
}

void print_presentation(const Presentation& p) {
    std::cout << "signature: " << format_signature(p.sig) << "\n";
    std::cout << "generators:";
    if (p.gens.empty()) std::cout << " (none; trivial ring)";
    for (const auto& g : p.gens) {
        std::cout << " " << g.label.str();
    }
    std::cout << "\n";
    for (const auto& g : p.gens) {
        std::cout << "  " << g.label.str() << ": degree " << g.degree << ", poles (";
        for (size_t i = 0; i < g.pole_orders.size(); ++i)
            std::cout << (i ? "," : "") << g.pole_orders[i];
        std::cout << ")\n";
    }
    std::cout << "relation degrees:";
    for (const auto& r : p.rels) std::cout << " " << r.degree;
    if (p.rels.empty()) std::cout << " (none)";
    std::cout << "\n";
    std::cout << "gin: " << p.gin.str(p.vars) << "\n";
    std::cout << "term order: " << p.term_order << "\n";
    std::cout << "trace:\n";
    for (const auto& t : p.trace) std::cout << "  - " << t << "\n";
    std::cout << "P(R;t) = " << p.P_R.str() << "\nP(I;t) = " << p.P_I.str() << "\n";
}

long long verify_horizon(const Signature& sig, long long override_n) {
    if (override_n > 0) return override_n;
    if (const char* env = std::getenv("STACKY_CANON_MAX_DEGREE")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return default_verify_horizon(sig);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical rings of log stacky curves from signatures"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON output");

    std::string sig_text;
    CurveFlags flags;
    std::string gin_kind_text = "generic";

    auto add_flag_opts = [&](CLI::App* cmd) {
        cmd->add_flag("--hyperelliptic", flags.hyperelliptic, "curve is hyperelliptic");
        cmd->add_flag("--exceptional", flags.exceptional, "curve is trigonal or a plane quintic");
        cmd->add_flag("--delta-fixed", flags.delta_hyperelliptic_fixed,
                      "log divisor is hyperelliptic fixed");
        cmd->add_flag("--delta-g13", flags.delta_extends_g13, "log divisor extends to a g^1_3");
    };

    auto* present_cmd = app.add_subcommand("present", "explicit presentation of the canonical ring");
    present_cmd->add_option("signature", sig_text, "signature, e.g. \"(0;2,3,7;0)\"")->required();
    present_cmd->add_option("--gin", gin_kind_text, "generic|pointed")
        ->check(CLI::IsMember({"generic", "pointed"}));
    add_flag_opts(present_cmd);

    auto* eff_cmd = app.add_subcommand("eff", "effective monoid generators and saturation");
    eff_cmd->add_option("signature", sig_text)->required();

    auto* pi_cmd = app.add_subcommand("pi", "genus-zero toric presentation of Pi");
    pi_cmd->add_option("signature", sig_text)->required();
    bool simplify_flag = false;
    pi_cmd->add_flag("--simplify", simplify_flag, "apply the simplification pipeline");

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of the canonical ring");
    hilbert_cmd->add_option("signature", sig_text)->required();
    add_flag_opts(hilbert_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "degree bounds for generators and relations");
    bounds_cmd->add_option("signature", sig_text)->required();

    auto* gmnt_cmd = app.add_subcommand("gmnt", "generalized Max Noether surjectivity");
    GmntQuery query;
    long long q_degE = 0, q_degEp = 0;
    bool q_hyp = false, q_E_fixed = false, q_Ep_fixed = false, q_equiv = false;
    gmnt_cmd->add_option("--g", query.g, "genus")->required();
    gmnt_cmd->add_option("--degE", q_degE, "deg E (g >= 2) or deg D (g <= 1)")->required();
    gmnt_cmd->add_option("--degEp", q_degEp, "deg E' (g >= 2) or deg D' (g <= 1)")->required();
    auto* hyp_opt = gmnt_cmd->add_flag("--hyperelliptic", q_hyp, "curve is hyperelliptic");
    auto* ef_opt = gmnt_cmd->add_flag("--E-fixed", q_E_fixed, "E hyperelliptic fixed");
    auto* epf_opt = gmnt_cmd->add_flag("--Ep-fixed", q_Ep_fixed, "E' hyperelliptic fixed");
    auto* eq_opt = gmnt_cmd->add_flag("--equiv", q_equiv, "E ~ E' (resp. D ~ D')");

    auto* verify_cmd = app.add_subcommand("verify", "staircase consistency and table regression");
    verify_cmd->add_option("signature", sig_text, "signature (omit with --tables)");
    long long max_degree = 0;
    verify_cmd->add_option("--max-degree", max_degree, "verification horizon");
    bool run_tables = false;
    verify_cmd->add_flag("--tables", run_tables, "run the full appendix regression");
    add_flag_opts(verify_cmd);

    auto* tables_cmd = app.add_subcommand("tables", "pretty-print embedded appendix data");
    std::string which = "IV";
    tables_cmd->add_option("--which", which, "I|II|III|IV")
        ->check(CLI::IsMember({"I", "II", "III", "IV"}));

    auto* weights_cmd = app.add_subcommand("weights", "modular-form weight to degree mapping");
    weights_cmd->add_option("signature", sig_text)->required();
    long long weight = 0;
    weights_cmd->add_option("--weight", weight, "modular form weight k (even)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        GinKind kind = gin_kind_text == "pointed" ? GinKind::Pointed : GinKind::Generic;

        if (*present_cmd) {
            Signature sig = parse_signature(sig_text);
            Presentation p = canonical_presentation(sig, flags, kind);
            if (as_json) {
                std::cout << envelope("present", format_signature(sig), presentation_json(p)).dump(2)
                          << "\n";
            } else {
                print_presentation(p);
            }
            return 0;
        }
        if (*eff_cmd) {
            Signature sig = parse_signature(sig_text);
            EffMonoid eff = eff_compute(sig);
            if (as_json) {
                std::cout << envelope("eff", format_signature(sig),
                                      json{{"generators", eff.generators},
                                           {"saturation", eff.saturation},
                                           {"period", eff.period}})
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "generators:";
                for (size_t i = 0; i < eff.generators.size(); ++i)
                    std::cout << (i ? "," : " ") << eff.generators[i];
                std::cout << "; saturation: " << eff.saturation << "\n";
                std::cout << "members to saturation+period:";
                for (long long d = 0; d <= eff.saturation + eff.period; ++d)
                    if (eff_member(sig, d)) std::cout << " " << d;
                std::cout << "\n";
            }
            return 0;
        }
        if (*pi_cmd) {
            Signature sig = parse_signature(sig_text);
            if (simplify_flag) {
                SimplifiedPresentation simp = simplify_toric(sig);
                if (as_json) {
                    json gens = json::array();
                    for (const auto& g : simp.generators)
                        gens.push_back(json{{"d", g.nu.d}, {"b", g.nu.b},
                                            {"poles", g.lift.stacky}});
                    std::cout << envelope("pi", format_signature(sig),
                                          json{{"generators", gens},
                                               {"relation_degrees", simp.relation_degrees},
                                               {"initial_ideal",
                                                simp.initial_ideal.monomial_strings(simp.vars)},
                                               {"P_R", poly_json(simp.P_R)},
                                               {"P_I", poly_json(simp.P_I)},
                                               {"trace", simp.trace}})
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << "simplified generators:";
                    for (const auto& g : simp.generators)
                        std::cout << " (" << g.nu.d << "," << g.nu.b << ")";
                    std::cout << "\nP(R;t) = " << simp.P_R.str()
                              << "\nP(I;t) = " << simp.P_I.str()
                              << "\ninitial ideal: " << simp.initial_ideal.str(simp.vars) << "\n";
                }
                return 0;
            }
            MonoidPresentation pres = toric_presentation(sig);
            if (as_json) {
                json gens = json::array();
                for (const auto& g : pres.generators)
                    gens.push_back(json{{"d", g.nu.d},
                                        {"b", g.nu.b},
                                        {"vanishing", g.lift.vanishing},
                                        {"stacky_poles", g.lift.stacky},
                                        {"log_poles", g.lift.log_pts}});
                json rels = json::array();
                for (const auto& r : pres.relations)
                    rels.push_back(json{{"degree", r.degree}, {"lhs", r.lhs}, {"rhs", r.rhs}});
                std::cout << envelope("pi", format_signature(sig),
                                      json{{"generators", gens},
                                           {"relations", rels},
                                           {"initial_ideal",
                                            pres.initial_ideal.monomial_strings(pres.vars)}})
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "Pi generators (d,b) with lifts:\n";
                for (const auto& g : pres.generators) {
                    std::cout << "  (" << g.nu.d << "," << g.nu.b << ") poles (";
                    for (size_t i = 0; i < g.lift.stacky.size(); ++i)
                        std::cout << (i ? "," : "") << g.lift.stacky[i];
                    std::cout << ")";
                    if (!g.lift.log_pts.empty()) {
                        std::cout << " log (";
                        for (size_t i = 0; i < g.lift.log_pts.size(); ++i)
                            std::cout << (i ? "," : "") << g.lift.log_pts[i];
                        std::cout << ")";
                    }
                    std::cout << "\n";
                }
                std::cout << "relations:\n";
                for (const auto& r : pres.relations) {
                    std::cout << "  degree " << r.degree << ": ";
                    auto side = [&](const std::vector<int>& v) {
                        std::string s;
                        for (size_t i = 0; i < v.size(); ++i) {
                            if (!v[i]) continue;
                            if (!s.empty()) s += " + ";
                            s += std::to_string(v[i]) + "*(" +
                                 std::to_string(pres.generators[i].nu.d) + "," +
                                 std::to_string(pres.generators[i].nu.b) + ")";
                        }
                        return s.empty() ? "0" : s;
                    };
                    std::cout << side(r.lhs) << " = " << side(r.rhs) << "\n";
                }
                std::cout << "initial ideal: " << pres.initial_ideal.str(pres.vars) << "\n";
            }
            return 0;
        }
        if (*hilbert_cmd) {
            Signature sig = parse_signature(sig_text);
            Presentation p = canonical_presentation(sig, flags, kind);
            HilbertSeries hs = hilbert_series(sig, p);
            if (as_json) {
                std::cout << envelope("hilbert", format_signature(sig),
                                      json{{"numerator", poly_json(hs.numerator)},
                                           {"denominator_exponents", hs.denominator_exponents}})
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "numerator: " << hs.numerator.str() << "\ndenominator:";
                for (int d : hs.denominator_exponents) std::cout << " (1-t^" << d << ")";
                std::cout << "\n";
            }
            return 0;
        }
        if (*bounds_cmd) {
            Signature sig = parse_signature(sig_text);
            DegreeBounds b = degree_bounds(sig);
            if (as_json) {
                std::cout << envelope("bounds", format_signature(sig),
                                      json{{"gen_bound", b.gen_bound},
                                           {"rel_bound", b.rel_bound},
                                           {"exceptional", b.exceptional},
                                           {"sharp", b.sharp}})
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "generators in degree <= " << b.gen_bound
                          << ", relations in degree <= " << b.rel_bound;
                if (b.exceptional) std::cout << " (exceptional signature, exact values)";
                std::cout << "\n";
            }
            return 0;
        }
        if (*gmnt_cmd) {
            if (query.g >= 2) {
                query.degE = q_degE;
                query.degEp = q_degEp;
            } else {
                query.degD = q_degE;
                query.degDp = q_degEp;
            }
            if (hyp_opt->count()) query.hyperelliptic = q_hyp;
            if (ef_opt->count()) query.E_hyp_fixed = q_E_fixed;
            if (epf_opt->count()) query.Ep_hyp_fixed = q_Ep_fixed;
            if (eq_opt->count()) {
                query.E_equiv_Ep = q_equiv;
                query.D_equiv_Dp = q_equiv;
            }
            GmntVerdict v = gmnt_verdict(query);
            if (as_json) {
                std::cout << envelope("gmnt", "",
                                      json{{"surjective", v.surjective}, {"cell", v.cell}})
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << (v.surjective ? "yes" : "no") << " (" << v.cell << ")\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            if (run_tables) {
                VerificationReport report = tables_regression();
                int failed = 0;
                for (const auto& c : report.checks) {
                    if (!c.pass) ++failed;
                    if (as_json) continue;
                    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                              << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
                }
                if (as_json) {
                    json checks = json::array();
                    for (const auto& c : report.checks)
                        checks.push_back(json{{"name", c.name}, {"pass", c.pass},
                                              {"detail", c.detail}});
                    std::cout << envelope("verify", "tables", json{{"checks", checks}}).dump(2)
                              << "\n";
                }
                std::cout << (failed == 0 ? "all " : "FAILURES: ") << report.checks.size()
                          << " checks" << (failed ? ", " + std::to_string(failed) + " failed" : "")
                          << "\n";
                return failed == 0 ? 0 : 1;
            }
            if (sig_text.empty()) throw Error("verify: provide a signature or --tables");
            Signature sig = parse_signature(sig_text);
            Presentation p = canonical_presentation(sig, flags, kind);
            long long N = verify_horizon(sig, max_degree);
            VerificationReport report = hilbert_consistency(p, sig, N);
            for (const auto& c : report.checks)
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                          << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            return report.all_pass() ? 0 : 1;
        }
        if (*tables_cmd) {
            if (which == "IV") {
                for (const auto& sig : tables::genus0_base_signatures(12)) {
                    Presentation p = base_presentation(sig, CurveFlags{}, GinKind::Generic);
                    std::cout << format_signature(sig) << ": P(R;t) = " << p.P_R.str()
                              << "; P(I;t) = " << p.P_I.str() << "; gin " << p.gin.str(p.vars)
                              << "\n";
                }
            } else if (which == "III") {
                for (int e = 2; e <= 12; ++e) {
                    Signature sig{1, {e}, 0};
                    Presentation p = base_presentation(sig, CurveFlags{}, GinKind::Generic);
                    std::cout << format_signature(sig) << ": P(R;t) = " << p.P_R.str()
                              << "; P(I;t) = " << p.P_I.str() << "\n";
                }
                for (const auto& sig :
                     {Signature{1, {2, 2}, 0}, Signature{1, {2, 2, 2}, 0}}) {
                    Presentation p = base_presentation(sig, CurveFlags{}, GinKind::Generic);
                    std::cout << format_signature(sig) << ": P(R;t) = " << p.P_R.str()
                              << "; P(I;t) = " << p.P_I.str() << "\n";
                }
            } else if (which == "II") {
                for (int g = 0; g <= 6; ++g)
                    for (int delta = 1; delta <= 6; ++delta) {
                        Presentation p =
                            tables::log_classical(g, delta, CurveFlags{}, GinKind::Pointed);
                        std::cout << format_signature(p.sig) << ": P(R;t) = " << p.P_R.str()
                                  << "; P(I;t) = " << p.P_I.str() << "\n";
                    }
            } else {
                for (int g = 0; g <= 10; ++g) {
                    CurveFlags f;
                    if (g >= 2) f.hyperelliptic = true;
                    Presentation p = tables::classical(g, f, GinKind::Pointed);
                    std::cout << "(" << g << ";-;0) hyperelliptic: P(R;t) = " << p.P_R.str()
                              << "; P(I;t) = " << p.P_I.str() << "\n";
                }
            }
            return 0;
        }
        if (*weights_cmd) {
            Signature sig = parse_signature(sig_text);
            if (weight < 0 || weight % 2 != 0)
                throw Error("weights: odd weights correspond to spin (half-canonical) rings, "
                            "which are out of scope; use an even weight");
            long long d = weight / 2;
            long long dim = dim_h0(sig, d);
            if (as_json) {
                std::cout << envelope("weights", format_signature(sig),
                                      json{{"weight", weight}, {"degree", d}, {"dim", dim}})
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "weight " << weight << " <-> degree " << d
                          << "; dim M_k = " << dim << "\n";
            }
            return 0;
        }
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
