#pragma once

#include <optional>

#include "stacky/presentation.hpp"

namespace stacky {
namespace tables {

// Classical curves (delta = 0): empty / point / weighted plane sextic /
// hyperelliptic / plane quartic / trigonal / nonexceptional / quintic.
Presentation classical(int g, const CurveFlags& flags, GinKind kind);

// Log classical curves, delta >= 1 (g = 0, 1 rows included).
Presentation log_classical(int g, int delta, const CurveFlags& flags, GinKind kind);

// Genus-1 stacky base cases: (1;e;0) for any e >= 2, (1;2,2;0), (1;2,2,2;0).
std::optional<Presentation> genus1_base(const Signature& sig);

// Genus-0 base cases: the small-signature table rows, Hecke (0;2,e;1),
// generalized Hecke (0;e,e;1), and the derived base (0;2,2,2;1).
std::optional<Presentation> genus0_base(const Signature& sig);
bool genus0_is_base(const Signature& sig);

// Effective-monoid regression rows (parametric families instantiated).
struct EffRow {
    Signature sig;
    std::vector<int> generators;
    int saturation;
};
std::vector<EffRow> eff_rows();

// Genus-zero sharp-bound exceptions: exact (deg P_R, deg P_I).
struct ExceptionRow {
    Signature sig;
    int deg_PR;
    int deg_PI;
};
const std::vector<ExceptionRow>& genus0_exceptions();
std::optional<ExceptionRow> genus0_exception_for(const Signature& sig);

// Enumerates the signatures of every embedded base row for regression.
std::vector<Signature> genus0_base_signatures(int max_e);

}  // namespace tables
}  // namespace stacky
