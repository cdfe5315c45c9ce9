#include "ncps/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncps/errors.hpp"

namespace ncps {

namespace {

void require_label(FockLabel l) {
    if (l.m < 0 || l.n < 0) {
        throw LabelOutOfRange("Fock label components must be non-negative, got (" +
                              std::to_string(l.m) + "," + std::to_string(l.n) + ")");
    }
}

int clampi(int v, int lo, int hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

DistanceReport distance(const PhaseSpaceParams& params, FockLabel a, FockLabel b) {
    require_label(a);
    require_label(b);
    DistanceReport r;
    r.from = a;
    r.to = b;
    r.prefactor = distance_prefactor(params);
    r.zeta_x = zeta_partial(std::min(a.m, b.m), std::max(a.m, b.m));
    r.zeta_y = zeta_partial(std::min(a.n, b.n), std::max(a.n, b.n));
    r.closed_form = r.prefactor * std::hypot(r.zeta_x, r.zeta_y);
    return r;
}

DiagonalElement optimal_element_axis(const PhaseSpaceParams& params, int m, int k, int n,
                                     int cutoff, int buffer) {
    if (m < 0 || k < 0 || n < 0) {
        throw LabelOutOfRange("optimal_element_axis: negative label component");
    }
    if (m + k >= cutoff - buffer || n >= cutoff - buffer) {
        throw LabelOutOfRange("optimal_element_axis: labels must stay " +
                              std::to_string(buffer) + " levels below cutoff " +
                              std::to_string(cutoff));
    }
    const double pref = distance_prefactor(params);
    DiagonalElement e = DiagonalElement::zero(cutoff);
    for (int i = 0; i < cutoff; ++i) {
        const double v = pref * zeta_partial(0, clampi(i, m, m + k));
        e.coeffs.row(i).setConstant(v);
    }
    return e;
}

DiagonalElement optimal_element_general(const PhaseSpaceParams& params, FockLabel a, FockLabel b,
                                        int cutoff, int buffer) {
    require_label(a);
    require_label(b);
    if (a == b) {
        throw DegeneratePair("optimal_element_general: identical labels, distance is 0");
    }
    const int hi_m = std::max(a.m, b.m), hi_n = std::max(a.n, b.n);
    if (hi_m >= cutoff - buffer || hi_n >= cutoff - buffer) {
        throw LabelOutOfRange("optimal_element_general: labels must stay " +
                              std::to_string(buffer) + " levels below cutoff " +
                              std::to_string(cutoff));
    }
    const int lo_m = std::min(a.m, b.m), lo_n = std::min(a.n, b.n);
    const double pref = distance_prefactor(params);
    const double zx = zeta_partial(a.m, b.m);  // signed: positive when b.m > a.m
    const double zy = zeta_partial(a.n, b.n);
    const double r = std::hypot(zx, zy);
    const double c0 = pref * zx / r;
    const double d0 = pref * zy / r;

    DiagonalElement e = DiagonalElement::zero(cutoff);
    for (int i = 0; i < cutoff; ++i) {
        const double row_part = c0 * zeta_partial(0, clampi(i, lo_m, hi_m));
        for (int j = 0; j < cutoff; ++j) {
            e.coeffs(i, j) = row_part + d0 * zeta_partial(0, clampi(j, lo_n, hi_n));
        }
    }
    return e;
}

double check_additivity(const PhaseSpaceParams& params, int m, int n, int k, int l) {
    if (m < 0 || n < 0 || k < 0 || l < 0) {
        throw LabelOutOfRange("check_additivity: negative label component");
    }
    const double whole = distance(params, {m + k + l, n}, {m, n}).closed_form;
    const double first = distance(params, {m + k, n}, {m, n}).closed_form;
    const double second = distance(params, {m + k + l, n}, {m + k, n}).closed_form;
    return std::abs(whole - first - second);
}

double check_pythagoras(const PhaseSpaceParams& params, int m, int n, int k, int l) {
    if (m < 0 || n < 0 || k < 0 || l < 0) {
        throw LabelOutOfRange("check_pythagoras: negative label component");
    }
    const double diag = distance(params, {m + k, n + l}, {m, n}).closed_form;
    const double dx = distance(params, {m + k, n}, {m, n}).closed_form;
    const double dy = distance(params, {m, n + l}, {m, n}).closed_form;
    return std::abs(diag * diag - dx * dx - dy * dy);
}

}  // namespace ncps
