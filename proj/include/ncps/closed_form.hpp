#ifndef NCPS_CLOSED_FORM_HPP
#define NCPS_CLOSED_FORM_HPP

#include "ncps/diagonal.hpp"
#include "ncps/fock.hpp"
#include "ncps/params.hpp"
#include "ncps/zeta.hpp"

namespace ncps {

/// Closed-form spectral distance between two Fock states together with its
/// ingredients:
///   closed_form = prefactor * sqrt(zeta_x^2 + zeta_y^2)
/// where prefactor = sqrt(hbar^2-theta^2)/sqrt(2 hbar) and zeta_x, zeta_y are
/// the partial sums over the (sorted) index ranges of the two modes.
struct DistanceReport {
    FockLabel from;
    FockLabel to;
    double closed_form = 0.0;
    double prefactor = 0.0;
    double zeta_x = 0.0;
    double zeta_y = 0.0;
};

DistanceReport distance(const PhaseSpaceParams& params, FockLabel a, FockLabel b);

/// Element attaining the distance between |m,n> and |m+k,n>: coefficients
/// constant along the second index, stepped along the first as
/// c(i,.) = prefactor * zeta_{0;clamp(i,m,m+k)}, extended constantly outside
/// the stepped rows. Saturates the ball exactly.
DiagonalElement optimal_element_axis(const PhaseSpaceParams& params, int m, int k, int n,
                                     int cutoff, int buffer = kDefaultBuffer);

/// Rectangle element for a general pair: c(p,q) = c0*zeta_{0;p'} + d0*zeta_{0;q'}
/// with p', q' clamped to the label ranges and signed weights
///   c0 = prefactor * zeta_{ma;mb} / r,  d0 = prefactor * zeta_{na;nb} / r,
///   r  = sqrt(zeta_{ma;mb}^2 + zeta_{na;nb}^2),
/// extended constantly outside the rectangle. The trace difference
/// tr(rho_b e) - tr(rho_a e) equals the closed form. Note: for t > 0 this
/// element saturates the ball only when the rectangle is a single cell or
/// degenerate (axis-aligned); wider rectangles exceed norm 1 (see the ball
/// diagnostics), which the verification suite measures and reports.
DiagonalElement optimal_element_general(const PhaseSpaceParams& params, FockLabel a, FockLabel b,
                                        int cutoff, int buffer = kDefaultBuffer);

/// |d(m+k+l,n ; m,n) - d(m+k,n ; m,n) - d(m+k+l,n ; m+k,n)|
double check_additivity(const PhaseSpaceParams& params, int m, int n, int k, int l);

/// |d(m+k,n+l ; m,n)^2 - d(m+k,n ; m,n)^2 - d(m,n+l ; m,n)^2|
double check_pythagoras(const PhaseSpaceParams& params, int m, int n, int k, int l);

}  // namespace ncps

#endif
