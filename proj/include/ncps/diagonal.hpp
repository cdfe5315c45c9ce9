#ifndef NCPS_DIAGONAL_HPP
#define NCPS_DIAGONAL_HPP

#include <array>

#include <Eigen/Dense>

#include "ncps/fock.hpp"
#include "ncps/params.hpp"

namespace ncps {

/// Hermitian diagonal algebra element sum_ij c_ij |i,j><i,j| with real
/// coefficients on the cutoff x cutoff grid (row i = first mode level).
struct DiagonalElement {
    int cutoff = 0;
    Eigen::MatrixXd coeffs;

    static DiagonalElement zero(int cutoff);

    /// Embeds as a dense TruncatedOperator (hermitian flag set).
    TruncatedOperator to_operator() const;
};

/// Finite-difference grids of the coefficients with their level weights:
///   E(i,j) = c(i,j) - c(i-1,j)   (i >= 1; row 0 is zero by convention)
///   F(i,j) = c(i,j) - c(i,j-1)   (j >= 1; column 0 likewise)
///   G(i,j) = i * E(i,j)^2,  H(i,j) = j * F(i,j)^2
struct GHGrid {
    Eigen::MatrixXd E, F, G, H;
};

GHGrid gh_grid(const DiagonalElement& e);

/// The four per-cell inequalities bounding a diagonal element inside the
/// commutator ball, as residuals LHS - 1/beta^2 (feasible where <= 0):
///   0: (G(i+1,j) + H(i,j))   + t^2 (G(i,j)   + H(i,j+1)) <= 1/beta^2
///   1: (1+t^2) (G(i+1,j) + H(i,j+1))                      <= 1/beta^2
///   2: (G(i,j)   + H(i,j+1)) + t^2 (G(i+1,j) + H(i,j))    <= 1/beta^2
///   3: (1+t^2) (G(i,j) + H(i,j))                          <= 1/beta^2
/// Evaluated at every (i,j) in [0, cutoff-2]^2, which covers each relation the
/// truncated operator ball actually constrains.
struct ConstraintReport {
    std::array<Eigen::MatrixXd, 4> residual;
    double max_residual = 0.0;
    bool feasible = false;
    double tol = 0.0;
};

ConstraintReport constraint_relations(const DiagonalElement& e, const PhaseSpaceParams& params,
                                      double tol = 1e-9);

/// Necessary-condition screen: true iff every relation residual <= tol. The
/// operator-norm ball check remains the authoritative test.
bool feasible_diagonal(const DiagonalElement& e, const PhaseSpaceParams& params,
                       double tol = 1e-9);

}  // namespace ncps

#endif
