#ifndef NCPS_DIRAC_HPP
#define NCPS_DIRAC_HPP

#include <Eigen/Dense>

#include "ncps/diagonal.hpp"
#include "ncps/fock.hpp"
#include "ncps/params.hpp"

namespace ncps {

/// Dirac operator on the truncated space tensored with C^4. With A_i the
/// deformed lowering operators, the 4x4 block layout (each block cutoff^2
/// square, overall dimension 4*cutoff^2) is
///
///      beta * |    0       0    -A_2^+  -A_1^+ |
///             |    0       0      A_1    -A_2  |
///             |  -A_2     A_1^+    0       0   |
///             |  -A_1    -A_2^+    0       0   |
///
/// which is Hermitian by construction.
struct DiracOperator {
    PhaseSpaceParams params;
    int cutoff = 0;
    Eigen::MatrixXcd matrix;

    int dim() const { return 4 * cutoff * cutoff; }
};

DiracOperator dirac_operator(const PhaseSpaceParams& params, int cutoff);

/// Diagonal spinor representation diag(e, e, e, e).
Eigen::MatrixXcd represent(const TruncatedOperator& e);

/// [D, pi(e)] for Hermitian e. Verifies the result has vanishing diagonal
/// superblocks (the commutator only couples the upper and lower spinor
/// pairs); a violation beyond 1e-12 of the matrix scale throws
/// NumericalFailure.
Eigen::MatrixXcd dirac_commutator(const DiracOperator& d, const TruncatedOperator& e);

/// Largest singular value. NumericalFailure on non-finite input or if the
/// decomposition does not converge.
double operator_norm(const Eigen::MatrixXcd& op);

/// Spectral-radius fast path for Hermitian matrices.
double operator_norm_hermitian(const Eigen::MatrixXcd& op);

struct BallReport {
    double norm = 0.0;
    bool feasible = false;
    double tol = 0.0;
};

/// || [D, pi(e)] ||_op compared against 1. The TruncatedOperator overload
/// takes the dense route; the DiagonalElement overload uses the exact
/// sector decomposition (same value, far cheaper).
BallReport ball_condition(const TruncatedOperator& e, const PhaseSpaceParams& params, int cutoff,
                          double tol = 1e-9);
BallReport ball_condition(const DiagonalElement& e, const PhaseSpaceParams& params, int cutoff,
                          double tol = 1e-9);

}  // namespace ncps

#endif
