#include "ncps/dirac.hpp"

#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ncps/errors.hpp"
#include "ncps/sector_norm.hpp"

namespace ncps {

DiracOperator dirac_operator(const PhaseSpaceParams& params, int cutoff) {
    const TruncatedOperator a1 = deformed_ladder(1, params, cutoff);
    const TruncatedOperator a2 = deformed_ladder(2, params, cutoff);
    const int d = cutoff * cutoff;
    const Eigen::MatrixXcd a1d = a1.entries.adjoint();
    const Eigen::MatrixXcd a2d = a2.entries.adjoint();

    DiracOperator op;
    op.params = params;
    op.cutoff = cutoff;
    op.matrix = Eigen::MatrixXcd::Zero(4 * d, 4 * d);
    op.matrix.block(0, 2 * d, d, d) = -a2d;
    op.matrix.block(0, 3 * d, d, d) = -a1d;
    op.matrix.block(d, 2 * d, d, d) = a1.entries;
    op.matrix.block(d, 3 * d, d, d) = -a2.entries;
    op.matrix.block(2 * d, 0, d, d) = -a2.entries;
    op.matrix.block(2 * d, d, d, d) = a1d;
    op.matrix.block(3 * d, 0, d, d) = -a1.entries;
    op.matrix.block(3 * d, d, d, d) = -a2d;
    op.matrix *= params.beta;
    return op;
}

Eigen::MatrixXcd represent(const TruncatedOperator& e) {
    const int d = e.dim();
    if (e.entries.rows() != d || e.entries.cols() != d) {
        throw DimensionMismatch("represent: entries are " + std::to_string(e.entries.rows()) +
                                "x" + std::to_string(e.entries.cols()) + ", expected " +
                                std::to_string(d) + " square");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(4 * d, 4 * d);
    for (int k = 0; k < 4; ++k) {
        out.block(k * d, k * d, d, d) = e.entries;
    }
    return out;
}

Eigen::MatrixXcd dirac_commutator(const DiracOperator& d, const TruncatedOperator& e) {
    if (e.cutoff != d.cutoff) {
        throw DimensionMismatch("dirac_commutator: cutoff mismatch");
    }
    if (!e.hermitian) {
        throw NotHermitian("dirac_commutator: element must carry the hermitian flag");
    }
    if (hermiticity_defect(e.entries) > 1e-12 * (1.0 + e.entries.cwiseAbs().maxCoeff())) {
        throw NotHermitian("dirac_commutator: hermitian flag set but entries are not");
    }
    const Eigen::MatrixXcd pe = represent(e);
    Eigen::MatrixXcd comm = d.matrix * pe - pe * d.matrix;

    // Diagonal superblocks must vanish: D couples only the (1,2)<->(3,4)
    // spinor pairs and pi(e) is block-diagonal.
    const int half = 2 * d.cutoff * d.cutoff;
    const double scale = 1.0 + comm.cwiseAbs().maxCoeff();
    const double defect =
        std::max(comm.topLeftCorner(half, half).cwiseAbs().maxCoeff(),
                 comm.bottomRightCorner(half, half).cwiseAbs().maxCoeff());
    if (defect > 1e-12 * scale) {
        throw NumericalFailure("dirac_commutator: diagonal superblocks not vanishing, defect " +
                               std::to_string(defect));
    }
    return comm;
}

double operator_norm(const Eigen::MatrixXcd& op) {
    if (op.size() == 0) return 0.0;
    if (!op.allFinite()) {
        throw NumericalFailure("operator_norm: non-finite entries");
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(op);
    if (svd.info() != Eigen::Success) {
        throw NumericalFailure("operator_norm: SVD did not converge");
    }
    return svd.singularValues()(0);
}

double operator_norm_hermitian(const Eigen::MatrixXcd& op) {
    if (op.size() == 0) return 0.0;
    if (!op.allFinite()) {
        throw NumericalFailure("operator_norm: non-finite entries");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalFailure("operator_norm: eigensolver did not converge");
    }
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

BallReport ball_condition(const TruncatedOperator& e, const PhaseSpaceParams& params, int cutoff,
                          double tol) {
    const DiracOperator d = dirac_operator(params, cutoff);
    const Eigen::MatrixXcd comm = dirac_commutator(d, e);
    BallReport report;
    report.norm = operator_norm(comm);
    report.tol = tol;
    report.feasible = report.norm <= 1.0 + tol;
    return report;
}

BallReport ball_condition(const DiagonalElement& e, const PhaseSpaceParams& params, int cutoff,
                          double tol) {
    if (e.cutoff != cutoff) {
        throw DimensionMismatch("ball_condition: cutoff mismatch");
    }
    DiagonalCommutatorNorm fast(params, cutoff);
    BallReport report;
    report.norm = fast.norm(e);
    report.tol = tol;
    report.feasible = report.norm <= 1.0 + tol;
    return report;
}

}  // namespace ncps
