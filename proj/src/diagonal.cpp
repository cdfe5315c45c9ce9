#include "ncps/diagonal.hpp"

#include <string>

#include "ncps/errors.hpp"

namespace ncps {

DiagonalElement DiagonalElement::zero(int cutoff) {
    if (cutoff < 2) {
        throw InvalidCutoff("cutoff must be >= 2, got " + std::to_string(cutoff));
    }
    DiagonalElement e;
    e.cutoff = cutoff;
    e.coeffs = Eigen::MatrixXd::Zero(cutoff, cutoff);
    return e;
}

TruncatedOperator DiagonalElement::to_operator() const {
    TruncatedOperator op;
    op.cutoff = cutoff;
    op.entries = Eigen::MatrixXcd::Zero(cutoff * cutoff, cutoff * cutoff);
    for (int i = 0; i < cutoff; ++i) {
        for (int j = 0; j < cutoff; ++j) {
            const int k = i * cutoff + j;
            op.entries(k, k) = coeffs(i, j);
        }
    }
    op.hermitian = true;
    return op;
}

GHGrid gh_grid(const DiagonalElement& e) {
    const int n = e.cutoff;
    GHGrid g;
    g.E = Eigen::MatrixXd::Zero(n, n);
    g.F = Eigen::MatrixXd::Zero(n, n);
    g.G = Eigen::MatrixXd::Zero(n, n);
    g.H = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.E(i, j) = e.coeffs(i, j) - e.coeffs(i - 1, j);
            g.G(i, j) = i * g.E(i, j) * g.E(i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            g.F(i, j) = e.coeffs(i, j) - e.coeffs(i, j - 1);
            g.H(i, j) = j * g.F(i, j) * g.F(i, j);
        }
    }
    return g;
}

ConstraintReport constraint_relations(const DiagonalElement& e, const PhaseSpaceParams& params,
                                      double tol) {
    const int n = e.cutoff;
    const GHGrid g = gh_grid(e);
    const double t2 = params.t * params.t;
    const double bound = 1.0 / (params.beta * params.beta);

    ConstraintReport report;
    report.tol = tol;
    for (auto& r : report.residual) {
        r = Eigen::MatrixXd::Zero(n - 1, n - 1);
    }
    double worst = -bound;
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            const double gij = g.G(i, j), gi1 = g.G(i + 1, j);
            const double hij = g.H(i, j), hj1 = g.H(i, j + 1);
            const double lhs[4] = {
                (gi1 + hij) + t2 * (gij + hj1),
                (1.0 + t2) * (gi1 + hj1),
                (gij + hj1) + t2 * (gi1 + hij),
                (1.0 + t2) * (gij + hij),
            };
            for (int r = 0; r < 4; ++r) {
                const double res = lhs[r] - bound;
                report.residual[r](i, j) = res;
                if (res > worst) worst = res;
            }
        }
    }
    report.max_residual = worst;
    report.feasible = worst <= tol;
    return report;
}

bool feasible_diagonal(const DiagonalElement& e, const PhaseSpaceParams& params, double tol) {
    return constraint_relations(e, params, tol).feasible;
}

}  // namespace ncps
