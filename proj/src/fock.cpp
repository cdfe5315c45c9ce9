#include "ncps/fock.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "ncps/errors.hpp"

namespace ncps {

namespace {

using Cplx = std::complex<double>;

Eigen::MatrixXcd single_mode_lowering(int cutoff) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void require_mode(int mode) {
    if (mode != 1 && mode != 2) {
        throw InvalidParameter("mode must be 1 or 2, got " + std::to_string(mode));
    }
}

void require_cutoff(int cutoff) {
    if (cutoff < 2) {
        throw InvalidCutoff("cutoff must be >= 2, got " + std::to_string(cutoff));
    }
}

}  // namespace

double hermiticity_defect(const Eigen::MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

TruncatedOperator annihilation_mode(int mode, int cutoff) {
    require_mode(mode);
    require_cutoff(cutoff);
    const Eigen::MatrixXcd a = single_mode_lowering(cutoff);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(cutoff, cutoff);
    TruncatedOperator op;
    op.cutoff = cutoff;
    op.entries = (mode == 1) ? kron(a, id) : kron(id, a);
    return op;
}

TruncatedOperator creation_mode(int mode, int cutoff) {
    TruncatedOperator op = annihilation_mode(mode, cutoff);
    op.entries = op.entries.adjoint().eval();
    return op;
}

TruncatedOperator deformed_ladder(int mode, const PhaseSpaceParams& params, int cutoff) {
    require_mode(mode);
    const TruncatedOperator a1 = annihilation_mode(1, cutoff);
    const TruncatedOperator a2 = annihilation_mode(2, cutoff);
    const Cplx it(0.0, params.t);
    TruncatedOperator op;
    op.cutoff = cutoff;
    op.entries = (mode == 1) ? (a1.entries - it * a2.entries).eval()
                             : (a2.entries + it * a1.entries).eval();
    return op;
}

FockStateDensity fock_density(FockLabel label, int cutoff) {
    require_cutoff(cutoff);
    if (label.m < 0 || label.n < 0 || label.m >= cutoff || label.n >= cutoff) {
        throw LabelOutOfRange("fock_density: label (" + std::to_string(label.m) + "," +
                              std::to_string(label.n) + ") outside cutoff " +
                              std::to_string(cutoff));
    }
    FockStateDensity rho;
    rho.label = label;
    rho.op.cutoff = cutoff;
    rho.op.entries = Eigen::MatrixXcd::Zero(cutoff * cutoff, cutoff * cutoff);
    const int k = flat_index(label, cutoff);
    rho.op.entries(k, k) = 1.0;
    rho.op.hermitian = true;
    return rho;
}

}  // namespace ncps
