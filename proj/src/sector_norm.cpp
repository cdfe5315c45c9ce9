#include "ncps/sector_norm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include <Eigen/Eigenvalues>

#include "ncps/errors.hpp"

namespace ncps {

namespace {

using Cplx = std::complex<double>;

// States (i, j) with i + j = s inside the cutoff grid, ordered by i.
std::vector<std::pair<int, int>> sector_states(int s, int n) {
    std::vector<std::pair<int, int>> states;
    for (int i = std::max(0, s - n + 1); i <= std::min(s, n - 1); ++i) {
        states.emplace_back(i, s - i);
    }
    return states;
}

}  // namespace

std::vector<SectorBlock> build_sector_blocks(int cutoff, double t) {
    const int n = cutoff;
    const Cplx it(0.0, t);
    std::vector<SectorBlock> blocks;
    for (int s = 0; s <= 2 * n - 2; ++s) {
        const auto ws = sector_states(s, n);
        const auto up = (s + 1 <= 2 * n - 2) ? sector_states(s + 1, n)
                                             : std::vector<std::pair<int, int>>{};
        const auto dn = (s >= 1) ? sector_states(s - 1, n) : std::vector<std::pair<int, int>>{};
        std::map<std::pair<int, int>, int> idx_up, idx_dn;
        for (size_t r = 0; r < up.size(); ++r) idx_up[up[r]] = static_cast<int>(r);
        for (size_t r = 0; r < dn.size(); ++r) idx_dn[dn[r]] = static_cast<int>(up.size() + r);

        SectorBlock blk;
        blk.rows = static_cast<int>(up.size() + dn.size());
        blk.cols = static_cast<int>(2 * ws.size());
        if (blk.rows == 0 || blk.cols == 0) continue;

        // Columns: first the spinor-component-1 copy of sector s, then
        // component 2. Row targets; raising entries land in sector s+1,
        // lowering entries in sector s-1.
        //   component 1:  out_up = [A2,e]^+ ,  out_dn =  [A1,e]
        //   component 2:  out_up = [A1,e]^+ ,  out_dn = -[A2,e]
        // with [a1,e]|i,j> = sqrt(i) E(i,j)|i-1,j>,
        //      [a1,e]^+|i,j> = sqrt(i+1) E(i+1,j)|i+1,j>, and mode-2 alike.
        for (size_t k = 0; k < ws.size(); ++k) {
            const auto [i, j] = ws[k];
            const int c1 = static_cast<int>(k);
            const int c2 = static_cast<int>(ws.size() + k);
            const double wi = std::sqrt(static_cast<double>(i));
            const double wj = std::sqrt(static_cast<double>(j));
            const double wi1 = std::sqrt(static_cast<double>(i + 1));
            const double wj1 = std::sqrt(static_cast<double>(j + 1));
            if (i + 1 < n) {
                auto at = idx_up.find({i + 1, j});
                blk.entries.push_back({at->second, c1, -it * wi1, true, i + 1, j});
                blk.entries.push_back({at->second, c2, Cplx(wi1, 0.0), true, i + 1, j});
            }
            if (j + 1 < n) {
                auto at = idx_up.find({i, j + 1});
                blk.entries.push_back({at->second, c1, Cplx(wj1, 0.0), false, i, j + 1});
                blk.entries.push_back({at->second, c2, it * wj1, false, i, j + 1});
            }
            if (i >= 1) {
                auto at = idx_dn.find({i - 1, j});
                blk.entries.push_back({at->second, c1, Cplx(wi, 0.0), true, i, j});
                blk.entries.push_back({at->second, c2, -it * wi, true, i, j});
            }
            if (j >= 1) {
                auto at = idx_dn.find({i, j - 1});
                blk.entries.push_back({at->second, c1, -it * wj, false, i, j});
                blk.entries.push_back({at->second, c2, Cplx(-wj, 0.0), false, i, j});
            }
        }
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

void difference_grids(const Eigen::MatrixXd& coeffs, Eigen::MatrixXd& E, Eigen::MatrixXd& F) {
    const int n = static_cast<int>(coeffs.rows());
    E = Eigen::MatrixXd::Zero(n, n);
    F = Eigen::MatrixXd::Zero(n, n);
    E.bottomRows(n - 1) = coeffs.bottomRows(n - 1) - coeffs.topRows(n - 1);
    F.rightCols(n - 1) = coeffs.rightCols(n - 1) - coeffs.leftCols(n - 1);
}

DiagonalCommutatorNorm::DiagonalCommutatorNorm(const PhaseSpaceParams& params, int cutoff)
    : cutoff_(cutoff), beta_(params.beta), blocks_(build_sector_blocks(cutoff, params.t)) {
    if (cutoff < 2) {
        throw InvalidCutoff("cutoff must be >= 2, got " + std::to_string(cutoff));
    }
}

double DiagonalCommutatorNorm::norm(const DiagonalElement& e) const {
    if (e.cutoff != cutoff_) {
        throw DimensionMismatch("DiagonalCommutatorNorm: element cutoff " +
                                std::to_string(e.cutoff) + " != " + std::to_string(cutoff_));
    }
    return norm(e.coeffs);
}

double DiagonalCommutatorNorm::norm(const Eigen::MatrixXd& coeffs) const {
    Eigen::MatrixXd E, F;
    difference_grids(coeffs, E, F);
    double best = 0.0;
    Eigen::MatrixXcd m;
    for (const auto& blk : blocks_) {
        m = Eigen::MatrixXcd::Zero(blk.rows, blk.cols);
        for (const auto& en : blk.entries) {
            m(en.row, en.col) += en.coef * (en.is_E ? E(en.i, en.j) : F(en.i, en.j));
        }
        // top singular value via the smaller Gram side
        Eigen::MatrixXcd gram = (blk.rows <= blk.cols) ? (m * m.adjoint()).eval()
                                                       : (m.adjoint() * m).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) {
            throw NumericalFailure("sector norm: eigensolver did not converge");
        }
        const double top = es.eigenvalues().maxCoeff();
        if (top > best) best = top;
    }
    return beta_ * std::sqrt(std::max(best, 0.0));
}

}  // namespace ncps
