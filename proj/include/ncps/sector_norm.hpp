#ifndef NCPS_SECTOR_NORM_HPP
#define NCPS_SECTOR_NORM_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ncps/diagonal.hpp"
#include "ncps/params.hpp"

namespace ncps {

/// One matrix entry of a sector block, as a linear function of the element's
/// difference grids: value = coef * E(i,j) or coef * F(i,j).
struct SectorEntry {
    int row;
    int col;
    std::complex<double> coef;
    bool is_E;
    int i;
    int j;
};

/// For diagonal e the commutator [D, pi(e)] preserves the grading by total
/// quantum number s = i + j: the inner 2x2 commutator block maps the pair of
/// copies of sector s into sectors (s+1, s-1). Its restriction to sector s is
/// a small rectangular block M_s, and
///
///   || [D, pi(e)] ||_op = beta * max_s sigma_max(M_s).
///
/// This is an exact block decomposition of the truncated matrix, not an
/// approximation; blocks are at most 2*cutoff x 2*cutoff.
struct SectorBlock {
    int rows = 0;
    int cols = 0;
    std::vector<SectorEntry> entries;
};

std::vector<SectorBlock> build_sector_blocks(int cutoff, double t);

/// Difference grids E, F of a coefficient grid (same conventions as gh_grid).
void difference_grids(const Eigen::MatrixXd& coeffs, Eigen::MatrixXd& E, Eigen::MatrixXd& F);

/// Reusable evaluator of || [D, pi(e)] ||_op for diagonal elements at fixed
/// (params, cutoff). Equivalence with the dense-matrix norm is covered by
/// tests; this path is exact and cheap enough for inner solver loops.
class DiagonalCommutatorNorm {
  public:
    DiagonalCommutatorNorm(const PhaseSpaceParams& params, int cutoff);

    double norm(const DiagonalElement& e) const;
    double norm(const Eigen::MatrixXd& coeffs) const;

    int cutoff() const { return cutoff_; }
    double beta() const { return beta_; }
    const std::vector<SectorBlock>& blocks() const { return blocks_; }

  private:
    int cutoff_;
    double beta_;
    std::vector<SectorBlock> blocks_;
};

}  // namespace ncps

#endif
