#ifndef NCPS_GAMMA_HPP
#define NCPS_GAMMA_HPP

#include <array>

#include <Eigen/Dense>

namespace ncps {

/// Euclidean Dirac matrices: Hermitian, entries in {0, +-1, +-i}, satisfying
/// g^k g^l + g^l g^k = 2 delta_kl I exactly.
struct GammaSet {
    std::array<Eigen::Matrix4cd, 4> g;
};

GammaSet gamma_matrices();

}  // namespace ncps

#endif
