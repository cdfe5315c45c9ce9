#include "ncps/gamma.hpp"

#include <complex>

namespace ncps {

GammaSet gamma_matrices() {
    const std::complex<double> i(0.0, 1.0);
    GammaSet set;
    set.g[0] << 0, 0, 0, i,
                0, 0, i, 0,
                0, -i, 0, 0,
                -i, 0, 0, 0;
    set.g[1] << 0, 0, 0, 1,
                0, 0, -1, 0,
                0, -1, 0, 0,
                1, 0, 0, 0;
    set.g[2] << 0, 0, i, 0,
                0, 0, 0, -i,
                -i, 0, 0, 0,
                0, i, 0, 0;
    set.g[3] << 0, 0, 1, 0,
                0, 0, 0, 1,
                1, 0, 0, 0,
                0, 1, 0, 0;
    return set;
}

}  // namespace ncps
