#include "ncps/zeta.hpp"

#include <cmath>

#include "ncps/errors.hpp"

namespace ncps {

double zeta_partial(int p, int q) {
    if (p < 0 || q < 0) {
        throw InvalidParameter("zeta_partial: indices must be non-negative");
    }
    if (p > q) {
        return -zeta_partial(q, p);
    }
    double sum = 0.0;
    for (int i = p + 1; i <= q; ++i) {
        sum += 1.0 / std::sqrt(static_cast<double>(i));
    }
    return sum;
}

}  // namespace ncps
