#include "ncps/params.hpp"

#include <cmath>
#include <string>

#include "ncps/errors.hpp"

namespace ncps {

PhaseSpaceParams make_params(double hbar, double theta) {
    if (!(hbar > 0.0)) {
        throw InvalidParameter("hbar must be positive, got " + std::to_string(hbar));
    }
    if (!(theta >= 0.0)) {
        throw InvalidParameter("theta must be non-negative, got " + std::to_string(theta));
    }
    if (theta >= hbar) {
        throw SingularRegime("theta = " + std::to_string(theta) + " >= hbar = " +
                             std::to_string(hbar) + ": singular regime, distances degenerate");
    }
    PhaseSpaceParams p;
    p.hbar = hbar;
    p.theta = theta;
    p.s = std::sqrt(hbar * hbar - theta * theta);
    p.beta = std::sqrt(hbar + p.s) / p.s;
    p.t = theta / (hbar + p.s);
    return p;
}

PhaseSpaceParams make_params_mu_nu(double hbar, double mu, double nu) {
    if (!(mu > 0.0) || !(nu > 0.0)) {
        throw InvalidParameter("mu and nu must be positive");
    }
    return make_params(hbar, std::sqrt(mu * nu));
}

double distance_prefactor(const PhaseSpaceParams& p) {
    return p.s / std::sqrt(2.0 * p.hbar);
}

}  // namespace ncps
