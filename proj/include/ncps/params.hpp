#ifndef NCPS_PARAMS_HPP
#define NCPS_PARAMS_HPP

namespace ncps {

/// Deformation data of the phase-space geometry. Derived quantities are
/// populated at construction and the struct is immutable afterwards:
///   s    = sqrt(hbar^2 - theta^2)
///   beta = sqrt(hbar + s) / s
///   t    = theta / (hbar + s),  0 <= t < 1
struct PhaseSpaceParams {
    double hbar;
    double theta;
    double s;
    double beta;
    double t;
};

/// Validates hbar > 0 and 0 <= theta < hbar (strict: theta == hbar is the
/// singular regime where every distance degenerates to zero).
PhaseSpaceParams make_params(double hbar, double theta);

/// Same geometry given the two raw noncommutativity parameters; reduces to
/// make_params(hbar, sqrt(mu * nu)). Requires mu, nu > 0.
PhaseSpaceParams make_params_mu_nu(double hbar, double mu, double nu);

/// s / sqrt(2*hbar); algebraically equal to 1/(beta*sqrt(1+t^2)).
/// Multiplies every closed-form distance.
double distance_prefactor(const PhaseSpaceParams& p);

}  // namespace ncps

#endif
