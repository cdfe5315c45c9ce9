#ifndef NCPS_SUP_SOLVER_HPP
#define NCPS_SUP_SOLVER_HPP

#include "ncps/diagonal.hpp"
#include "ncps/fock.hpp"
#include "ncps/params.hpp"

namespace ncps {

/// Feasible-set flavor for the supremum solver. operator_norm is the exact
/// commutator ball (authoritative); constraint_relations is the cheap
/// necessary-condition screen from the diagonal calculus (its optimum can
/// exceed the true distance, and its element can exceed operator norm 1 for
/// t > 0); both solves on the exact ball and additionally checks the screen.
enum class ConstraintMode { operator_norm, constraint_relations, both };

struct SupSolverConfig {
    int cutoff = kDefaultCutoff;
    int buffer = kDefaultBuffer;
    /// Total damped-Newton step budget across the barrier path.
    int max_iters = 5000;
    /// Barrier path schedule: initial objective weight and its growth factor
    /// per stage.
    double step_initial = 1.0;
    double step_decay = 8.0;
    /// Relative duality-gap target on the objective.
    double tol_obj = 1e-7;
    ConstraintMode constraint_mode = ConstraintMode::operator_norm;
    /// Drives brute-force sampling only; the barrier solve is deterministic.
    unsigned seed = 42;
};

struct SupResult {
    double value = 0.0;
    DiagonalElement element;
    double norm_at_solution = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Maximizes tr((rho_b - rho_a) e) over Hermitian diagonal elements whose
/// coefficients vary inside the (cutoff - buffer)^2 window (constant beyond),
/// subject to the configured ball constraint. The feasible set is convex and
/// the objective linear, so the barrier solve reaches the global optimum; the
/// returned element is rescaled onto the exact ball boundary, making the
/// value a certified lower bound on the distance.
SupResult sup_distance(const PhaseSpaceParams& params, FockLabel a, FockLabel b,
                       const SupSolverConfig& cfg = {});

/// e / ||[D, pi(e)]||_op: exact radial projection onto the ball boundary.
/// Throws ZeroElement when the commutator vanishes (constant coefficients).
DiagonalElement scale_to_ball(const DiagonalElement& e, const PhaseSpaceParams& params,
                              int cutoff);

/// Best objective over a bag of ball-scaled candidate directions: the
/// closed-form element, coordinate directions at the two labels, and `samples`
/// seeded random window grids. Guaranteed lower bound on the distance.
double brute_force_oracle(const PhaseSpaceParams& params, FockLabel a, FockLabel b, int cutoff,
                          int samples, unsigned seed = 42);

}  // namespace ncps

#endif
