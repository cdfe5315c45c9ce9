#ifndef NCPS_VERIFICATION_HPP
#define NCPS_VERIFICATION_HPP

#include <string>
#include <vector>

#include "ncps/params.hpp"

namespace ncps {

struct VerifyConfig {
    double hbar = 1.0;
    /// Deformation grid for the formula-level checks; when the caller pins a
    /// single theta both grids collapse to it.
    std::vector<double> grid_thetas = {0.0, 0.3, 0.6, 0.9};
    /// Theta values for the solver-vs-closed-form sandwich (the expensive part).
    std::vector<double> sandwich_thetas = {0.0, 0.6};
    int cutoff = kDefaultCutoff;
    int buffer = kDefaultBuffer;
    unsigned seed = 42;
    double tol_ball = 1e-9;
    double tol_obj = 1e-7;
    /// Upper bound on label components in the verification grid.
    int label_max = 3;
    bool parallel = true;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;   // worst deviation/residual observed
    double threshold = 0.0;
    int violations = 0;      // number of sub-cases outside tolerance
    std::vector<std::string> details;  // per-case lines for failures / context
};

/// Runs the full verification suite (closed forms, shortening factor, solver
/// sandwich, ball saturation, metric identities, operator algebra, error
/// paths) and returns one result per criterion.
std::vector<CheckResult> run_verification(const VerifyConfig& cfg);

}  // namespace ncps

#endif
