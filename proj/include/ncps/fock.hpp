#ifndef NCPS_FOCK_HPP
#define NCPS_FOCK_HPP

#include <Eigen/Dense>

#include "ncps/params.hpp"

namespace ncps {

inline constexpr int kDefaultCutoff = 24;
inline constexpr int kDefaultBuffer = 8;

/// Two-mode occupation pair (m, n).
struct FockLabel {
    int m = 0;
    int n = 0;

    bool operator==(const FockLabel&) const = default;
};

/// Flat position of |m,n> in the lexicographic basis (m outer, n inner).
inline int flat_index(FockLabel label, int cutoff) { return label.m * cutoff + label.n; }

/// Dense complex operator on the two-mode Fock space truncated at `cutoff`
/// levels per mode; entries is cutoff^2 x cutoff^2 in the lexicographic basis.
struct TruncatedOperator {
    int cutoff = 0;
    Eigen::MatrixXcd entries;
    bool hermitian = false;

    int dim() const { return cutoff * cutoff; }
};

/// Max deviation from conjugate symmetry; 0 for an exactly Hermitian matrix.
double hermiticity_defect(const Eigen::MatrixXcd& m);

/// Lowering operator on mode 1 (a (x) I) or mode 2 (I (x) a), where a is the
/// standard cutoff x cutoff matrix with a|n> = sqrt(n)|n-1>. Requires
/// cutoff >= 2. The top level cutoff-1 lowers normally; raising maps it to
/// zero (truncation convention keeping a and a^dag exact adjoints).
TruncatedOperator annihilation_mode(int mode, int cutoff);

/// Conjugate transpose of annihilation_mode.
TruncatedOperator creation_mode(int mode, int cutoff);

/// Deformed lowering operators mixing the two modes:
///   A_1 = a_1 - i t a_2,   A_2 = a_2 + i t a_1.
/// At t = 0 these are entrywise the plain lowering operators.
TruncatedOperator deformed_ladder(int mode, const PhaseSpaceParams& params, int cutoff);

/// Rank-one projector |m,n><m,n| as a state density.
struct FockStateDensity {
    FockLabel label;
    TruncatedOperator op;
};

FockStateDensity fock_density(FockLabel label, int cutoff);

}  // namespace ncps

#endif
