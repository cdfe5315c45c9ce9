#ifndef NCPS_ERRORS_HPP
#define NCPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncps {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// theta >= hbar: the deformation degenerates and all distances collapse.
struct SingularRegime : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct InvalidCutoff : Error {
    using Error::Error;
};

struct LabelOutOfRange : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NumericalFailure : Error {
    using Error::Error;
};

struct NotConverged : Error {
    using Error::Error;
};

/// Commutator vanishes identically (constant element); no ray scaling possible.
struct ZeroElement : Error {
    using Error::Error;
};

struct DegeneratePair : Error {
    using Error::Error;
};

}  // namespace ncps

#endif
