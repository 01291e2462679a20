#ifndef VOATWIST_ERRORS_HPP
#define VOATWIST_ERRORS_HPP

#include <stdexcept>

namespace voatwist {

struct CalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowTooNarrow : CalcError { using CalcError::CalcError; };
struct UnsupportedShape : CalcError { using CalcError::CalcError; };
struct NotSingleValued : CalcError { using CalcError::CalcError; };
struct SectorMismatch : CalcError { using CalcError::CalcError; };
struct NotHomogeneous : CalcError { using CalcError::CalcError; };
struct OutOfWindow : CalcError { using CalcError::CalcError; };
struct WindowExceeded : CalcError { using CalcError::CalcError; };
struct CrossValidateMismatch : CalcError { using CalcError::CalcError; };

} // namespace voatwist

#endif
