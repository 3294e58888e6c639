#ifndef COMPLEXFORGE_ERRORS_HPP
#define COMPLEXFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace complexforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact engine
struct NotSkew : Error { using Error::Error; };
struct SymmetryRequired : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct NotSolenoidal : Error { using Error::Error; };
struct NotInKernel : Error { using Error::Error; };
struct DegenerateBox : Error { using Error::Error; };

// fa_toolbox
struct SingularGram : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ComplexViolation : Error { using Error::Error; };
struct NotInRange : Error { using Error::Error; };
struct ZeroOperator : Error { using Error::Error; };

// grid_complex
struct EmptyDomain : Error { using Error::Error; };
struct DegenerateComplex : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

} // namespace complexforge

#endif
