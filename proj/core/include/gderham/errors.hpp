#pragma once

#include <stdexcept>
#include <string>

namespace gderham {

/// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problems with user-supplied input (files, catalog names, run configs).
/// The CLI maps these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

/// Mathematical preconditions that failed on otherwise well-formed input.
/// The CLI maps these to exit code 1.
struct MathError : Error {
  using Error::Error;
};

struct ParseError : InputError { using InputError::InputError; };
struct NotFound : InputError { using InputError::InputError; };
struct MalformedAlgebra : InputError { using InputError::InputError; };
struct BadMesh : InputError { using InputError::InputError; };

struct DimensionError : MathError { using MathError::MathError; };
struct NotAComplex : MathError { using MathError::MathError; };
struct NotACocycle : MathError { using MathError::MathError; };
struct NotAChainMap : MathError { using MathError::MathError; };
struct NotExact : MathError { using MathError::MathError; };
struct BadCover : MathError { using MathError::MathError; };
struct NotFlat : MathError { using MathError::MathError; };
struct NotAutomorphism : MathError { using MathError::MathError; };
struct ModelMismatch : MathError { using MathError::MathError; };
struct BadMap : MathError { using MathError::MathError; };
struct BadBase : MathError { using MathError::MathError; };
struct NotAHomomorphism : MathError { using MathError::MathError; };
struct NotAnIdeal : MathError { using MathError::MathError; };
struct NotCompactType : MathError { using MathError::MathError; };
struct NotOriented : MathError { using MathError::MathError; };
struct DegreeError : MathError { using MathError::MathError; };
struct NumericalError : MathError { using MathError::MathError; };
struct Unstable : MathError { using MathError::MathError; };

}  // namespace gderham
