#pragma once

#include <stdexcept>
#include <string>

namespace bcolor {

/// Malformed or out-of-range input: bad indices, bad files, bad parameters.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on arguments that violate its mathematical
/// precondition (e.g. lifting through a map that is not semi-locally-surjective).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace bcolor
