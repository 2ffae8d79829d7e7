#pragma once

#include <stdexcept>
#include <string>

namespace fedlab {

// Bad input data: malformed config, invalid geometry, out-of-range index.
class InputError : public std::runtime_error {
  public:
	explicit InputError(const std::string &msg) : std::runtime_error(msg) {}
};

// Violated internal invariant (a bug or insufficient bounds, never user data).
class InternalError : public std::logic_error {
  public:
	explicit InternalError(const std::string &msg) : std::logic_error(msg) {}
};

} // namespace fedlab
