#ifndef ORBITKIT_ERRORS_HPP
#define ORBITKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitkit {

/// Malformed user input: bad scenario file, unknown name, point outside the
/// model. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A field failed an invariance or well-definedness check during reduction.
/// The CLI maps this to exit code 3.
class NotInvariantError : public std::runtime_error {
public:
  explicit NotInvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Horizontal lift requested at a point where the group orbit is degenerate.
class NonFreePointError : public std::runtime_error {
public:
  explicit NonFreePointError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Too few cloud points to estimate anything. The CLI maps this to exit code 4.
class InsufficientSamplesError : public std::runtime_error {
public:
  explicit InsufficientSamplesError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A flow word letter terminated before its requested duration elapsed.
class EscapedSubsetError : public std::runtime_error {
public:
  EscapedSubsetError(const std::string& msg, int letter_index)
      : std::runtime_error(msg), letter_index(letter_index) {}
  int letter_index;
};

} // namespace orbitkit

#endif
