#ifndef SINGRAPH_ERRORS_HPP
#define SINGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sg {

// Malformed or out-of-contract user input (files, flags, API arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input error tied to a line of a text document.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Two independent computations disagreed, or a proven identity failed.
// Always a bug (or a counterexample worth reporting).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A supplied certificate does not satisfy its defining equation.
class CertificateRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sg

#endif  // SINGRAPH_ERRORS_HPP
