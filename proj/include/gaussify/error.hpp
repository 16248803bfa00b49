#pragma once

#include <stdexcept>
#include <string>

namespace gaussify {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Physically or mathematically meaningless input: degenerate states,
// non-normalizable limits, divergent iterations.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotNormalizable : public DomainError {
 public:
  explicit NotNormalizable(double spectral_norm)
      : DomainError("not normalizable: spectral norm " + std::to_string(spectral_norm) + " >= 1"),
        spectral_norm_(spectral_norm) {}

  double spectral_norm() const noexcept { return spectral_norm_; }

 private:
  double spectral_norm_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace gaussify
