#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wgqed {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Machine-readable reason codes used when a grid cell is skipped.
namespace reason {
inline constexpr const char* kCausality = "causality";
inline constexpr const char* kSingularity = "singularity";
inline constexpr const char* kPrecondition = "precondition";
inline constexpr const char* kConvergence = "convergence";
inline constexpr const char* kDomain = "domain";
}  // namespace reason

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what,
                       const char* code = reason::kDomain)
      : Error(what), code_(code) {}
  const char* code() const noexcept { return code_; }

 private:
  const char* code_;
};

/// Space-time point outside the region where the scattered field exists.
class CausalityError : public DomainError {
 public:
  explicit CausalityError(const std::string& what)
      : DomainError(what, reason::kCausality) {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace wgqed
