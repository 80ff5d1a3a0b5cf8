#ifndef SCALAR_ERROR_HPP
#define SCALAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace scalar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (index out of range, arity mismatch, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Identifier rejected by the splitter.
class MalformedIdentifier : public Error {
 public:
  using Error::Error;
};

/// A resource file (word list, vector file, model, dataset) could not be read or parsed.
class LoadError : public Error {
 public:
  using Error::Error;
};

class ConceptError : public Error {
 public:
  using Error::Error;
};

class StratificationError : public Error {
 public:
  using Error::Error;
};

class DegenerateTraining : public Error {
 public:
  using Error::Error;
};

class CacheUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace scalar

#endif  // SCALAR_ERROR_HPP
