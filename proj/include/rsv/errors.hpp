#pragma once

#include <stdexcept>
#include <string>

namespace rsv {

/// A tuple has more parts than the rank it is asked to live in.
class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inadmissible (l, m, n, j) or similar structural configuration.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the domain of an operation (e.g. a non-dominant weight).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two truncated series with different caps were combined.
class CapMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force oracle was asked for an input above its size cap.
class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition stated on an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rsv
