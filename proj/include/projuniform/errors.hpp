#pragma once

#include <stdexcept>
#include <string>

namespace projuniform {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input/contract violations.
class UnsupportedSpace : public Error { public: using Error::Error; };
class ZeroVector : public Error { public: using Error::Error; };
class MixedSpaces : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class InsufficientData : public Error { public: using Error::Error; };
class DegenerateEnsemble : public Error { public: using Error::Error; };

// Numerical failures.
class NonIntegerMultiplicity : public Error { public: using Error::Error; };
class QuadratureNonConvergence : public Error { public: using Error::Error; };
class TruncationFailure : public Error { public: using Error::Error; };
class PartitionNonConvergence : public Error { public: using Error::Error; };
class RejectionStall : public Error { public: using Error::Error; };
class NegativeSchur : public Error { public: using Error::Error; };

// Filesystem / serialization failures.
class IoError : public Error { public: using Error::Error; };

}  // namespace projuniform
