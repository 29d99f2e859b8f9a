// errors.hpp -- typed error conditions shared by all modules.
//
// Every failure that callers are expected to handle is a CalcError carrying
// one of the ErrKind tags below.  The CLI maps tags to process exit codes:
// malformed or out-of-domain inputs exit 2, numerical failures (precision,
// quadrature, integrality) exit 3, self-test failures exit 4.
#pragma once

#include <stdexcept>
#include <string>

namespace shv {

enum class ErrKind {
  BadInput,                 // unparsable flag/value
  NotFundamental,           // D not squarefree and 3 mod 4
  PoleAtOne,                // L-series evaluated at its pole
  PrecisionLoss,            // refinement loop failed to converge
  InvalidInvariantProduct,  // local invariants do not multiply to -1
  UnknownPrime,             // invariant assigned at a prime not dividing D
  NotSplit,                 // companion construction needs a split prime
  DimensionTooSmall,        // operation needs larger n
  DimensionOutOfScope,      // operation only supported on the desk-scale grid
  NonIntegral,              // representation count failed integrality check
  QuadratureFail,           // adaptive integrator exhausted its budget
  BadPrime,                 // prime argument outside the valid set
  BetaPole,                 // vertical coefficient denominator 1+beta = 0
};

class CalcError : public std::runtime_error {
 public:
  CalcError(ErrKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrKind kind() const { return kind_; }

  // true for errors caused by the input itself (CLI exit code 2),
  // false for numerical failures (CLI exit code 3).
  bool is_input_error() const {
    switch (kind_) {
      case ErrKind::PrecisionLoss:
      case ErrKind::NonIntegral:
      case ErrKind::QuadratureFail:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrKind kind_;
};

inline const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::BadInput: return "BadInput";
    case ErrKind::NotFundamental: return "NotFundamental";
    case ErrKind::PoleAtOne: return "PoleAtOne";
    case ErrKind::PrecisionLoss: return "PrecisionLoss";
    case ErrKind::InvalidInvariantProduct: return "InvalidInvariantProduct";
    case ErrKind::UnknownPrime: return "UnknownPrime";
    case ErrKind::NotSplit: return "NotSplit";
    case ErrKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrKind::DimensionOutOfScope: return "DimensionOutOfScope";
    case ErrKind::NonIntegral: return "NonIntegral";
    case ErrKind::QuadratureFail: return "QuadratureFail";
    case ErrKind::BadPrime: return "BadPrime";
    case ErrKind::BetaPole: return "BetaPole";
  }
  return "Unknown";
}

}  // namespace shv
