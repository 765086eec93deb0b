#pragma once

#include <stdexcept>
#include <string>

namespace tropmat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// User / input errors.
struct EmptyBasesError : Error { using Error::Error; };
struct MixedCardinalityError : Error { using Error::Error; };
struct ExchangeFailureError : Error { using Error::Error; };
struct NotABasisError : Error { using Error::Error; };
struct ElementInBasisError : Error { using Error::Error; };
struct GroundSetMismatchError : Error { using Error::Error; };
struct RankOutOfRangeError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NotSquareError : Error { using Error::Error; };
struct AmbientMismatchError : Error { using Error::Error; };
struct ZeroMultivectorError : Error { using Error::Error; };
struct NotPluckerError : Error { using Error::Error; };
struct WideMatrixError : Error { using Error::Error; };
struct NotSufficientlyMoveableError : Error { using Error::Error; };
struct PreconditionUnmetError : Error { using Error::Error; };
struct NotAQuotientError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct ZeroWedgeError : Error { using Error::Error; };
struct ZeroPluckerVectorError : Error { using Error::Error; };
struct EmptyFiberError : Error { using Error::Error; };
struct UnknownSuiteError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Budget errors.
struct DimensionBudgetExceededError : Error { using Error::Error; };
struct SizeBudgetExceededError : Error { using Error::Error; };

// Bug sentinels: a theorem-backed contract was violated. These abort suites
// loudly; they indicate an implementation defect, never a user error.
struct TheoremViolationError : Error { using Error::Error; };
struct EquivalenceViolationError : Error { using Error::Error; };
struct WitnessSearchExhaustedError : Error { using Error::Error; };

// Enumeration ceiling in bits, overridable via TROPMAT_BUDGET.
int budget_bits();

}  // namespace tropmat
