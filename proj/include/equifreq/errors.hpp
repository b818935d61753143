#pragma once

#include <stdexcept>
#include <string>

namespace equifreq {

// Machine-parsable reason codes for domain errors. The CLI prints the
// reason string verbatim on stderr and exits 1; usage problems exit 2.
enum class Reason {
  ZeroDenominator,
  GcdOfZeros,
  ZeroSlope,
  DegenerateSlope,
  ZeroMultiplier,
  NonPositive,
  MismatchedS,
  SidesUnequal,
  NonEmittingTransition,
  InvalidConicSolution,
  GammaBalanced,
  DeltaNotDivisible,
  InvalidPartition,
  DuplicatePartition,
  NotPrime,
  DuplicatePrime,
  TooFewPrimes,
  TooFewSolutions,
  DuplicateTransition,
  BoundExceeded,
};

inline const char* reason_string(Reason r) {
  switch (r) {
    case Reason::ZeroDenominator: return "zero_denominator";
    case Reason::GcdOfZeros: return "gcd_of_zeros";
    case Reason::ZeroSlope: return "zero_slope";
    case Reason::DegenerateSlope: return "degenerate_slope";
    case Reason::ZeroMultiplier: return "zero_multiplier";
    case Reason::NonPositive: return "non_positive";
    case Reason::MismatchedS: return "mismatched_s";
    case Reason::SidesUnequal: return "sides_unequal";
    case Reason::NonEmittingTransition: return "non_emitting_transition";
    case Reason::InvalidConicSolution: return "invalid_conic_solution";
    case Reason::GammaBalanced: return "gamma_balanced";
    case Reason::DeltaNotDivisible: return "delta_not_divisible";
    case Reason::InvalidPartition: return "invalid_partition";
    case Reason::DuplicatePartition: return "duplicate_partition";
    case Reason::NotPrime: return "not_prime";
    case Reason::DuplicatePrime: return "duplicate_prime";
    case Reason::TooFewPrimes: return "too_few_primes";
    case Reason::TooFewSolutions: return "too_few_solutions";
    case Reason::DuplicateTransition: return "duplicate_transition";
    case Reason::BoundExceeded: return "bound_exceeded";
  }
  return "unknown";
}

class DomainError : public std::domain_error {
 public:
  explicit DomainError(Reason reason, const std::string& detail = "")
      : std::domain_error(detail.empty()
                              ? std::string(reason_string(reason))
                              : std::string(reason_string(reason)) + " (" + detail + ")"),
        reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

} // namespace equifreq
