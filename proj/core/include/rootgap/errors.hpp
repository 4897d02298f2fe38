#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rootgap {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Modular inverse requested for non-coprime arguments.
struct NotInvertible : Error {
  NotInvertible(std::uint64_t value, std::uint64_t modulus)
      : Error("not invertible: " + std::to_string(value) + " mod " +
              std::to_string(modulus)),
        value(value), modulus(modulus) {}
  std::uint64_t value, modulus;
};

// CRT-style split requested for non-coprime moduli.
struct NotCoprime : Error {
  NotCoprime(std::uint64_t a, std::uint64_t b)
      : Error("moduli not coprime: " + std::to_string(a) + ", " +
              std::to_string(b)),
        a(a), b(b) {}
  std::uint64_t a, b;
};

// Direct exponential-sum evaluation refused (modulus beyond the brute-force cap).
struct BruteForceLimit : Error {
  explicit BruteForceLimit(std::uint64_t modulus)
      : Error("modulus too large for direct summation: " +
              std::to_string(modulus)),
        modulus(modulus) {}
  std::uint64_t modulus;
};

// Denominator-set construction produced no admissible members.
struct EmptyQSet : Error {
  using Error::Error;
};

// An identity-check input violates one of the stated hypotheses.
// `index` is the 1-based position of the offending tuple entry (0 = global).
struct HypothesisFailed : Error {
  HypothesisFailed(const std::string& what, int index)
      : Error(what + " (component " + std::to_string(index) + ")"),
        index(index) {}
  int index;
};

// A structurally real quantity came back with a non-negligible imaginary part.
struct SymmetryViolation : Error {
  SymmetryViolation(const std::string& what, double residue)
      : Error(what + ": imaginary residue " + std::to_string(residue)),
        residue(residue) {}
  double residue;
};

// A truncated tail estimate is too large relative to the retained head.
struct TruncationTooCoarse : Error {
  TruncationTooCoarse(const std::string& what, double tail, double head)
      : Error(what + ": tail estimate " + std::to_string(tail) +
              " vs head " + std::to_string(head)),
        tail(tail), head(head) {}
  double tail, head;
};

// Adaptive quadrature exhausted its panel budget before reaching tolerance.
struct QuadratureBudget : Error {
  QuadratureBudget(double target, double achieved)
      : Error("quadrature budget exhausted: target " + std::to_string(target) +
              ", achieved " + std::to_string(achieved)),
        target(target), achieved(achieved) {}
  double target, achieved;
};

// Invalid argument / precondition violation on a public entry point.
struct UsageError : Error {
  using Error::Error;
};

// Output file or stream could not be written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace rootgap
