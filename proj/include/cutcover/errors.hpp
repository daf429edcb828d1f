#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cutcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class GroundSetTooLarge : public Error {
 public:
  GroundSetTooLarge(std::size_t n, std::size_t limit)
      : Error("ground set of " + std::to_string(n) +
              " vertices exceeds the enumeration limit of " +
              std::to_string(limit)),
        n_(n), limit_(limit) {}
  std::size_t n() const { return n_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

/// A family member that no available link covers. `set_bits` is the
/// member's bit pattern.
class Infeasible : public Error {
 public:
  explicit Infeasible(unsigned long long set_bits)
      : Error("set " + std::to_string(set_bits) + " is covered by no link"),
        set_bits_(set_bits) {}
  unsigned long long set_bits() const { return set_bits_; }

 private:
  unsigned long long set_bits_;
};

class NotLaminar : public Error {
 public:
  using Error::Error;
};

class WitnessSearchExhausted : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class TooManyLinks : public Error {
 public:
  TooManyLinks(std::size_t links, std::size_t limit)
      : Error(std::to_string(links) + " links exceed the exact-search limit of " +
              std::to_string(limit)) {}
};

class ZeroOptimumViolation : public Error {
 public:
  using Error::Error;
};

class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace cutcover
