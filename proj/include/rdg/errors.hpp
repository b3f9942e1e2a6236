#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdg {

// Bad arguments: dimension mismatch, out-of-range vertex, non-positive distance, ...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested configuration exceeds what a sampler is willing to handle.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A count does not fit in 64 bits.
class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw CountOverflow("count exceeds 64-bit range");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw CountOverflow("count exceeds 64-bit range");
  return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

}  // namespace detail
}  // namespace rdg
