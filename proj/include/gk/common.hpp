#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gk {

// Exact integer range of the build: signed 128 bit.
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string_i128(i128 v);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the exact-integer or certified-primality range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration or size cap was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

// Two internal routes disagreed; signals a broken upstream computation.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

inline void check(bool cond, const char* what) {
  if (!cond) throw InconsistencyError(what);
}

// Default caps. Callers can override per call; the CLI wires --cap / GK_CAP.
inline constexpr std::uint64_t kDefaultEnumCap = 2'000'000;
inline constexpr std::uint64_t kDefaultFieldCap = 1u << 20;
inline constexpr std::uint64_t kDefaultPairwiseCap = 20'000;

}  // namespace gk
