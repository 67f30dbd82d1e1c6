#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtw {

/// Error thrown when an operation's mathematical preconditions are violated
/// (bad modulus, inconsistent data, out-of-domain arguments, ...).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Error thrown when a computation would exceed the configured size budget.
struct SizeGuardError : Error {
  using Error::Error;
};

inline long long mod_positive(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

/// 64-bit mixing function (splitmix64 finalizer), used by the hash maps.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace qtw
