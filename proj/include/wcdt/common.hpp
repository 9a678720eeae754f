#pragma once
// Shared error types and small utilities used across the library.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wcdt {

inline constexpr double kPi = 3.14159265358979323846;

// Error hierarchy. Every module throws one of these; the CLI maps
// ValidationError-family to exit 1 and the rest to exit 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SpecError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct TrackTooShort : Error { using Error::Error; };
struct InvalidState : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct NonFiniteGradient : Error { using Error::Error; };
struct EmptyOverlap : Error { using Error::Error; };
struct BinError : Error { using Error::Error; };
struct NoMap : Error { using Error::Error; };
struct NoHistory : Error { using Error::Error; };
struct AllMasked : Error { using Error::Error; };

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

// FNV-1a 64-bit. Used for id-based dataset splits and config hashes.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  return fnv1a(s.data(), s.size(), h);
}

inline std::string hex64(std::uint64_t v) {
  static const char* d = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = d[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace wcdt
