#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxwave {

/// Exact rational scalar used for all box coordinates and volumes.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;
using RatVec = std::vector<Rat>;
using Complex = std::complex<double>;

// Geometric tolerance for comparisons involving irrational data
// (cos 2pi/m, frame bases). Rational box arithmetic never uses it.
inline constexpr double kGeomTol = 1e-9;

// ---------------------------------------------------------------------------
// Error taxonomy
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInputError : Error { using Error::Error; };
struct UnsupportedFamilyError : Error { using Error::Error; };
struct NonFiniteGroupError : Error { using Error::Error; };
struct GenericityError : Error { using Error::Error; };
struct RankError : Error { using Error::Error; };
struct FrameMismatchError : Error { using Error::Error; };
struct IncompatibleLatticeError : Error { using Error::Error; };
struct UnsupportedTransformError : Error { using Error::Error; };
struct StraddleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct IncompletePlanError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/q" or "p". Throws InvalidInputError on garbage or q == 0.
inline Rat rat_from_string(const std::string& s) {
  auto bad = [&] { throw InvalidInputError("not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat();  // unreachable
}

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64): identical streams on every platform,
// independent of libstdc++ distribution internals.
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next_u64() % std::uint64_t(hi - lo + 1));
  }

  /// Derives an independent substream, e.g. one per Monte Carlo block.
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t block) {
    Rng r(seed ^ (0x8f462907 + block * 0x9e3779b97f4a7c15ULL));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace coxwave
