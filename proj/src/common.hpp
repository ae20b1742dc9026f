#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

// Error codes shared across the library. The "bug signal" codes mark
// violations of statements that are theorems for valid inputs; hitting one
// means either the input datum is corrupt or the implementation is wrong.
enum class Errc {
  InvalidArgument,
  InvalidPairing,
  NotFiniteType,
  UnrecognizedType,
  GroupTooLarge,
  SearchTooLarge,
  CoprimalityViolation,
  NonAbelianComponentGroup,
  BoundViolated,
  NoUniqueExtremum,
  NotComposable,
  ProductNotBlock,
  CompatibilityFailure,
  TauNotDatumAutomorphism,
  QNotPrimePower,
  SingularFixedLocus,
  NotStableClass,
  CountMismatch,
  InjectivityFailure,
  BijectionFailure,
  DivisionFailure,
  NotReflectionSubgroup,
  ZeroDeterminant,
  BasisNotSteinberg,
  EndpointMismatch,
  SideFreenessFailure,
  GraphCheckFailure,
  ValidationFailure,
  IoError,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

using i64 = std::int64_t;

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
inline i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_i64(a, b) * b;
}

// a mod m normalized to [0, m)
inline i64 mod_pos(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mod_inverse(i64 a, i64 m);  // requires gcd(a, m) = 1

bool is_prime(i64 n);
// Writes p, e with q = p^e; false if q is not a prime power >= 2.
bool prime_power_decompose(i64 q, i64& p, i64& e);

// Reduced fraction in [0, 1): a torsion element of Q/Z.
struct Frac {
  i64 num = 0;  // 0 <= num < den, gcd(num, den) = 1
  i64 den = 1;  // den >= 1

  Frac() = default;
  Frac(i64 n, i64 d) {
    if (d == 0) fail(Errc::InvalidArgument, "fraction with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    n = mod_pos(n, d);
    i64 g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  bool is_zero() const { return num == 0; }
  i64 order() const { return den; }

  friend Frac operator+(Frac a, Frac b) {
    i64 d = lcm_i64(a.den, b.den);
    return Frac(a.num * (d / a.den) + b.num * (d / b.den), d);
  }
  friend Frac operator-(Frac a, Frac b) {
    i64 d = lcm_i64(a.den, b.den);
    return Frac(a.num * (d / a.den) - b.num * (d / b.den), d);
  }
  friend Frac operator*(i64 k, Frac a) { return Frac(k * a.num, a.den); }
  friend bool operator==(const Frac& a, const Frac& b) = default;
  friend auto operator<=>(const Frac& a, const Frac& b) {
    // Order by value in [0, 1); exact via cross multiplication.
    return a.num * b.den <=> b.num * a.den;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

Frac parse_frac(const std::string& text);  // "a/n" or "a" (integer = 0 mod 1)

}  // namespace weylkit
