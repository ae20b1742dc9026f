#include "common.hpp"

namespace weylkit {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidPairing: return "InvalidPairing";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::UnrecognizedType: return "UnrecognizedType";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::SearchTooLarge: return "SearchTooLarge";
    case Errc::CoprimalityViolation: return "CoprimalityViolation";
    case Errc::NonAbelianComponentGroup: return "NonAbelianComponentGroup";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::NoUniqueExtremum: return "NoUniqueExtremum";
    case Errc::NotComposable: return "NotComposable";
    case Errc::ProductNotBlock: return "ProductNotBlock";
    case Errc::CompatibilityFailure: return "CompatibilityFailure";
    case Errc::TauNotDatumAutomorphism: return "TauNotDatumAutomorphism";
    case Errc::QNotPrimePower: return "QNotPrimePower";
    case Errc::SingularFixedLocus: return "SingularFixedLocus";
    case Errc::NotStableClass: return "NotStableClass";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::InjectivityFailure: return "InjectivityFailure";
    case Errc::BijectionFailure: return "BijectionFailure";
    case Errc::DivisionFailure: return "DivisionFailure";
    case Errc::NotReflectionSubgroup: return "NotReflectionSubgroup";
    case Errc::ZeroDeterminant: return "ZeroDeterminant";
    case Errc::BasisNotSteinberg: return "BasisNotSteinberg";
    case Errc::EndpointMismatch: return "EndpointMismatch";
    case Errc::SideFreenessFailure: return "SideFreenessFailure";
    case Errc::GraphCheckFailure: return "GraphCheckFailure";
    case Errc::ValidationFailure: return "ValidationFailure";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

i64 mod_inverse(i64 a, i64 m) {
  a = mod_pos(a, m);
  i64 t = 0, new_t = 1, r = m, new_r = a;
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(Errc::InvalidArgument, "mod_inverse: arguments not coprime");
  return mod_pos(t, m);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power_decompose(i64 q, i64& p, i64& e) {
  if (q < 2) return false;
  for (i64 d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      e = 0;
      while (q % d == 0) { q /= d; ++e; }
      return q == 1;
    }
  }
  p = q;
  e = 1;
  return true;
}

Frac parse_frac(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Frac(std::stoll(text), 1);
    return Frac(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    fail(Errc::InvalidArgument, "cannot parse fraction '" + text + "'");
  }
}

}  // namespace weylkit
