#include "cyclic/arith.hpp"

#include <numeric>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFiltration: return "InvalidFiltration";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DegenerateModel: return "DegenerateModel";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::BadGenus: return "BadGenus";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::InsufficientCounts: return "InsufficientCounts";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorKind::Overflow, std::string("integer overflow in ") + op);
}
}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

Int checked_pow(Int base, unsigned exp) {
  Int result = 1;
  for (unsigned i = 0; i < exp; ++i) result = checked_mul(result, base);
  return result;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  Int r = checked_mul(a / g, b);
  return r < 0 ? -r : r;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<Int, unsigned>> prime_power(Int n) {
  if (n < 2) return std::nullopt;
  auto primes = prime_factors(n);
  if (primes.size() != 1) return std::nullopt;
  unsigned k = 0;
  while (n > 1) {
    n /= primes.front();
    ++k;
  }
  return std::make_pair(primes.front(), k);
}

}  // namespace cyclic
