#include "cyclic/ramification.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

bool is_power_of(Int value, Int p) {
  if (value < 1) return false;
  while (value % p == 0) value /= p;
  return value == 1;
}

[[noreturn]] void bad_filtration(const std::string& why) {
  throw Error(ErrorKind::InvalidFiltration, "invalid filtration: " + why);
}

Int check_group_order(Int n) {
  if (n < 1 || n > kMaxGroupOrder)
    throw Error(ErrorKind::InvalidArgument,
                "group order must lie in [1, 2^32], got " + std::to_string(n));
  return n;
}

// 2g - 2 = rhs  ->  g, or Inconsistent.
Genus genus_from_rhs(Int rhs) {
  if (rhs % 2 != 0)
    throw Error(ErrorKind::Inconsistent,
                "2g - 2 = " + std::to_string(rhs) + " is odd");
  Int g = checked_add(rhs, 2) / 2;
  if (g < 0)
    throw Error(ErrorKind::Inconsistent,
                "2g - 2 = " + std::to_string(rhs) + " gives negative genus");
  return g;
}

std::vector<Int> normalized(std::vector<Int> orders) {
  while (!orders.empty() && orders.back() == 1) orders.pop_back();
  return orders;
}

}  // namespace

Signature::Signature(Int g0, std::vector<Int> indices)
    : g0_(g0), indices_(std::move(indices)) {
  if (g0_ < 0)
    throw Error(ErrorKind::InvalidArgument, "quotient genus must be >= 0");
  for (Int e : indices_)
    if (e < 2)
      throw Error(ErrorKind::InvalidArgument,
                  "ramification index must be >= 2, got " + std::to_string(e));
  std::sort(indices_.begin(), indices_.end());
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << '(' << g0_ << ';';
  for (std::size_t i = 0; i < indices_.size(); ++i)
    os << (i == 0 ? " " : ", ") << indices_[i];
  os << ')';
  return os.str();
}

void validate_filtration(Int p, std::span<const Int> raw) {
  if (p < 3 || !is_prime(p))
    bad_filtration("characteristic must be an odd prime, got " +
                   std::to_string(p));
  auto orders = normalized({raw.begin(), raw.end()});
  auto at = [&](std::size_t i) -> Int {
    return i < orders.size() ? orders[i] : 1;
  };
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) bad_filtration("orders must be positive");
    if (i > 0 && orders[i] > orders[i - 1])
      bad_filtration("orders must be non-increasing");
  }
  // G^(1) is the Sylow p-subgroup of G^(0), with cyclic p'-complement.
  if (!is_power_of(at(1), p))
    bad_filtration("|G^(1)| = " + std::to_string(at(1)) +
                   " is not a power of p");
  if (at(0) % at(1) != 0)
    bad_filtration("|G^(1)| does not divide |G^(0)|");
  if ((at(0) / at(1)) % p == 0)
    bad_filtration("|G^(0)|/|G^(1)| is divisible by p");
  for (std::size_t i = 1; i < orders.size(); ++i) {
    if (at(i) % at(i + 1) != 0 || !is_power_of(at(i) / at(i + 1), p))
      bad_filtration("quotient at level " + std::to_string(i) +
                     " is not a p-group");
  }
  std::vector<std::size_t> jumps;
  for (std::size_t i = 1; i < orders.size(); ++i)
    if (at(i) > at(i + 1)) jumps.push_back(i);
  for (std::size_t j : jumps)
    if ((j - jumps.front()) % static_cast<std::size_t>(p) != 0)
      bad_filtration("jumps " + std::to_string(jumps.front()) + " and " +
                     std::to_string(j) + " are not congruent mod p");
}

FiltrationProfile::FiltrationProfile(Int p, std::vector<Int> orders)
    : p_(p), orders_(normalized(std::move(orders))) {
  validate_filtration(p_, orders_);
}

std::vector<std::size_t> FiltrationProfile::jumps() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < orders_.size(); ++i)
    if (order(i) > order(i + 1)) out.push_back(i);
  return out;
}

Int different_exponent(const FiltrationProfile& profile) {
  Int d = 0;
  for (Int o : profile.orders()) d = checked_add(d, o - 1);
  return d;
}

Genus rh_genus_tame(Int group_order, const Signature& sig) {
  Int n = check_group_order(group_order);
  Int rhs = checked_mul(n, checked_sub(checked_mul(2, sig.g0()), 2));
  for (Int e : sig.indices()) {
    if (n % e != 0)
      throw Error(ErrorKind::NotADivisor, "ramification index " +
                                              std::to_string(e) +
                                              " does not divide " +
                                              std::to_string(n));
    rhs = checked_add(rhs, checked_mul(n / e, e - 1));
  }
  return genus_from_rhs(rhs);
}

Genus rh_genus_tame(Int group_order, Int g0, const Signature& sig) {
  if (g0 != sig.g0())
    throw Error(ErrorKind::InvalidArgument,
                "quotient genus disagrees with the signature");
  return rh_genus_tame(group_order, sig);
}

Genus rh_genus_wild(Int group_order, Int g0,
                    std::span<const OrbitDatum> orbits) {
  Int n = check_group_order(group_order);
  if (g0 < 0)
    throw Error(ErrorKind::InvalidArgument, "quotient genus must be >= 0");
  Int rhs = checked_mul(n, checked_sub(checked_mul(2, g0), 2));
  for (const auto& orbit : orbits) {
    if (orbit.orbit_size < 1 ||
        checked_mul(orbit.orbit_size, orbit.filtration.stabilizer_order()) != n)
      throw Error(ErrorKind::PreconditionViolated,
                  "orbit size times stabilizer order must equal " +
                      std::to_string(n));
    rhs = checked_add(
        rhs, checked_mul(orbit.orbit_size, different_exponent(orbit.filtration)));
  }
  return genus_from_rhs(rhs);
}

bool quotient_is_branched(Int group_order, Int e_p, Int d) {
  Int n = check_group_order(group_order);
  if (e_p < 1 || n % e_p != 0)
    throw Error(ErrorKind::NotADivisor,
                "e_P = " + std::to_string(e_p) + " does not divide N");
  if (d < 1 || n % d != 0)
    throw Error(ErrorKind::NotADivisor,
                "d = " + std::to_string(d) + " does not divide N");
  return d % e_p != 0;
}

std::size_t kummer_branch_count(
    Int n, std::span<const std::pair<std::string, Int>> ords) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  std::map<std::string, Int> merged;
  for (const auto& [point, ord] : ords)
    merged[point] = checked_add(merged[point], ord);
  return static_cast<std::size_t>(
      std::count_if(merged.begin(), merged.end(),
                    [n](const auto& kv) { return kv.second % n != 0; }));
}

bool kummer_branch_valid(Int n,
                         std::span<const std::pair<std::string, Int>> ords) {
  Int degree = 0;
  for (const auto& entry : ords) degree = checked_add(degree, entry.second);
  return degree == 0 && kummer_branch_count(n, ords) != 1;
}

}  // namespace cyclic
