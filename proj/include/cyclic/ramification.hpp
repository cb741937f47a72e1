#pragma once

// Riemann–Hurwitz bookkeeping for cyclic covers.
//
// Everything here is integer arithmetic on ramification data: signatures of
// tame covers, orders of higher ramification groups at wild points, and the
// divisor bookkeeping that constrains Kummer branch loci. No group or function
// field objects are built.

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclic/arith.hpp"

namespace cyclic {

using Genus = Int;

/// Ramification type (g0; e1, ..., en) of a cyclic cover. Indices are kept
/// sorted so that equality is multiset equality.
class Signature {
 public:
  Signature() = default;
  Signature(Int g0, std::vector<Int> indices);

  Int g0() const noexcept { return g0_; }
  const std::vector<Int>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }

  /// "(0; 2, 2, 3, 3)"
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  Int g0_ = 0;
  std::vector<Int> indices_;
};

/// Orders o_i = |G_P^(i)| of the ramification filtration at one point.
/// Trailing 1s are dropped, so the empty list is the trivial stabilizer.
class FiltrationProfile {
 public:
  /// Throws InvalidFiltration unless the orders are compatible with the
  /// structure of a point stabilizer in characteristic p.
  FiltrationProfile(Int p, std::vector<Int> orders);

  Int characteristic() const noexcept { return p_; }
  const std::vector<Int>& orders() const noexcept { return orders_; }

  /// o_i, with o_i = 1 past the stored range.
  Int order(std::size_t i) const noexcept {
    return i < orders_.size() ? orders_[i] : 1;
  }
  Int stabilizer_order() const noexcept { return order(0); }
  bool is_tame() const noexcept { return order(1) == 1; }

  /// Indices i >= 1 with o_i > o_{i+1}.
  std::vector<std::size_t> jumps() const;

  friend bool operator==(const FiltrationProfile&,
                         const FiltrationProfile&) = default;

 private:
  Int p_;
  std::vector<Int> orders_;
};

/// Checks the filtration invariants without constructing a profile. Throws
/// InvalidFiltration naming the first violated condition.
void validate_filtration(Int p, std::span<const Int> orders);

/// A short orbit: `orbit_size` points sharing the same filtration.
struct OrbitDatum {
  FiltrationProfile filtration;
  Int orbit_size;

  friend bool operator==(const OrbitDatum&, const OrbitDatum&) = default;
};

/// Sum over i >= 0 of (o_i - 1).
Int different_exponent(const FiltrationProfile& profile);

/// Genus g with 2g - 2 = N(2g0 - 2) + sum (N/e_i)(e_i - 1). The quotient genus
/// is taken from `sig`. Throws NotADivisor if some e_i does not divide N and
/// Inconsistent on odd parity or negative genus.
Genus rh_genus_tame(Int group_order, const Signature& sig);

/// Same with an explicit quotient genus; `sig.g0()` must agree.
Genus rh_genus_tame(Int group_order, Int g0, const Signature& sig);

/// Hurwitz formula with wild contributions:
/// 2g - 2 = N(2g0 - 2) + sum orbit_size * d_P.
Genus rh_genus_wild(Int group_order, Int g0, std::span<const OrbitDatum> orbits);

/// A point with stabilizer order e_P lies over a branch point of
/// X/H -> X/G (|H| = d) iff e_P does not divide d.
bool quotient_is_branched(Int group_order, Int e_p, Int d);

/// Divisor bookkeeping for y^N = alpha: accepts the (point, ord) data iff the
/// degree is zero and the number of branch points (N does not divide ord) is
/// not exactly one. Repeated point ids are summed.
bool kummer_branch_valid(Int n,
                         std::span<const std::pair<std::string, Int>> ords);

/// Number of points whose ord is not a multiple of n, after merging ids.
std::size_t kummer_branch_count(
    Int n, std::span<const std::pair<std::string, Int>> ords);

}  // namespace cyclic
