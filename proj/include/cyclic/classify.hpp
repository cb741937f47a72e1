#pragma once

// Classification of curves of genus g >= 2 with a cyclic automorphism group
// of order N >= 2g + 1, in characteristic 0 or an odd prime p, together with
// the enumerators that feed it.

#include <iterator>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclic/families.hpp"
#include "cyclic/ramification.hpp"

namespace cyclic {

enum class Branch {
  Kummer,         // I   y^N = x^r (1 - x)^s
  Hyperelliptic,  // I   y^2 = (x^(N/2) - 1)(x^(N/2) - lambda)
  ASPower,        // II  y^p - y = a (x^m - b)
  ASRational,     // II  b y^p + c y = a x + 1/x
  Homma,          // III y^p - y = x^2
};

std::string_view to_string(Branch branch);

/// Short orbits of a wild action, as (orbit size, filtration) data.
struct WildOrbits {
  std::vector<OrbitDatum> orbits;
  friend bool operator==(const WildOrbits&, const WildOrbits&) = default;
};

using RamificationData = std::variant<Signature, WildOrbits>;

struct ClassificationEntry {
  Int n = 0;
  Branch branch = Branch::Kummer;
  CurveModel model_template;
  Genus genus = 0;
  RamificationData ramification;
  bool wild = false;
  /// Kummer entries only: the primitive pairs of genus g represented by this
  /// entry (the whole orbit when grouped, the single pair in raw mode).
  std::vector<PrimitivePair> pairs;
};

struct ClassifyQuery {
  Int p = 0;
  Genus g = 2;
  std::optional<Int> n;
  bool raw_pairs = false;
};

/// All classification rows matching (p, g), sorted by (N, branch, pair).
/// Throws UnsupportedCharacteristic for p = 2 (or p not 0 / an odd prime) and
/// BadGenus for g < 2.
std::vector<ClassificationEntry> classify(const ClassifyQuery& query);
std::vector<ClassificationEntry> classify(Int p, Genus g);

/// Largest N examined: 4g + 4 for odd p, 4g + 2 for p = 0.
Int classification_ceiling(Int p, Genus g);

/// Lazily enumerates the primitive pairs of A_N in lexicographic order.
class PrimitivePairRange {
 public:
  explicit PrimitivePairRange(Int n);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PrimitivePair;
    using difference_type = std::ptrdiff_t;
    using pointer = const PrimitivePair*;
    using reference = PrimitivePair;

    iterator() = default;
    iterator(Int n, Int r, Int s) : n_(n), r_(r), s_(s) { settle(); }

    PrimitivePair operator*() const { return PrimitivePair(n_, r_, s_); }
    iterator& operator++() {
      step();
      settle();
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.r_ == b.r_ && a.s_ == b.s_;
    }

   private:
    void step();
    void settle();
    Int n_ = 0, r_ = 0, s_ = 0;
  };

  iterator begin() const { return iterator(n_, 1, 1); }
  iterator end() const { return iterator(n_, n_ - 1, 1); }

 private:
  Int n_;
};

/// Requires N >= 3 (InvalidArgument otherwise).
PrimitivePairRange primitive_pairs(Int n);
std::vector<PrimitivePair> primitive_pair_list(Int n);

/// Orbit of (r, s) under swapping, unit scaling mod N and permutations of the
/// exponent triple (r, s, -r-s), restricted to A_N. Sorted.
std::vector<PrimitivePair> pair_orbit(const PrimitivePair& pair);

/// Lexicographically least element of `pair_orbit`.
PrimitivePair canonical_pair(const PrimitivePair& pair);
PrimitivePair canonical_pair(Int n, Int r, Int s);

/// Tame signatures (g0; e1..en) with e_i | N, e_i >= 2, genus g by
/// Riemann–Hurwitz, n >= 2 (n >= 3 if g0 = 0), lcm = N when g0 = 0, and lcm
/// stable under deleting any single index. Sorted.
std::vector<Signature> enumerate_signatures(Int n, Genus g);

struct SasakiReport {
  Int n_max = 0;
  Int pairs_checked = 0;
  Int violations = 0;
  /// Pairs attaining N = 2g + 1.
  Int equality_cases = 0;
};

/// Checks N >= 2 kummer_genus + 1 over every primitive pair with N <= n_max.
SasakiReport verify_sasaki_bound(Int n_max);

}  // namespace cyclic
