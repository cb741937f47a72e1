#pragma once

// Independent checks of the genus formulas and generator maps by counting
// rational places over finite fields.
//
// Counts are those of the smooth model: affine points where the plane model
// is nonsingular, plus the places over the branch points and infinity read off
// from ramification data. Preconditions on the field (N | q - 1 for Kummer
// curves, m | q - 1 for y^p - y = a(x^m - b)) make those places rational.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cyclic/families.hpp"
#include "cyclic/finite_field.hpp"

namespace cyclic {

/// Largest field the double-loop counter accepts.
inline constexpr Int kNaiveCountLimit = 10'000;
/// Default cap on q^depth for a place-count series.
inline constexpr Int kDefaultSeriesLimit = 1'000'000'000;

/// Rational places of the smooth model over `field`, via character sums.
/// Parameters are read in `param_field` (a subfield of `field`) and embedded.
/// Throws PreconditionViolated when the field does not satisfy the model's
/// requirements, Inconsistent if the count breaks the Hasse–Weil bound.
Int count_places(const CurveModel& model, const FiniteField& field);
Int count_places(const CurveModel& model, const FiniteField& field,
                 const FiniteField& param_field);

/// Same count by looping over all (x, y) in F_q^2. Throws FieldTooLarge when
/// q > kNaiveCountLimit.
Int count_places_naive(const CurveModel& model, const FiniteField& field);
Int count_places_naive(const CurveModel& model, const FiniteField& field,
                       const FiniteField& param_field);

/// |N - (q^j + 1)| <= 2 g q^(j/2), evaluated exactly.
bool within_hasse_weil(Int count, Int q_power, Genus g);

struct PlaceCountSeries {
  CurveModel model;
  FieldSpec base;
  /// counts[j-1] = places over F_{q^j}.
  std::vector<Int> counts;
};

/// Counts over F_q, F_{q^2}, ..., F_{q^depth}. Throws FieldTooLarge if
/// q^depth exceeds `max_field`.
PlaceCountSeries place_count_series(const CurveModel& model,
                                    const FieldSpec& base, unsigned depth,
                                    Int max_field = kDefaultSeriesLimit);

struct ZetaFit {
  Genus genus = 0;
  /// L(T) = 1 + c_1 T + ... + q^g T^(2g), coefficients c_0..c_{2g}.
  std::vector<Int> l_polynomial;
};

/// Smallest g <= g_max whose Weil polynomial, rebuilt from the first g counts
/// by Newton's identities and the functional equation, reproduces every
/// supplied count exactly. nullopt means no g <= g_max fits. Throws
/// InsufficientCounts with fewer than 2 g_max counts.
std::optional<ZetaFit> zeta_genus(const PlaceCountSeries& series, Genus g_max);
std::optional<ZetaFit> zeta_genus(Int q, const std::vector<Int>& counts,
                                  Genus g_max);

using AffinePoint = std::pair<FiniteField::Element, FiniteField::Element>;

struct AutomorphismBinding {
  /// Override for the primitive root of unity; default is the field's
  /// primitive_element()^((q-1)/n).
  std::optional<FiniteField::Element> zeta;
  /// Override for the translation gamma of the b y^p + c y family; default is
  /// the least nonzero root of b Y^p + c Y.
  std::optional<FiniteField::Element> gamma;
};

struct OrbitReport {
  Int expected_order = 0;
  Int order = 0;
  Int affine_points = 0;
  std::vector<AffinePoint> fixed_points;
  /// orbit size -> number of orbits of that size
  std::map<Int, Int> orbit_sizes;
  /// Fixed set matches the family's prediction (Kummer: exactly the points
  /// over x in {0, 1}; identity: everything; other generators: none).
  bool fixed_points_consistent = false;
  FiniteField::Element zeta = 0;
  FiniteField::Element gamma = 0;
};

/// All affine rational points of the plane model that the counters treat as
/// nonsingular, plus the Kummer points (0, 0) and (1, 0).
std::vector<AffinePoint> affine_points(const CurveModel& model,
                                       const FiniteField& field);

/// Applies the descriptor's map to the affine rational points. Throws
/// NotAnAutomorphism if an image leaves the curve, OrderMismatch if the
/// permutation order differs from descriptor.order, PreconditionViolated if
/// zeta / gamma cannot be bound in the field.
OrbitReport verify_automorphism(const CurveModel& model,
                                const FiniteField& field,
                                const AutomorphismDescriptor& descriptor,
                                const AutomorphismBinding& binding = {});

}  // namespace cyclic
