#pragma once

// The curve families admitting a cyclic automorphism group of order
// N >= 2g + 1, with their genus formulas, branch data and a generator of the
// cyclic group.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclic/arith.hpp"
#include "cyclic/ramification.hpp"

namespace cyclic {

/// (N, r, s) with r, s >= 1, r + s <= N - 1 and gcd(r, s, N) = 1; the curve
/// y^N = x^r (1 - x)^s.
class PrimitivePair {
 public:
  /// Throws NotPrimitive when the range or gcd conditions fail.
  PrimitivePair(Int n, Int r, Int s);

  Int n() const noexcept { return n_; }
  Int r() const noexcept { return r_; }
  Int s() const noexcept { return s_; }
  /// Exponent at infinity, -(r + s) mod N, in [1, N - 1].
  Int t() const noexcept { return n_ - r_ - s_; }

  static bool is_primitive(Int n, Int r, Int s) noexcept;

  friend bool operator==(const PrimitivePair&, const PrimitivePair&) = default;
  friend auto operator<=>(const PrimitivePair&, const PrimitivePair&) = default;

 private:
  Int n_, r_, s_;
};

/// A curve parameter: either a named symbol (classification templates) or a
/// concrete element of F_p[t], stored as coefficients with the constant term
/// first. Concrete values are reduced only once a field is chosen.
class Param {
 public:
  Param() = default;
  static Param symbol(std::string name);
  static Param integer(Int value);
  static Param polynomial(std::vector<Int> coeffs);

  /// Integer ("3", "-1") or polynomial in t without commas ("t^2+3t+1").
  static Param parse(std::string_view text);

  bool is_symbolic() const noexcept { return !name_.empty(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  /// Literal zero / one as written, before any reduction.
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Param&, const Param&) = default;

 private:
  std::string name_;
  std::vector<Int> coeffs_;
};

/// y^N = x^r (1 - x)^s.
class KummerModel {
 public:
  explicit KummerModel(PrimitivePair pair);
  const PrimitivePair& pair() const noexcept { return pair_; }
  friend bool operator==(const KummerModel&, const KummerModel&) = default;

 private:
  PrimitivePair pair_;
};

/// y^2 = (x^(g+1) - 1)(x^(g+1) - lambda), g even.
class HyperellipticModel {
 public:
  HyperellipticModel(Int genus, Param lambda);
  Int genus() const noexcept { return genus_; }
  const Param& lambda() const noexcept { return lambda_; }
  friend bool operator==(const HyperellipticModel&,
                         const HyperellipticModel&) = default;

 private:
  Int genus_;
  Param lambda_;
};

/// y^p - y = a (x^m - b) in characteristic p.
class ASPowerModel {
 public:
  ASPowerModel(Int p, Int m, Param a, Param b);
  Int p() const noexcept { return p_; }
  Int m() const noexcept { return m_; }
  const Param& a() const noexcept { return a_; }
  const Param& b() const noexcept { return b_; }
  friend bool operator==(const ASPowerModel&, const ASPowerModel&) = default;

 private:
  Int p_, m_;
  Param a_, b_;
};

/// b y^p + c y = a x + 1/x in characteristic p.
class ASRationalModel {
 public:
  ASRationalModel(Int p, Param a, Param b, Param c);
  Int p() const noexcept { return p_; }
  const Param& a() const noexcept { return a_; }
  const Param& b() const noexcept { return b_; }
  const Param& c() const noexcept { return c_; }
  friend bool operator==(const ASRationalModel&,
                         const ASRationalModel&) = default;

 private:
  Int p_;
  Param a_, b_, c_;
};

/// y^p - y = x^2 in characteristic p, acted on by a group of order p.
class HommaModel {
 public:
  explicit HommaModel(Int p);
  Int p() const noexcept { return p_; }
  friend bool operator==(const HommaModel&, const HommaModel&) = default;

 private:
  Int p_;
};

using CurveModel = std::variant<KummerModel, HyperellipticModel, ASPowerModel,
                                ASRationalModel, HommaModel>;

/// "kummer:5,1,1", "hyper:2,3", "aspower:5,2,1,0", "asrational:5,1,1,1",
/// "homma:5". Throws InvalidArgument on malformed text and the constructor
/// errors on inadmissible parameters.
CurveModel parse_model(std::string_view spec);
std::string to_string(const CurveModel& model);

/// Short family tag: "kummer", "hyper", ...
std::string_view family_name(const CurveModel& model);

/// Order of the cyclic group attached to the model's family.
Int cyclic_order(const CurveModel& model);

/// Characteristic the model is defined in, for the Artin–Schreier families.
std::optional<Int> required_characteristic(const CurveModel& model);

/// (N + 2 - gcd(N,r) - gcd(N,s) - gcd(N,r+s)) / 2.
Genus kummer_genus(Int n, Int r, Int s);
Genus kummer_genus(const PrimitivePair& pair);

/// (0; N/gcd(N,r), N/gcd(N,s), N/gcd(N,r+s)).
Signature kummer_signature(Int n, Int r, Int s);
Signature kummer_signature(const PrimitivePair& pair);

Genus genus(const CurveModel& model);

enum class ActionKind {
  Identity,        // (x, y) -> (x, y)
  ScaleY,          // (x, y) -> (x, zeta_N y)
  ScaleXNegateY,   // (x, y) -> (zeta_{g+1} x, -y)
  ScaleXShiftY,    // (x, y) -> (zeta_m x, y + 1)
  InvertXShiftY,   // (x, y) -> (1/(a x), y + gamma), b gamma^p + c gamma = 0
  ShiftY,          // (x, y) -> (x, y + 1)
};

/// Generator of the cyclic group, with its root of unity kept symbolic. The
/// concrete zeta (or gamma) is chosen only when a finite field is fixed.
struct AutomorphismDescriptor {
  Int order = 1;
  ActionKind action = ActionKind::Identity;
  /// Multiplicative order of the zeta symbol, 0 when the map has none.
  Int zeta_order = 0;

  std::string formula() const;

  friend bool operator==(const AutomorphismDescriptor&,
                         const AutomorphismDescriptor&) = default;
};

AutomorphismDescriptor identity_descriptor();
AutomorphismDescriptor generator(const CurveModel& model);

}  // namespace cyclic
