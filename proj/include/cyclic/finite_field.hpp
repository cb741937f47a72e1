#pragma once

// Finite fields F_{p^k}, p odd, as F_p[t]/(f) for a monic irreducible f.
//
// Elements are the integers sum c_i p^i (0 <= c_i < p) encoding the residue
// sum c_i t^i, so F_p sits inside as 0..p-1 and every element fits in 32 bits.

#include <cstdint>
#include <vector>

#include "cyclic/arith.hpp"

namespace cyclic {

/// Fields with more elements than this are rejected.
inline constexpr Int kMaxFieldOrder = Int{1} << 31;

/// p, k and the modulus (constant term first, monic, degree k).
struct FieldSpec {
  Int p = 0;
  unsigned k = 1;
  std::vector<Int> modulus;

  Int order() const { return checked_pow(p, k); }

  /// Least monic irreducible of degree k, comparing coefficient vectors from
  /// the t^(k-1) coefficient down. For k = 1 this is t.
  static FieldSpec least(Int p, unsigned k);
  /// q must be a power of an odd prime.
  static FieldSpec from_order(Int q);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace poly {
// Dense polynomials over F_p, constant term first, no trailing zeros.
using Poly = std::vector<Int>;

void trim(Poly& a);
Poly mod(Poly a, const Poly& f, Int p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, Int p);
Poly pow_mod(Poly base, std::uint64_t exp, const Poly& f, Int p);
Poly gcd(Poly a, Poly b, Int p);
/// Rabin's test.
bool is_irreducible(const Poly& f, Int p);
}  // namespace poly

class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Throws PreconditionViolated if the modulus is not irreducible or p is not
  /// an odd prime, FieldTooLarge if q > 2^31.
  explicit FiniteField(FieldSpec spec);

  static FiniteField of_order(Int q) { return FiniteField(FieldSpec::from_order(q)); }

  const FieldSpec& spec() const noexcept { return spec_; }
  Int characteristic() const noexcept { return spec_.p; }
  unsigned degree() const noexcept { return spec_.k; }
  Int order() const noexcept { return q_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  /// Image of an integer in the prime field.
  Element from_int(Int value) const;
  /// Residue of sum c_i t^i modulo the field modulus.
  Element from_poly(const std::vector<Int>& coeffs) const;
  std::vector<Int> coeffs(Element a) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Throws InvalidArgument on zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  /// Absolute trace to F_p, in [0, p).
  Int trace(Element a) const;

  /// Smallest generator of the multiplicative group.
  Element primitive_element() const noexcept { return generator_; }
  /// primitive_element()^((q-1)/n); requires n | q - 1.
  Element root_of_unity(Int n) const;
  /// Multiplicative order of a nonzero element.
  Int multiplicative_order(Element a) const;

 private:
  Element mul_slow(Element a, Element b) const;
  Element pow_slow(Element a, std::uint64_t e) const;
  poly::Poly to_poly(Element a) const;
  Element from_reduced(const poly::Poly& a) const;

  FieldSpec spec_;
  Int q_;
  Element generator_ = 1;
  std::vector<Int> basis_traces_;
  // Discrete log tables, present when q is small enough.
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

/// Maps a subfield F_{p^k} into F_{p^{kj}} by sending t to a root of the
/// subfield modulus (the least such root, for reproducibility).
class FieldEmbedding {
 public:
  FieldEmbedding(const FiniteField& small, const FiniteField& big);

  FiniteField::Element operator()(FiniteField::Element a) const;

 private:
  const FiniteField& small_;
  const FiniteField& big_;
  std::vector<FiniteField::Element> powers_;  // theta^i, i < k_small
};

}  // namespace cyclic
