#include "cyclic/finite_field.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

constexpr Int kTableLimit = Int{1} << 23;

Int mod_p(Int a, Int p) {
  a %= p;
  return a < 0 ? a + p : a;
}

Int inv_mod_p(Int a, Int p) {
  // p prime: a^(p-2).
  Int result = 1, base = mod_p(a, p);
  for (Int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

}  // namespace

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mod(Poly a, const Poly& f, Int p) {
  for (auto& c : a) c = mod_p(c, p);
  trim(a);
  const std::size_t df = f.size() - 1;
  const Int lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > df) {
    Int factor = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = mod_p(a[shift + i] - factor * f[i], p);
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, Int p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return mod(std::move(prod), f, p);
}

Poly pow_mod(Poly base, std::uint64_t exp, const Poly& f, Int p) {
  Poly result = mod({1}, f, p);
  base = mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, Int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = mod(std::move(a), b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    Int lead_inv = inv_mod_p(a.back(), p);
    for (auto& c : a) c = c * lead_inv % p;
  }
  return a;
}

bool is_irreducible(const Poly& f, Int p) {
  if (f.size() < 2 || f.back() == 0) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // x^(p^i) mod f for i = 1..k
  std::vector<Poly> frob(k + 1);
  frob[0] = mod({0, 1}, f, p);
  for (std::size_t i = 1; i <= k; ++i)
    frob[i] = pow_mod(frob[i - 1], static_cast<std::uint64_t>(p), f, p);
  if (frob[k] != frob[0]) return false;
  for (Int r : prime_factors(static_cast<Int>(k))) {
    Poly diff = frob[k / static_cast<std::size_t>(r)];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = mod_p(diff[1] - 1, p);
    trim(diff);
    if (diff.empty()) return false;
    if (gcd(diff, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

FieldSpec FieldSpec::least(Int p, unsigned k) {
  if (p < 3 || !is_prime(p))
    throw Error(ErrorKind::PreconditionViolated,
                "field characteristic must be an odd prime, got " +
                    std::to_string(p));
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  Int q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q = checked_mul(q, p);
    if (q > kMaxFieldOrder)
      throw Error(ErrorKind::FieldTooLarge,
                  "field of order " + std::to_string(p) + "^" +
                      std::to_string(k) + " exceeds 2^31");
  }
  for (Int code = 0; code < q; ++code) {
    poly::Poly f(k + 1, 0);
    Int rest = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[k] = 1;
    if (poly::is_irreducible(f, p)) return FieldSpec{p, k, f};
  }
  throw Error(ErrorKind::Inconsistent, "no irreducible polynomial found");
}

FieldSpec FieldSpec::from_order(Int q) {
  if (q > kMaxFieldOrder)
    throw Error(ErrorKind::FieldTooLarge,
                "field order " + std::to_string(q) + " exceeds 2^31");
  auto pk = prime_power(q);
  if (!pk)
    throw Error(ErrorKind::PreconditionViolated,
                std::to_string(q) + " is not a prime power");
  if (pk->first == 2)
    throw Error(ErrorKind::PreconditionViolated,
                "characteristic 2 unsupported");
  return least(pk->first, pk->second);
}

FiniteField::FiniteField(FieldSpec spec) : spec_(std::move(spec)) {
  const Int p = spec_.p;
  if (p < 3 || !is_prime(p))
    throw Error(ErrorKind::PreconditionViolated,
                "field characteristic must be an odd prime");
  if (spec_.modulus.size() != spec_.k + 1 || spec_.modulus.back() != 1)
    throw Error(ErrorKind::PreconditionViolated,
                "modulus must be monic of degree k");
  q_ = 1;
  for (unsigned i = 0; i < spec_.k; ++i) {
    q_ = checked_mul(q_, p);
    if (q_ > kMaxFieldOrder)
      throw Error(ErrorKind::FieldTooLarge, "field order exceeds 2^31");
  }
  if (!poly::is_irreducible(spec_.modulus, p))
    throw Error(ErrorKind::PreconditionViolated, "modulus is not irreducible");

  // Least generator of F_q^*.
  const auto group_primes = prime_factors(q_ - 1);
  for (Element cand = 1; cand < q_; ++cand) {
    bool generates = true;
    for (Int l : group_primes)
      if (pow_slow(cand, static_cast<std::uint64_t>((q_ - 1) / l)) == 1) {
        generates = false;
        break;
      }
    if (generates) {
      generator_ = cand;
      break;
    }
  }

  basis_traces_.resize(spec_.k);
  for (unsigned i = 0; i < spec_.k; ++i) {
    poly::Poly basis(i + 1, 0);
    basis[i] = 1;
    Element e = from_reduced(poly::mod(basis, spec_.modulus, p));
    Element acc = 0, power = e;
    for (unsigned j = 0; j < spec_.k; ++j) {
      acc = add(acc, power);
      power = pow_slow(power, static_cast<std::uint64_t>(p));
    }
    basis_traces_[i] = static_cast<Int>(acc);  // lies in F_p
  }

  if (q_ <= kTableLimit) {
    exp_.resize(static_cast<std::size_t>(q_ - 1));
    log_.assign(static_cast<std::size_t>(q_), 0);
    Element x = 1;
    for (Int i = 0; i < q_ - 1; ++i) {
      exp_[static_cast<std::size_t>(i)] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, generator_);
    }
  }
}

poly::Poly FiniteField::to_poly(Element a) const {
  poly::Poly out;
  Int rest = a;
  while (rest > 0) {
    out.push_back(rest % spec_.p);
    rest /= spec_.p;
  }
  return out;
}

FiniteField::Element FiniteField::from_reduced(const poly::Poly& a) const {
  Int code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * spec_.p + a[i];
  return static_cast<Element>(code);
}

FiniteField::Element FiniteField::from_int(Int value) const {
  return static_cast<Element>(mod_p(value, spec_.p));
}

FiniteField::Element FiniteField::from_poly(const std::vector<Int>& coeffs) const {
  return from_reduced(poly::mod(coeffs, spec_.modulus, spec_.p));
}

std::vector<Int> FiniteField::coeffs(Element a) const {
  auto out = to_poly(a);
  out.resize(spec_.k, 0);
  return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  const Int p = spec_.p;
  if (spec_.k == 1) return static_cast<Element>((a + b) % p);
  Int result = 0, scale = 1;
  Int x = a, y = b;
  while (x > 0 || y > 0) {
    result += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return static_cast<Element>(result);
}

FiniteField::Element FiniteField::neg(Element a) const {
  const Int p = spec_.p;
  if (spec_.k == 1) return static_cast<Element>((p - a) % p);
  Int result = 0, scale = 1;
  for (Int x = a; x > 0; x /= p, scale *= p) result += ((p - x % p) % p) * scale;
  return static_cast<Element>(result);
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  return add(a, neg(b));
}

FiniteField::Element FiniteField::mul_slow(Element a, Element b) const {
  if (spec_.k == 1)
    return static_cast<Element>(static_cast<Int>(a) * b % spec_.p);
  // Schoolbook product on stack digits; k <= 19 since 3^20 > 2^31.
  const Int p = spec_.p;
  const std::size_t k = spec_.k;
  std::array<Int, 20> da{}, db{};
  std::array<Int, 40> prod{};
  for (std::size_t i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= static_cast<Element>(p);
    db[i] = b % p;
    b /= static_cast<Element>(p);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] += da[i] * db[j];
  }
  const auto& f = spec_.modulus;
  for (std::size_t d = 2 * k - 1; d-- > k;) {
    Int c = prod[d] % p;
    if (c == 0) continue;
    for (std::size_t i = 0; i < k; ++i) prod[d - k + i] -= c * f[i];
  }
  Int code = 0;
  for (std::size_t i = k; i-- > 0;) code = code * p + ((prod[i] % p) + p) % p;
  return static_cast<Element>(code);
}

FiniteField::Element FiniteField::pow_slow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e > 0) {
    if (e & 1) result = mul_slow(result, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return result;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (exp_.empty()) return mul_slow(a, b);
  std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
  const auto order = static_cast<std::uint64_t>(q_ - 1);
  if (s >= order) s -= order;
  return exp_[s];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  if (exp_.empty()) return pow_slow(a, static_cast<std::uint64_t>(q_ - 2));
  const auto order = static_cast<std::uint32_t>(q_ - 1);
  return exp_[(order - log_[a]) % order];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (exp_.empty()) return pow_slow(a, e);
  const auto order = static_cast<std::uint64_t>(q_ - 1);
  return exp_[(log_[a] % order) * (e % order) % order];
}

Int FiniteField::trace(Element a) const {
  const Int p = spec_.p;
  Int sum = 0;
  Int rest = a;
  for (unsigned i = 0; i < spec_.k && rest > 0; ++i, rest /= p)
    sum = (sum + (rest % p) * basis_traces_[i]) % p;
  return sum;
}

FiniteField::Element FiniteField::root_of_unity(Int n) const {
  if (n < 1 || (q_ - 1) % n != 0)
    throw Error(ErrorKind::PreconditionViolated,
                "no primitive " + std::to_string(n) + "-th root of unity in F_" +
                    std::to_string(q_));
  return pow(generator_, static_cast<std::uint64_t>((q_ - 1) / n));
}

Int FiniteField::multiplicative_order(Element a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "zero has no order");
  Int order = q_ - 1;
  for (Int l : prime_factors(q_ - 1))
    while (order % l == 0 && pow(a, static_cast<std::uint64_t>(order / l)) == 1)
      order /= l;
  return order;
}

FieldEmbedding::FieldEmbedding(const FiniteField& small, const FiniteField& big)
    : small_(small), big_(big) {
  if (small.characteristic() != big.characteristic() ||
      big.degree() % small.degree() != 0)
    throw Error(ErrorKind::PreconditionViolated,
                "F_" + std::to_string(small.order()) + " is not a subfield of F_" +
                    std::to_string(big.order()));
  const auto& f = small.spec().modulus;
  auto eval = [&](FiniteField::Element x) {
    FiniteField::Element acc = 0;
    for (std::size_t i = f.size(); i-- > 0;)
      acc = big.add(big.mul(acc, x), big.from_int(f[i]));
    return acc;
  };
  FiniteField::Element theta = 0;
  bool found = false;
  for (Int x = 0; x < big.order(); ++x) {
    if (eval(static_cast<FiniteField::Element>(x)) == 0) {
      theta = static_cast<FiniteField::Element>(x);
      found = true;
      break;
    }
  }
  if (!found)
    throw Error(ErrorKind::Inconsistent, "subfield modulus has no root");
  FiniteField::Element power = 1;
  for (unsigned i = 0; i < small.degree(); ++i) {
    powers_.push_back(power);
    power = big.mul(power, theta);
  }
}

FiniteField::Element FieldEmbedding::operator()(FiniteField::Element a) const {
  auto cs = small_.coeffs(a);
  FiniteField::Element acc = 0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    acc = big_.add(acc, big_.mul(big_.from_int(cs[i]), powers_[i]));
  return acc;
}

}  // namespace cyclic
