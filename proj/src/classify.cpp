#include "cyclic/classify.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "cyclic/errors.hpp"

namespace cyclic {

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::Kummer: return "I-Kummer";
    case Branch::Hyperelliptic: return "I-Hyperelliptic";
    case Branch::ASPower: return "II-ASPower";
    case Branch::ASRational: return "II-ASRational";
    case Branch::Homma: return "III-Homma";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Primitive pairs

PrimitivePairRange::PrimitivePairRange(Int n) : n_(n) {
  if (n < 3 || n > kMaxGroupOrder)
    throw Error(ErrorKind::InvalidArgument,
                "primitive pairs need 3 <= N <= 2^32, got " + std::to_string(n));
}

void PrimitivePairRange::iterator::step() { ++s_; }

void PrimitivePairRange::iterator::settle() {
  while (r_ <= n_ - 2) {
    if (s_ > n_ - 1 - r_) {
      ++r_;
      s_ = 1;
      continue;
    }
    if (gcd(gcd(r_, s_), n_) == 1) return;
    ++s_;
  }
  r_ = n_ - 1;
  s_ = 1;
}

PrimitivePairRange primitive_pairs(Int n) { return PrimitivePairRange(n); }

std::vector<PrimitivePair> primitive_pair_list(Int n) {
  std::vector<PrimitivePair> out;
  for (auto pair : primitive_pairs(n)) out.push_back(pair);
  return out;
}

std::vector<PrimitivePair> pair_orbit(const PrimitivePair& pair) {
  const Int n = pair.n();
  std::set<PrimitivePair> orbit;
  for (Int u = 1; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    std::array<Int, 3> triple{(u * pair.r()) % n, (u * pair.s()) % n,
                              (u * pair.t()) % n};
    std::sort(triple.begin(), triple.end());
    do {
      if (triple[0] + triple[1] <= n - 1)
        orbit.emplace(n, triple[0], triple[1]);
    } while (std::next_permutation(triple.begin(), triple.end()));
  }
  return {orbit.begin(), orbit.end()};
}

PrimitivePair canonical_pair(const PrimitivePair& pair) {
  return pair_orbit(pair).front();
}

PrimitivePair canonical_pair(Int n, Int r, Int s) {
  return canonical_pair(PrimitivePair(n, r, s));
}

// ---------------------------------------------------------------------------
// Signatures

namespace {

Int lcm_of(const std::vector<Int>& values, std::size_t skip) {
  Int acc = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != skip) acc = lcm(acc, values[i]);
  return acc;
}

bool passes_lcm_rules(Int n, Int g0, const std::vector<Int>& indices) {
  if (indices.size() < 2) return false;
  if (g0 == 0 && indices.size() < 3) return false;
  Int full = lcm_of(indices, indices.size());
  if (g0 == 0 && full != n) return false;
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (lcm_of(indices, i) != full) return false;
  return true;
}

// Multisets of indices (non-decreasing, drawn from `choices[from..]`) whose
// contributions N - N/e sum to `budget`.
void collect(Int n, const std::vector<Int>& choices, std::size_t from,
             Int budget, std::vector<Int>& current,
             std::vector<std::vector<Int>>& out) {
  if (budget == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < choices.size(); ++i) {
    Int e = choices[i];
    Int term = n - n / e;
    if (term > budget) break;  // contributions grow with e
    current.push_back(e);
    collect(n, choices, i, budget - term, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Signature> enumerate_signatures(Int n, Genus g) {
  if (n < 2 || n > kMaxGroupOrder)
    throw Error(ErrorKind::InvalidArgument, "N must lie in [2, 2^32]");
  if (g < 2) throw Error(ErrorKind::BadGenus, "genus must be >= 2");

  std::vector<Int> choices;
  for (Int d : divisors(n))
    if (d >= 2) choices.push_back(d);

  const Int lhs = checked_sub(checked_mul(2, g), 2);
  std::vector<Signature> out;
  for (Int g0 = 0;; ++g0) {
    Int budget = checked_sub(lhs, checked_mul(n, 2 * g0 - 2));
    if (budget < 0) break;
    std::vector<std::vector<Int>> found;
    std::vector<Int> current;
    collect(n, choices, 0, budget, current, found);
    for (auto& indices : found)
      if (passes_lcm_rules(n, g0, indices))
        out.emplace_back(g0, std::move(indices));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Sasaki bound

SasakiReport verify_sasaki_bound(Int n_max) {
  if (n_max < 3)
    throw Error(ErrorKind::InvalidArgument, "N_max must be >= 3");
  SasakiReport report;
  report.n_max = n_max;
  for (Int n = 3; n <= n_max; ++n) {
    for (auto pair : primitive_pairs(n)) {
      Genus g = kummer_genus(pair);
      ++report.pairs_checked;
      if (n < 2 * g + 1) ++report.violations;
      if (n == 2 * g + 1) ++report.equality_cases;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Classification

Int classification_ceiling(Int p, Genus g) {
  return p == 0 ? 4 * g + 2 : 4 * g + 4;
}

namespace {

void validate_query(const ClassifyQuery& q) {
  if (q.p == 2)
    throw Error(ErrorKind::UnsupportedCharacteristic,
                "characteristic 2 unsupported");
  if (q.p < 0 || (q.p != 0 && !is_prime(q.p)))
    throw Error(ErrorKind::UnsupportedCharacteristic,
                "characteristic must be 0 or an odd prime, got " +
                    std::to_string(q.p));
  if (q.g < 2)
    throw Error(ErrorKind::BadGenus,
                "genus must be >= 2, got " + std::to_string(q.g));
  if (q.g > kMaxGroupOrder / 8)
    throw Error(ErrorKind::BadGenus, "genus too large for the order cap");
}

void add_kummer(const ClassifyQuery& q, Int n,
                std::vector<ClassificationEntry>& out) {
  std::vector<PrimitivePair> matching;
  for (auto pair : primitive_pairs(n))
    if (kummer_genus(pair) == q.g) matching.push_back(pair);

  auto emit = [&](const PrimitivePair& rep, std::vector<PrimitivePair> pairs) {
    ClassificationEntry e{
        .n = n,
        .branch = Branch::Kummer,
        .model_template = KummerModel(rep),
        .genus = q.g,
        .ramification = kummer_signature(rep),
        .wild = false,
        .pairs = std::move(pairs)};
    out.push_back(std::move(e));
  };

  if (q.raw_pairs) {
    for (const auto& pair : matching) emit(pair, {pair});
    return;
  }
  std::set<PrimitivePair> covered;
  for (const auto& pair : matching) {
    if (covered.count(pair)) continue;
    auto members = pair_orbit(pair);
    covered.insert(members.begin(), members.end());
    PrimitivePair rep = members.front();
    emit(rep, std::move(members));
  }
}

FiltrationProfile tame_profile(Int p, Int e) { return FiltrationProfile(p, {e}); }

}  // namespace

std::vector<ClassificationEntry> classify(const ClassifyQuery& q) {
  validate_query(q);
  const Int p = q.p;
  const Genus g = q.g;
  std::vector<ClassificationEntry> out;
  auto wanted = [&](Int n) { return !q.n || *q.n == n; };

  // Branch I: p does not divide N (no filter in characteristic 0).
  for (Int n = 2 * g + 1; n <= classification_ceiling(p, g); ++n) {
    if (!wanted(n) || (p != 0 && n % p == 0)) continue;
    add_kummer(q, n, out);
  }
  if (g % 2 == 0) {
    Int n = 2 * g + 2;
    if (wanted(n) && (p == 0 || n % p != 0)) {
      ClassificationEntry e{
          .n = n,
          .branch = Branch::Hyperelliptic,
          .model_template = HyperellipticModel(g, Param::symbol("lambda")),
          .genus = g,
          .ramification = Signature(0, {2, 2, g + 1, g + 1}),
          .wild = false,
          .pairs = {}};
      out.push_back(std::move(e));
    }
  }

  if (p >= 5) {
    // Branch II, y^p - y = a(x^m - b): g = (p-1)(m-1)/2.
    if ((2 * g) % (p - 1) == 0) {
      Int m = 2 * g / (p - 1) + 1;
      Int n = p * m;
      if (m > 1 && gcd(m, p) == 1 && wanted(n)) {
        // The point over x = infinity is fixed by G with lower jump m for the
        // p-part; the p points over x = 0 are fixed by the subgroup of order m.
        std::vector<Int> orders{p * m};
        orders.insert(orders.end(), static_cast<std::size_t>(m), p);
        ClassificationEntry e{
            .n = n,
            .branch = Branch::ASPower,
            .model_template =
                ASPowerModel(p, m, Param::symbol("a"), Param::symbol("b")),
            .genus = g,
            .ramification = WildOrbits{{{FiltrationProfile(p, orders), 1},
                                        {tame_profile(p, m), p}}},
            .wild = true,
            .pairs = {}};
        out.push_back(std::move(e));
      }
    }
    // Branch II, b y^p + c y = a x + 1/x: g = p - 1, N = 2p.
    if (g == p - 1 && wanted(2 * p)) {
      // x = 0 and x = infinity are swapped by x -> 1/(ax) and each is fixed by
      // the translations; the involution fixes the 2p points over x^2 = 1/a.
      ClassificationEntry e{
          .n = 2 * p,
          .branch = Branch::ASRational,
          .model_template = ASRationalModel(p, Param::symbol("a"), Param::symbol("b"),
                                          Param::symbol("c")),
          .genus = g,
          .ramification = WildOrbits{{{FiltrationProfile(p, {p, p}), 2},
                                      {tame_profile(p, 2), p},
                                      {tame_profile(p, 2), p}}},
          .wild = true,
          .pairs = {}};
      out.push_back(std::move(e));
    }
  }
  // Branch III, y^p - y = x^2: g = (p-1)/2, N = p.
  if (p >= 3 && 2 * g == p - 1 && wanted(p)) {
    ClassificationEntry e{
        .n = p,
        .branch = Branch::Homma,
        .model_template = HommaModel(p),
        .genus = g,
        .ramification = WildOrbits{{{FiltrationProfile(p, {p, p, p}), 1}}},
        .wild = true,
        .pairs = {}};
    out.push_back(std::move(e));
  }

  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.branch != b.branch) return a.branch < b.branch;
    return a.pairs < b.pairs;
  });
  return out;
}

std::vector<ClassificationEntry> classify(Int p, Genus g) {
  return classify(ClassifyQuery{p, g, std::nullopt, false});
}

}  // namespace cyclic
