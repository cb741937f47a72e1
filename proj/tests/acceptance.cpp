// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// All comparisons are exact; the only tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cyclic/classify.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/fforacle.hpp"

using namespace cyclic;

namespace {

constexpr double kSasakiSeconds = 10.0;
constexpr double kSignatureSeconds = 30.0;
constexpr double kClassifySeconds = 10.0;
constexpr double kZetaSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, double limit_s,
            const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    out.pass = false;
    out.detail += " [over " + std::to_string(limit_s) + " s]";
  }
  if (!out.pass) ++failures;
  std::printf("criterion %d %s %s: %s (%.2f s)\n", id, out.pass ? "PASS" : "FAIL",
              title, out.detail.c_str(), secs);
  std::fflush(stdout);
}

struct ModelCase {
  const char* model;
  Int q;         // field for counts and the zeta series
  Int orbit_q;   // field for the automorphism check
};

// y^5 - y = x^2 has rational points only over x = 0 until F_625, so the
// x -> -x part of its generator is invisible on F_5 points.
const std::vector<ModelCase> kModels{
    {"kummer:5,1,1", 11, 11},        {"kummer:6,1,1", 13, 13},
    {"homma:5", 5, 5},               {"homma:7", 7, 7},
    {"aspower:5,2,1,0", 5, 625},     {"hyper:2,2", 7, 7},
    {"hyper:2,3", 7, 7},             {"kummer:8,1,3", 9, 9},
    {"aspower:5,2,1,1", 5, 5},       {"asrational:5,1,4,1", 5, 5},
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

int main() {
  report(1, "primitive pairs satisfy N >= 2g+1 for N <= 200", kSasakiSeconds, [] {
    auto r = verify_sasaki_bound(200);
    return Outcome{r.violations == 0 && r.pairs_checked > 0,
                   std::to_string(r.pairs_checked) + " pairs, " +
                       std::to_string(r.violations) + " violations, " +
                       std::to_string(r.equality_cases) + " with N = 2g+1"};
  });

  report(2, "Kummer genus equals Hurwitz genus of its signature, N <= 100", 0, [] {
    Int checked = 0, mismatches = 0;
    for (Int n = 3; n <= 100; ++n)
      for (auto pair : primitive_pairs(n)) {
        ++checked;
        if (rh_genus_tame(n, 0, kummer_signature(pair)) != kummer_genus(pair)) ++mismatches;
      }
    return Outcome{mismatches == 0, std::to_string(checked) + " pairs, " +
                                        std::to_string(mismatches) + " mismatches"};
  });

  report(3, "signatures with N >= 2g+1 are (0; a, b, c) or (0; 2, 2, g+1, g+1)",
         kSignatureSeconds, [] {
           Int sigs = 0;
           std::vector<std::string> bad;
           for (Int n = 5; n <= 60; ++n)
             for (Genus g = 2; 2 * g + 1 <= n; ++g)
               for (const auto& sig : enumerate_signatures(n, g)) {
                 ++sigs;
                 bool ok = sig.g0() == 0 &&
                           (sig.size() == 3 ||
                            (n == 2 * g + 2 && g % 2 == 0 &&
                             sig == Signature(0, {2, 2, g + 1, g + 1})));
                 if (!ok) bad.push_back("N=" + std::to_string(n) + " " + sig.to_string());
               }
           return Outcome{bad.empty(), std::to_string(sigs) + " signatures" +
                                           (bad.empty() ? "" : ", bad: " + join(bad))};
         });

  report(4, "classification entries are self-consistent", kClassifySeconds, [] {
    Int entries = 0;
    std::vector<std::string> bad;
    for (Int p : {0, 3, 5, 7, 11, 13}) {
      for (Genus g = 2; g <= 30; ++g) {
        for (const auto& e : classify(p, g)) {
          ++entries;
          std::string tag = "p=" + std::to_string(p) + " g=" + std::to_string(g) +
                            " N=" + std::to_string(e.n);
          if (e.n < 2 * g + 1) bad.push_back(tag + " below 2g+1");
          if (genus(e.model_template) != g) bad.push_back(tag + " genus");
          bool branch_wild = e.branch == Branch::ASPower ||
                             e.branch == Branch::ASRational || e.branch == Branch::Homma;
          if (e.wild != branch_wild) bad.push_back(tag + " wild flag");
          if (e.wild && p == 0) bad.push_back(tag + " wild in characteristic 0");
          if (e.branch == Branch::ASPower) {
            Int m = e.n / p;
            if (g != (p - 1) * (m - 1) / 2 || (p - 1) * (m - 1) % 2 != 0)
              bad.push_back(tag + " ASPower genus");
          }
          if (e.branch == Branch::ASRational && g != p - 1) bad.push_back(tag + " ASRational genus");
          if (e.branch == Branch::Homma && 2 * g != p - 1) bad.push_back(tag + " Homma genus");
          if (p == 3 && (e.branch == Branch::ASPower || e.branch == Branch::ASRational))
            bad.push_back(tag + " branch II in characteristic 3");
        }
      }
    }
    return Outcome{bad.empty() && entries > 0,
                   std::to_string(entries) + " entries" + (bad.empty() ? "" : ", bad: " + join(bad))};
  });

  report(5, "zeta genus equals formula genus", kZetaSeconds, [] {
    std::vector<std::string> parts;
    bool pass = kModels.size() >= 8;
    for (const auto& mc : kModels) {
      auto model = parse_model(mc.model);
      Genus g = genus(model);
      auto series = place_count_series(model, FieldSpec::from_order(mc.q),
                                       static_cast<unsigned>(2 * g));
      auto fit = zeta_genus(series, g);
      bool ok = fit && fit->genus == g;
      for (std::size_t j = 0; j < series.counts.size(); ++j)
        ok = ok && within_hasse_weil(series.counts[j],
                                     checked_pow(mc.q, static_cast<unsigned>(j + 1)), g);
      pass = pass && ok;
      parts.push_back(std::string(mc.model) + "/F" + std::to_string(mc.q) + " g=" +
                      (fit ? std::to_string(fit->genus) : "none") + (ok ? "" : " FAIL"));
    }
    return Outcome{pass, join(parts)};
  });

  report(6, "generators permute rational points with order N", 0, [] {
    std::vector<std::string> parts;
    bool pass = true;
    for (const auto& mc : kModels) {
      auto model = parse_model(mc.model);
      auto d = generator(model);
      bool ok = false;
      std::string note;
      try {
        auto r = verify_automorphism(model, FiniteField::of_order(mc.orbit_q), d);
        ok = r.order == d.order && d.order == cyclic_order(model) && r.fixed_points_consistent;
        if (std::holds_alternative<KummerModel>(model))
          ok = ok && r.fixed_points == std::vector<AffinePoint>{{0, 0}, {1, 0}};
        note = "order " + std::to_string(r.order);
      } catch (const Error& e) {
        note = e.what();
      }
      pass = pass && ok;
      parts.push_back(std::string(mc.model) + "/F" + std::to_string(mc.orbit_q) + " " + note +
                      (ok ? "" : " FAIL"));
    }
    return Outcome{pass, join(parts)};
  });

  report(7, "character-sum counts equal naive counts for q <= 10^4", 0, [] {
    Int compared = 0;
    std::vector<std::string> bad;
    for (const auto& mc : kModels) {
      auto model = parse_model(mc.model);
      FiniteField base = FiniteField::of_order(mc.q);
      for (unsigned j = 1; checked_pow(mc.q, j) <= kNaiveCountLimit; ++j) {
        FiniteField big(FieldSpec::least(base.characteristic(), base.degree() * j));
        ++compared;
        if (count_places(model, big, base) != count_places_naive(model, big, base))
          bad.push_back(std::string(mc.model) + "/F" + std::to_string(big.order()));
      }
    }
    return Outcome{bad.empty(), std::to_string(compared) + " fields compared" +
                                    (bad.empty() ? "" : ", mismatches: " + join(bad))};
  });

  report(8, "p^2 stabilizer profile gives p^2 = 2g + p", 0, [] {
    std::vector<std::string> parts;
    bool pass = true;
    for (Int p : {3, 5, 7, 11, 13}) {
      std::vector<Int> orders{p * p, p * p};
      orders.insert(orders.end(), static_cast<std::size_t>(p), p);
      validate_filtration(p, orders);
      FiltrationProfile profile(p, orders);
      auto jumps = profile.jumps();
      std::vector<OrbitDatum> orbits{{profile, 1}};
      Genus g = rh_genus_wild(p * p, 0, orbits);
      bool ok = p * p == 2 * g + p && jumps.size() == 2 && jumps[0] == 1 &&
                jumps[1] == static_cast<std::size_t>(p) + 1 &&
                (jumps[1] - jumps[0]) % static_cast<std::size_t>(p) == 0;
      pass = pass && ok;
      parts.push_back("p=" + std::to_string(p) + " g=" + std::to_string(g) + (ok ? "" : " FAIL"));
    }
    return Outcome{pass, join(parts)};
  });

  return failures == 0 ? 0 : 1;
}
