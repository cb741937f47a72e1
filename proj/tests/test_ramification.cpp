#include <doctest.h>

#include <numeric>

#include "cyclic/errors.hpp"
#include "cyclic/ramification.hpp"
#include "generators.hpp"

using namespace cyclic;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

// 2g - 2 = N (2 g0 - 2 + sum (1 - 1/e)) over a common denominator.
Genus genus_by_fractions(Int n, Int g0, const std::vector<Int>& es) {
  Int den = 1;
  for (Int e : es) den = std::lcm(den, e);
  Int num = (2 * g0 - 2) * den;
  for (Int e : es) num += den - den / e;
  REQUIRE((n * num) % den == 0);
  Int two_g_minus_two = n * num / den;
  REQUIRE(two_g_minus_two % 2 == 0);
  return two_g_minus_two / 2 + 1;
}

std::vector<Int> p_squared_profile(Int p) {
  std::vector<Int> orders{p * p, p * p};
  orders.insert(orders.end(), static_cast<std::size_t>(p), p);
  return orders;
}

}  // namespace

TEST_CASE("signature is a sorted multiset") {
  Signature a(0, {6, 3, 6});
  Signature b(0, {3, 6, 6});
  CHECK(a == b);
  CHECK(a.indices() == std::vector<Int>{3, 6, 6});
  CHECK(a.to_string() == "(0; 3, 6, 6)");
  CHECK(Signature(1, {3, 6, 6}) != a);
  CHECK(kind_of([] { Signature(0, {1, 2}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { Signature(-1, {2, 2}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("tame Hurwitz formula") {
  CHECK(rh_genus_tame(6, Signature(0, {3, 6, 6})) == 2);
  CHECK(rh_genus_tame(6, Signature(0, {2, 2, 3, 3})) == 2);
  CHECK(rh_genus_tame(5, Signature(0, {5, 5, 5})) == 2);
  CHECK(rh_genus_tame(7, Signature(0, {7, 7, 7})) == 3);
  CHECK(rh_genus_tame(14, 0, Signature(0, {2, 7, 14})) == 3);
  CHECK(rh_genus_tame(2, 0, Signature(0, {2, 2, 2, 2, 2, 2})) == 2);
  CHECK(rh_genus_tame(3, 1, Signature(1, {3})) == 2);

  CHECK(kind_of([] { rh_genus_tame(6, Signature(0, {4, 4, 4})); }) ==
        ErrorKind::NotADivisor);
  CHECK(kind_of([] { rh_genus_tame(6, Signature(0, {2, 2, 2})); }) ==
        ErrorKind::Inconsistent);
  CHECK(kind_of([] { rh_genus_tame(4, Signature(0, {2, 2})); }) ==
        ErrorKind::Inconsistent);
  CHECK(kind_of([] { rh_genus_tame(0, Signature(0, {})); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("tame Hurwitz formula agrees with fraction arithmetic") {
  testgen::Gen gen(11);
  int checked = 0;
  for (int t = 0; t < testgen::kTrials; ++t) {
    Int n = gen.uniform(2, 120);
    auto divs = divisors(n);
    std::vector<Int> proper(divs.begin() + 1, divs.end());
    Int g0 = gen.uniform(0, 2);
    std::vector<Int> es;
    for (Int k = gen.uniform(0, 6); k > 0; --k) es.push_back(gen.pick(proper));
    Signature sig(g0, es);
    Int two_g_minus_two = n * (2 * g0 - 2);
    for (Int e : es) two_g_minus_two += n - n / e;
    if (two_g_minus_two < -2 || two_g_minus_two % 2 != 0) {
      CHECK_THROWS_AS(rh_genus_tame(n, g0, sig), Error);
      continue;
    }
    CHECK(rh_genus_tame(n, g0, sig) == genus_by_fractions(n, g0, es));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("filtration profile normalization and accessors") {
  FiltrationProfile tame(5, {4, 1, 1});
  CHECK(tame.orders() == std::vector<Int>{4});
  CHECK(tame.is_tame());
  CHECK(tame.order(7) == 1);
  CHECK(different_exponent(tame) == 3);

  FiltrationProfile wild(5, {10, 5, 5, 1});
  CHECK(!wild.is_tame());
  CHECK(wild.stabilizer_order() == 10);
  CHECK(wild.jumps() == std::vector<std::size_t>{2});
  CHECK(different_exponent(wild) == 17);
}

TEST_CASE("filtration validation rejects malformed profiles") {
  auto rejects = [](Int p, std::vector<Int> orders) {
    return kind_of([&] { validate_filtration(p, orders); }) ==
           ErrorKind::InvalidFiltration;
  };
  CHECK(rejects(5, {10, 2}));           // G^(1) not a p-group
  CHECK(rejects(5, {25, 5, 25}));       // increasing
  CHECK(rejects(5, {50, 5}));           // p'-part divisible by p
  CHECK(rejects(3, {9, 9, 3, 1}));      // jumps 1 and 2 differ by 1
  CHECK(rejects(4, {4, 4}));            // not a prime
  CHECK(rejects(2, {2, 2}));
  CHECK(rejects(5, {0}));
  CHECK_NOTHROW(validate_filtration(3, std::vector<Int>{9, 9, 3, 3, 3}));
  CHECK_NOTHROW(validate_filtration(7, std::vector<Int>{6}));
  CHECK(rejects(7, {7}));               // a p-group is wild
}

TEST_CASE("p-squared stabilizer profile gives p^2 = 2g + p") {
  for (Int p : {3, 5, 7, 11, 13}) {
    auto orders = p_squared_profile(p);
    FiltrationProfile profile(p, orders);
    auto jumps = profile.jumps();
    REQUIRE(jumps.size() == 2);
    CHECK(jumps[0] == 1);
    CHECK(jumps[1] == static_cast<std::size_t>(p) + 1);
    std::vector<OrbitDatum> orbit{{profile, 1}};
    Genus g = rh_genus_wild(p * p, 0, orbit);
    CHECK(p * p == 2 * g + p);
  }
}

TEST_CASE("wild Hurwitz formula") {
  // y^5 - y = x^2 with G of order 5 fixing infinity.
  std::vector<OrbitDatum> homma{{FiltrationProfile(5, {5, 5, 5}), 1}};
  CHECK(rh_genus_wild(5, 0, homma) == 2);
  // Orbit size times stabilizer must be N.
  std::vector<OrbitDatum> bad{{FiltrationProfile(5, {5, 5, 5}), 2}};
  CHECK(kind_of([&] { rh_genus_wild(5, 0, bad); }) ==
        ErrorKind::PreconditionViolated);
  // Tame data through the wild formula reproduces the tame genus.
  std::vector<OrbitDatum> tame{{FiltrationProfile(7, {3}), 2},
                               {FiltrationProfile(7, {6}), 1},
                               {FiltrationProfile(7, {6}), 1}};
  CHECK(rh_genus_wild(6, 0, tame) == rh_genus_tame(6, Signature(0, {3, 6, 6})));
}

TEST_CASE("quotient branching") {
  CHECK(quotient_is_branched(12, 4, 2));
  CHECK_FALSE(quotient_is_branched(12, 2, 6));
  CHECK_FALSE(quotient_is_branched(12, 1, 1));
  CHECK(kind_of([] { quotient_is_branched(12, 5, 1); }) == ErrorKind::NotADivisor);
  CHECK(kind_of([] { quotient_is_branched(12, 2, 5); }) == ErrorKind::NotADivisor);
}

TEST_CASE("Kummer divisor bookkeeping") {
  using Ord = std::pair<std::string, Int>;
  std::vector<Ord> three{{"0", 1}, {"1", 1}, {"inf", -2}};
  CHECK(kummer_branch_count(5, three) == 3);
  CHECK(kummer_branch_valid(5, three));

  std::vector<Ord> one_branch{{"0", 1}, {"1", 4}, {"inf", -5}};
  CHECK(kummer_branch_count(5, one_branch) == 2);
  std::vector<Ord> single{{"0", 5}, {"1", 1}, {"inf", -6}};
  CHECK(kummer_branch_count(5, single) == 2);
  // Degree zero forces at least two branch points.
  std::vector<Ord> lone{{"0", 1}, {"inf", -5}, {"inf", 4}};
  CHECK(kummer_branch_count(5, lone) == 2);
  CHECK(kummer_branch_valid(5, lone));
  std::vector<Ord> one{{"0", 1}, {"inf", -5}};
  CHECK(kummer_branch_count(5, one) == 1);
  CHECK_FALSE(kummer_branch_valid(5, one));

  std::vector<Ord> unbalanced{{"0", 1}, {"1", 1}};
  CHECK_FALSE(kummer_branch_valid(5, unbalanced));
  std::vector<Ord> none{{"0", 5}, {"inf", -5}};
  CHECK(kummer_branch_valid(5, none));
}
