#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "gk/spectra.hpp"

using namespace gk;
using namespace gk::spectra;
using U = std::vector<std::uint64_t>;

TEST_CASE("spectrum of the trivial group") {
  gf::Field f = gf::make_field(7, 1);
  groups::GroupTable t = groups::GroupTable::generate(
      {groups::projective_matrix(f, 1, {1}, groups::ScalarSet::trivial())});
  Spectrum s = spectrum_of(t);
  CHECK(s.all_orders == U{1});
  CHECK(s.maxima == U{1});
  CHECK(s.source == Source::enumerated);
}

TEST_CASE("enumerated spectra of small linear groups") {
  Spectrum psl9 = spectrum_of(groups::psl2(9));
  CHECK(psl9.maxima == U{3, 4, 5});
  CHECK(psl9.all_orders == U{1, 2, 3, 4, 5});

  Spectrum p34 = spectrum_of(groups::psl3_4());
  CHECK(p34.all_orders == U{1, 2, 3, 4, 5, 7});
  CHECK(p34.maxima == U{3, 4, 5, 7});
  // No order is divisible by two distinct primes.
  for (std::uint64_t o : p34.all_orders) {
    CHECK(numtheory::factorize(i128(o)).factors.size() <= 1);
  }
}

TEST_CASE("closed-form maxima") {
  CHECK(mu_closed_form(Family::psl2, 3, 3).maxima == U{3, 13, 14});
  CHECK(mu_closed_form(Family::pgl2, 5, 1).maxima == U{4, 5, 6});
  CHECK(mu_closed_form(Family::psl2, 2, 2).maxima == U{2, 3, 5});
  CHECK(mu_closed_form(Family::pgl2, 2, 2).maxima == U{2, 3, 5});
  CHECK_THROWS_AS(mu_closed_form(Family::psl2, 3, 1), DomainError);
  CHECK_THROWS_AS(mu_closed_form(Family::psl2, 2, 1), DomainError);
  CHECK_THROWS_AS(mu_closed_form(Family::psl34, 2, 2), DomainError);
}

TEST_CASE("oracle equivalence on a unit-scale subset") {
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    auto [p, k] = groups::prime_power(q);
    CHECK(spectrum_of(groups::psl2(q)).maxima == mu_closed_form(Family::psl2, p, k).maxima);
  }
  for (std::uint64_t q : {5, 7, 9}) {
    auto [p, k] = groups::prime_power(q);
    CHECK(spectrum_of(groups::pgl2(q)).maxima == mu_closed_form(Family::pgl2, p, k).maxima);
  }
}

TEST_CASE("antichain property of maxima") {
  for (std::uint64_t q : {4, 5, 7, 9, 25}) {
    auto [p, k] = groups::prime_power(q);
    for (Family fam : {Family::psl2, Family::pgl2}) {
      Spectrum s = mu_closed_form(fam, p, k);
      for (std::uint64_t a : s.maxima) {
        for (std::uint64_t b : s.maxima) {
          if (a != b) CHECK(a % b != 0);
        }
      }
      for (std::uint64_t a : s.all_orders) {
        bool divides_some = false;
        for (std::uint64_t m : s.maxima) divides_some |= (m % a == 0);
        CHECK(divides_some);
      }
    }
  }
}

TEST_CASE("consecutive halves are coprime for odd prime powers up to 3^12") {
  std::uint64_t bound = 531441;
  for (std::uint32_t p : numtheory::primes_upto(1000)) {
    if (p == 2) continue;
    for (std::uint64_t q = p; q <= bound; q *= p) {
      CHECK(std::gcd((q - 1) / 2, (q + 1) / 2) == 1);
      if (q > bound / p) break;
    }
  }
}

TEST_CASE("order closed forms") {
  numtheory::FactoredInteger f = order_closed_form(Family::psl2, 27);
  CHECK(f.value == 9828);
  REQUIRE(f.factors.size() == 4);
  CHECK(f.factors[0] == std::make_pair(i128(2), std::uint32_t(2)));
  CHECK(f.factors[1] == std::make_pair(i128(3), std::uint32_t(3)));
  CHECK(std::uint64_t(order_closed_form(Family::psl2, 27).value) ==
        groups::psl2(27).size());
  CHECK(order_closed_form(Family::pgl2, 9).value == 720);
  CHECK(std::uint64_t(order_closed_form(Family::pgl2, 9).value) == groups::pgl2(9).size());
  CHECK(order_closed_form(Family::psl34, 0).value == 20160);
  CHECK_THROWS_AS(order_closed_form(Family::psl2, 6), DomainError);
}

TEST_CASE("divisor closure") {
  CHECK(divisor_closure({1}) == U{1});
  CHECK(divisor_closure({3, 13, 14}) == U{1, 2, 3, 7, 13, 14});
  CHECK(divisor_closure({2, 3, 5}) == U{1, 2, 3, 5});
  CHECK_THROWS_AS(divisor_closure({}), DomainError);
}
