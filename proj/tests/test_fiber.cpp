#include "doctest.h"
#include "isores/boundary.hpp"
#include "isores/fiber.hpp"

using namespace isores;

TEST_CASE("Euler characteristic is minus the profile degree") {
  CHECK(euler_characteristic(profile(parse_mu("1,1,-1,-1,-1,-1"))) == 2);
  CHECK(euler_characteristic(profile(parse_mu("2,3,-1,-2,-4"))) == 0);
  for (int a = 2; a <= 4; ++a) {
    Stratum s = validate({a, a}, {2 * a, 1, 1});
    CHECK(euler_characteristic(profile(s)) == 2 * a);
  }
}

TEST_CASE("closed 2g-2 for all-simple-pole strata") {
  CHECK(genus_simple_poles(1, 1) == -2);
  CHECK(genus_simple_poles(2, 2) == 16);
  CHECK(genus_simple_poles(1, 2) == -2);
  for (int a = 2; a <= 7; ++a)
    for (int a1 = 1; a1 < a; ++a1) {
      Stratum s = validate({a1, a - a1}, std::vector<int>(a + 2, 1));
      CHECK(profile(s).degree == genus_simple_poles(a1, a - a1));
    }
  CHECK_THROWS_AS(genus_simple_poles(0, 2), Error);
}

TEST_CASE("component counts from the signature") {
  CHECK(num_components(parse_mu("3,3,-6,-1,-1")) == 3);
  CHECK(num_components(parse_mu("2,2,-1,-1,-1,-1,-1,-1")) == 2);
  CHECK(num_components(parse_mu("1,2,-1,-1,-1,-1,-1")) == 1);
  CHECK(num_components(parse_mu("1,1,-2,-1,-1")) == 1);   // gcd = 1
  CHECK(num_components(parse_mu("2,2,-4,-1,-1")) == 2);
  CHECK(num_components(parse_mu("2,2,-2,-2,-2")) == 1);   // no simple poles
  CHECK(num_components(parse_mu("3,3,-1,-7")) == 1);      // only one simple pole
  CHECK_THROWS_AS(num_components(parse_mu("4,-2,-4")), Error);
}

TEST_CASE("component count divides every multiplicity and the degree") {
  for (const char* mu : {"3,3,-6,-1,-1", "2,2,-1,-1,-1,-1,-1,-1", "2,2,-4,-1,-1",
                         "4,4,-8,-1,-1"}) {
    auto prof = profile(parse_mu(mu));
    const int k = prof.num_components;
    CHECK(k > 1);
    CHECK(prof.degree % k == 0);
    for (const auto& e : prof.entries) CHECK(e.multiplicity % k == 0);
    CHECK(prof.genus_per_component >= 0);
  }
}

TEST_CASE("pattern predicates vs profile-derived truth") {
  SUBCASE("all poles simple") {
    CHECK(all_poles_simple_predicate(parse_mu("2,3,-1,-1,-1,-1,-1,-1,-1")));
    auto prof = profile(parse_mu("2,3,-1,-1,-1,-1,-1,-1,-1"));
    CHECK(profile_all_poles_simple(prof));
    CHECK_FALSE(all_poles_simple_predicate(parse_mu("2,3,-1,-2,-4")));
    CHECK_FALSE(profile_all_poles_simple(profile(parse_mu("2,3,-1,-2,-4"))));
  }
  SUBCASE("all even for p >= 3") {
    CHECK(all_even_predicate(parse_mu("2,2,-2,-2,-2")));
    CHECK(profile_all_even(profile(parse_mu("2,2,-2,-2,-2"))));
    CHECK_FALSE(all_even_predicate(parse_mu("1,1,-2,-1,-1")));
  }
  SUBCASE("p = 2 counterexample H(3,3,-1,-7)") {
    const Stratum s = parse_mu("3,3,-1,-7");
    CHECK_FALSE(mu_all_even(s));
    CHECK(profile_all_even(profile(s)));
    CHECK(all_even_predicate(s));  // profile-derived truth for p = 2
  }
}

TEST_CASE("divisibility factor of the singularity orders") {
  CHECK(divisibility_factor(profile(parse_mu("2,2,-2,-2,-2"))) == 2);
  CHECK(divisibility_factor(profile(parse_mu("2,3,-1,-2,-4"))) == 1);
  CHECK(divisibility_factor(profile(parse_mu("1,1,-2,-1,-1"))) == 1);
}
