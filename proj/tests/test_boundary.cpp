#include <map>

#include "doctest.h"
#include "isores/boundary.hpp"
#include "isores/counting.hpp"
#include "isores/fiber.hpp"

using namespace isores;

TEST_CASE("zero record: merged zero order and multiplicity") {
  SingularityRecord r = zero_record(parse_mu("2,3,-1,-2,-4"));
  CHECK(r.order == 5);
  CHECK(r.multiplicity == 5);
  CHECK(r.residue.is_zero_canonical());

  r = zero_record(parse_mu("1,1,-1,-1,-1,-1"));
  CHECK(r.order == 2);
  CHECK(r.multiplicity == 2);

  r = zero_record(parse_mu("3,3,-1,-7"));
  CHECK(r.order == 6);
  CHECK(r.multiplicity == 1);

  CHECK_THROWS_AS(zero_record(parse_mu("5,-1,-2,-4")), Error);
}

TEST_CASE("horizontal records: subsets with b_I = a1 + 1") {
  SUBCASE("H(2,3,-1,-2,-4): single partition") {
    auto recs = horizontal_records(parse_mu("2,3,-1,-2,-4"));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].order == 1);
    CHECK(recs[0].multiplicity == 2);
    CHECK(recs[0].source.I == std::vector<int>{1, 2});
    CHECK(same_form(recs[0].residue, ResidueForm{{0, 0, 1}}));
  }
  SUBCASE("H(1,1,-2,-1,-1): residues +-l1") {
    auto recs = horizontal_records(parse_mu("1,1,-2,-1,-1"));
    REQUIRE(recs.size() == 2);
    CHECK(same_form(recs[0].residue, ResidueForm{{0, 1, 1}}));
    CHECK(same_form(recs[1].residue, ResidueForm{{1, 0, 0}}));
    CHECK(recs[0].multiplicity == 1);
    CHECK(recs[1].multiplicity == 1);
  }
  SUBCASE("H(4,4,-6,-2,-2): no subset sums to 5") {
    CHECK(horizontal_records(parse_mu("4,4,-6,-2,-2")).empty());
  }
  SUBCASE("every horizontal residue is a 0/1 partial sum") {
    for (const char* mu : {"2,3,-1,-2,-4", "1,1,-2,-1,-1", "2,2,-1,-1,-1,-1,-1,-1",
                           "3,4,-2,-3,-1,-3"})
      for (const auto& r : horizontal_records(parse_mu(mu)))
        CHECK(is_partial_sum_form(r.residue));
  }
}

TEST_CASE("cherry records on pinned strata") {
  SUBCASE("H(1,1,-2,-1,-1): two double poles with residues +-(l2-l3)") {
    auto recs = cherry_records(parse_mu("1,1,-2,-1,-1"));
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) {
      CHECK(r.order == 2);
      CHECK(r.multiplicity == 1);
    }
    CHECK(same_form(recs[0].residue, ResidueForm{{0, -1, 1}}));
    CHECK(same_form(recs[1].residue, ResidueForm{{0, 1, -1}}));
  }
  SUBCASE("H(3,3,-1,-7): two order-4 poles with residues -l1 and +l1") {
    auto recs = cherry_records(parse_mu("3,3,-1,-7"));
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) CHECK(r.order == 4);
    bool plus = false, minus = false;
    for (const auto& r : recs) {
      plus = plus || same_form(r.residue, ResidueForm{{1, 0}});
      minus = minus || same_form(r.residue, ResidueForm{{-1, 0}});
    }
    CHECK(plus);
    CHECK(minus);
  }
  SUBCASE("H(2,3,-1,-2,-4): full itemization") {
    // multiset {(order, mult, canonical residue)} from direct enumeration
    auto prof = profile(parse_mu("2,3,-1,-2,-4"));
    using Key = std::tuple<int, std::vector<long long>>;
    std::map<Key, BigInt> got;
    for (const auto& e : prof.entries)
      if (e.kind == SingKind::Pole) got[{e.order, e.residue.coeffs}] = e.multiplicity;
    std::map<Key, BigInt> expected{
        {{1, {0, 0, 1}}, 2},   // l3
        {{2, {1, 1, 0}}, 3},   // l1+l2
        {{3, {0, 1, 1}}, 1},   // -l1
        {{3, {0, 2, 1}}, 2},   // -l1+l2
        {{4, {1, 0, 0}}, 1},   // l1
        {{4, {4, 0, 3}}, 1},   // l1-3*l2
    };
    CHECK(got == expected);
  }
}

TEST_CASE("tripartition completeness: 3^p assignments before filtering") {
  CHECK(tripartition_count(3) == 27);
  CHECK(tripartition_count(5) == 243);
}

TEST_CASE("profile aggregates, sorts and derives invariants") {
  SUBCASE("H(1,1,-1,-1,-1,-1): 2 zeros of order 2 and 6 simple poles") {
    auto prof = profile(parse_mu("1,1,-1,-1,-1,-1"));
    BigInt zeros = 0, poles = 0;
    for (const auto& e : prof.entries) {
      if (e.kind == SingKind::Zero) {
        CHECK(e.order == 2);
        zeros += e.multiplicity;
      } else {
        CHECK(e.order == 1);
        poles += e.multiplicity;
      }
    }
    CHECK(zeros == 2);
    CHECK(poles == 6);
  }
  SUBCASE("H(2,2,-2,-2,-2): 4 zeros of order 4 and 8 double poles") {
    auto prof = profile(parse_mu("2,2,-2,-2,-2"));
    BigInt zeros = 0, poles = 0, residueless = 0;
    for (const auto& e : prof.entries) {
      if (e.kind == SingKind::Zero)
        zeros += e.multiplicity;
      else {
        CHECK(e.order == 2);
        poles += e.multiplicity;
        if (e.residue.is_zero_canonical()) residueless += e.multiplicity;
      }
    }
    CHECK(zeros == 4);
    CHECK(poles == 8);
    CHECK(residueless == 2);
  }
  SUBCASE("entries are sorted and multiplicities positive") {
    auto prof = profile(parse_mu("3,4,-2,-3,-1,-3"));
    for (size_t i = 0; i + 1 < prof.entries.size(); ++i) {
      const auto& x = prof.entries[i];
      const auto& y = prof.entries[i + 1];
      const auto kx = std::tuple(x.kind == SingKind::Zero ? 0 : 1, x.order, x.residue.coeffs);
      const auto ky = std::tuple(y.kind == SingKind::Zero ? 0 : 1, y.order, y.residue.coeffs);
      CHECK(kx < ky);
    }
    for (const auto& e : prof.entries) CHECK(e.multiplicity > 0);
  }
}

TEST_CASE("degree parity and the residue theorem on sampled strata") {
  for (const char* mu : {"2,3,-1,-2,-4", "1,1,-2,-1,-1", "4,4,-6,-2,-2", "3,4,-2,-3,-1,-3",
                         "2,2,-2,-2,-2", "5,1,-4,-2,-2"}) {
    auto prof = profile(parse_mu(mu));
    CHECK(prof.degree % 2 == 0);
    const int p = prof.stratum.num_poles();
    std::vector<BigInt> total(p, 0);
    for (const auto& e : prof.entries) {
      if (e.kind != SingKind::Pole) continue;
      for (int j = 0; j < p; ++j) total[j] += e.multiplicity * e.residue.coeffs[j];
    }
    for (int j = 1; j < p; ++j) CHECK(total[j] == total[0]);
  }
}

TEST_CASE("worked instance: H(2,3,-1,-2,-4) residues sum to 2(l1+l2+l3)") {
  auto prof = profile(parse_mu("2,3,-1,-2,-4"));
  std::vector<BigInt> total(3, 0);
  for (const auto& e : prof.entries) {
    if (e.kind != SingKind::Pole) continue;
    for (int j = 0; j < 3; ++j) total[j] += e.multiplicity * e.residue.coeffs[j];
  }
  // canonical forms shift each record by a multiple of (1,1,1); the sum stays
  // a multiple of it, here pinned against raw signed residues
  CHECK(total[0] == total[1]);
  CHECK(total[1] == total[2]);

  std::vector<BigInt> raw(3, 0);
  for (const auto& r : horizontal_records(prof.stratum))
    for (int j = 0; j < 3; ++j) raw[j] += r.multiplicity * r.residue.coeffs[j];
  for (const auto& r : cherry_records(prof.stratum)) {
    ResidueForm c = canonicalize(r.residue);
    for (int j = 0; j < 3; ++j) raw[j] += r.multiplicity * c.coeffs[j];
  }
  CHECK((raw[0] - raw[1]) == 0);
}

TEST_CASE("single-pole strata have an empty generic fiber") {
  auto prof = profile(parse_mu("1,1,-4"));
  CHECK(prof.entries.empty());
  CHECK(prof.degree == 0);
  CHECK(prof.num_components == 0);
}
