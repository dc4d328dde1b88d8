#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "gsr/decompose.hpp"
#include "oracles.hpp"

using namespace gsr;

TEST_CASE("comaximality over the pair product") {
  const auto s = fixtures::prod4();
  CHECK(are_comaximal(s, 0b0011, 0b0101));
  CHECK_FALSE(are_comaximal(s, 0b0001, 0b0011));
  CHECK_FALSE(are_comaximal(s, 0b0011, 0b0011));
  CHECK_THROWS_AS(are_comaximal(s, 0b0111, 0b0011), UsageError);
}

TEST_CASE("the zero ideal always reconstructs the structure") {
  const auto s = fixtures::bool_and();
  const auto rep = crt_check(s, {Mask{1}});
  CHECK(rep.all_pass());
  CHECK(rep.witnesses.empty());
  CHECK(rep.product == s);
  CHECK(rep.phi == std::vector<Element>{0, 1});
}

TEST_CASE("the pair product splits over its factor kernels") {
  const auto s = fixtures::prod4();
  const auto rep = crt_check(s, {0b0011, 0b0101});
  CHECK(rep.pairwise_comaximal);
  CHECK(rep.map_is_homomorphism);
  CHECK(rep.surjective);
  CHECK(rep.kernel_equals_intersection);
  CHECK(rep.all_pass());
  CHECK(rep.witnesses.empty());
  CHECK(rep.product.m == 4);
  CHECK(oracle::valid_structure(rep.product));
  CHECK(oracle::isomorphic(rep.product, s));

  const std::set<Element> images(rep.phi.begin(), rep.phi.end());
  CHECK(images.size() == 4);

  REQUIRE(rep.factors.size() == 2);
  CHECK(rep.factors[0].quotient == fixtures::bool_and());
  CHECK(rep.factors[1].quotient == fixtures::bool_and());
}

TEST_CASE("failed comaximality short-circuits with a witness") {
  const auto s = fixtures::prod4();
  const auto rep = crt_check(s, {0b0011, 0b0011});
  CHECK_FALSE(rep.pairwise_comaximal);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.witnesses.empty());

  const auto bad = crt_check(fixtures::bool_and(), {Mask{2}});
  CHECK_FALSE(bad.pairwise_comaximal);
  CHECK_FALSE(bad.witnesses.empty());

  CHECK_FALSE(crt_check(s, {}).all_pass());
}

TEST_CASE("spectra split along a passing reconstruction") {
  const auto s = fixtures::prod4();
  const auto good = spectra_disjoint_union_check(s, {0b0011, 0b0101});
  CHECK(good.status == AuditStatus::Pass);

  const auto skipped = spectra_disjoint_union_check(s, {0b0011, 0b0011});
  CHECK(skipped.status == AuditStatus::Vacuous);
}

TEST_CASE("semisimple reconstructions pass the product audit") {
  for (const auto& s : {fixtures::bool_and(), fixtures::max_proj(), fixtures::prod4()}) {
    CAPTURE(s.m);
    const auto e = wedderburn_check(s, 2, 2);
    CAPTURE(e.witness);
    CAPTURE(e.context);
    CHECK(e.status == AuditStatus::Pass);
  }
}

TEST_CASE("central idempotents") {
  CHECK(central_idempotents(fixtures::bool_and()) == std::vector<Element>{1});
  CHECK(central_idempotents(fixtures::max_proj()).empty());
  CHECK(central_idempotents(fixtures::prod4()) == std::vector<Element>{1, 2, 3});
  CHECK(central_idempotents(fixtures::trivial1()) == std::vector<Element>{0});
}

TEST_CASE("pinning the four-way AND reproduces the three-way AND") {
  const auto s = fixtures::pin4();
  PinningSpec spec;
  spec.e = 1;
  const auto res = pinned_ternary(s, spec);
  CHECK(res.ternary == fixtures::bool_and());
  CHECK(oracle::valid_structure(res.ternary));
  for (const auto& e : res.audits) {
    CAPTURE(e.id);
    CAPTURE(e.witness);
    CHECK(e.status == AuditStatus::Pass);
  }
}

TEST_CASE("pinning preconditions") {
  PinningSpec at_zero;
  at_zero.e = 0;
  CHECK_THROWS_AS(pinned_ternary(fixtures::pin4(), at_zero), UsageError);
  CHECK_THROWS_WITH_AS(pinned_ternary(fixtures::pin4(), at_zero),
                       doctest::Contains("central_idempotents"), UsageError);

  PinningSpec ok;
  ok.e = 1;
  CHECK_THROWS_AS(pinned_ternary(fixtures::bool_and(), ok), UsageError);

  PinningSpec bad_map;
  bad_map.e = 1;
  bad_map.gamma_map = {{0, 1}};
  CHECK_THROWS_AS(pinned_ternary(fixtures::pin4(), bad_map), UsageError);
}
