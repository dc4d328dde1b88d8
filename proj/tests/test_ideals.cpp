#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "gsr/audit.hpp"
#include "gsr/ideals.hpp"

using namespace gsr;

namespace {

std::vector<Mask> bits_of(const std::vector<IdealSubset>& v) {
  std::vector<Mask> out;
  for (const auto& i : v) out.push_back(i.bits);
  return out;
}

}  // namespace

TEST_CASE("the boolean AND structure has only the trivial ideals") {
  const auto s = fixtures::bool_and();
  for (const auto& kind : {IdealKind::two_sided(), IdealKind::left(), IdealKind::right(),
                           IdealKind::threshold(1), IdealKind::threshold(3)}) {
    CAPTURE(kind.to_string());
    CHECK(bits_of(all_ideals(s, kind)) == std::vector<Mask>{1, 3});
  }
}

TEST_CASE("the guarded projection admits no middle ideal") {
  const auto s = fixtures::max_proj();
  CHECK(bits_of(all_ideals(s, IdealKind::two_sided())) == std::vector<Mask>{1, 7});
  CHECK(bits_of(all_ideals(s, IdealKind::left())) == std::vector<Mask>{1, 7});
  CHECK(bits_of(all_ideals(s, IdealKind::right())) == std::vector<Mask>{1, 7});

  // {0,1} absorbs nothing: the first projection escapes through slot 1
  CHECK_FALSE(is_ideal(s, 0b011, IdealKind::two_sided()));
  CHECK_FALSE(is_ideal(s, 0b011, IdealKind::left()));
  CHECK_FALSE(is_ideal(s, 0b011, IdealKind::right()));
  CHECK(additively_closed_with_zero(s, 0b011));
}

TEST_CASE("the pair product carries the two factor kernels") {
  const auto s = fixtures::prod4();
  CHECK(bits_of(all_ideals(s, IdealKind::two_sided())) ==
        std::vector<Mask>{0b0001, 0b0011, 0b0101, 0b1111});

  CHECK_FALSE(additively_closed_with_zero(s, 0b0111));  // 1+2=3 escapes
  CHECK(additive_closure(s, 0b0111) == 0b1111);
}

TEST_CASE("tau finds the least passing threshold") {
  const auto s = fixtures::max_proj();
  CHECK(tau(s, 0b001) == ThresholdIndex{1, true});
  CHECK(tau(s, 0b111) == ThresholdIndex{1, true});
  // {0,1}: thresholds 1 and 2 leak through slot 1, all three slots contain it
  CHECK_FALSE(is_ideal(s, 0b011, IdealKind::threshold(1)));
  CHECK_FALSE(is_ideal(s, 0b011, IdealKind::threshold(2)));
  CHECK(is_ideal(s, 0b011, IdealKind::threshold(3)));
  CHECK(tau(s, 0b011) == ThresholdIndex{3, true});

  const auto p = fixtures::prod4();
  CHECK(tau(p, 0b0111) == ThresholdIndex{std::nullopt, false});
}

TEST_CASE("generated ideals close the seed under addition and absorption") {
  const auto s = fixtures::max_proj();
  CHECK(generated_ideal(s, 0b100, IdealKind::two_sided()).bits == 0b111);
  CHECK(generated_ideal(s, 0b010, IdealKind::two_sided()).bits == 0b111);
  CHECK_THROWS_AS(generated_ideal(s, 0, IdealKind::two_sided()), UsageError);

  const auto p = fixtures::prod4();
  CHECK(generated_ideal(p, 0b0010, IdealKind::two_sided()).bits == 0b0011);
  CHECK(generated_ideal(p, 0b0100, IdealKind::two_sided()).bits == 0b0101);
}

TEST_CASE("ideal sums and intersections stay in the lattice") {
  const auto p = fixtures::prod4();
  const auto ideals = all_ideals(p, IdealKind::two_sided());
  REQUIRE(ideals.size() == 4);
  const auto& i1 = ideals[1];  // {0,1}
  const auto& i2 = ideals[2];  // {0,2}

  const auto sum = sum_ideals(p, i1, i2);
  CHECK(sum.bits == 0b1111);
  CHECK(sum.has_kind(IdealKind::two_sided()));

  const auto meet = intersect_ideals(p, {i1, i2});
  CHECK(meet.bits == 0b0001);
  CHECK(meet.has_kind(IdealKind::two_sided()));

  IdealSubset untagged;
  untagged.bits = 1;
  CHECK_THROWS_AS(sum_ideals(p, i1, untagged), UsageError);
  CHECK_THROWS_AS(intersect_ideals(p, {}), UsageError);
}

TEST_CASE("threshold ideals decompose into positional families") {
  const auto s = fixtures::max_proj();
  const auto d = positional_decomposition_check(s, 0b001, 1);
  CHECK(d.equal);
  CHECK(d.intersection == 0b001);
  CHECK(d.family.size() == 3);
}

TEST_CASE("the ideal lattice audit passes on the fixture structures") {
  for (const auto& s : {fixtures::bool_and(), fixtures::max_proj(), fixtures::prod4()}) {
    CAPTURE(s.m);
    const auto entries = ideal_lattice_audit(s);
    CHECK_FALSE(entries.empty());
    for (const auto& e : entries) {
      CAPTURE(e.id);
      CAPTURE(e.witness);
      CHECK(e.status != AuditStatus::Fail);
    }
  }
}
