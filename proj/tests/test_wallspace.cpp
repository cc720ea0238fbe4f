#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "wallcube/fixtures.hpp"
#include "wallcube/wallspace.hpp"

using namespace wallcube;
namespace fx = wallcube::fixtures;

namespace {
bool has_violation(const ValidationReport& r, ErrorKind kind) {
  for (const auto& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}
}  // namespace

TEST_CASE("fixtures validate") {
  CHECK(validate(fx::pt_draft()).ok());
  CHECK(validate(fx::two_draft()).ok());
  CHECK(validate(fx::p3_draft()).ok());
  CHECK(validate(fx::hex6_draft()).ok());

  const auto hex = fx::hex6();
  CHECK(hex->point_count() == 6);
  CHECK(hex->wall_count() == 4);
  CHECK(hex->notes().empty());
  // side0 always holds point 0
  CHECK(hex->wall(1).side0 == 0b000111);
  CHECK(hex->wall(2).side0 == 0b110001);
  CHECK(hex->wall(3).side0 == 0b100011);
  CHECK(hex->wall(0).is_trivial());
}

TEST_CASE("validate reports broken drafts") {
  SUBCASE("HEX6 with point 5 missing from W1 side1") {
    auto draft = fx::hex6_draft();
    draft.walls[1].side1 &= ~bit(5);
    const auto r = validate(draft);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().kind == ErrorKind::NonComplementarySides);
    CHECK(r.violations.front().wall == 1);
    CHECK_THROWS_AS(WallSpace::build(draft), Error);
  }
  SUBCASE("two points with only the trivial wall") {
    WallSpaceDraft draft{{"a", "b"}, {}};
    const auto r = validate(draft);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ErrorKind::UnseparatedPair);
    CHECK(r.violations[0].x == 0);
    CHECK(r.violations[0].y == 1);
  }
  SUBCASE("empty point set") {
    CHECK(has_violation(validate(WallSpaceDraft{}), ErrorKind::EmptyPointSet));
    try {
      WallSpace::build(WallSpaceDraft{});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyPointSet);
    }
  }
  SUBCASE("overlapping sides") {
    WallSpaceDraft draft{{"a", "b"}, {{0b01, 0b11}}};
    CHECK(has_violation(validate(draft), ErrorKind::NonComplementarySides));
  }
  SUBCASE("too many points") {
    WallSpaceDraft draft;
    draft.names.resize(65);
    CHECK(has_violation(validate(draft), ErrorKind::TooManyPoints));
  }
}

TEST_CASE("normalization: trivial wall insertion and dedup") {
  WallSpaceDraft draft{{"a", "b", "c"}, {{0b001, 0b110}, {0b110, 0b001}, {0b011, 0b100}, {0, 0b111}}};
  const auto r = validate(draft);
  CHECK(r.ok());
  const auto space = WallSpace::build(draft);
  CHECK(space->wall_count() == 3);
  CHECK(*space == *fx::p3());
  // one duplicate, one trivial wall listed out of place
  CHECK(space->notes().size() == 2);
  CHECK(WallSpace::build(WallSpaceDraft{{"a", "b"}, {{0b01, 0b10}}})->notes().size() == 1);
}

TEST_CASE("separating_walls and wall_metric") {
  const auto hex = fx::hex6();
  const auto p3 = fx::p3();
  CHECK(separating_walls(*hex, 0, 3) == (bit(1) | bit(2) | bit(3)));
  CHECK(mask_of(oracle::separating(*hex, 0, 3)) == separating_walls(*hex, 0, 3));
  CHECK(separating_walls(*hex, 2, 2) == 0);
  CHECK(separating_walls(*p3, 0, 1) == bit(1));
  CHECK(wall_metric(*hex, 0, 3) == 3);
  // adjacent hexagon vertices 0 and 1 are split only by W2
  CHECK(separating_walls(*hex, 0, 1) == bit(2));
  CHECK(wall_metric(*hex, 0, 1) == 1);
  CHECK(wall_metric(*p3, 0, 2) == 2);
  CHECK_THROWS_AS(wall_metric(*p3, 0, 3), Error);
  CHECK_THROWS_AS(separating_walls(*p3, -1, 0), Error);
}

TEST_CASE("walls_cross") {
  const auto hex = fx::hex6();
  const auto p3 = fx::p3();
  CHECK(walls_cross(*hex, 1, 2));
  CHECK(walls_cross(*hex, 2, 3));
  CHECK(walls_cross(*hex, 1, 3));
  CHECK_FALSE(walls_cross(*p3, 1, 2));
  try {
    walls_cross(*hex, 0, 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TrivialWallQuery);
  }
  CHECK_THROWS_AS(walls_cross(*hex, 1, 9), Error);
}

TEST_CASE("wall metric properties on random spaces") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = fx::random_wallspace(rng);
    const int n = s->point_count();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const Mask xy = separating_walls(*s, x, y);
        CHECK(xy == separating_walls(*s, y, x));
        CHECK_FALSE(test(xy, 0));
        CHECK((xy == 0) == (x == y));
        CHECK(xy == mask_of(oracle::separating(*s, x, y)));
        for (int z = 0; z < n; ++z) {
          CHECK((xy & ~(separating_walls(*s, x, z) | separating_walls(*s, z, y))) == 0);
          CHECK(wall_metric(*s, x, y) <= wall_metric(*s, x, z) + wall_metric(*s, z, y));
        }
      }
    }
  }
}
