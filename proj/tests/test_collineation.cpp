#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace afp;
using afp::test::make_ag;

namespace {

std::vector<std::uint32_t> images_of(const PointBijection& f) { return {f.images().begin(), f.images().end()}; }

std::set<std::vector<std::uint32_t>> image_set(const auto& maps) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& m : maps) {
    if constexpr (requires { m.map(); }) {
      out.insert(images_of(m.map()));
    } else {
      out.insert(images_of(m));
    }
  }
  return out;
}

PointBijection transposition(std::size_t n, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> image(n);
  for (std::uint32_t i = 0; i < n; ++i) image[i] = i;
  std::swap(image[a], image[b]);
  return PointBijection::from_images(image);
}

}  // namespace

TEST_CASE("point bijections") {
  CHECK(PointBijection::identity(4).is_identity());
  CHECK_THROWS_AS(PointBijection::from_images({0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(PointBijection::from_images({0, 3}), InvalidInput);

  const auto f3 = gf(3, 1);
  const auto right = test::shift(f3, 1, 0);
  const auto up = test::shift(f3, 0, 1);
  CHECK(compose(right, inverse(right)).is_identity());
  CHECK(compose(inverse(right), right).is_identity());
  CHECK(compose(right, up) == test::shift(f3, 1, 1));
  CHECK(compose(right, up) == compose(up, right));
}

TEST_CASE("is_collineation") {
  const auto ag22 = make_ag(2);
  CHECK(is_collineation(ag22, PointBijection::identity(4)));
  const auto ag23 = make_ag(3);
  CHECK(is_collineation(ag23, test::shift(gf(3, 1), 1, 0)));
  CHECK_FALSE(is_collineation(ag23, transposition(9, 0, 1)));
  CHECK_THROWS_AS(is_collineation(ag23, PointBijection::identity(4)), InvalidInput);
}

TEST_CASE("classify_dilation") {
  const auto plane = make_ag(3);
  const auto f3 = gf(3, 1);

  const auto id = classify_dilation(plane, PointBijection::identity(9));
  REQUIRE(id);
  CHECK(id->fixed_points().size() == 9);

  const auto homothety = classify_dilation(plane, test::scale(f3, 2));
  REQUIRE(homothety);
  REQUIRE(homothety->fixed_points().size() == 1);
  CHECK(homothety->fixed_points()[0] == ag2_point(3, 0, 0));

  const auto reflection = test::coord_map(3, [](unsigned x, unsigned y) { return std::pair{y, x}; });
  CHECK(is_collineation(plane, reflection));
  CHECK_FALSE(classify_dilation(plane, reflection));
  const auto why = find_dilation_violation(plane, reflection);
  REQUIRE(why);
  CHECK(why->kind == DilationViolation::Kind::kNotParallel);
  const auto l = plane.line_through(why->first, why->second);
  const auto m = plane.line_through(reflection(why->first), reflection(why->second));
  CHECK_FALSE(plane.are_parallel(l, m));

  const auto swap = find_dilation_violation(plane, transposition(9, 0, 1));
  REQUIRE(swap);
  CHECK(swap->kind == DilationViolation::Kind::kNotCollineation);
}

TEST_CASE("classify_translation") {
  const auto plane = make_ag(3);
  const auto f3 = gf(3, 1);
  const auto id = classify_translation(plane, *classify_dilation(plane, PointBijection::identity(9)));
  REQUIRE(id);
  CHECK(id->is_identity());
  CHECK_FALSE(id->direction());

  const auto right = classify_translation(plane, *classify_dilation(plane, test::shift(f3, 1, 0)));
  REQUIRE(right);
  REQUIRE(right->direction());
  CHECK(*right->direction() == plane.direction_of(plane.line_through(ag2_point(3, 0, 0), ag2_point(3, 1, 0))));

  CHECK_FALSE(classify_translation(plane, *classify_dilation(plane, test::scale(f3, 2))));
}

TEST_CASE("trace_line") {
  const auto ag22 = make_ag(2);
  const auto id = *classify_dilation(ag22, PointBijection::identity(4));
  CHECK_FALSE(trace_line(ag22, id, PointId(2)));
  const auto right = *classify_dilation(ag22, test::shift(gf(2, 1), 1, 0));
  CHECK(*trace_line(ag22, right, ag2_point(2, 0, 0)) == *ag22.find_line({ag2_point(2, 0, 0), ag2_point(2, 1, 0)}));

  const auto ag23 = make_ag(3);
  const auto homothety = *classify_dilation(ag23, test::scale(gf(3, 1), 2));
  CHECK_FALSE(trace_line(ag23, homothety, ag2_point(3, 0, 0)));
  CHECK(*trace_line(ag23, homothety, ag2_point(3, 1, 0)) ==
        *ag23.find_line({ag2_point(3, 0, 0), ag2_point(3, 1, 0), ag2_point(3, 2, 0)}));
}

TEST_CASE("extend_translation") {
  const auto plane = make_ag(3);
  const auto same = extend_translation(plane, PointId(4), PointId(4));
  REQUIRE(same);
  CHECK(same.value->is_identity());

  const auto t = extend_translation(plane, ag2_point(3, 0, 0), ag2_point(3, 1, 2));
  REQUIRE(t);
  CHECK(t.value->map() == test::shift(gf(3, 1), 1, 2));

  for (unsigned q : {2u, 3u, 4u, 5u, 8u}) {
    const auto ag = make_ag(q);
    for (std::uint32_t p = 0; p < ag.num_points(); p += 3) {
      for (std::uint32_t r = 0; r < ag.num_points(); ++r) {
        const auto e = extend_translation(ag, PointId(p), PointId(r));
        REQUIRE(e);
        CHECK((*e.value)(PointId(p)) == PointId(r));
      }
    }
  }
}

TEST_CASE("extend_translation fails on a plane without translations") {
  const auto plane = test::derived_hall_plane();
  REQUIRE(plane.axioms_verified());
  const auto e = extend_translation(plane, PointId(0), PointId(1));
  CHECK_FALSE(e);
  CHECK(e.failed_at.has_value());
  CHECK_FALSE(e.reason.empty());
  CHECK(enumerate_translations(plane).size() == 1);
}

TEST_CASE("extend_dilation_fixing") {
  const auto ag23 = make_ag(3);
  const auto o = ag2_point(3, 0, 0), q = ag2_point(3, 1, 0);
  const auto id = extend_dilation_fixing(ag23, o, q, q);
  REQUIRE(id);
  CHECK(id.value->is_identity());

  const auto h = extend_dilation_fixing(ag23, o, q, ag2_point(3, 2, 0));
  REQUIRE(h);
  CHECK(h.value->map() == test::scale(gf(3, 1), 2));

  const auto ag22 = make_ag(2);
  const auto only = extend_dilation_fixing(ag22, ag2_point(2, 0, 0), ag2_point(2, 1, 0), ag2_point(2, 1, 0));
  REQUIRE(only);
  CHECK(only.value->is_identity());

  CHECK_THROWS_AS(extend_dilation_fixing(ag23, o, o, o), InvalidInput);
  CHECK_THROWS_AS(extend_dilation_fixing(ag23, o, q, ag2_point(3, 0, 1)), InvalidInput);
  CHECK_FALSE(extend_dilation_fixing(ag23, o, q, o));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_translations(make_ag(2)).size() == 4);
  CHECK(enumerate_translations(make_ag(3)).size() == 9);
  CHECK(enumerate_translations(make_ag(5)).size() == 25);
  CHECK(enumerate_dilations(make_ag(2)).size() == 4);
  CHECK(enumerate_dilations(make_ag(3)).size() == 18);
  CHECK(enumerate_dilations(make_ag(4)).size() == 48);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    CHECK(enumerate_dilations_fixing(make_ag(q)).size() == q - 1);
  }
}

TEST_CASE("enumeration agrees with the brute-force permutation oracle") {
  for (unsigned q : {2u, 3u}) {
    CAPTURE(q);
    const auto plane = make_ag(q);
    const auto all = test::oracle_all_dilations(plane);
    CHECK(image_set(all) == image_set(enumerate_dilations(plane)));

    std::vector<PointBijection> fixed_point_free;
    for (const auto& f : all) {
      bool moves_all = true;
      for (std::uint32_t p = 0; p < plane.num_points(); ++p) moves_all = moves_all && f(PointId(p)) != PointId(p);
      if (moves_all || f.is_identity()) fixed_point_free.push_back(f);
    }
    CHECK(image_set(fixed_point_free) == image_set(enumerate_translations(plane)));
  }
}

TEST_CASE("dilation and translation invariants") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    const auto plane = make_ag(q);
    const auto lines = test::line_set(plane);
    const auto dilations = enumerate_dilations(plane);
    const auto translations = enumerate_translations(plane);

    for (const auto& d : dilations) {
      CHECK(test::oracle_is_dilation(plane, lines, images_of(d.map())));
      if (d.fixed_points().size() >= 2) CHECK(d.is_identity());
    }
    CHECK(std::is_sorted(dilations.begin(), dilations.end()));

    for (const auto& t : translations) {
      if (t.is_identity()) continue;
      for (std::uint32_t p = 0; p < plane.num_points(); ++p) {
        const auto trace = trace_line(plane, t.dilation(), PointId(p));
        REQUIRE(trace);
        CHECK(plane.direction_of(*trace) == *t.direction());
      }
    }

    // No two distinct translations agree at any point.
    for (std::size_t i = 0; i < translations.size(); ++i) {
      for (std::size_t j = i + 1; j < translations.size(); ++j) {
        for (std::uint32_t p = 0; p < plane.num_points(); ++p) {
          CHECK(translations[i](PointId(p)) != translations[j](PointId(p)));
        }
      }
    }

    // Same-direction composites stay in the class or give the identity.
    for (const auto& a : translations) {
      for (const auto& b : translations) {
        if (a.is_identity() || b.is_identity() || a.direction() != b.direction()) continue;
        const auto c = classify_translation(plane, compose(plane, b.dilation(), a.dilation()));
        REQUIRE(c);
        CHECK((c->is_identity() || c->direction() == a.direction()));
      }
    }
  }
}

TEST_CASE("dilation composition and inverse are re-classified") {
  const auto plane = make_ag(5);
  const auto dilations = enumerate_dilations(plane);
  for (std::size_t i = 0; i < dilations.size(); i += 7) {
    for (std::size_t j = 0; j < dilations.size(); j += 11) {
      const auto c = compose(plane, dilations[i], dilations[j]);
      CHECK(std::binary_search(dilations.begin(), dilations.end(), c));
    }
    CHECK(compose(plane, dilations[i], inverse(plane, dilations[i])).is_identity());
  }
}

TEST_CASE("translations do not depend on the base point") {
  for (unsigned q : {3u, 4u, 5u}) {
    const auto plane = make_ag(q);
    const auto last = PointId(static_cast<std::uint32_t>(plane.num_points() - 1));
    CHECK(image_set(enumerate_translations(plane)) == image_set(enumerate_translations(plane, last)));
    CHECK(image_set(enumerate_dilations(plane)) == image_set(enumerate_dilations(plane, last)));
  }
}

TEST_CASE("non-Desarguesian translation plane") {
  const auto plane = test::nearfield_plane();
  REQUIRE(plane.axioms_verified());
  CHECK(enumerate_translations(plane).size() == 81);
  CHECK(enumerate_dilations(plane).size() == 162);
  // Only the kernel scalars survive as dilations fixing a point.
  CHECK(enumerate_dilations_fixing(plane).size() == 2);
}
