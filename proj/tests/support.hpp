#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "afp/collineation.hpp"
#include "afp/endomorphism.hpp"
#include "afp/field.hpp"
#include "afp/plane_builders.hpp"
#include "afp/skewfield.hpp"
#include "afp/trgroup.hpp"

namespace afp::test {

AffinePlane make_ag(unsigned q);

/// Point map of AG(2,q) given on coordinates.
PointBijection coord_map(unsigned q, const std::function<std::pair<unsigned, unsigned>(unsigned, unsigned)>& f);

/// (x, y) -> (x + a, y + b) over `field`.
PointBijection shift(const FiniteField& field, unsigned a, unsigned b);
/// (x, y) -> (c x, c y) over `field`.
PointBijection scale(const FiniteField& field, unsigned c);

// Oracles working on raw point sets only: no joining table, no directions.
using LineSet = std::set<std::vector<std::uint32_t>>;
LineSet line_set(const AffinePlane& plane);
bool disjoint_or_equal(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
/// Literal definition: bijection, lines to lines, and line(P,Q) parallel to
/// line(fP,fQ) for every pair P != Q.
bool oracle_is_dilation(const AffinePlane& plane, const LineSet& lines, const std::vector<std::uint32_t>& image);
/// Every dilation by scanning all permutations of the points (<= 9 points).
std::vector<PointBijection> oracle_all_dilations(const AffinePlane& plane);

struct TranslationGroupFixture {
  AffinePlane plane;
  TranslationGroup group;
  std::vector<Dilation> dilations;
};
TranslationGroupFixture group_fixture(AffinePlane plane);

/// Index of the translation (x, y) -> (x + a, y + b) in the group of AG(2,q).
TIndex vector_index(const TranslationGroup& group, unsigned q, unsigned a, unsigned b);

// Non-Desarguesian planes of order 9 over the nearfield on GF(9).
/// Translation plane with lines y = x o m + b and x = c.
AffinePlane nearfield_plane();
/// Projective completion of nearfield_plane() with one affine line chosen as
/// the new line at infinity. Only the identity is a translation.
AffinePlane derived_hall_plane();

}  // namespace afp::test
