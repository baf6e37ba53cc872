#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace afp::test {

AffinePlane make_ag(unsigned q) { return ag2(gf_of_order(q)); }

PointBijection coord_map(unsigned q, const std::function<std::pair<unsigned, unsigned>(unsigned, unsigned)>& f) {
  std::vector<std::uint32_t> image(q * q);
  for (unsigned x = 0; x < q; ++x) {
    for (unsigned y = 0; y < q; ++y) {
      const auto [u, v] = f(x, y);
      image[x * q + y] = u * q + v;
    }
  }
  return PointBijection::from_images(std::move(image));
}

PointBijection shift(const FiniteField& field, unsigned a, unsigned b) {
  return coord_map(field.order(), [&](unsigned x, unsigned y) {
    return std::pair{field.add(x, a), field.add(y, b)};
  });
}

PointBijection scale(const FiniteField& field, unsigned c) {
  return coord_map(field.order(), [&](unsigned x, unsigned y) {
    return std::pair{field.mul(c, x), field.mul(c, y)};
  });
}

LineSet line_set(const AffinePlane& plane) {
  LineSet out;
  for (const auto& l : plane.canonical_lines()) out.insert(l);
  return out;
}

bool disjoint_or_equal(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a == b) return true;
  for (auto p : a) {
    if (std::find(b.begin(), b.end(), p) != b.end()) return false;
  }
  return true;
}

namespace {

const std::vector<std::uint32_t>* joining(const LineSet& lines, std::uint32_t p, std::uint32_t q) {
  for (const auto& l : lines) {
    if (std::binary_search(l.begin(), l.end(), p) && std::binary_search(l.begin(), l.end(), q)) return &l;
  }
  return nullptr;
}

}  // namespace

bool oracle_is_dilation(const AffinePlane& plane, const LineSet& lines, const std::vector<std::uint32_t>& image) {
  const auto n = plane.num_points();
  std::vector<std::uint32_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (sorted[i] != i) return false;
  }
  for (const auto& l : lines) {
    std::vector<std::uint32_t> img;
    for (auto p : l) img.push_back(image[p]);
    std::sort(img.begin(), img.end());
    if (!lines.count(img)) return false;
  }
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = p + 1; q < n; ++q) {
      const auto* a = joining(lines, p, q);
      const auto* b = joining(lines, image[p], image[q]);
      if (!a || !b || !disjoint_or_equal(*a, *b)) return false;
    }
  }
  return true;
}

std::vector<PointBijection> oracle_all_dilations(const AffinePlane& plane) {
  const auto lines = line_set(plane);
  std::vector<std::uint32_t> perm(plane.num_points());
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<PointBijection> out;
  do {
    if (oracle_is_dilation(plane, lines, perm)) out.push_back(PointBijection::from_images(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TranslationGroupFixture group_fixture(AffinePlane plane) {
  auto group = TranslationGroup::build(plane, enumerate_translations(plane));
  auto dilations = enumerate_dilations(plane);
  return {std::move(plane), std::move(group), std::move(dilations)};
}

TIndex vector_index(const TranslationGroup& group, unsigned q, unsigned a, unsigned b) {
  return *group.taking(ag2_point(q, 0, 0), ag2_point(q, a, b));
}

namespace {

// GF(9) = GF(3)[i]/(i^2 + 1), element a + b i at index a + 3b.
const FiniteField& gf9() {
  static const FiniteField f = gf(3, 2, std::vector<unsigned>{1, 0, 1});
  return f;
}

// Regular nearfield of order 9: a o b = a b when b is a nonzero square, a^3 b otherwise.
unsigned nearfield_mul(unsigned a, unsigned b) {
  const auto& f = gf9();
  if (a == 0 || b == 0) return 0;
  bool square = false;
  for (unsigned x = 1; x < 9; ++x) square = square || f.mul(x, x) == b;
  return square ? f.mul(a, b) : f.mul(f.mul(a, f.mul(a, a)), b);
}

std::vector<std::vector<std::uint32_t>> nearfield_lines() {
  const auto& f = gf9();
  std::vector<std::vector<std::uint32_t>> lines;
  for (unsigned m = 0; m < 9; ++m) {
    for (unsigned b = 0; b < 9; ++b) {
      std::vector<std::uint32_t> l;
      for (unsigned x = 0; x < 9; ++x) l.push_back(x * 9 + f.add(nearfield_mul(x, m), b));
      lines.push_back(std::move(l));
    }
  }
  for (unsigned c = 0; c < 9; ++c) {
    std::vector<std::uint32_t> l;
    for (unsigned y = 0; y < 9; ++y) l.push_back(c * 9 + y);
    lines.push_back(std::move(l));
  }
  return lines;
}

}  // namespace

AffinePlane nearfield_plane() {
  auto plane = AffinePlane::load(81, nearfield_lines());
  plane.check_axioms();
  return plane;
}

AffinePlane derived_hall_plane() {
  // Projective completion: affine line i gets the point at infinity 81 + its
  // slope class (verticals are class 9); points 81..90 form the line at infinity.
  auto lines = nearfield_lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    lines[i].push_back(81 + static_cast<std::uint32_t>(i < 81 ? i / 9 : 9));
  }
  std::vector<std::uint32_t> infinity(10);
  std::iota(infinity.begin(), infinity.end(), 81u);
  lines.push_back(infinity);

  // Delete line 0 and its points, then renumber the survivors in order.
  const auto removed = lines.front();
  std::vector<std::int64_t> relabel(91, -1);
  std::uint32_t next = 0;
  for (std::uint32_t p = 0; p < 91; ++p) {
    if (std::find(removed.begin(), removed.end(), p) == removed.end()) relabel[p] = next++;
  }
  std::vector<std::vector<std::uint32_t>> affine;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::uint32_t> l;
    for (auto p : lines[i]) {
      if (relabel[p] >= 0) l.push_back(static_cast<std::uint32_t>(relabel[p]));
    }
    affine.push_back(std::move(l));
  }
  auto plane = AffinePlane::load(next, std::move(affine));
  plane.check_axioms();
  return plane;
}

}  // namespace afp::test
