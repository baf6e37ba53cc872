#include "afp/plane_builders.hpp"

namespace afp {

AffinePlane ag2(const FiniteField& field) {
  const auto q = field.order();
  std::vector<std::vector<std::uint32_t>> lines;
  lines.reserve(q * q + q);
  for (unsigned m = 0; m < q; ++m) {
    for (unsigned b = 0; b < q; ++b) {
      std::vector<std::uint32_t> line;
      for (unsigned x = 0; x < q; ++x) line.push_back(ag2_point(q, x, field.add(field.mul(m, x), b)).value);
      lines.push_back(std::move(line));
    }
  }
  for (unsigned c = 0; c < q; ++c) {
    std::vector<std::uint32_t> line;
    for (unsigned y = 0; y < q; ++y) line.push_back(ag2_point(q, c, y).value);
    lines.push_back(std::move(line));
  }
  auto plane = AffinePlane::load(q * q, std::move(lines));
  if (!plane.check_axioms().all_passed()) throw Error("AG(2,q) failed the affine axioms");
  return plane;
}

}  // namespace afp
