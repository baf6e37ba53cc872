#include "afp/collineation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace afp {

PointBijection PointBijection::identity(std::size_t num_points) {
  std::vector<std::uint32_t> image(num_points);
  for (std::size_t i = 0; i < num_points; ++i) image[i] = static_cast<std::uint32_t>(i);
  return PointBijection(std::move(image));
}

PointBijection PointBijection::from_images(std::vector<std::uint32_t> image) {
  std::vector<bool> hit(image.size(), false);
  for (auto v : image) {
    if (v >= image.size() || hit[v]) throw InvalidInput("image table is not a permutation");
    hit[v] = true;
  }
  return PointBijection(std::move(image));
}

bool PointBijection::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

PointBijection compose(const PointBijection& f, const PointBijection& g) {
  if (f.size() != g.size()) throw InvalidInput("cannot compose bijections of different sizes");
  std::vector<std::uint32_t> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.images()[g.images()[i]];
  return PointBijection::from_images(std::move(out));
}

PointBijection inverse(const PointBijection& f) {
  std::vector<std::uint32_t> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[f.images()[i]] = static_cast<std::uint32_t>(i);
  return PointBijection::from_images(std::move(out));
}

namespace {

void require_same_size(const AffinePlane& plane, const PointBijection& f) {
  if (f.size() != plane.num_points()) throw InvalidInput("bijection size does not match the plane");
}

// Image of line l under f as a line, or the first point whose image leaves
// the line through the images of the first two points.
struct LineImage {
  std::optional<LineId> line;
  PointId offender;
};

LineImage image_line(const AffinePlane& plane, const PointBijection& f, LineId l) {
  const auto pts = plane.points_on(l);
  const auto m = plane.line_through(f(pts[0]), f(pts[1]));
  if (plane.points_on(m).size() != pts.size()) return {std::nullopt, pts[1]};
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (!plane.contains(m, f(pts[i]))) return {std::nullopt, pts[i]};
  }
  return {m, pts[0]};
}

std::optional<std::size_t> first_repeated_image(std::span<const std::uint32_t> image) {
  std::vector<bool> hit(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= image.size() || hit[image[i]]) return i;
    hit[image[i]] = true;
  }
  return std::nullopt;
}

}  // namespace

bool is_collineation(const AffinePlane& plane, const PointBijection& f) {
  require_same_size(plane, f);
  for (std::size_t li = 0; li < plane.num_lines(); ++li) {
    if (!image_line(plane, f, LineId(static_cast<std::uint32_t>(li))).line) return false;
  }
  return true;
}

std::optional<DilationViolation> find_dilation_violation(const AffinePlane& plane, const PointBijection& f) {
  require_same_size(plane, f);
  // For a collineation, line(fP, fQ) = f(line(P, Q)), so checking each line
  // once covers every point pair.
  for (std::size_t li = 0; li < plane.num_lines(); ++li) {
    const LineId l(static_cast<std::uint32_t>(li));
    const auto img = image_line(plane, f, l);
    const auto pts = plane.points_on(l);
    if (!img.line) return DilationViolation{DilationViolation::Kind::kNotCollineation, pts[0], img.offender};
    if (!plane.are_parallel(l, *img.line)) {
      return DilationViolation{DilationViolation::Kind::kNotParallel, pts[0], pts[1]};
    }
  }
  return std::nullopt;
}

std::optional<Dilation> classify_dilation(const AffinePlane& plane, const PointBijection& f) {
  if (find_dilation_violation(plane, f)) return std::nullopt;
  std::vector<PointId> fixed;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.images()[i] == i) fixed.emplace_back(static_cast<std::uint32_t>(i));
  }
  return Dilation(f, std::move(fixed));
}

std::optional<Translation> classify_translation(const AffinePlane& plane, const Dilation& d) {
  if (d.is_identity()) return Translation(d, std::nullopt);
  if (!d.fixed_points().empty()) return std::nullopt;
  std::optional<DirectionId> dir;
  for (std::size_t i = 0; i < plane.num_points(); ++i) {
    const PointId p(static_cast<std::uint32_t>(i));
    const auto trace_dir = plane.direction_of(plane.line_through(p, d(p)));
    if (!dir) {
      dir = trace_dir;
    } else if (*dir != trace_dir) {
      return std::nullopt;
    }
  }
  return Translation(d, dir);
}

std::optional<LineId> trace_line(const AffinePlane& plane, const Dilation& d, PointId p) {
  const auto image = d(p);
  if (image == p) return std::nullopt;
  return plane.line_through(p, image);
}

Dilation compose(const AffinePlane& plane, const Dilation& f, const Dilation& g) {
  auto d = classify_dilation(plane, compose(f.map(), g.map()));
  if (!d) throw VerificationError("composite of two dilations is not a dilation");
  return *d;
}

Dilation inverse(const AffinePlane& plane, const Dilation& f) {
  auto d = classify_dilation(plane, inverse(f.map()));
  if (!d) throw VerificationError("inverse of a dilation is not a dilation");
  return *d;
}

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

template <class T>
Extension<T> failure(PointId where, std::string reason) {
  return Extension<T>{std::nullopt, where, std::move(reason)};
}

std::optional<PointId> first_point_off(const AffinePlane& plane, LineId l) {
  for (std::size_t i = 0; i < plane.num_points(); ++i) {
    const PointId r(static_cast<std::uint32_t>(i));
    if (!plane.contains(l, r)) return r;
  }
  return std::nullopt;
}

// Validates a fully assigned image table as a dilation, naming the first
// offending point otherwise.
Extension<Dilation> validate_dilation(const AffinePlane& plane, std::vector<std::uint32_t> image) {
  if (auto dup = first_repeated_image(image)) {
    return failure<Dilation>(PointId(static_cast<std::uint32_t>(*dup)), "constructed map is not injective");
  }
  auto f = PointBijection::from_images(std::move(image));
  if (auto v = find_dilation_violation(plane, f)) {
    return failure<Dilation>(v->second, v->kind == DilationViolation::Kind::kNotCollineation
                                            ? "constructed map does not send lines to lines"
                                            : "constructed map sends a line to a non-parallel line");
  }
  return Extension<Dilation>{classify_dilation(plane, f), std::nullopt, {}};
}

}  // namespace

Extension<Translation> extend_translation(const AffinePlane& plane, PointId p, PointId q) {
  const auto n = plane.num_points();
  if (p == q) {
    auto id = classify_dilation(plane, PointBijection::identity(n));
    return Extension<Translation>{classify_translation(plane, *id), std::nullopt, {}};
  }
  const auto pq = plane.line_through(p, q);
  std::vector<std::uint32_t> image(n, kUnset);
  image[p.value] = q.value;

  for (std::size_t i = 0; i < n; ++i) {
    const PointId r(static_cast<std::uint32_t>(i));
    if (plane.contains(pq, r)) continue;
    const auto along = plane.parallel_line_through(pq, r);
    const auto across = plane.parallel_line_through(plane.line_through(p, r), q);
    const auto meet = plane.intersection(along, across);
    if (!meet) return failure<Translation>(r, "extension lines do not meet");
    image[i] = meet->value;
  }
  const auto anchor = first_point_off(plane, pq);
  if (!anchor) return failure<Translation>(p, "all points are collinear");
  const PointId anchor_image(image[anchor->value]);
  for (auto r : plane.points_on(pq)) {
    if (r == p) continue;
    const auto across = plane.parallel_line_through(plane.line_through(*anchor, r), anchor_image);
    const auto meet = plane.intersection(pq, across);
    if (!meet) return failure<Translation>(r, "extension lines do not meet");
    image[r.value] = meet->value;
  }

  auto dil = validate_dilation(plane, std::move(image));
  if (!dil) return failure<Translation>(*dil.failed_at, dil.reason);
  auto tr = classify_translation(plane, *dil.value);
  if (!tr) {
    const auto& fixed = dil.value->fixed_points();
    return failure<Translation>(fixed.empty() ? p : fixed.front(), "constructed dilation is not a translation");
  }
  return Extension<Translation>{std::move(tr), std::nullopt, {}};
}

Extension<Dilation> extend_dilation_fixing(const AffinePlane& plane, PointId p, PointId q, PointId q_image) {
  const auto n = plane.num_points();
  if (p == q) throw InvalidInput("extend_dilation_fixing needs Q != P");
  const auto pq = plane.line_through(p, q);
  if (!plane.contains(pq, q_image)) throw InvalidInput("image of Q must lie on line(P, Q)");
  if (q_image == p) return failure<Dilation>(q, "Q and P would share an image");
  if (q_image == q) {
    const auto id = PointBijection::identity(n);
    return validate_dilation(plane, std::vector<std::uint32_t>(id.images().begin(), id.images().end()));
  }

  std::vector<std::uint32_t> image(n, kUnset);
  image[p.value] = p.value;
  image[q.value] = q_image.value;
  for (std::size_t i = 0; i < n; ++i) {
    const PointId r(static_cast<std::uint32_t>(i));
    if (plane.contains(pq, r)) continue;
    const auto ray = plane.line_through(p, r);
    const auto across = plane.parallel_line_through(plane.line_through(q, r), q_image);
    const auto meet = plane.intersection(ray, across);
    if (!meet) return failure<Dilation>(r, "extension lines do not meet");
    image[i] = meet->value;
  }
  const auto anchor = first_point_off(plane, pq);
  if (!anchor) return failure<Dilation>(p, "all points are collinear");
  const PointId anchor_image(image[anchor->value]);
  for (auto r : plane.points_on(pq)) {
    if (r == p || r == q) continue;
    const auto across = plane.parallel_line_through(plane.line_through(*anchor, r), anchor_image);
    const auto meet = plane.intersection(pq, across);
    if (!meet) return failure<Dilation>(r, "extension lines do not meet");
    image[r.value] = meet->value;
  }
  return validate_dilation(plane, std::move(image));
}

std::vector<Translation> enumerate_translations(const AffinePlane& plane, PointId base) {
  std::vector<Translation> out;
  std::set<PointBijection> seen;
  for (std::size_t i = 0; i < plane.num_points(); ++i) {
    auto ext = extend_translation(plane, base, PointId(static_cast<std::uint32_t>(i)));
    if (ext && seen.insert(ext.value->map()).second) out.push_back(std::move(*ext.value));
  }
  std::sort(out.begin(), out.end(), [](const Translation& a, const Translation& b) { return a.map() < b.map(); });
  return out;
}

std::vector<Dilation> enumerate_dilations_fixing(const AffinePlane& plane, PointId base) {
  const PointId other(base.value == 0 ? 1 : 0);
  const auto l = plane.line_through(base, other);
  std::vector<Dilation> out;
  for (auto target : plane.points_on(l)) {
    if (target == base) continue;
    auto ext = extend_dilation_fixing(plane, base, other, target);
    if (ext) out.push_back(std::move(*ext.value));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Dilation> enumerate_dilations(const AffinePlane& plane, PointId base) {
  std::vector<Dilation> generators;
  for (auto& t : enumerate_translations(plane, base)) {
    if (!t.is_identity()) generators.push_back(t.dilation());
  }
  for (auto& d : enumerate_dilations_fixing(plane, base)) {
    if (!d.is_identity()) generators.push_back(std::move(d));
  }

  // Closure under composition, breadth first from the identity.
  std::set<PointBijection> seen;
  std::vector<Dilation> out;
  auto id = classify_dilation(plane, PointBijection::identity(plane.num_points()));
  seen.insert(id->map());
  out.push_back(*id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      auto next = compose(g.map(), out[head].map());
      if (seen.contains(next)) continue;
      auto d = classify_dilation(plane, next);
      if (!d) throw VerificationError("composite of two dilations is not a dilation");
      seen.insert(std::move(next));
      out.push_back(std::move(*d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace afp
