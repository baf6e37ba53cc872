#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "afp/incidence.hpp"

namespace afp {

/// Permutation of the points of a plane, stored as a dense image table.
class PointBijection {
 public:
  static PointBijection identity(std::size_t num_points);
  /// Throws InvalidInput unless `image` is a permutation of [0, size).
  static PointBijection from_images(std::vector<std::uint32_t> image);

  PointId operator()(PointId p) const { return PointId(image_[p.value]); }
  std::size_t size() const { return image_.size(); }
  std::span<const std::uint32_t> images() const { return image_; }
  bool is_identity() const;

  auto operator<=>(const PointBijection&) const = default;

 private:
  explicit PointBijection(std::vector<std::uint32_t> image) : image_(std::move(image)) {}
  std::vector<std::uint32_t> image_;
};

/// (f o g)(P) = f(g(P)).
PointBijection compose(const PointBijection& f, const PointBijection& g);
PointBijection inverse(const PointBijection& f);

/// Collineation mapping every line to a parallel line.
class Dilation {
 public:
  const PointBijection& map() const { return map_; }
  PointId operator()(PointId p) const { return map_(p); }
  std::span<const PointId> fixed_points() const { return fixed_; }
  bool is_identity() const { return map_.is_identity(); }

  bool operator==(const Dilation& o) const { return map_ == o.map_; }
  auto operator<=>(const Dilation& o) const { return map_ <=> o.map_; }

 private:
  friend std::optional<Dilation> classify_dilation(const AffinePlane&, const PointBijection&);
  Dilation(PointBijection map, std::vector<PointId> fixed) : map_(std::move(map)), fixed_(std::move(fixed)) {}

  PointBijection map_;
  std::vector<PointId> fixed_;
};

/// The identity or a fixed-point-free dilation. The direction is the parallel
/// class of its traces; the identity has none.
class Translation {
 public:
  const Dilation& dilation() const { return dilation_; }
  const PointBijection& map() const { return dilation_.map(); }
  PointId operator()(PointId p) const { return dilation_(p); }
  std::optional<DirectionId> direction() const { return direction_; }
  bool is_identity() const { return !direction_.has_value(); }

  bool operator==(const Translation& o) const { return dilation_ == o.dilation_; }

 private:
  friend std::optional<Translation> classify_translation(const AffinePlane&, const Dilation&);
  Translation(Dilation d, std::optional<DirectionId> dir) : dilation_(std::move(d)), direction_(dir) {}

  Dilation dilation_;
  std::optional<DirectionId> direction_;
};

/// Why a map fails to be a dilation. For kNotCollineation, `first`/`second`
/// lie on a line whose image is not a line; for kNotParallel, the image of
/// line(first, second) is not parallel to it.
struct DilationViolation {
  enum class Kind { kNotCollineation, kNotParallel };
  Kind kind;
  PointId first;
  PointId second;
};

// All predicates below need a plane that passed check_axioms.
bool is_collineation(const AffinePlane& plane, const PointBijection& f);
std::optional<DilationViolation> find_dilation_violation(const AffinePlane& plane, const PointBijection& f);
std::optional<Dilation> classify_dilation(const AffinePlane& plane, const PointBijection& f);
std::optional<Translation> classify_translation(const AffinePlane& plane, const Dilation& d);
/// Line through P and d(P); absent when P is fixed.
std::optional<LineId> trace_line(const AffinePlane& plane, const Dilation& d, PointId p);

/// Composite of two dilations, re-classified. Throws VerificationError if the
/// composite is not a dilation.
Dilation compose(const AffinePlane& plane, const Dilation& f, const Dilation& g);
Dilation inverse(const AffinePlane& plane, const Dilation& f);

/// Result of a parallel-line extension. On failure `failed_at` names the
/// point where the construction or its validation broke down.
template <class T>
struct Extension {
  std::optional<T> value;
  std::optional<PointId> failed_at;
  std::string reason;

  explicit operator bool() const { return value.has_value(); }
};

/// The translation taking P to Q, built by parallel-line extension and then
/// validated. Absent when the plane has no such translation.
Extension<Translation> extend_translation(const AffinePlane& plane, PointId p, PointId q);

/// The dilation fixing P and sending Q to `q_image` (which must lie on
/// line(P, Q), Q != P). Absent when no such dilation exists.
Extension<Dilation> extend_dilation_fixing(const AffinePlane& plane, PointId p, PointId q, PointId q_image);

/// Translations found from the images of `base`, sorted (identity first, then
/// lexicographic by image table).
std::vector<Translation> enumerate_translations(const AffinePlane& plane, PointId base = PointId(0));

/// Dilations fixing `base`, sorted lexicographically (identity first).
std::vector<Dilation> enumerate_dilations_fixing(const AffinePlane& plane, PointId base = PointId(0));

/// The group generated by the translations and the dilations fixing `base`,
/// sorted lexicographically.
std::vector<Dilation> enumerate_dilations(const AffinePlane& plane, PointId base = PointId(0));

}  // namespace afp
