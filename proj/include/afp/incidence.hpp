#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "afp/report.hpp"
#include "afp/types.hpp"

namespace afp {

/// Finite incidence structure with lines stored as sorted point sets.
///
/// `load` only checks structure. The geometric queries that rely on the
/// affine axioms (joining line, parallel through a point, directions) become
/// available once `check_axioms` has passed; after that the plane is not
/// mutated again and can be shared freely between threads.
class AffinePlane {
 public:
  static AffinePlane load(std::size_t num_points, std::vector<std::vector<std::uint32_t>> lines);

  std::size_t num_points() const { return num_points_; }
  std::size_t num_lines() const { return lines_.size(); }

  std::span<const PointId> points_on(LineId l) const;
  std::span<const LineId> lines_through(PointId p) const;
  bool contains(LineId l, PointId p) const;

  /// Checks the joining-line axiom, the Playfair parallel axiom and the
  /// existence of a triangle. On success the parallel classes are computed.
  VerificationReport check_axioms();
  bool axioms_verified() const { return verified_; }

  /// Equal or disjoint. Valid before the axioms are checked.
  bool are_parallel(LineId l, LineId m) const;

  // The following require a plane that passed check_axioms.
  LineId line_through(PointId p, PointId q) const;
  LineId parallel_line_through(LineId l, PointId p) const;
  std::optional<PointId> intersection(LineId l, LineId m) const;
  std::size_t num_directions() const { return directions_.size(); }
  DirectionId direction_of(LineId l) const;
  std::span<const LineId> lines_in_direction(DirectionId d) const;

  /// Line whose point set is exactly `points` (any order).
  std::optional<LineId> find_line(std::vector<PointId> points) const;

  /// Lines as sorted index lists, in lexicographic order.
  std::vector<std::vector<std::uint32_t>> canonical_lines() const;

 private:
  AffinePlane() = default;

  void require_verified(const char* what) const;
  void check_point(PointId p) const;
  void check_line(LineId l) const;

  std::size_t num_points_ = 0;
  std::vector<std::vector<PointId>> lines_;
  std::vector<std::vector<LineId>> through_;
  std::vector<std::uint8_t> incidence_;  // num_lines x num_points

  bool verified_ = false;
  std::vector<std::uint32_t> join_;  // num_points x num_points, kNoLine on the diagonal
  std::vector<DirectionId> direction_of_;
  std::vector<std::vector<LineId>> directions_;
};

}  // namespace afp
