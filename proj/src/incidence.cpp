#include "afp/incidence.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace afp {

namespace {

constexpr std::uint32_t kNoLine = UINT32_MAX;

nlohmann::json point_list(std::span<const PointId> pts) {
  auto out = nlohmann::json::array();
  for (auto p : pts) out.push_back(p.value);
  return out;
}

}  // namespace

AffinePlane AffinePlane::load(std::size_t num_points, std::vector<std::vector<std::uint32_t>> lines) {
  AffinePlane plane;
  plane.num_points_ = num_points;
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto& line = lines[i];
    const auto where = "line " + std::to_string(i);
    if (line.size() < 2) throw InvalidInput(where + " has fewer than 2 points");
    std::sort(line.begin(), line.end());
    if (line.back() >= num_points) {
      throw InvalidInput(where + ": point index " + std::to_string(line.back()) + " out of range");
    }
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw InvalidInput(where + " repeats a point");
    }
    if (!seen.insert(line).second) throw InvalidInput(where + " duplicates an earlier line");
  }

  plane.lines_.reserve(lines.size());
  plane.through_.resize(num_points);
  plane.incidence_.assign(lines.size() * num_points, 0);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<PointId> pts;
    pts.reserve(lines[i].size());
    for (auto p : lines[i]) {
      pts.emplace_back(p);
      plane.through_[p].emplace_back(static_cast<std::uint32_t>(i));
      plane.incidence_[i * num_points + p] = 1;
    }
    plane.lines_.push_back(std::move(pts));
  }
  return plane;
}

void AffinePlane::check_point(PointId p) const {
  if (p.value >= num_points_) throw InvalidInput("point " + std::to_string(p.value) + " out of range");
}

void AffinePlane::check_line(LineId l) const {
  if (l.value >= lines_.size()) throw InvalidInput("line " + std::to_string(l.value) + " out of range");
}

void AffinePlane::require_verified(const char* what) const {
  if (!verified_) throw Error(std::string(what) + " requires a plane that passed check_axioms");
}

std::span<const PointId> AffinePlane::points_on(LineId l) const {
  check_line(l);
  return lines_[l.value];
}

std::span<const LineId> AffinePlane::lines_through(PointId p) const {
  check_point(p);
  return through_[p.value];
}

bool AffinePlane::contains(LineId l, PointId p) const {
  check_line(l);
  check_point(p);
  return incidence_[l.value * num_points_ + p.value] != 0;
}

bool AffinePlane::are_parallel(LineId l, LineId m) const {
  check_line(l);
  check_line(m);
  if (l == m) return true;
  const auto* row = &incidence_[m.value * num_points_];
  return std::none_of(lines_[l.value].begin(), lines_[l.value].end(), [&](PointId p) { return row[p.value] != 0; });
}

VerificationReport AffinePlane::check_axioms() {
  verified_ = false;
  direction_of_.clear();
  directions_.clear();
  const auto n = num_points_;
  VerificationReport report;

  // Joining line: every pair of distinct points on exactly one line.
  join_.assign(n * n, kNoLine);
  std::optional<nlohmann::json> join_witness;
  std::string join_detail;
  for (std::size_t li = 0; li < lines_.size() && !join_witness; ++li) {
    const auto& pts = lines_[li];
    for (std::size_t a = 0; a < pts.size() && !join_witness; ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        auto& slot = join_[pts[a].value * n + pts[b].value];
        if (slot != kNoLine) {
          join_detail = "two points lie on more than one common line";
          join_witness = nlohmann::json{{"points", {pts[a].value, pts[b].value}}, {"lines", {slot, li}}};
          break;
        }
        slot = static_cast<std::uint32_t>(li);
        join_[pts[b].value * n + pts[a].value] = slot;
      }
    }
  }
  for (std::size_t p = 0; p < n && !join_witness; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (join_[p * n + q] == kNoLine) {
        join_detail = "two points lie on no common line";
        join_witness = nlohmann::json{{"points", {p, q}}, {"lines", nlohmann::json::array()}};
        break;
      }
    }
  }
  if (join_witness) {
    report.fail("unique_joining_line", join_detail, *join_witness);
  } else {
    report.pass("unique_joining_line");
  }

  // Playfair: through P off l exactly one line disjoint from l.
  std::optional<nlohmann::json> playfair_witness;
  for (std::size_t p = 0; p < n && !playfair_witness; ++p) {
    for (std::size_t li = 0; li < lines_.size(); ++li) {
      const LineId l(static_cast<std::uint32_t>(li));
      if (incidence_[li * n + p] != 0) continue;
      std::size_t parallels = 0;
      for (auto m : through_[p]) {
        if (are_parallel(l, m)) ++parallels;
      }
      if (parallels != 1) {
        playfair_witness = nlohmann::json{
            {"point", p}, {"line", li}, {"line_points", point_list(lines_[li])}, {"parallels_through_point", parallels}};
        break;
      }
    }
  }
  if (playfair_witness) {
    report.fail("playfair_parallel", "number of parallels through an outside point is not one", *playfair_witness);
  } else {
    report.pass("playfair_parallel");
  }

  // Triangle: three points not on one line.
  std::optional<nlohmann::json> triangle;
  if (n >= 3) {
    for (std::size_t li = 0; li < lines_.size() && !triangle; ++li) {
      const auto& pts = lines_[li];
      for (std::size_t r = 0; r < n; ++r) {
        if (incidence_[li * n + r] == 0) {
          triangle = nlohmann::json{{"points", {pts[0].value, pts[1].value, r}}};
          break;
        }
      }
    }
  }
  if (triangle) {
    report.pass("triangle_exists", {}, *triangle);
  } else {
    report.fail("triangle_exists", "all points are collinear or there are fewer than three",
                nlohmann::json{{"num_points", n}, {"num_lines", lines_.size()}});
  }

  if (!report.all_passed()) return report;

  // Parallel classes. Playfair makes "equal or disjoint" an equivalence;
  // the partition is still checked for consistency against every class member.
  direction_of_.assign(lines_.size(), DirectionId(UINT32_MAX));
  std::optional<nlohmann::json> partition_witness;
  for (std::size_t li = 0; li < lines_.size() && !partition_witness; ++li) {
    const LineId l(static_cast<std::uint32_t>(li));
    bool placed = false;
    for (std::size_t d = 0; d < directions_.size(); ++d) {
      auto& cls = directions_[d];
      const bool with_first = are_parallel(l, cls.front());
      if (!with_first) continue;
      for (auto m : cls) {
        if (!are_parallel(l, m)) {
          partition_witness = nlohmann::json{{"lines", {cls.front().value, m.value, li}}};
          break;
        }
      }
      cls.push_back(l);
      direction_of_[li] = DirectionId(static_cast<std::uint32_t>(d));
      placed = true;
      break;
    }
    if (!placed) {
      direction_of_[li] = DirectionId(static_cast<std::uint32_t>(directions_.size()));
      directions_.push_back({l});
    }
  }
  if (partition_witness) {
    directions_.clear();
    direction_of_.clear();
    report.fail("parallel_classes", "parallelism is not transitive", *partition_witness);
    return report;
  }
  auto sizes = nlohmann::json::array();
  for (const auto& cls : directions_) sizes.push_back(cls.size());
  report.pass("parallel_classes", std::to_string(directions_.size()) + " classes",
              nlohmann::json{{"num_classes", directions_.size()}, {"class_sizes", sizes}});
  verified_ = true;
  return report;
}

LineId AffinePlane::line_through(PointId p, PointId q) const {
  require_verified("line_through");
  check_point(p);
  check_point(q);
  if (p == q) throw InvalidInput("line_through needs two distinct points");
  return LineId(join_[p.value * num_points_ + q.value]);
}

LineId AffinePlane::parallel_line_through(LineId l, PointId p) const {
  require_verified("parallel_line_through");
  check_line(l);
  check_point(p);
  const auto d = direction_of_[l.value];
  for (auto m : through_[p.value]) {
    if (direction_of_[m.value] == d) return m;
  }
  throw Error("no parallel through point; plane invariants broken");
}

std::optional<PointId> AffinePlane::intersection(LineId l, LineId m) const {
  require_verified("intersection");
  check_line(l);
  check_line(m);
  if (l == m) return std::nullopt;
  const auto* row = &incidence_[m.value * num_points_];
  for (auto p : lines_[l.value]) {
    if (row[p.value] != 0) return p;
  }
  return std::nullopt;
}

DirectionId AffinePlane::direction_of(LineId l) const {
  require_verified("direction_of");
  check_line(l);
  return direction_of_[l.value];
}

std::span<const LineId> AffinePlane::lines_in_direction(DirectionId d) const {
  require_verified("lines_in_direction");
  if (d.value >= directions_.size()) throw InvalidInput("direction out of range");
  return directions_[d.value];
}

std::optional<LineId> AffinePlane::find_line(std::vector<PointId> points) const {
  if (points.size() < 2) return std::nullopt;
  for (auto p : points) check_point(p);
  std::sort(points.begin(), points.end());
  for (auto l : through_[points.front().value]) {
    if (lines_[l.value] == points) return l;
  }
  return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> AffinePlane::canonical_lines() const {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(lines_.size());
  for (const auto& line : lines_) {
    std::vector<std::uint32_t> pts;
    pts.reserve(line.size());
    for (auto p : line) pts.push_back(p.value);
    out.push_back(std::move(pts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace afp
