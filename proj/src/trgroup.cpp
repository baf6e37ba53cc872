#include "afp/trgroup.hpp"

#include <algorithm>
#include <random>

namespace afp {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;
constexpr std::size_t kExhaustiveAssociativityOrder = 16;
constexpr std::size_t kAssociativitySamples = 10000;

nlohmann::json triple(std::size_t a, std::size_t b, std::size_t c) { return {{"elements", {a, b, c}}}; }
nlohmann::json pair(std::size_t a, std::size_t b) { return {{"elements", {a, b}}}; }

}  // namespace

CayleyTable::CayleyTable(std::size_t order, std::vector<std::uint32_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) throw InvalidInput("Cayley table size does not match its order");
  for (auto e : entries_) {
    if (e >= order_) throw InvalidInput("Cayley table entry out of range");
  }
}

VerificationReport verify_group_table(const CayleyTable& t) {
  VerificationReport report;
  const auto n = t.order();
  const auto at = [&](std::size_t a, std::size_t b) { return t(TIndex(a), TIndex(b)).value; };

  std::optional<nlohmann::json> w;
  for (std::size_t a = 0; a < n && !w; ++a) {
    if (at(0, a) != a || at(a, 0) != a) w = nlohmann::json{{"element", a}};
  }
  if (w) {
    report.fail("group_identity", "index 0 is not a two-sided identity", *w);
  } else {
    report.pass("group_identity");
  }

  w.reset();
  for (std::size_t a = 0; a < n && !w; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == 0 && at(b, a) == 0;
    if (!found) w = nlohmann::json{{"element", a}};
  }
  if (w) {
    report.fail("group_inverses", "element without a two-sided inverse", *w);
  } else {
    report.pass("group_inverses");
  }

  w.reset();
  if (n <= kExhaustiveAssociativityOrder) {
    for (std::size_t a = 0; a < n && !w; ++a)
      for (std::size_t b = 0; b < n && !w; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) {
            w = triple(a, b, c);
            break;
          }
  } else if (n > 0) {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < kAssociativitySamples && !w; ++s) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c))) w = triple(a, b, c);
    }
  }
  const std::string how = n <= kExhaustiveAssociativityOrder ? "exhaustive" : "sampled";
  if (w) {
    report.fail("group_associative", how, *w);
  } else {
    report.pass("group_associative", how);
  }
  return report;
}

VerificationReport verify_abelian(const CayleyTable& t) {
  VerificationReport report;
  for (std::size_t a = 0; a < t.order(); ++a) {
    for (std::size_t b = a + 1; b < t.order(); ++b) {
      if (t(TIndex(a), TIndex(b)) != t(TIndex(b), TIndex(a))) {
        report.fail("abelian", "composition does not commute", pair(a, b));
        return report;
      }
    }
  }
  report.pass("abelian");
  return report;
}

TranslationGroup TranslationGroup::build(const AffinePlane& plane, std::vector<Translation> translations) {
  TranslationGroup g;
  g.num_points_ = plane.num_points();
  std::sort(translations.begin(), translations.end(),
            [](const Translation& a, const Translation& b) { return a.map() < b.map(); });
  translations.erase(std::unique(translations.begin(), translations.end()), translations.end());
  if (translations.empty() || !translations.front().is_identity()) {
    throw VerificationError("translation list does not contain the identity");
  }
  g.elements_ = std::move(translations);
  const auto n = g.elements_.size();
  for (std::size_t i = 0; i < n; ++i) g.index_of_.emplace(g.elements_[i].map(), static_cast<std::uint32_t>(i));

  std::vector<std::uint32_t> entries(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = g.index_of_.find(afp::compose(g.elements_[a].map(), g.elements_[b].map()));
      if (it == g.index_of_.end()) {
        throw VerificationError("translations not closed: composite of elements " + std::to_string(a) + " and " +
                                std::to_string(b) + " is missing");
      }
      entries[a * n + b] = it->second;
    }
  }
  g.cayley_ = CayleyTable(n, std::move(entries));

  g.inverse_.assign(n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = g.index_of_.find(afp::inverse(g.elements_[a].map()));
    if (it == g.index_of_.end()) throw VerificationError("inverse of element " + std::to_string(a) + " is missing");
    g.inverse_[a] = it->second;
  }

  const auto np = g.num_points_;
  g.taking_.assign(np * np, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const auto img = g.elements_[i].map().images();
    for (std::size_t r = 0; r < np; ++r) {
      auto& slot = g.taking_[r * np + img[r]];
      if (slot != kNone) {
        throw VerificationError("elements " + std::to_string(slot) + " and " + std::to_string(i) +
                                " agree at point " + std::to_string(r));
      }
      slot = static_cast<std::uint32_t>(i);
    }
  }
  return g;
}

std::optional<TIndex> TranslationGroup::taking(PointId r, PointId q) const {
  if (r.value >= num_points_ || q.value >= num_points_) throw InvalidInput("point out of range");
  const auto v = taking_[r.value * num_points_ + q.value];
  if (v == kNone) return std::nullopt;
  return TIndex(v);
}

bool TranslationGroup::is_transitive() const {
  return std::none_of(taking_.begin(), taking_.end(), [](std::uint32_t v) { return v == kNone; });
}

std::optional<TIndex> TranslationGroup::find(const PointBijection& f) const {
  auto it = index_of_.find(f);
  if (it == index_of_.end()) return std::nullopt;
  return TIndex(it->second);
}

VerificationReport verify_abelian(const TranslationGroup& group) { return verify_abelian(group.table()); }

VerificationReport verify_transitive(const TranslationGroup& group) {
  VerificationReport report;
  const auto np = group.num_points();
  for (std::size_t r = 0; r < np; ++r) {
    for (std::size_t q = 0; q < np; ++q) {
      if (!group.taking(PointId(r), PointId(q))) {
        report.fail("point_transitive", "no translation takes one point to the other",
                    nlohmann::json{{"from", r}, {"to", q}});
        return report;
      }
    }
  }
  report.pass("point_transitive", std::to_string(np * np) + " point pairs");
  return report;
}

VerificationReport verify_normal_in_dilations(const TranslationGroup& group, std::span<const Dilation> dilations) {
  VerificationReport report;
  for (std::size_t d = 0; d < dilations.size(); ++d) {
    const auto& delta = dilations[d].map();
    const auto delta_inv = inverse(delta);
    for (std::size_t s = 0; s < group.order(); ++s) {
      const auto conj = compose(delta_inv, compose(group.element(TIndex(s)).map(), delta));
      if (!group.find(conj)) {
        report.fail("normal_in_dilations", "conjugate of a translation is not a translation",
                    nlohmann::json{{"dilation", d}, {"translation", s}});
        return report;
      }
    }
  }
  report.pass("normal_in_dilations",
              std::to_string(dilations.size()) + " x " + std::to_string(group.order()) + " conjugations");
  return report;
}

VerificationReport verify_conjugation_direction(const AffinePlane& /*plane*/, const TranslationGroup& group,
                                                std::span<const Dilation> dilations) {
  VerificationReport report;
  for (std::size_t d = 0; d < dilations.size(); ++d) {
    const auto& delta = dilations[d].map();
    const auto delta_inv = inverse(delta);
    for (std::size_t s = 1; s < group.order(); ++s) {
      const auto conj = compose(delta_inv, compose(group.element(TIndex(s)).map(), delta));
      const auto idx = group.find(conj);
      const auto before = group.direction_of(TIndex(s));
      if (!idx || group.direction_of(*idx) != before) {
        report.fail("conjugation_preserves_direction", "conjugate has a different direction",
                    nlohmann::json{{"dilation", d}, {"translation", s}});
        return report;
      }
    }
  }
  report.pass("conjugation_preserves_direction");
  return report;
}

VerificationReport verify_direction_closure(const TranslationGroup& group) {
  VerificationReport report;
  const auto n = group.order();
  for (std::size_t a = 1; a < n; ++a) {
    const auto dir = group.direction_of(TIndex(a));
    if (group.direction_of(group.inverse_of(TIndex(a))) != dir) {
      report.fail("direction_closure", "inverse changes direction", nlohmann::json{{"elements", {a}}});
      return report;
    }
    for (std::size_t b = 1; b < n; ++b) {
      if (group.direction_of(TIndex(b)) != dir) continue;
      const auto c = group.compose(TIndex(b), TIndex(a));
      if (c.value != 0 && group.direction_of(c) != dir) {
        report.fail("direction_closure", "same-direction composite leaves the direction", pair(b, a));
        return report;
      }
    }
  }
  report.pass("direction_closure");
  return report;
}

VerificationReport verify_translation_group(const AffinePlane& plane, const TranslationGroup& group,
                                            std::span<const Dilation> dilations) {
  VerificationReport report;
  report.append(verify_group_table(group.table()));
  report.append(verify_abelian(group));
  report.append(verify_transitive(group));
  report.append(verify_normal_in_dilations(group, dilations));
  report.append(verify_conjugation_direction(plane, group, dilations));
  report.append(verify_direction_closure(group));
  return report;
}

}  // namespace afp
