#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "afp/collineation.hpp"
#include "afp/report.hpp"

namespace afp {

/// Multiplication table of a finite magma on indices [0, order).
class CayleyTable {
 public:
  CayleyTable() = default;
  /// Row-major: entries[a * order + b] = a * b. Throws on size or range errors.
  CayleyTable(std::size_t order, std::vector<std::uint32_t> entries);

  std::size_t order() const { return order_; }
  TIndex operator()(TIndex a, TIndex b) const { return TIndex(entries_[a.value * order_ + b.value]); }

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> entries_;
};

/// Identity at index 0, two-sided inverses, associativity (exhaustive up to
/// order 16, 10^4 seeded samples above).
VerificationReport verify_group_table(const CayleyTable& table);
VerificationReport verify_abelian(const CayleyTable& table);

/// The translations of a plane as an indexed group with a full Cayley table.
class TranslationGroup {
 public:
  /// Elements are reordered: identity first, then lexicographic by image
  /// table. Throws VerificationError naming the offending pair if the list is
  /// not closed under composition and inversion.
  static TranslationGroup build(const AffinePlane& plane, std::vector<Translation> translations);

  std::size_t order() const { return elements_.size(); }
  std::size_t num_points() const { return num_points_; }
  std::span<const Translation> elements() const { return elements_; }
  const Translation& element(TIndex i) const { return elements_.at(i.value); }
  const CayleyTable& table() const { return cayley_; }

  /// Index of element(a) o element(b).
  TIndex compose(TIndex a, TIndex b) const { return cayley_(a, b); }
  TIndex inverse_of(TIndex a) const { return TIndex(inverse_.at(a.value)); }
  std::optional<DirectionId> direction_of(TIndex a) const { return element(a).direction(); }

  /// The element taking R to Q, if any.
  std::optional<TIndex> taking(PointId r, PointId q) const;
  bool is_transitive() const;

  std::optional<TIndex> find(const PointBijection& f) const;

 private:
  std::size_t num_points_ = 0;
  std::vector<Translation> elements_;
  CayleyTable cayley_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> taking_;  // num_points x num_points, kNone when absent
  std::map<PointBijection, std::uint32_t> index_of_;
};

inline std::optional<TIndex> translation_taking(const TranslationGroup& g, PointId r, PointId q) {
  return g.taking(r, q);
}

VerificationReport verify_abelian(const TranslationGroup& group);
VerificationReport verify_transitive(const TranslationGroup& group);
/// delta^-1 o sigma o delta lies in the group for every dilation and translation.
VerificationReport verify_normal_in_dilations(const TranslationGroup& group, std::span<const Dilation> dilations);
/// delta^-1 o sigma o delta has the direction of sigma for every sigma != id.
VerificationReport verify_conjugation_direction(const AffinePlane& plane, const TranslationGroup& group,
                                                std::span<const Dilation> dilations);
/// Same-direction composites are the identity or keep the direction; each
/// direction class plus the identity is a subgroup.
VerificationReport verify_direction_closure(const TranslationGroup& group);

/// Table axioms, commutativity, transitivity, normality, conjugation
/// direction and direction closure in one report.
VerificationReport verify_translation_group(const AffinePlane& plane, const TranslationGroup& group,
                                            std::span<const Dilation> dilations);

}  // namespace afp
