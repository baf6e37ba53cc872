#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "afp/endomorphism.hpp"

namespace afp {

/// The trace-preserving endomorphisms generated from the dilations fixing a
/// base point, with their addition and composition tables.
///
/// Element 0 is zero and element 1 is one; the rest follow in lexicographic
/// order of their image tables. For every nonzero element, `source[i]` is a
/// dilation delta fixing the base point with element i = (s -> delta^-1 s delta).
struct TPEndoSet {
  PointId base;
  std::vector<TrEndo> elements;
  std::vector<std::optional<Dilation>> source;
  std::vector<std::uint32_t> add_table;  // row-major, size^2
  std::vector<std::uint32_t> mul_table;  // row-major, size^2: elements[i] o elements[j]
  std::vector<std::uint32_t> negation;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const TrEndo& alpha) const;
  std::size_t add(std::size_t a, std::size_t b) const { return add_table[a * size() + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_table[a * size() + b]; }
};

/// Sorts endomorphisms as zero, one, then lexicographically.
void sort_canonical(std::vector<TrEndo>& endos);

/// {0} together with the conjugation endomorphisms of every dilation fixing
/// `base`. Requires a transitive group. Throws VerificationError if the set is
/// not closed under addition, negation and composition.
TPEndoSet generate_tp_endos(const AffinePlane& plane, const TranslationGroup& group, PointId base = PointId(0));

/// Greedy generating set: scan elements in index order and keep every element
/// outside the subgroup generated so far.
std::vector<TIndex> greedy_generating_set(const TranslationGroup& group);

/// Independent oracle: every group endomorphism obtained by extending
/// generator images through the Cayley table, filtered to the trace-preserving
/// ones. Canonically sorted.
std::vector<TrEndo> brute_force_tp_endos(const TranslationGroup& group, std::size_t max_candidates = 1u << 20);

/// The unique dilation delta fixing P with alpha(s) = delta o s o delta^-1 for
/// all s, built pointwise as delta(Q) = alpha(s_PQ)(P) where s_PQ takes P to Q.
/// Every postcondition is re-checked. Throws InvalidInput for the zero
/// endomorphism or a non-transitive group, VerificationError if a check fails.
Dilation recover_dilation(const AffinePlane& plane, const TranslationGroup& group, const TrEndo& alpha, PointId p);

/// Multiplicative inverse: the conjugation endomorphism s -> delta^-1 s delta
/// of the dilation recovered from alpha at `base`. Both products with alpha
/// are checked to be one.
TrEndo invert(const AffinePlane& plane, const TranslationGroup& group, const TrEndo& alpha, PointId base = PointId(0));

/// Additive group, ring laws, one != zero, no zero divisors, verified inverses,
/// dilation recovery and multiplicative group of the nonzero elements.
VerificationReport verify_skew_field(const AffinePlane& plane, const TranslationGroup& group, const TPEndoSet& set);

struct CommutativityResult {
  bool commutative = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};
CommutativityResult check_multiplicative_commutativity(const TPEndoSet& set);

/// Compares the generated set with the brute-force oracle as sets.
VerificationReport verify_oracle_equivalence(const TranslationGroup& group, const TPEndoSet& set);

}  // namespace afp
