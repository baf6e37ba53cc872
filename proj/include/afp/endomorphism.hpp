#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "afp/trgroup.hpp"

namespace afp {

/// Self-map of a translation group as an index table. The identity always
/// maps to the identity (image[0] == 0); tables violating that are rejected.
class TrEndo {
 public:
  static TrEndo from_images(std::vector<std::uint32_t> image);

  std::size_t group_order() const { return image_.size(); }
  TIndex operator()(TIndex s) const { return TIndex(image_[s.value]); }
  std::span<const std::uint32_t> images() const { return image_; }
  bool is_zero() const;

  auto operator<=>(const TrEndo&) const = default;

 private:
  explicit TrEndo(std::vector<std::uint32_t> image) : image_(std::move(image)) {}
  std::vector<std::uint32_t> image_;
};

/// First pair (s, t) with alpha(s o t) != alpha(s) o alpha(t).
std::optional<std::pair<TIndex, TIndex>> find_homomorphism_violation(const TranslationGroup& group,
                                                                     const TrEndo& alpha);
bool is_group_endomorphism(const TranslationGroup& group, const TrEndo& alpha);

/// First sigma != id whose image is neither the identity nor in sigma's direction.
std::optional<TIndex> find_trace_violation(const TranslationGroup& group, const TrEndo& alpha);
bool is_trace_preserving(const TranslationGroup& group, const TrEndo& alpha);

/// (alpha + beta)(s) = alpha(s) o beta(s)
TrEndo endo_add(const TranslationGroup& group, const TrEndo& alpha, const TrEndo& beta);
/// (alpha o beta)(s) = alpha(beta(s))
TrEndo endo_compose(const TranslationGroup& group, const TrEndo& alpha, const TrEndo& beta);
TrEndo endo_zero(const TranslationGroup& group);
TrEndo endo_one(const TranslationGroup& group);
/// (-alpha)(s) = alpha(s)^-1
TrEndo endo_negate(const TranslationGroup& group, const TrEndo& alpha);
/// s -> s^-1. Checked to be a trace-preserving endomorphism.
TrEndo endo_phi(const TranslationGroup& group);
/// s -> delta^-1 o s o delta. Throws VerificationError if a conjugate is not
/// in the group or the result is not trace-preserving.
TrEndo endo_alpha_delta(const TranslationGroup& group, const Dilation& delta);

// Endomorphism JSON: {"group_order": n, "image": [i0, i1, ...]}.
nlohmann::json endo_to_json(const TrEndo& alpha);
TrEndo endo_from_json(const nlohmann::json& doc);

}  // namespace afp
