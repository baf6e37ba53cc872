#include "afp/endomorphism.hpp"

#include <algorithm>

namespace afp {

TrEndo TrEndo::from_images(std::vector<std::uint32_t> image) {
  if (image.empty()) throw InvalidInput("endomorphism table is empty");
  if (image[0] != 0) throw InvalidInput("endomorphism must map the identity to the identity");
  for (auto v : image) {
    if (v >= image.size()) throw InvalidInput("endomorphism image out of range");
  }
  return TrEndo(std::move(image));
}

bool TrEndo::is_zero() const {
  return std::all_of(image_.begin(), image_.end(), [](std::uint32_t v) { return v == 0; });
}

namespace {

void require_order(const TranslationGroup& group, const TrEndo& alpha) {
  if (alpha.group_order() != group.order()) throw InvalidInput("endomorphism belongs to a different group");
}

}  // namespace

std::optional<std::pair<TIndex, TIndex>> find_homomorphism_violation(const TranslationGroup& group,
                                                                     const TrEndo& alpha) {
  require_order(group, alpha);
  const auto n = static_cast<std::uint32_t>(group.order());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const TIndex s(a), t(b);
      if (alpha(group.compose(s, t)) != group.compose(alpha(s), alpha(t))) return std::pair{s, t};
    }
  }
  return std::nullopt;
}

bool is_group_endomorphism(const TranslationGroup& group, const TrEndo& alpha) {
  return !find_homomorphism_violation(group, alpha);
}

std::optional<TIndex> find_trace_violation(const TranslationGroup& group, const TrEndo& alpha) {
  require_order(group, alpha);
  for (std::uint32_t i = 1; i < group.order(); ++i) {
    const TIndex s(i);
    const auto image = alpha(s);
    // An identity image has no direction and is compatible with any.
    if (image.value == 0) continue;
    if (group.direction_of(image) != group.direction_of(s)) return s;
  }
  return std::nullopt;
}

bool is_trace_preserving(const TranslationGroup& group, const TrEndo& alpha) {
  return !find_trace_violation(group, alpha);
}

TrEndo endo_add(const TranslationGroup& group, const TrEndo& alpha, const TrEndo& beta) {
  require_order(group, alpha);
  require_order(group, beta);
  std::vector<std::uint32_t> out(group.order());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = group.compose(alpha(TIndex(i)), beta(TIndex(i))).value;
  return TrEndo::from_images(std::move(out));
}

TrEndo endo_compose(const TranslationGroup& group, const TrEndo& alpha, const TrEndo& beta) {
  require_order(group, alpha);
  require_order(group, beta);
  std::vector<std::uint32_t> out(group.order());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = alpha(beta(TIndex(i))).value;
  return TrEndo::from_images(std::move(out));
}

TrEndo endo_zero(const TranslationGroup& group) {
  return TrEndo::from_images(std::vector<std::uint32_t>(group.order(), 0));
}

TrEndo endo_one(const TranslationGroup& group) {
  std::vector<std::uint32_t> out(group.order());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = i;
  return TrEndo::from_images(std::move(out));
}

TrEndo endo_negate(const TranslationGroup& group, const TrEndo& alpha) {
  require_order(group, alpha);
  std::vector<std::uint32_t> out(group.order());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = group.inverse_of(alpha(TIndex(i))).value;
  return TrEndo::from_images(std::move(out));
}

TrEndo endo_phi(const TranslationGroup& group) {
  std::vector<std::uint32_t> out(group.order());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = group.inverse_of(TIndex(i)).value;
  auto phi = TrEndo::from_images(std::move(out));
  if (!is_group_endomorphism(group, phi)) throw VerificationError("inversion is not an endomorphism");
  if (!is_trace_preserving(group, phi)) throw VerificationError("inversion is not trace-preserving");
  return phi;
}

TrEndo endo_alpha_delta(const TranslationGroup& group, const Dilation& delta) {
  if (delta.map().size() != group.num_points()) throw InvalidInput("dilation belongs to a different plane");
  const auto delta_inv = inverse(delta.map());
  std::vector<std::uint32_t> out(group.order());
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    const auto conj = compose(delta_inv, compose(group.element(TIndex(i)).map(), delta.map()));
    const auto idx = group.find(conj);
    if (!idx) throw VerificationError("conjugate of translation " + std::to_string(i) + " is not in the group");
    out[i] = idx->value;
  }
  auto alpha = TrEndo::from_images(std::move(out));
  if (auto s = find_trace_violation(group, alpha)) {
    throw VerificationError("conjugation endomorphism changes the direction of translation " +
                            std::to_string(s->value));
  }
  return alpha;
}

nlohmann::json endo_to_json(const TrEndo& alpha) {
  return nlohmann::json{{"group_order", alpha.group_order()},
                        {"image", std::vector<std::uint32_t>(alpha.images().begin(), alpha.images().end())}};
}

TrEndo endo_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("group_order") || !doc.contains("image") || !doc["image"].is_array() ||
      !doc["group_order"].is_number_unsigned()) {
    throw InvalidInput("endomorphism JSON needs 'group_order' and an 'image' array");
  }
  std::vector<std::uint32_t> image;
  for (const auto& v : doc["image"]) {
    if (!v.is_number_unsigned()) throw InvalidInput("endomorphism images must be non-negative integers");
    image.push_back(v.get<std::uint32_t>());
  }
  if (image.size() != doc["group_order"].get<std::size_t>()) {
    throw InvalidInput("endomorphism image length does not match group_order");
  }
  return TrEndo::from_images(std::move(image));
}

}  // namespace afp
