#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace afp {

/// GF(p^k) with full addition and multiplication tables.
///
/// Element index i encodes the residue polynomial whose coefficients are the
/// base-p digits of i (least significant digit = constant term), so index 0
/// is zero and index 1 is one. Orders above 16 are rejected.
class FiniteField {
 public:
  using Element = std::uint32_t;

  static constexpr unsigned kMaxOrder = 16;

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned order() const { return q_; }
  /// Monic modulus, constant term first (length k+1). Empty for prime fields.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  /// Throws InvalidInput for zero.
  Element inv(Element a) const;

  const std::vector<Element>& add_table() const { return add_; }
  const std::vector<Element>& mul_table() const { return mul_; }

  friend FiniteField gf(unsigned p, unsigned k, std::optional<std::vector<unsigned>> modulus);

 private:
  FiniteField() = default;
  void self_check() const;

  unsigned p_ = 0, k_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
};

/// Builds GF(p^k). `modulus` is a coefficient list of length k+1, constant
/// term first; when absent for k > 1 the pinned default for q is used.
FiniteField gf(unsigned p, unsigned k, std::optional<std::vector<unsigned>> modulus = std::nullopt);

/// Splits q into (p, k) and builds GF(q). Throws if q is not a prime power.
FiniteField gf_of_order(unsigned q, std::optional<std::vector<unsigned>> modulus = std::nullopt);

bool is_prime(unsigned n);

/// Pinned defaults: x^2+x+1 (q=4), x^3+x+1 (q=8), x^2+1 (q=9), x^4+x+1 (q=16).
std::optional<std::vector<unsigned>> default_modulus(unsigned q);

/// True when the polynomial over GF(p) (constant term first) has no factor of
/// degree 1..deg/2. Exhaustive factor scan.
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

}  // namespace afp
