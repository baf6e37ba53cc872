#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace afp {

// Dense index with a tag so point, line, direction and group indices do not mix.
template <class Tag>
struct Index {
  std::uint32_t value = 0;

  constexpr Index() = default;
  constexpr explicit Index(std::uint32_t v) : value(v) {}

  constexpr auto operator<=>(const Index&) const = default;
};

struct PointTag {};
struct LineTag {};
struct DirectionTag {};
struct TranslationTag {};

using PointId = Index<PointTag>;
using LineId = Index<LineTag>;
using DirectionId = Index<DirectionTag>;
/// Index into the element list of a TranslationGroup.
using TIndex = Index<TranslationTag>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, degenerate lines, bad field parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A structural postcondition failed (closure, recovery, membership).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace afp

template <class Tag>
struct std::hash<afp::Index<Tag>> {
  std::size_t operator()(afp::Index<Tag> i) const noexcept { return std::hash<std::uint32_t>{}(i.value); }
};
