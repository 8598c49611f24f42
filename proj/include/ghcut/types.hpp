#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghcut {

using Vertex = std::int32_t;
using Weight = std::int64_t;

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// A non-negative cut value that may also be +infinity.
///
/// Infinity is an explicit state rather than a large sentinel, so that
/// "no feasible cut" can never be confused with a very heavy cut.
class ExtWeight {
 public:
  constexpr ExtWeight() = default;
  constexpr ExtWeight(Weight w) : infinite_(false), value_(w) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtWeight infinity() { return ExtWeight(); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  Weight value() const {
    if (infinite_) throw std::logic_error("ExtWeight: value() of infinity");
    return value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(const ExtWeight& a, const ExtWeight& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtWeight& a, const ExtWeight& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  bool infinite_ = true;
  Weight value_ = 0;
};

}  // namespace ghcut
