#ifndef DPTREE_WEIGHT_HPP
#define DPTREE_WEIGHT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dptree {

// Exact edge-weight / distance quantity.
//
// Stored as an integer count of 1e-9 units, so decimal inputs with up to
// nine fractional digits are represented exactly and all additions and
// comparisons are exact integer arithmetic. There is no floating point
// anywhere in this type.
class Weight {
 public:
  static constexpr std::int64_t kScale = 1'000'000'000;  // 9 fractional digits

  constexpr Weight() = default;

  static constexpr Weight from_scaled(std::int64_t scaled) {
    Weight w;
    w.scaled_ = scaled;
    return w;
  }

  // Whole input units (e.g. from_units(3) is the weight "3").
  static constexpr Weight from_units(std::int64_t units) {
    return from_scaled(units * kScale);
  }

  // Parses an unsigned decimal like "7", "1.5" or "0.000000001".
  // Rejects signs, empty integer/fraction parts, more than nine fractional
  // digits, and values that do not fit the scaled 64-bit range.
  static std::optional<Weight> parse(std::string_view text);

  // Minimal decimal form: "1500000000 scaled" -> "1.5", "1000000000" -> "1".
  std::string to_string() const;

  constexpr std::int64_t scaled() const { return scaled_; }

  friend constexpr auto operator<=>(Weight, Weight) = default;

  constexpr Weight operator+(Weight o) const { return from_scaled(scaled_ + o.scaled_); }
  constexpr Weight operator-(Weight o) const { return from_scaled(scaled_ - o.scaled_); }
  constexpr Weight& operator+=(Weight o) {
    scaled_ += o.scaled_;
    return *this;
  }

 private:
  std::int64_t scaled_ = 0;
};

// Distances are sums of weights and share the representation.
using Distance = Weight;

constexpr Weight abs_diff(Weight a, Weight b) { return a < b ? b - a : a - b; }

}  // namespace dptree

#endif
