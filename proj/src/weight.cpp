#include "dptree/weight.hpp"

#include <cctype>
#include <limits>

namespace dptree {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::optional<Weight> Weight::parse(std::string_view text) {
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 9) return std::nullopt;
    if (!all_digits(frac_part)) return std::nullopt;
  }
  if (!all_digits(int_part)) return std::nullopt;

  constexpr std::int64_t kMaxUnits = std::numeric_limits<std::int64_t>::max() / kScale;
  std::int64_t units = 0;
  for (char c : int_part) {
    const std::int64_t digit = c - '0';
    if (units > (kMaxUnits - digit) / 10) return std::nullopt;
    units = units * 10 + digit;
  }

  std::int64_t frac = 0;
  std::int64_t frac_scale = kScale;
  for (char c : frac_part) {
    frac_scale /= 10;
    frac += static_cast<std::int64_t>(c - '0') * frac_scale;
  }

  std::int64_t scaled = units * kScale;
  if (scaled > std::numeric_limits<std::int64_t>::max() - frac) return std::nullopt;
  return from_scaled(scaled + frac);
}

std::string Weight::to_string() const {
  std::int64_t s = scaled_;
  std::string sign;
  if (s < 0) {
    sign = "-";
    s = -s;
  }
  std::int64_t units = s / kScale;
  std::int64_t frac = s % kScale;
  if (frac == 0) return sign + std::to_string(units);

  std::string digits = std::to_string(frac);
  digits.insert(digits.begin(), 9 - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return sign + std::to_string(units) + "." + digits;
}

}  // namespace dptree
