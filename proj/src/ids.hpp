#pragma once

#include <charconv>
#include <optional>
#include <string_view>
#include <string>
#include <utility>

#include "ybmap/field.hpp"

namespace ybmap::detail {

// Splits "name(arg)" or "name:arg" into its parts.
inline std::pair<std::string_view, std::optional<std::string_view>> split_id(std::string_view id) {
  if (auto open = id.find('('); open != std::string_view::npos) {
    if (id.back() != ')') return {id, std::nullopt};
    return {id.substr(0, open), id.substr(open + 1, id.size() - open - 2)};
  }
  if (auto colon = id.find(':'); colon != std::string_view::npos)
    return {id.substr(0, colon), id.substr(colon + 1)};
  return {id, std::nullopt};
}

inline std::optional<std::size_t> parse_dim(std::string_view s) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return n;
}

// Parameter as it appears inside an id: "1" rather than "1/1".
inline std::string id_param(const Scalar& s) {
  return s.denominator() == 1 ? s.numerator().get_str() : s.str();
}

}  // namespace ybmap::detail
