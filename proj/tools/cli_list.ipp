#pragma once

#include <charconv>
#include <sstream>

#include "vmlattice/errors.hpp"

namespace vmlattice::cli {

namespace detail {

inline Integer parse_integer(const std::string& text) {
  Integer value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw DomainError("not an integer: '" + text + "'");
  return value;
}

}  // namespace detail

template <typename Keep>
std::vector<Integer> expand_list(const std::string& spec, Keep&& keep) {
  if (spec.empty() || spec.back() == ',') throw DomainError("empty entry in list '" + spec + "'");
  std::vector<Integer> values;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw DomainError("empty entry in list '" + spec + "'");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      values.push_back(detail::parse_integer(item));
      continue;
    }
    const Integer lo = detail::parse_integer(item.substr(0, dots));
    const Integer hi = detail::parse_integer(item.substr(dots + 2));
    if (hi < lo) throw DomainError("empty range '" + item + "'");
    for (Integer v = lo; v <= hi; ++v) {
      if (keep(v)) values.push_back(v);
    }
  }
  return values;
}

}  // namespace vmlattice::cli
