#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace gwb {

// Exact signed integer used for every invariant and every intermediate sum.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

// Parses an optionally signed decimal literal. No whitespace, no leading '+'.
inline std::optional<BigCount> parse_decimal(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = s.front() == '-' ? 1 : 0;
    if (pos == s.size()) return std::nullopt;
    for (std::size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
    return BigCount(std::string(s));
}

}  // namespace gwb
