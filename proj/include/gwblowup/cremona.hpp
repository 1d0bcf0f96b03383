#pragma once

// Quadratic Cremona transformation on curve classes and the enumerativity
// classifier built on top of it.

#include "gwblowup/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace gwb {

/// Transformation based at the blown-up points i, j, k (0-based, distinct):
/// (d, a_i, a_j, a_k) -> (2d - a_i - a_j - a_k, d - a_j - a_k, d - a_i - a_k, d - a_i - a_j).
/// Other multiplicities are unchanged. It is an involution.
inline CurveClass cremona_transform(const CurveClass& c, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t r = c.r();
    if (i >= r || j >= r || k >= r) throw std::out_of_range("cremona_transform: index out of range");
    if (i == j || j == k || i == k) throw std::invalid_argument("cremona_transform: indices must be distinct");
    const int a1 = c.alpha[i], a2 = c.alpha[j], a3 = c.alpha[k];
    CurveClass out = c;
    out.d = 2 * c.d - a1 - a2 - a3;
    out.alpha[i] = c.d - a2 - a3;
    out.alpha[j] = c.d - a1 - a3;
    out.alpha[k] = c.d - a1 - a2;
    return out;
}

// Sorted descending, zeros removed, padded with zeros to length >= 3.
inline CurveClass sorted_padded(const CurveClass& c) {
    CurveClass out{c.d, {}};
    for (int a : c.alpha)
        if (a != 0) out.alpha.push_back(a);
    std::sort(out.alpha.begin(), out.alpha.end(), std::greater<>{});
    while (out.alpha.size() < 3) out.alpha.push_back(0);
    return out;
}

/// Descending order, zeros dropped, and 1-entries dropped when n >= 0.
inline CurveClass normal_form(const CurveClass& c) {
    const bool drop_ones = expected_dim(c) >= 0;
    CurveClass out{c.d, {}};
    for (int a : c.alpha)
        if (a != 0 && !(drop_ones && a == 1)) out.alpha.push_back(a);
    std::sort(out.alpha.begin(), out.alpha.end(), std::greater<>{});
    return out;
}

/// One step at the three largest multiplicities, if it lowers the degree and
/// stays in d > 0, alpha >= 0. Input must be sorted_padded.
inline std::optional<CurveClass> cremona_step(const CurveClass& sorted) {
    if (sorted.alpha[0] + sorted.alpha[1] + sorted.alpha[2] <= sorted.d) return std::nullopt;
    CurveClass next = cremona_transform(sorted, 0, 1, 2);
    if (next.d <= 0) return std::nullopt;
    if (std::any_of(next.alpha.begin(), next.alpha.end(), [](int a) { return a < 0; }))
        return std::nullopt;
    return next;
}

/// Iterates the transformation at the three largest multiplicities while it
/// strictly lowers the degree, then returns the normal form.
/// Requires d > 0 and alpha >= 0.
inline CurveClass cremona_reduce(const CurveClass& c) {
    CurveClass cur = sorted_padded(c);
    while (auto next = cremona_step(cur)) cur = sorted_padded(*next);
    return normal_form(cur);
}

enum class EnumReason { PositiveDim, SmallMultiplicity, AtMostEight, CremonaOrbit };

inline std::string_view to_string(EnumReason r) {
    switch (r) {
        case EnumReason::PositiveDim: return "positive-dimension";
        case EnumReason::SmallMultiplicity: return "small-multiplicity";
        case EnumReason::AtMostEight: return "at-most-eight-points";
        case EnumReason::CremonaOrbit: return "cremona-orbit";
    }
    return "?";
}

// Enumerative(reason) or Unknown.
struct EnumStatus {
    std::optional<EnumReason> reason;

    bool enumerative() const { return reason.has_value(); }
    static EnumStatus unknown() { return {}; }
    static EnumStatus because(EnumReason r) { return {r}; }
    friend bool operator==(const EnumStatus&, const EnumStatus&) = default;
};

namespace detail {
inline std::optional<EnumReason> direct_reason(const CurveClass& c) {
    if (expected_dim(c) > 0) return EnumReason::PositiveDim;
    if (std::any_of(c.alpha.begin(), c.alpha.end(), [](int a) { return a == 1 || a == 2; }))
        return EnumReason::SmallMultiplicity;
    if (std::count_if(c.alpha.begin(), c.alpha.end(), [](int a) { return a != 0; }) <= 8)
        return EnumReason::AtMostEight;
    return std::nullopt;
}
}  // namespace detail

/// Whether the invariant is known to be an honest count of immersed curves.
/// Rules in order: n > 0; some multiplicity is 1 or 2; at most eight
/// blown-up points are involved; one of the above holds somewhere along the
/// Cremona reduction chain. Requires n >= 0, d > 0 and alpha >= 0.
inline EnumStatus enumerativity(const CurveClass& c) {
    if (expected_dim(c) < 0 || c.d <= 0 ||
        std::any_of(c.alpha.begin(), c.alpha.end(), [](int a) { return a < 0; }))
        throw std::invalid_argument("enumerativity: needs n >= 0, d > 0, alpha >= 0");
    if (auto r = detail::direct_reason(c)) return EnumStatus::because(*r);
    CurveClass cur = sorted_padded(c);
    while (auto next = cremona_step(cur)) {
        if (detail::direct_reason(*next)) return EnumStatus::because(EnumReason::CremonaOrbit);
        cur = sorted_padded(*next);
    }
    return EnumStatus::unknown();
}

}  // namespace gwb
