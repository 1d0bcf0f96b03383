#pragma once

// Curve classes dH - sum a_i E_i on the blow-up of the plane at r general
// points, the dimension and genus formulas, and the split sets that drive the
// quadratic recursions.

#include "gwblowup/bigcount.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <variant>
#include <vector>

namespace gwb {

struct CurveClass {
    int d = 0;
    std::vector<int> alpha;  // a_1..a_r; r is alpha.size()

    std::size_t r() const { return alpha.size(); }
    bool is_zero() const {
        return d == 0 && std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; });
    }
    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const CurveClass& c) {
    os << '(' << c.d << ",[";
    for (std::size_t i = 0; i < c.alpha.size(); ++i) os << (i ? "," : "") << c.alpha[i];
    return os << "])";
}

inline std::int64_t degree_sum(const std::vector<int>& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
}

/// n_{d,alpha} = 3d - |alpha| - 1: the number of general points the class must meet.
inline std::int64_t expected_dim(const CurveClass& c) {
    return 3 * std::int64_t{c.d} - degree_sum(c.alpha) - 1;
}

inline std::int64_t arithmetic_genus(const CurveClass& c) {
    std::int64_t d = c.d;
    std::int64_t g = (d - 1) * (d - 2) / 2;
    for (int a : c.alpha) g -= std::int64_t{a} * (a - 1) / 2;
    return g;
}

/// Binomial coefficient, zero whenever q < 0 or p < q.
inline BigCount binomial(std::int64_t p, std::int64_t q) {
    if (q < 0 || p < q) return 0;
    // p >= q >= 0 here
    q = std::min(q, p - q);
    BigCount result = 1;
    for (std::int64_t k = 1; k <= q; ++k) {
        result *= p - q + k;
        result /= k;
    }
    return result;
}

/// Memo key: positive degree plus the multiplicities >= 2 in descending order.
struct CanonKey {
    int d = 0;
    std::vector<int> alpha;

    CurveClass to_class() const { return {d, alpha}; }
    friend bool operator==(const CanonKey&, const CanonKey&) = default;
    friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const noexcept {
        std::size_t h = std::hash<int>{}(k.d);
        for (int a : k.alpha) h = h * 1000003u ^ std::hash<int>{}(a);
        return h;
    }
};

// Either the value is fixed by the symmetry and vanishing rules, or the class
// reduces to a key whose value needs the recursion.
using CanonResult = std::variant<BigCount, CanonKey>;

inline bool is_known(const CanonResult& r) { return std::holds_alternative<BigCount>(r); }

/// Applies the degree-zero rule, vanishing for negative multiplicities,
/// permutation symmetry, and removal of 0- and 1-entries.
/// The class must have expected_dim >= 0; dropping a 1 relies on it.
inline CanonResult canonicalize(const CurveClass& c) {
    if (c.d < 0) return BigCount(0);
    if (c.d == 0) {
        int minus_ones = 0;
        for (int a : c.alpha) {
            if (a == -1) {
                ++minus_ones;
            } else if (a != 0) {
                return BigCount(0);
            }
        }
        return BigCount(minus_ones == 1 ? 1 : 0);
    }
    std::vector<int> kept;
    kept.reserve(c.alpha.size());
    for (int a : c.alpha) {
        if (a < 0) return BigCount(0);
        if (a >= 2) kept.push_back(a);
    }
    std::sort(kept.begin(), kept.end(), std::greater<>{});
    if (c.d == 1 && kept.empty()) return BigCount(1);
    return CanonKey{c.d, std::move(kept)};
}

struct SplitPair {
    CurveClass left;
    CurveClass right;
    friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

enum class Pruning {
    // b_k in [max(0, a_k - d2), min(a_k, d1)] when both degrees are positive.
    // Everything dropped has a negative multiplicity on one side and so a
    // vanishing invariant.
    Vanishing,
    // Only the defining conditions: b_k <= d1, c_k <= d2, n1, n2 >= 0.
    None,
};

/// Enumerates the pairs ((d1,beta),(d2,gamma)) summing to c with both parts
/// nonzero, d1,d2 >= 0, beta <= d1, gamma <= d2 and n1,n2 >= 0, in
/// lexicographic order of (d1, beta).
inline std::vector<SplitPair> splits(const CurveClass& c, bool positive_degrees_only,
                                     Pruning pruning = Pruning::Vanishing) {
    std::vector<SplitPair> out;
    const std::size_t r = c.r();
    const int d1_lo = positive_degrees_only ? 1 : 0;
    const int d1_hi = positive_degrees_only ? c.d - 1 : c.d;
    std::vector<int> lo(r), hi(r), beta(r), gamma(r);
    for (int d1 = d1_lo; d1 <= d1_hi; ++d1) {
        const int d2 = c.d - d1;
        const bool prune = pruning == Pruning::Vanishing && d1 > 0 && d2 > 0;
        bool empty = false;
        for (std::size_t k = 0; k < r; ++k) {
            lo[k] = c.alpha[k] - d2;
            hi[k] = d1;
            if (prune) {
                lo[k] = std::max(lo[k], 0);
                hi[k] = std::min(hi[k], c.alpha[k]);
            }
            if (lo[k] > hi[k]) empty = true;
        }
        if (empty) continue;
        beta = lo;
        while (true) {
            for (std::size_t k = 0; k < r; ++k) gamma[k] = c.alpha[k] - beta[k];
            CurveClass left{d1, beta}, right{d2, gamma};
            if (!left.is_zero() && !right.is_zero() && expected_dim(left) >= 0 &&
                expected_dim(right) >= 0)
                out.push_back({std::move(left), std::move(right)});
            // odometer, last position fastest
            std::size_t k = r;
            while (k > 0 && beta[k - 1] == hi[k - 1]) {
                beta[k - 1] = lo[k - 1];
                --k;
            }
            if (k == 0) break;
            ++beta[k - 1];
        }
    }
    return out;
}

}  // namespace gwb
