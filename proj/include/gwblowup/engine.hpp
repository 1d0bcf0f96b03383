#pragma once

// Recursive evaluation of the genus-0 invariants N_{d,alpha} of the plane
// blown up at r general points.
//
// Two relations drive everything:
//   R(m), usable when n >= 3: N is a quadratic sum over splits into two
//         classes of smaller positive degree.
//   R(i), usable when n >= 0 and a_i >= 1: d^2 a_i N_{d,alpha} equals a
//         multiple of N_{d,alpha-[i]} plus a quadratic split sum.
// R(i) raises the expected dimension by one, so a class with n < 3 reaches
// R(m) after at most three steps. Memoization is on canonical keys only.

#include "gwblowup/lattice.hpp"
#include "gwblowup/memo_store.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwb {

enum class PivotRule {
    LargestEntry,   // first position of the largest multiplicity
    FirstEntry,     // first position with a positive multiplicity
    SmallestEntry,  // last position of the smallest positive multiplicity
};

struct EngineConfig {
    bool use_vanishing_shortcuts = false;
    PivotRule pivot_rule = PivotRule::LargestEntry;
    // Sum over splits up to permutations inside blocks of equal multiplicity,
    // weighting each orbit by its size. false walks splits() term by term.
    bool grouped_splits = true;
};

class UndefinedInvariant : public std::domain_error {
public:
    explicit UndefinedInvariant(const CurveClass& c)
        : std::domain_error("undefined: expected dimension is negative for " + describe(c)) {}

private:
    static std::string describe(const CurveClass& c) {
        std::string s = "(" + std::to_string(c.d) + ",[";
        for (std::size_t i = 0; i < c.alpha.size(); ++i)
            s += (i ? "," : "") + std::to_string(c.alpha[i]);
        return s + "])";
    }
};

// The recursion produced something impossible: an inexact division in R(i)
// or a negative invariant.
class ConsistencyViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Zero when the class is known to carry no irreducible rational curves:
/// negative arithmetic genus, two multiplicities summing past d (except the
/// line through two blown-up points), or one multiplicity above d.
/// Requires d > 0, alpha >= 0, n >= 0.
inline std::optional<BigCount> vanishing_shortcut(const CurveClass& c) {
    if (arithmetic_genus(c) < 0) return BigCount(0);
    std::vector<int> nz;
    for (int a : c.alpha)
        if (a != 0) nz.push_back(a);
    std::sort(nz.begin(), nz.end(), std::greater<>{});
    if (nz.empty()) return std::nullopt;
    if (nz.front() > c.d) return BigCount(0);
    const bool line_through_two = c.d == 1 && nz == std::vector<int>{1, 1};
    if (nz.size() >= 2 && nz[0] + nz[1] > c.d && !line_through_two) return BigCount(0);
    return std::nullopt;
}

inline std::optional<std::size_t> choose_pivot(const std::vector<int>& alpha, PivotRule rule) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] < 1) continue;
        switch (rule) {
            case PivotRule::FirstEntry:
                return k;
            case PivotRule::LargestEntry:
                if (!best || alpha[k] > alpha[*best]) best = k;
                break;
            case PivotRule::SmallestEntry:
                if (!best || alpha[k] <= alpha[*best]) best = k;
                break;
        }
    }
    return best;
}

namespace detail {

// One orbit of positive-degree splits.
struct SplitTerm {
    const CurveClass& left;
    const CurveClass& right;
    std::int64_t sum_bc;     // sum_k b_k c_k over all positions
    std::uint64_t weight;    // number of splits in the orbit
    int pivot_b = 0;
    int pivot_c = 0;
};

// Visits every split of c with d1, d2 > 0 and beta, gamma >= 0 (the only
// ones with a nonzero product of invariants), grouping positions of equal
// multiplicity. The pivot position, if any, is kept in a block of its own.
template <class Visit>
void for_each_grouped_split(const CurveClass& c, std::optional<std::size_t> pivot, Visit&& visit) {
    struct Block {
        int value;
        int count;
        bool is_pivot;
    };
    std::vector<Block> blocks;
    {
        std::map<int, int, std::greater<>> counts;
        for (std::size_t k = 0; k < c.alpha.size(); ++k)
            if (!pivot || k != *pivot) ++counts[c.alpha[k]];
        if (pivot) blocks.push_back({c.alpha[*pivot], 1, true});
        for (auto [v, m] : counts) blocks.push_back({v, m, false});
    }
    for (const Block& b : blocks)
        if (b.value < 0) return;  // every split has a negative part

    const std::int64_t total = degree_sum(c.alpha);
    CurveClass left, right;
    left.alpha.reserve(c.alpha.size());
    right.alpha.reserve(c.alpha.size());

    for (int d1 = 1; d1 < c.d; ++d1) {
        const int d2 = c.d - d1;
        left.d = d1;
        right.d = d2;
        left.alpha.clear();
        right.alpha.clear();
        int pivot_b = 0, pivot_c = 0;

        // depth-first over blocks, then over values inside a block
        auto descend = [&](auto&& self, std::size_t block, int value, int remaining,
                           std::int64_t beta_sum, std::int64_t sum_bc,
                           std::uint64_t weight) -> void {
            if (block == blocks.size()) {
                // n1 >= 0 and n2 >= 0
                if (3 * std::int64_t{d1} - beta_sum - 1 < 0) return;
                if (3 * std::int64_t{d2} - (total - beta_sum) - 1 < 0) return;
                visit(SplitTerm{left, right, sum_bc, weight, pivot_b, pivot_c});
                return;
            }
            const Block& blk = blocks[block];
            const int hi = std::min(blk.value, d1);
            if (remaining == 0) {
                const std::size_t next = block + 1;
                if (next == blocks.size()) {
                    self(self, next, 0, 0, beta_sum, sum_bc, weight);
                } else {
                    const Block& nb = blocks[next];
                    self(self, next, std::max(0, nb.value - d2), nb.count, beta_sum, sum_bc,
                         weight);
                }
                return;
            }
            if (value > hi) return;
            // choose how many of the remaining positions take b = value
            const bool last_value = value == hi;
            const int t_lo = last_value ? remaining : 0;
            std::uint64_t choose = 1;  // C(remaining, t)
            for (int t = 0; t <= remaining; ++t) {
                if (t > 0) choose = choose * static_cast<std::uint64_t>(remaining - t + 1) /
                                    static_cast<std::uint64_t>(t);
                if (t < t_lo) continue;
                const int cv = blk.value - value;
                for (int s = 0; s < t; ++s) {
                    left.alpha.push_back(value);
                    right.alpha.push_back(cv);
                }
                if (blk.is_pivot && t == 1) {
                    pivot_b = value;
                    pivot_c = cv;
                }
                self(self, block, value + 1, remaining - t, beta_sum + std::int64_t{t} * value,
                     sum_bc + std::int64_t{t} * value * cv, weight * choose);
                left.alpha.resize(left.alpha.size() - t);
                right.alpha.resize(right.alpha.size() - t);
            }
        };

        bool feasible = true;
        for (const Block& b : blocks)
            if (std::max(0, b.value - d2) > std::min(b.value, d1)) feasible = false;
        if (!feasible) continue;
        if (blocks.empty()) {
            descend(descend, 0, 0, 0, 0, 0, 1);
        } else {
            descend(descend, 0, std::max(0, blocks[0].value - d2), blocks[0].count, 0, 0, 1);
        }
    }
}

template <class Visit>
void for_each_plain_split(const CurveClass& c, std::optional<std::size_t> pivot, Visit&& visit) {
    for (const SplitPair& sp : splits(c, /*positive_degrees_only=*/true, Pruning::Vanishing)) {
        std::int64_t sum_bc = 0;
        for (std::size_t k = 0; k < c.r(); ++k)
            sum_bc += std::int64_t{sp.left.alpha[k]} * sp.right.alpha[k];
        int pb = pivot ? sp.left.alpha[*pivot] : 0;
        int pc = pivot ? sp.right.alpha[*pivot] : 0;
        visit(SplitTerm{sp.left, sp.right, sum_bc, 1, pb, pc});
    }
}

template <class Visit>
void for_each_split(const CurveClass& c, std::optional<std::size_t> pivot, const EngineConfig& cfg,
                    Visit&& visit) {
    if (cfg.grouped_splits)
        for_each_grouped_split(c, pivot, visit);
    else
        for_each_plain_split(c, pivot, visit);
}

// Product N_left * N_right for one split, or nullopt if a factor is not yet
// available. Skips the right lookup when the left factor vanishes.
template <class Lookup>
std::optional<BigCount> split_product(const SplitTerm& t, Lookup& lookup, bool& incomplete) {
    auto nl = lookup(t.left);
    if (nl && nl->is_zero()) return BigCount(0);
    auto nr = lookup(t.right);
    if (!nl || !nr) {
        incomplete = true;
        return std::nullopt;
    }
    return *nl * *nr;
}

template <class Lookup>
std::optional<BigCount> relation_m_sum(const CurveClass& c, Lookup& lookup, const EngineConfig& cfg) {
    const std::int64_t n = expected_dim(c);
    // F(d1, n1) = d1 d2 C(n-3, n1-1) - d1^2 C(n-3, n1)
    std::vector<BigCount> row(static_cast<std::size_t>(n + 1));
    for (std::int64_t k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = binomial(n - 3, k);
    auto row_at = [&](std::int64_t k) -> const BigCount& {
        static const BigCount zero = 0;
        return k < 0 || k > n ? zero : row[static_cast<std::size_t>(k)];
    };
    std::vector<std::vector<BigCount>> factor(static_cast<std::size_t>(c.d));
    for (int d1 = 1; d1 < c.d; ++d1) {
        const std::int64_t d2 = c.d - d1;
        auto& f = factor[static_cast<std::size_t>(d1)];
        f.resize(static_cast<std::size_t>(n + 1));
        for (std::int64_t n1 = 0; n1 <= n; ++n1)
            f[static_cast<std::size_t>(n1)] =
                d1 * d2 * row_at(n1 - 1) - std::int64_t{d1} * d1 * row_at(n1);
    }

    BigCount total = 0;
    bool incomplete = false;
    for_each_split(c, std::nullopt, cfg, [&](const SplitTerm& t) {
        const std::int64_t n1 = expected_dim(t.left);
        const BigCount& f = factor[static_cast<std::size_t>(t.left.d)][static_cast<std::size_t>(n1)];
        const std::int64_t pairing = std::int64_t{t.left.d} * t.right.d - t.sum_bc;
        if (f.is_zero() || pairing == 0) return;
        auto prod = split_product(t, lookup, incomplete);
        if (!prod || prod->is_zero()) return;
        total += *prod * f * (pairing * static_cast<std::int64_t>(t.weight));
    });
    if (incomplete) return std::nullopt;
    return total;
}

// d^2 a_i N_{d,alpha} before the division.
template <class Lookup>
std::optional<BigCount> relation_i_numerator(const CurveClass& c, std::size_t pivot, Lookup& lookup,
                                             const EngineConfig& cfg) {
    const std::int64_t n = expected_dim(c);
    const std::int64_t d = c.d;
    const std::int64_t a = c.alpha[pivot];
    CurveClass reduced = c;
    --reduced.alpha[pivot];

    bool incomplete = false;
    BigCount total = 0;
    if (auto base = lookup(reduced)) {
        total += *base * (d * d - (a - 1) * (a - 1));
    } else {
        incomplete = true;
    }

    std::vector<BigCount> row(static_cast<std::size_t>(n + 1));
    for (std::int64_t k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = binomial(n, k);

    for_each_split(reduced, pivot, cfg, [&](const SplitTerm& t) {
        const std::int64_t n1 = expected_dim(t.left);
        if (n1 > n) return;  // C(n, n1) = 0
        const std::int64_t d1 = t.left.d, d2 = t.right.d;
        const std::int64_t pairing = d1 * d2 - t.sum_bc;
        const std::int64_t local =
            d1 * d2 * t.pivot_b * t.pivot_c - d1 * d1 * t.pivot_c * t.pivot_c;
        if (pairing == 0 || local == 0) return;
        auto prod = split_product(t, lookup, incomplete);
        if (!prod || prod->is_zero()) return;
        total += *prod * row[static_cast<std::size_t>(n1)] *
                 (pairing * local * static_cast<std::int64_t>(t.weight));
    });
    if (incomplete) return std::nullopt;
    return total;
}

template <class Lookup>
std::optional<BigCount> relation_i_value(const CurveClass& c, std::size_t pivot, Lookup& lookup,
                                         const EngineConfig& cfg) {
    auto numerator = relation_i_numerator(c, pivot, lookup, cfg);
    if (!numerator) return std::nullopt;
    const std::int64_t divisor = std::int64_t{c.d} * c.d * c.alpha[pivot];
    BigCount q, rem;
    boost::multiprecision::divide_qr(*numerator, BigCount(divisor), q, rem);
    if (!rem.is_zero()) {
        std::ostringstream os;
        os << "recursion consistency violation: R(i) numerator " << *numerator
           << " not divisible by " << divisor << " for " << c << " pivot " << pivot;
        throw ConsistencyViolation(os.str());
    }
    return q;
}

// Resolves factors from the store; records keys that are not computed yet.
struct PendingLookup {
    MemoStore& store;
    const EngineConfig& cfg;
    std::vector<CanonKey>& missing;

    std::optional<BigCount> operator()(const CurveClass& c) {
        CanonResult cr = canonicalize(c);
        if (auto* v = std::get_if<BigCount>(&cr)) return *v;
        auto& key = std::get<CanonKey>(cr);
        if (cfg.use_vanishing_shortcuts)
            if (auto z = vanishing_shortcut(key.to_class())) return z;
        if (auto v = store.find(key)) return v;
        missing.push_back(std::move(key));
        return std::nullopt;
    }
};

template <class Lookup>
std::optional<BigCount> evaluate_key(const CanonKey& key, Lookup& lookup, const EngineConfig& cfg) {
    const CurveClass c = key.to_class();
    if (expected_dim(c) >= 3) return relation_m_sum(c, lookup, cfg);
    auto pivot = choose_pivot(c.alpha, cfg.pivot_rule);
    if (!pivot) throw ConsistencyViolation("no pivot for canonical key with n < 3");
    return relation_i_value(c, *pivot, lookup, cfg);
}

// Fills the store for key and everything it depends on, using an explicit
// stack instead of call recursion.
inline void compute_into_store(const CanonKey& root, MemoStore& store, const EngineConfig& cfg) {
    std::vector<CanonKey> stack{root};
    std::vector<CanonKey> missing;
    PendingLookup lookup{store, cfg, missing};
    while (!stack.empty()) {
        if (store.contains(stack.back())) {
            stack.pop_back();
            continue;
        }
        const CanonKey top = stack.back();
        missing.clear();
        auto value = evaluate_key(top, lookup, cfg);
        if (value) {
            if (value->sign() < 0) {
                std::ostringstream os;
                os << "recursion consistency violation: negative invariant " << *value << " for "
                   << top.to_class();
                throw ConsistencyViolation(os.str());
            }
            store.insert(top, std::move(*value));
            stack.pop_back();
            continue;
        }
        std::sort(missing.begin(), missing.end());
        missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
        for (auto& k : missing) stack.push_back(std::move(k));
    }
}

}  // namespace detail

/// N_{d,alpha}. Throws UndefinedInvariant when expected_dim < 0.
inline BigCount invariant(const CurveClass& c, MemoStore& store, const EngineConfig& cfg = {}) {
    if (expected_dim(c) < 0) throw UndefinedInvariant(c);
    CanonResult cr = canonicalize(c);
    if (auto* v = std::get_if<BigCount>(&cr)) return *v;
    const auto& key = std::get<CanonKey>(cr);
    if (cfg.use_vanishing_shortcuts)
        if (auto z = vanishing_shortcut(key.to_class())) return *z;
    if (auto v = store.find(key)) return *v;
    detail::compute_into_store(key, store, cfg);
    return *store.find(key);
}

namespace detail {
struct EagerLookup {
    MemoStore& store;
    const EngineConfig& cfg;
    std::optional<BigCount> operator()(const CurveClass& c) { return invariant(c, store, cfg); }
};
}  // namespace detail

/// Right-hand side of R(m) evaluated on c exactly as given (no
/// canonicalization of c itself). Requires expected_dim(c) >= 3.
inline BigCount relation_m_rhs(const CurveClass& c, MemoStore& store, const EngineConfig& cfg = {}) {
    if (expected_dim(c) < 3) throw std::invalid_argument("relation_m_rhs: needs n >= 3");
    detail::EagerLookup lookup{store, cfg};
    return *detail::relation_m_sum(c, lookup, cfg);
}

/// N_{d,alpha} solved from R(i) at the given (0-based) pivot.
/// Requires n >= 0, d > 0 and alpha[pivot] >= 1.
inline BigCount relation_i_solve(const CurveClass& c, std::size_t pivot, MemoStore& store,
                                 const EngineConfig& cfg = {}) {
    if (pivot >= c.r() || c.alpha[pivot] < 1 || c.d <= 0 || expected_dim(c) < 0)
        throw std::invalid_argument("relation_i_solve: precondition violated");
    detail::EagerLookup lookup{store, cfg};
    return *detail::relation_i_value(c, pivot, lookup, cfg);
}

/// Evaluates one relation directly on the class as given: R(m) when n >= 3,
/// otherwise R(i) at the configured pivot. Inner factors go through invariant().
inline BigCount invariant_by_relation(const CurveClass& c, MemoStore& store,
                                      const EngineConfig& cfg = {}) {
    if (expected_dim(c) < 0) throw UndefinedInvariant(c);
    if (c.d <= 0 || std::any_of(c.alpha.begin(), c.alpha.end(), [](int a) { return a < 0; }))
        return invariant(c, store, cfg);
    if (expected_dim(c) >= 3) return relation_m_rhs(c, store, cfg);
    auto pivot = choose_pivot(c.alpha, cfg.pivot_rule);
    if (!pivot) return BigCount(c.d == 1 ? 1 : 0);  // (1,0..0) is the only such class
    return relation_i_solve(c, *pivot, store, cfg);
}

}  // namespace gwb
