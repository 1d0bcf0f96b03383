#pragma once

// Independent check of the associativity relations of the small quantum
// product, coefficient by coefficient in the potential
//
//   Gamma = sum N_{d,alpha} q_1^d q_2^{a_1} ... q_{r+1}^{a_r} y^n / n!,
//
// with the sum over nonzero classes with d >= 0, alpha <= d, n = n_{d,alpha} >= 0.
// Basis indices: 0 = fundamental class, 1 = line, 1+i = i-th exceptional
// divisor, m = r + 2 = point class. Only invariants enter, through an
// InvariantProvider; nothing here calls the recursion directly.

#include "gwblowup/engine.hpp"
#include "gwblowup/lattice.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gwb {

using InvariantProvider = std::function<BigCount(const CurveClass&)>;

inline InvariantProvider engine_provider(MemoStore& store, EngineConfig cfg = {}) {
    return [&store, cfg](const CurveClass& c) { return invariant(c, store, cfg); };
}

class CohomologyBasis {
public:
    explicit CohomologyBasis(int r) : r_(r) {
        if (r < 0) throw std::invalid_argument("CohomologyBasis: r must be >= 0");
    }

    int r() const { return r_; }
    int m() const { return r_ + 2; }

    // Intersection pairing (T_a . T_b).
    int pairing(int a, int b) const {
        check(a, 0);
        check(b, 0);
        if (a > b) std::swap(a, b);
        if (a == 0) return b == m() ? 1 : 0;
        if (b == m()) return 0;
        if (a == 1) return b == 1 ? 1 : 0;
        return a == b ? -1 : 0;
    }

    // T_s^dual = epsilon_s T_s for the divisor classes s = 1..m-1.
    int epsilon(int s) const {
        if (s < 1 || s > m() - 1) throw std::out_of_range("epsilon: index outside [1, m-1]");
        return s == 1 ? 1 : -1;
    }

    // Exponent of q_s in the monomial of class c: d for the line, a_i for E_i.
    int divisor_degree(int s, const CurveClass& c) const {
        if (s < 1 || s > m() - 1) throw std::out_of_range("divisor_degree: index outside [1, m-1]");
        return s == 1 ? c.d : c.alpha[static_cast<std::size_t>(s - 2)];
    }

    void check(int idx, int lowest = 1) const {
        if (idx < lowest || idx > m()) throw std::out_of_range("basis index outside [1, m]");
    }

private:
    int r_;
};

// Coefficient position q^{cls} y^n / n!.
struct Monomial {
    CurveClass cls;
    int n = 0;
};

namespace detail {

// A class occurring in Gamma with its invariant and divisor degrees.
struct GammaTerm {
    std::int64_t dim = 0;           // n_{d,alpha}
    BigCount value;                 // N_{d,alpha}
    std::vector<int> degrees;       // index s-1 -> divisor_degree(s)
};

inline bool in_support(const CurveClass& c) {
    if (c.d < 0 || c.is_zero() || expected_dim(c) < 0) return false;
    return std::all_of(c.alpha.begin(), c.alpha.end(), [&](int a) { return a <= c.d; });
}

inline GammaTerm make_term(const CohomologyBasis& basis, const CurveClass& c,
                           const InvariantProvider& provider) {
    GammaTerm t;
    t.dim = expected_dim(c);
    t.value = in_support(c) ? provider(c) : BigCount(0);
    for (int s = 1; s < basis.m(); ++s) t.degrees.push_back(basis.divisor_degree(s, c));
    return t;
}

// Coefficient of y^n/n! in d_i d_j d_k of the single term t.
inline BigCount term_derivative(const CohomologyBasis& basis, const GammaTerm& t,
                                const std::array<int, 3>& idx, std::int64_t n) {
    if (t.value.is_zero()) return 0;
    int point_insertions = 0;
    for (int s : idx)
        if (s == basis.m()) ++point_insertions;
    if (t.dim != n + point_insertions) return 0;
    BigCount v = t.value;
    for (int s : idx)
        if (s != basis.m()) v *= t.degrees[static_cast<std::size_t>(s - 1)];
    return v;
}

// Precomputed data for all relation instances at one class.
struct ClassContext {
    GammaTerm whole;
    std::vector<std::pair<GammaTerm, GammaTerm>> products;  // splits with nonzero N*N
};

inline ClassContext make_context(const CohomologyBasis& basis, const CurveClass& cls,
                                 const InvariantProvider& provider) {
    ClassContext ctx;
    ctx.whole = make_term(basis, cls, provider);
    for (const SplitPair& sp : splits(cls, /*positive_degrees_only=*/false, Pruning::None)) {
        GammaTerm l = make_term(basis, sp.left, provider);
        if (l.value.is_zero()) continue;
        GammaTerm r = make_term(basis, sp.right, provider);
        if (r.value.is_zero()) continue;
        ctx.products.emplace_back(std::move(l), std::move(r));
    }
    return ctx;
}

// Coefficient of y^n/n! in Gamma_{f} * Gamma_{g}.
inline BigCount product_coeff(const CohomologyBasis& basis, const ClassContext& ctx,
                              const std::array<int, 3>& f, const std::array<int, 3>& g, int n,
                              bool& nonzero_seen) {
    const int m = basis.m();
    const int tf = static_cast<int>(std::count(f.begin(), f.end(), m));
    const int tg = static_cast<int>(std::count(g.begin(), g.end(), m));
    BigCount sum = 0;
    for (const auto& [l, r] : ctx.products) {
        const std::int64_t n1 = l.dim - tf;
        const std::int64_t n2 = r.dim - tg;
        if (n1 < 0 || n2 < 0 || n1 + n2 != n) continue;
        BigCount a = term_derivative(basis, l, f, n1);
        if (a.is_zero()) continue;
        BigCount b = term_derivative(basis, r, g, n2);
        if (b.is_zero()) continue;
        nonzero_seen = true;
        sum += binomial(n, n1) * a * b;
    }
    return sum;
}

struct RelationSides {
    BigCount lhs;
    BigCount rhs;
    bool nonzero_term = false;
};

inline RelationSides relation_sides(const CohomologyBasis& basis, const ClassContext& ctx, int i,
                                    int j, int k, int l, int n) {
    const int m = basis.m();
    RelationSides out;
    auto g = [&](int a, int b, int c) {
        BigCount v = term_derivative(basis, ctx.whole, {a, b, c}, n);
        if (!v.is_zero()) out.nonzero_term = true;
        return v;
    };
    out.lhs = basis.pairing(i, j) * g(k, l, m) - basis.pairing(k, j) * g(i, l, m) +
              basis.pairing(k, l) * g(i, j, m) - basis.pairing(i, l) * g(k, j, m);
    for (int s = 1; s <= m - 1; ++s) {
        BigCount term = product_coeff(basis, ctx, {j, k, s}, {i, s, l}, n, out.nonzero_term) -
                        product_coeff(basis, ctx, {i, j, s}, {k, s, l}, n, out.nonzero_term);
        out.rhs += basis.epsilon(s) * term;
    }
    return out;
}

}  // namespace detail

/// Coefficient of q^{cls} y^n/n! in Gamma_{ijk}.
inline BigCount gamma_coeff(const CohomologyBasis& basis, int i, int j, int k, const Monomial& mono,
                            const InvariantProvider& provider) {
    basis.check(i);
    basis.check(j);
    basis.check(k);
    if (mono.cls.is_zero()) throw std::invalid_argument("gamma_coeff: zero class");
    auto term = detail::make_term(basis, mono.cls, provider);
    return detail::term_derivative(basis, term, {i, j, k}, mono.n);
}

/// Both sides of the relation for indices (i, j, k, l) at one monomial.
inline detail::RelationSides relation_sides(const CohomologyBasis& basis, int i, int j, int k, int l,
                                            const Monomial& mono, const InvariantProvider& provider) {
    for (int idx : {i, j, k, l}) basis.check(idx);
    if (mono.cls.is_zero() || mono.n < 0)
        throw std::invalid_argument("relation_residual: needs a nonzero class and n >= 0");
    auto ctx = detail::make_context(basis, mono.cls, provider);
    return detail::relation_sides(basis, ctx, i, j, k, l, mono.n);
}

/// LHS - RHS of the associativity relation (i, j, k, l) at one monomial.
inline BigCount relation_residual(const CohomologyBasis& basis, int i, int j, int k, int l,
                                  const Monomial& mono, const InvariantProvider& provider) {
    auto sides = relation_sides(basis, i, j, k, l, mono, provider);
    return sides.lhs - sides.rhs;
}

struct ResidualFailure {
    std::array<int, 4> indices;
    Monomial mono;
    BigCount residual;
};

struct VerifyReport {
    std::uint64_t checked = 0;
    std::uint64_t nontrivial = 0;  // instances where some Gamma term is nonzero
    std::vector<ResidualFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Every quadruple in [1, m]^4 at every monomial with 1 <= d <= d_max,
/// 0 <= a_i <= d and 0 <= n <= n_max.
inline VerifyReport verify_relations(int r, int d_max, int n_max, const InvariantProvider& provider) {
    if (r < 0 || d_max < 1 || n_max < 0)
        throw std::invalid_argument("verify_relations: needs r >= 0, d_max >= 1, n_max >= 0");
    const CohomologyBasis basis(r);
    const int m = basis.m();
    VerifyReport report;
    for (int d = 1; d <= d_max; ++d) {
        std::vector<int> alpha(static_cast<std::size_t>(r), 0);
        while (true) {
            const CurveClass cls{d, alpha};
            const auto ctx = detail::make_context(basis, cls, provider);
            for (int n = 0; n <= n_max; ++n)
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= m; ++j)
                        for (int k = 1; k <= m; ++k)
                            for (int l = 1; l <= m; ++l) {
                                auto sides = detail::relation_sides(basis, ctx, i, j, k, l, n);
                                ++report.checked;
                                if (sides.nonzero_term) ++report.nontrivial;
                                if (sides.lhs != sides.rhs)
                                    report.failures.push_back(
                                        {{i, j, k, l}, {cls, n}, sides.lhs - sides.rhs});
                            }
            std::size_t p = alpha.size();
            while (p > 0 && alpha[p - 1] == d) alpha[--p] = 0;
            if (p == 0) break;
            ++alpha[p - 1];
        }
    }
    return report;
}

}  // namespace gwb
