#pragma once

// Cyclic-group combinatorics for g = (1 2 ... k): gcd-derived sector
// constants, necklace enumeration and the rotation action on label tuples.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace permorb {

/// Thrown when an enumeration would exceed its configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;
inline constexpr int kDefaultMaxK = 24;

/// Irreducible-module indices, one per tensor factor (or per cycle).
using LabelTuple = std::vector<int>;

namespace detail {

/// gcd with the convention gcd(0, n) = n.
inline std::int64_t gcd0(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    auto r = a % n;
    return r < 0 ? r + n : r;
}

/// Inverse of a modulo n, for gcd(a, n) = 1. Returns 0 when n = 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    if (n == 1) return 0;
    std::int64_t r0 = n, r1 = mod(a, n), t0 = 0, t1 = 1;
    while (r1 != 0) {
        auto q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    if (r0 != 1) throw std::logic_error("inverse_mod: arguments not coprime");
    return mod(t0, n);
}

/// Smallest x >= 0 with s*x = gcd(s,k) (mod k), and y with s*x + k*y = gcd(s,k).
inline std::pair<std::int64_t, std::int64_t> bezout_min(std::int64_t s, std::int64_t k) {
    if (k <= 0) throw std::invalid_argument("bezout: modulus must be positive");
    const auto d = gcd0(s, k);
    const auto x = inverse_mod(s / d, k / d);
    const auto y = (d - s * x) / k;
    return {x, y};
}

}  // namespace detail

/// All gcd-derived integers for a sector pair (s, r) of the k-cycle.
struct CycleConstants {
    int k = 1, s = 0, r = 0;
    int d = 1;   ///< gcd(s, k): number of cycles of g^s
    int l = 1;   ///< k / d: length of each cycle, order of g^s
    int m = 0;   ///< s / d
    int d1 = 1;  ///< gcd(r, k)
    int l1 = 1;  ///< k / d1
    int f = 1;   ///< gcd(d, r) = gcd(d1, s)
    int b = 1;   ///< d / f
    int a = 1;   ///< d1 / f
    std::int64_t x = 0, y = 0;  ///< s*x + k*y = d, x minimal nonnegative
    std::int64_t p = 0, q = 0;  ///< r*p + k*q = d1, p minimal nonnegative
};

inline CycleConstants cycle_constants(int s, int r, int k) {
    if (k <= 0) throw std::invalid_argument("cycle_constants: k must be positive");
    if (s < 0 || s >= k || r < 0 || r >= k)
        throw std::invalid_argument("cycle_constants: s and r must lie in [0, k)");
    CycleConstants c;
    c.k = k;
    c.s = s;
    c.r = r;
    c.d = static_cast<int>(detail::gcd0(s, k));
    c.l = k / c.d;
    c.m = s / c.d;
    c.d1 = static_cast<int>(detail::gcd0(r, k));
    c.l1 = k / c.d1;
    c.f = static_cast<int>(detail::gcd0(c.d, r));
    c.b = c.d / c.f;
    c.a = c.d1 / c.f;
    std::tie(c.x, c.y) = detail::bezout_min(s, k);
    std::tie(c.p, c.q) = detail::bezout_min(r, k);
    return c;
}

// ---------------------------------------------------------------------------
// Tuples

/// The action of g: (M1, ..., Md) -> (Md, M1, ..., M(d-1)), iterated `steps` times.
inline LabelTuple rotate_tuple(const LabelTuple& t, std::int64_t steps) {
    const auto n = static_cast<std::int64_t>(t.size());
    if (n == 0) return t;
    const auto shift = detail::mod(steps, n);
    LabelTuple out(t.size());
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>((i + shift) % n)] = t[static_cast<std::size_t>(i)];
    return out;
}

/// Smallest e dividing the length with rotate_tuple(t, e) == t.
inline int minimal_period(const LabelTuple& t) {
    const int n = static_cast<int>(t.size());
    for (int e = 1; e < n; ++e) {
        if (n % e != 0) continue;
        bool ok = true;
        for (int i = 0; i + e < n && ok; ++i) ok = t[i] == t[i + e];
        if (ok) return e;
    }
    return std::max(n, 1);
}

inline bool is_constant(const LabelTuple& t) {
    return std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
}

/// Lexicographically minimal rotation: the canonical necklace representative.
inline LabelTuple canonical_rotation(const LabelTuple& t) {
    LabelTuple best = t;
    for (std::size_t i = 1; i < t.size(); ++i) best = std::min(best, rotate_tuple(t, static_cast<std::int64_t>(i)));
    return best;
}

/// alphabet^length, saturating at budget + 1.
inline std::uint64_t bounded_power(std::uint64_t alphabet, int length, std::uint64_t budget) {
    std::uint64_t v = 1;
    for (int i = 0; i < length; ++i) {
        if (alphabet != 0 && v > (budget + 1) / alphabet) return budget + 1;
        v *= alphabet;
    }
    return v;
}

namespace detail {

// Fredricksen-Kessler-Maiorana: emits necklaces (minimal rotations) in
// lexicographic order.
inline void fkm(int t, int p, int alphabet, LabelTuple& a, std::vector<LabelTuple>& out) {
    const int n = static_cast<int>(a.size()) - 1;
    if (t > n) {
        if (n % p == 0) out.emplace_back(a.begin() + 1, a.end());
        return;
    }
    a[t] = a[t - p];
    fkm(t + 1, p, alphabet, a, out);
    for (int j = a[t - p] + 1; j < alphabet; ++j) {
        a[t] = j;
        fkm(t + 1, t, alphabet, a, out);
    }
}

}  // namespace detail

/// Rotation-orbit representatives of [0, alphabet)^length, sorted.
inline std::vector<LabelTuple> necklaces(int alphabet, int length, bool exclude_constant,
                                         std::uint64_t budget = kDefaultEnumerationBudget) {
    if (alphabet <= 0 || length <= 0) throw std::invalid_argument("necklaces: alphabet and length must be positive");
    if (bounded_power(static_cast<std::uint64_t>(alphabet), length, budget) > budget)
        throw BudgetExceeded("necklace enumeration: " + std::to_string(alphabet) + "^" + std::to_string(length) +
                             " tuples exceed budget " + std::to_string(budget));
    std::vector<LabelTuple> out;
    LabelTuple a(static_cast<std::size_t>(length) + 1, 0);
    detail::fkm(1, 1, alphabet, a, out);
    if (exclude_constant) std::erase_if(out, [](const LabelTuple& t) { return is_constant(t); });
    return out;
}

}  // namespace permorb
