#pragma once

// Property suite for modular data (input or orbifold output) and the
// orbifold-specific cross-checks.

#include "permorb/axioms.hpp"
#include "permorb/orbifold.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace permorb {

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0;
    double elapsed_ms = 0;
};

struct CheckSuiteResult {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult& operator[](const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c;
        throw std::out_of_range("no check named '" + name + "'");
    }
};

namespace detail {

template <class F>
void timed(CheckSuiteResult& out, F check) {
    const auto start = std::chrono::steady_clock::now();
    CheckOutcome o = check();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    out.checks.push_back({std::move(o.name), o.pass, o.deviation, dt.count()});
}

}  // namespace detail

inline CheckSuiteResult axiom_suite(const CMatrix& s, const std::vector<Phase>& t, const Real& tol,
                                    std::size_t vacuum = 0) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    if (!s.square() || t.size() != s.rows()) throw std::invalid_argument("axiom_suite: S must be square and match T");
    if (s.rows() > 0 && vacuum >= s.rows()) throw std::invalid_argument("axiom_suite: vacuum index out of range");
    CheckSuiteResult r;
    detail::timed(r, [&] { return axioms::symmetric(s, tol); });
    detail::timed(r, [&] { return axioms::unitary(s, tol); });
    detail::timed(r, [&] { return axioms::s4_identity(s, tol); });
    detail::timed(r, [&] { return axioms::st_cubed(s, t, tol); });
    detail::timed(r, [&] { return axioms::s2_permutation(s, vacuum, tol); });
    detail::timed(r, [&] { return axioms::verlinde(s, vacuum, tol); });
    detail::timed(r, [&] { return axioms::vacuum_row_positive(s, vacuum, tol); });
    return r;
}

inline CheckSuiteResult axiom_suite(const ModularData& md, const Real& tol) {
    return axiom_suite(md.s_matrix, t_matrix(md), tol, 0);
}

inline CheckSuiteResult axiom_suite(const OrbifoldResult& res, const Real& tol) {
    return axiom_suite(res.s_matrix, res.t_phases, tol, res.vacuum);
}

namespace detail {

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

/// Number of necklaces of the given length over an alphabet (Burnside).
inline std::uint64_t necklace_count(std::uint64_t alphabet, std::uint64_t length) {
    std::uint64_t total = 0;
    for (std::uint64_t e = 1; e <= length; ++e) {
        if (length % e != 0) continue;
        std::uint64_t pw = 1;
        for (std::uint64_t i = 0; i < length / e; ++i) pw *= alphabet;
        total += euler_phi(e) * pw;
    }
    return total / length;
}

}  // namespace detail

struct CountComparison {
    std::size_t catalog_count = 0;
    std::uint64_t burnside_count = 0;

    bool agree() const { return catalog_count == burnside_count; }
};

/// Catalog size against an independent count per family.
inline CountComparison count_oracle(const ModularData& md, int k, const OrbifoldOptions& opt = {}) {
    CountComparison c;
    c.catalog_count = catalog(md, k, opt).size();
    const std::uint64_t n = md.rank(), kk = static_cast<std::uint64_t>(k);
    std::uint64_t total = (detail::necklace_count(n, kk) - n) + n * kk;
    for (std::uint64_t s = 1; s < kk; ++s) {
        const std::uint64_t d = std::gcd(s, kk), l = kk / d;
        total += n * kk + (detail::necklace_count(n, d) - n) * l;
    }
    c.burnside_count = total;
    return c;
}

/// max |theorem - generic| over all entries.
inline Real engine_diff(const ModularData& md, int k, const OrbifoldOptions& opt = {}) {
    return *orbifold_s_matrix(md, k, Engine::both, opt).engine_diff;
}

}  // namespace permorb
