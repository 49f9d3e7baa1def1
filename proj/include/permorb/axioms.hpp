#pragma once

// Individual modular-representation checks on an (S, T) pair. Shared by input
// validation and by the verification suite.

#include "permorb/matrix.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace permorb {

struct CheckOutcome {
    std::string name;
    bool pass = false;
    double deviation = 0;  ///< max deviation observed; +inf when undefined
};

namespace axioms {

inline double to_double(const Real& x) { return x.convert_to<double>(); }

inline CheckOutcome make(std::string name, const Real& dev, const Real& tol) {
    return {std::move(name), dev <= tol, to_double(dev)};
}

inline CheckOutcome symmetric(const CMatrix& s, const Real& tol) {
    return make("symmetric", max_abs_diff(s, transpose(s)), tol);
}

inline CheckOutcome unitary(const CMatrix& s, const Real& tol) {
    return make("unitary", max_abs_diff(s * adjoint(s), CMatrix::identity(s.rows())), tol);
}

inline CheckOutcome s4_identity(const CMatrix& s, const Real& tol) {
    CMatrix s2 = s * s;
    return make("S^4=I", max_abs_diff(s2 * s2, CMatrix::identity(s.rows())), tol);
}

/// (S T)^3 = S^2 with T = diag(e^{2 pi i t_j}).
inline CheckOutcome st_cubed(const CMatrix& s, const std::vector<Phase>& t, const Real& tol) {
    std::vector<ComplexHP> diag;
    diag.reserve(t.size());
    for (const auto& ph : t) diag.push_back(phase_to_complex(ph));
    CMatrix st = scale_columns(s, diag);
    return make("(ST)^3=S^2", max_abs_diff(st * st * st, s * s), tol);
}

/// No entry of the vacuum row vanishes (Verlinde denominators).
inline CheckOutcome vacuum_row_nonzero(const CMatrix& s, std::size_t vacuum, const Real& tol) {
    bool ok = true;
    for (std::size_t x = 0; x < s.cols(); ++x) ok = ok && abs(s(vacuum, x)) > tol;
    return {"vacuum row nonzero", ok, ok ? 0.0 : 1.0};
}

/// Vacuum row real and strictly positive (quantum dimensions of a unitary theory).
inline CheckOutcome vacuum_row_positive(const CMatrix& s, std::size_t vacuum, const Real& tol) {
    Real dev(0);
    bool positive = true;
    for (std::size_t x = 0; x < s.cols(); ++x) {
        const auto& z = s(vacuum, x);
        Real d = boost::multiprecision::abs(z.im);
        if (z.re < 0 && -z.re > d) d = -z.re;
        if (d > dev) dev = d;
        positive = positive && z.re > tol;
    }
    return {"vacuum row positive", positive && dev <= tol, to_double(dev)};
}

/// S^2 is a permutation matrix that is an involution fixing the vacuum.
inline CheckOutcome s2_permutation(const CMatrix& s, std::size_t vacuum, const Real& tol) {
    const std::size_t n = s.rows();
    CMatrix s2 = s * s;
    const ComplexHP one(1);
    std::vector<std::size_t> perm(n, n);
    Real dev(0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        Real best_dist = abs(s2(i, 0) - one);
        for (std::size_t j = 1; j < n; ++j) {
            Real dist = abs(s2(i, j) - one);
            if (dist < best_dist) best_dist = dist, best = j;
        }
        perm[i] = best;
        if (best_dist > dev) dev = best_dist;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == best) continue;
            Real z = abs(s2(i, j));
            if (z > dev) dev = z;
        }
    }
    bool structural = n == 0 || perm[vacuum] == vacuum;
    for (std::size_t i = 0; i < n && structural; ++i) structural = perm[perm[i]] == i;
    return {"S^2 permutation", structural && dev <= tol, to_double(dev)};
}

/// N_ab^c = sum_x S_ax S_bx conj(S_cx) / S_0x are nonnegative integers.
inline CheckOutcome verlinde(const CMatrix& s, std::size_t vacuum, const Real& tol) {
    const std::size_t n = s.rows();
    const std::string name = "Verlinde integrality";
    std::vector<ComplexHP> inv0(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (norm2(s(vacuum, x)) == 0) return {name, false, std::numeric_limits<double>::infinity()};
        inv0[x] = ComplexHP(1) / s(vacuum, x);
    }
    CMatrix sc = adjoint(s);  // sc(x, c) = conj(S_cx)
    Real dev(0);
    bool nonnegative = true;
    std::vector<ComplexHP> w(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            for (std::size_t x = 0; x < n; ++x) w[x] = s(a, x) * s(b, x) * inv0[x];
            for (std::size_t c = 0; c < n; ++c) {
                ComplexHP acc;
                for (std::size_t x = 0; x < n; ++x) acc += w[x] * sc(x, c);
                Real nearest = boost::multiprecision::round(acc.re);
                Real d = abs(acc - ComplexHP(nearest));
                if (d > dev) dev = d;
                if (nearest < 0) nonnegative = false;
            }
        }
    return {name, nonnegative && dev <= tol, to_double(dev)};
}

}  // namespace axioms
}  // namespace permorb
