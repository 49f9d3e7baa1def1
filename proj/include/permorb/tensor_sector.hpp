#pragma once

// Twisted sectors of V^{(x)k}: labels, weights, stable sets and S-matrix
// entries between (possibly twisted) modules of the tensor power.

#include "permorb/modular_data.hpp"
#include "permorb/permutation.hpp"
#include "permorb/sl2z.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permorb {

/// A g^s-twisted module T_{g^s}^{M1..Md}; sector 0 is the untwisted W^{i1..ik}.
struct TwistedLabel {
    int sector = 0;
    LabelTuple tuple;

    friend bool operator==(const TwistedLabel&, const TwistedLabel&) = default;
    friend auto operator<=>(const TwistedLabel&, const TwistedLabel&) = default;
};

namespace detail {

inline void check_tuple(const ModularData& md, const LabelTuple& t, std::size_t length, const char* what) {
    if (t.size() != length)
        throw std::invalid_argument(std::string(what) + ": expected a tuple of length " + std::to_string(length) +
                                    ", got " + std::to_string(t.size()));
    for (int v : t)
        if (v < 0 || static_cast<std::size_t>(v) >= md.rank())
            throw std::invalid_argument(std::string(what) + ": label " + std::to_string(v) + " out of range");
}

inline bool period_divides(const LabelTuple& t, int n) { return n % minimal_period(t) == 0; }

inline Rational weight_sum(const ModularData& md, const LabelTuple& t, std::size_t count) {
    Rational sum(0);
    for (std::size_t i = 0; i < count; ++i) sum += md.weights[t[i]];
    return sum;
}

}  // namespace detail

/// lambda = (lambda_1 + ... + lambda_d)/l + d(l^2 - 1)c/(24 l); plain sum for s = 0.
inline Rational twisted_weight(const ModularData& md, const TwistedLabel& lbl, int k) {
    if (k < 1) throw std::invalid_argument("twisted_weight: k must be positive");
    if (lbl.sector < 0 || lbl.sector >= k) throw std::invalid_argument("twisted_weight: sector out of range");
    const auto cc = cycle_constants(lbl.sector, 0, k);
    detail::check_tuple(md, lbl.tuple, static_cast<std::size_t>(cc.d), "twisted_weight");
    const Rational sum = detail::weight_sum(md, lbl.tuple, lbl.tuple.size());
    if (lbl.sector == 0) return sum;
    const std::int64_t l = cc.l, d = cc.d;
    return sum / l + Rational(d * (l * l - 1), 24 * l) * md.central_charge;
}

/// Sector-s labels that are g^r-stable: d-tuples repeating an f-tuple.
inline std::vector<TwistedLabel> stable_set(int s, int r, int k, std::size_t rank,
                                            std::uint64_t budget = kDefaultEnumerationBudget) {
    if (rank == 0) throw std::invalid_argument("stable_set: rank must be positive");
    const auto cc = cycle_constants(s, r, k);
    if (bounded_power(rank, cc.f, budget) > budget) throw BudgetExceeded("stable_set: rank^f exceeds budget");
    std::vector<TwistedLabel> out;
    LabelTuple block(cc.f, 0);
    while (true) {
        TwistedLabel lbl{s, {}};
        for (int rep = 0; rep < cc.b; ++rep) lbl.tuple.insert(lbl.tuple.end(), block.begin(), block.end());
        out.push_back(std::move(lbl));
        int pos = cc.f - 1;
        while (pos >= 0 && ++block[pos] == static_cast<int>(rank)) block[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

enum class TwistedNormalization {
    unitary,  ///< unit prefactor; the representation stays unitary
    literal,  ///< prefactor (l1/l)^f exactly as written in the entry formula
};

namespace detail {

inline CMatrix s_rho_a(const ModularData& md, const SL2ZMatrix& a) { return md.s_matrix * rho_eval(md, a); }

inline SL2ZMatrix a_from_witnesses(const CycleConstants& cc, std::int64_t x, std::int64_t y, std::int64_t p,
                                   std::int64_t q) {
    const std::int64_t nb = cc.r * x, nc = -static_cast<std::int64_t>(cc.s) * p,
                       nd = cc.d * q + y * cc.d1 - y * q * cc.k;
    if (cc.l1 % cc.b != 0 || nb % cc.d1 != 0 || nc % cc.d != 0 || nd % cc.f != 0)
        throw std::logic_error("A^{r,s}: non-integral entry for the chosen witnesses");
    SL2ZMatrix m{cc.l1 / cc.b, nb / cc.d1, nc / cc.d, nd / cc.f};
    if (m.det() != 1) throw std::logic_error("A^{r,s}: determinant is not 1 for the chosen witnesses");
    return m;
}

// i: f-prefix of the sector-r tuple, j: f-prefix of the sector-s tuple.
inline ComplexHP twisted_value(const ModularData& md, const CycleConstants& cc, const CMatrix& sa, const LabelTuple& i,
                               const LabelTuple& j, std::int64_t x, std::int64_t p, TwistedNormalization norm) {
    const std::int64_t f = cc.f;
    const Rational shift = Rational(f) * md.central_charge / 24;
    const Rational ei = -Rational(p * cc.s, f * cc.l1) * (weight_sum(md, i, f) - shift);
    const Rational ej = -Rational(x * cc.r, f * cc.l) * (weight_sum(md, j, f) - shift);
    ComplexHP v = phase_to_complex(Phase(ei) + Phase(ej));
    for (std::int64_t t = 0; t < f; ++t) v *= sa(i[t], j[t]);
    if (norm == TwistedNormalization::literal) v *= boost::multiprecision::pow(Real(cc.l1) / Real(cc.l), Real(f));
    return v;
}

}  // namespace detail

/// S-matrix entries of V^{(x)k} between sectors, with S rho(A^{r,s}) cached
/// for every (r, s). Immutable after construction.
class TensorSector {
public:
    TensorSector(const ModularData& md, int k, TwistedNormalization norm = TwistedNormalization::unitary)
        : md_(md), k_(k), norm_(norm) {
        if (k < 1) throw std::invalid_argument("TensorSector: k must be positive");
        sa_.resize(static_cast<std::size_t>(k) * k);
        for (int r = 1; r < k; ++r)
            for (int s = 1; s < k; ++s) sa_[index(r, s)] = detail::s_rho_a(md_, build_A(r, s, k));
    }

    const ModularData& data() const { return md_; }
    int k() const { return k_; }
    TwistedNormalization normalization() const { return norm_; }

    /// prod_{t<d} S_{i_t, j_t}: untwisted d-block against a sector-s d-tuple.
    ComplexHP untwisted_twisted(int s, const LabelTuple& untw, const LabelTuple& tw) const {
        const auto cc = cycle_constants(s, 0, k_);
        detail::check_tuple(md_, untw, cc.d, "untwisted block");
        detail::check_tuple(md_, tw, cc.d, "twisted tuple");
        ComplexHP v(1);
        for (int t = 0; t < cc.d; ++t) v *= md_.s_matrix(untw[t], tw[t]);
        return v;
    }

    /// Entry between a sector-r module with f-tuple i and a sector-s module
    /// with f-tuple j.
    ComplexHP twisted_twisted(int r, int s, const LabelTuple& i, const LabelTuple& j) const {
        if (r == 0) return untwisted_twisted(s, i, j);
        if (s < 1 || s >= k_ || r < 0 || r >= k_) throw std::invalid_argument("twisted_twisted: sector out of range");
        const auto cc = cycle_constants(s, r, k_);
        detail::check_tuple(md_, i, cc.f, "twisted_twisted i");
        detail::check_tuple(md_, j, cc.f, "twisted_twisted j");
        return detail::twisted_value(md_, cc, sa_[index(r, s)], i, j, cc.x, cc.p, norm_);
    }

    /// S_{M, N} for arbitrary sector labels, or nullopt when the pair is not
    /// mutually stable (M must be g^s-stable and N g^r-stable).
    std::optional<ComplexHP> entry(const TwistedLabel& m, const TwistedLabel& n) const {
        const int r = m.sector, s = n.sector;
        if (r == 0 && s == 0) {
            detail::check_tuple(md_, m.tuple, k_, "untwisted");
            detail::check_tuple(md_, n.tuple, k_, "untwisted");
            ComplexHP v(1);
            for (int t = 0; t < k_; ++t) v *= md_.s_matrix(m.tuple[t], n.tuple[t]);
            return v;
        }
        if (r == 0) return untwisted_against(m.tuple, n);
        if (s == 0) return untwisted_against(n.tuple, m);
        const auto cc = cycle_constants(s, r, k_);
        detail::check_tuple(md_, m.tuple, cc.d1, "sector-r tuple");
        detail::check_tuple(md_, n.tuple, cc.d, "sector-s tuple");
        if (!detail::period_divides(m.tuple, cc.f) || !detail::period_divides(n.tuple, cc.f)) return std::nullopt;
        const LabelTuple i(m.tuple.begin(), m.tuple.begin() + cc.f), j(n.tuple.begin(), n.tuple.begin() + cc.f);
        return twisted_twisted(r, s, i, j);
    }

    /// |entry(witnesses x, p) - entry(x + l, p + l1)| for a twisted pair.
    Real witness_sensitivity(int r, int s, const LabelTuple& i, const LabelTuple& j) const {
        if (r < 1 || r >= k_ || s < 1 || s >= k_) throw std::invalid_argument("witness_sensitivity: sectors must be twisted");
        const auto cc = cycle_constants(s, r, k_);
        detail::check_tuple(md_, i, cc.f, "witness_sensitivity i");
        detail::check_tuple(md_, j, cc.f, "witness_sensitivity j");
        const std::int64_t x = cc.x + cc.l, y = cc.y - cc.m;
        const std::int64_t p = cc.p + cc.l1, q = cc.q - cc.r / cc.d1;
        const auto sa = detail::s_rho_a(md_, detail::a_from_witnesses(cc, x, y, p, q));
        return abs(twisted_twisted(r, s, i, j) - detail::twisted_value(md_, cc, sa, i, j, x, p, norm_));
    }

private:
    std::size_t index(int r, int s) const { return static_cast<std::size_t>(r) * k_ + s; }

    std::optional<ComplexHP> untwisted_against(const LabelTuple& untw, const TwistedLabel& tw) const {
        const auto cc = cycle_constants(tw.sector, 0, k_);
        detail::check_tuple(md_, untw, k_, "untwisted");
        if (!detail::period_divides(untw, cc.d)) return std::nullopt;
        return untwisted_twisted(tw.sector, LabelTuple(untw.begin(), untw.begin() + cc.d), tw.tuple);
    }

    ModularData md_;
    int k_;
    TwistedNormalization norm_;
    std::vector<CMatrix> sa_;
};

inline ComplexHP s_tensor_untwisted_twisted(const ModularData& md, int k, int s, const LabelTuple& untw,
                                            const LabelTuple& tw) {
    if (s < 1 || s >= k) throw std::invalid_argument("s_tensor_untwisted_twisted: s must lie in [1, k)");
    const auto cc = cycle_constants(s, 0, k);
    detail::check_tuple(md, untw, cc.d, "untwisted block");
    detail::check_tuple(md, tw, cc.d, "twisted tuple");
    ComplexHP v(1);
    for (int t = 0; t < cc.d; ++t) v *= md.s_matrix(untw[t], tw[t]);
    return v;
}

inline ComplexHP s_tensor_twisted_twisted(const ModularData& md, int k, int r, int s, const LabelTuple& i,
                                          const LabelTuple& j,
                                          TwistedNormalization norm = TwistedNormalization::unitary) {
    if (r == 0) return s_tensor_untwisted_twisted(md, k, s, i, j);
    if (r < 0 || r >= k || s < 1 || s >= k) throw std::invalid_argument("s_tensor_twisted_twisted: sector out of range");
    const auto cc = cycle_constants(s, r, k);
    detail::check_tuple(md, i, cc.f, "s_tensor_twisted_twisted i");
    detail::check_tuple(md, j, cc.f, "s_tensor_twisted_twisted j");
    return detail::twisted_value(md, cc, detail::s_rho_a(md, build_A(r, s, k)), i, j, cc.x, cc.p, norm);
}

}  // namespace permorb
