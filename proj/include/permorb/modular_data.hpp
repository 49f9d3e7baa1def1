#pragma once

// The modular datum of a rational VOA: S-matrix, conformal weights and
// central charge, plus a small set of builtin theories.

#include "permorb/axioms.hpp"
#include "permorb/matrix.hpp"
#include "permorb/scalars.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permorb {

struct ModularData {
    std::string name;
    CMatrix s_matrix;
    std::vector<Rational> weights;
    Rational central_charge{0};
    std::vector<std::string> labels;

    std::size_t rank() const { return weights.size(); }
};

inline std::vector<std::string> default_labels(std::size_t rank) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back("W" + std::to_string(i));
    return out;
}

/// Throws std::invalid_argument unless the dimensions are consistent and the
/// vacuum (the unique zero weight) sits at index 0.
inline void check_shape(const ModularData& md) {
    const auto n = md.rank();
    if (n == 0) throw std::invalid_argument("modular data must have rank >= 1");
    if (md.s_matrix.rows() != n || md.s_matrix.cols() != n)
        throw std::invalid_argument("S-matrix is " + std::to_string(md.s_matrix.rows()) + "x" +
                                    std::to_string(md.s_matrix.cols()) + " but there are " + std::to_string(n) +
                                    " weights");
    if (md.labels.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " + std::to_string(md.labels.size()));
    if (md.weights[0] != Rational(0)) throw std::invalid_argument("weight of the vacuum (index 0) must be 0");
    for (std::size_t i = 1; i < n; ++i)
        if (md.weights[i] == Rational(0)) throw std::invalid_argument("zero weight must be unique (index " + std::to_string(i) + ")");
}

/// Diagonal of T: lambda_j - c/24 mod 1.
inline std::vector<Phase> t_matrix(const ModularData& md) {
    std::vector<Phase> out;
    out.reserve(md.rank());
    for (const auto& w : md.weights) out.emplace_back(w - md.central_charge / 24);
    return out;
}

struct ValidationReport {
    std::vector<CheckOutcome> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline ValidationReport validate(const ModularData& md, const Real& tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    if (md.s_matrix.rows() != md.rank() || md.s_matrix.cols() != md.rank())
        throw std::invalid_argument("S-matrix dimension does not match the number of weights");
    const auto& s = md.s_matrix;
    ValidationReport r;
    r.checks.push_back(axioms::symmetric(s, tol));
    r.checks.push_back(axioms::unitary(s, tol));
    r.checks.push_back(axioms::s4_identity(s, tol));
    r.checks.push_back(axioms::st_cubed(s, t_matrix(md), tol));
    r.checks.push_back(axioms::vacuum_row_nonzero(s, 0, tol));
    r.checks.push_back(axioms::verlinde(s, 0, tol));
    return r;
}

// ---------------------------------------------------------------------------
// Builtins

struct BuiltinParams {
    std::optional<Rational> c;  ///< holomorphic: central charge (default 8)
    std::optional<int> n;       ///< z_n: group order (default 2)
};

inline std::vector<std::string> list_builtins() { return {"holomorphic", "ising", "fibonacci", "z_n"}; }

namespace detail {

inline ModularData make_ising() {
    ModularData md;
    md.name = "ising";
    md.weights = {Rational(0), Rational(1, 2), Rational(1, 16)};
    md.central_charge = Rational(1, 2);
    md.labels = {"1", "epsilon", "sigma"};
    const Real half(Real(1) / 2);
    const Real r = boost::multiprecision::sqrt(Real(2)) / 2;
    md.s_matrix = CMatrix(3, 3);
    auto& s = md.s_matrix;
    s(0, 0) = s(0, 1) = s(1, 0) = s(1, 1) = ComplexHP(half);
    s(0, 2) = s(2, 0) = ComplexHP(r);
    s(1, 2) = s(2, 1) = ComplexHP(-r);
    return md;
}

inline ModularData make_fibonacci() {
    ModularData md;
    md.name = "fibonacci";
    md.weights = {Rational(0), Rational(2, 5)};
    md.central_charge = Rational(14, 5);
    md.labels = {"1", "tau"};
    const Real phi = (1 + boost::multiprecision::sqrt(Real(5))) / 2;
    const Real norm = boost::multiprecision::sqrt(2 + phi);
    md.s_matrix = CMatrix(2, 2);
    md.s_matrix(0, 0) = ComplexHP(Real(1) / norm);
    md.s_matrix(0, 1) = md.s_matrix(1, 0) = ComplexHP(phi / norm);
    md.s_matrix(1, 1) = ComplexHP(Real(-1) / norm);
    return md;
}

inline ModularData make_holomorphic(const Rational& c) {
    ModularData md;
    md.name = "holomorphic(c=" + to_string(c) + ")";
    md.weights = {Rational(0)};
    md.central_charge = c;
    md.labels = {"1"};
    md.s_matrix = CMatrix::identity(1);
    return md;
}

// Pointed theory on Z/N. Even N: the rank-one lattice sqrt(N)Z. Odd N: the
// quadratic form a^2/N, whose Gauss sum fixes c mod 8 to 0 or 2.
inline ModularData make_zn(int n) {
    if (n < 2) throw std::invalid_argument("z_n requires N >= 2");
    ModularData md;
    md.name = "z_n(N=" + std::to_string(n) + ")";
    const Real inv_sqrt = 1 / boost::multiprecision::sqrt(Real(n));
    md.s_matrix = CMatrix(n, n);
    const bool even = n % 2 == 0;
    for (int a = 0; a < n; ++a) {
        if (even) {
            const int m = std::min(a, n - a);
            md.weights.emplace_back(m * m, 2 * n);
        } else {
            Rational h = frac(Rational(a * a, n));
            if (a != 0 && h == Rational(0)) h = Rational(1);
            md.weights.push_back(h);
        }
        md.labels.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) {
            const auto num = static_cast<std::int64_t>(a) * b * (even ? -1 : -2);
            md.s_matrix(a, b) = phase_to_complex(make_phase(num, n)) * inv_sqrt;
        }
    }
    md.central_charge = even ? Rational(1) : Rational(n % 4 == 1 ? 0 : 2);
    return md;
}

}  // namespace detail

/// Throws std::invalid_argument for an unknown name or bad parameters.
inline ModularData builtin(const std::string& name, const BuiltinParams& params = {}) {
    if (name == "ising") return detail::make_ising();
    if (name == "fibonacci") return detail::make_fibonacci();
    if (name == "holomorphic") return detail::make_holomorphic(params.c.value_or(Rational(8)));
    if (name == "z_n") return detail::make_zn(params.n.value_or(2));
    std::string known;
    for (const auto& b : list_builtins()) known += (known.empty() ? "" : ", ") + b;
    throw std::invalid_argument("unknown builtin '" + name + "' (known: " + known + ")");
}

}  // namespace permorb
