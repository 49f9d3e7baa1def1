#pragma once

// SL(2,Z) elements, their factorization into S and T, and evaluation of the
// modular representation rho of a ModularData on arbitrary group elements.

#include "permorb/modular_data.hpp"
#include "permorb/permutation.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace permorb {

struct SL2ZMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    friend bool operator==(const SL2ZMatrix&, const SL2ZMatrix&) = default;
};

inline SL2ZMatrix operator*(const SL2ZMatrix& x, const SL2ZMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline constexpr SL2ZMatrix kIdentity{1, 0, 0, 1};
inline constexpr SL2ZMatrix kS{0, -1, 1, 0};
inline constexpr SL2ZMatrix kT{1, 1, 0, 1};

inline std::ostream& operator<<(std::ostream& os, const SL2ZMatrix& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

/// A word in S and T. Each token is S or T^exponent; the word denotes the
/// ordered product of its tokens, multiplied by -I when negate is set.
struct GeneratorWord {
    struct Token {
        enum class Kind { S, T } kind;
        std::int64_t exponent = 1;
        friend bool operator==(const Token&, const Token&) = default;
    };
    std::vector<Token> tokens;
    bool negate = false;

    friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

inline std::string to_string(const GeneratorWord& w) {
    std::string out = w.negate ? "-" : "";
    for (const auto& t : w.tokens) {
        if (!out.empty() && out != "-") out += " ";
        out += t.kind == GeneratorWord::Token::Kind::S ? "S" : "T^" + std::to_string(t.exponent);
    }
    return out.empty() || out == "-" ? out + "I" : out;
}

inline SL2ZMatrix t_power(std::int64_t e) { return {1, e, 0, 1}; }

/// Exact remultiplication of a word.
inline SL2ZMatrix to_matrix(const GeneratorWord& w) {
    SL2ZMatrix m = kIdentity;
    for (const auto& t : w.tokens) m = m * (t.kind == GeneratorWord::Token::Kind::S ? kS : t_power(t.exponent));
    if (w.negate) m = {-m.a, -m.b, -m.c, -m.d};
    return m;
}

/// (x, y) with s*x + k*y = gcd(s, k) and x the least nonnegative solution.
inline std::pair<std::int64_t, std::int64_t> bezout_x(std::int64_t s, std::int64_t k) {
    if (s < 1) throw std::invalid_argument("bezout_x: s must be positive");
    return detail::bezout_min(s, k);
}

/// The matrix A^{r,s} = [[l1/b, r x/d1], [-s p/d, (d q + y d1 - y q k)/f]].
inline SL2ZMatrix build_A(int r, int s, int k) {
    if (s < 1 || s >= k) throw std::invalid_argument("build_A: s must lie in [1, k)");
    if (r < 0 || r >= k) throw std::invalid_argument("build_A: r must lie in [0, k)");
    const auto cc = cycle_constants(s, r, k);
    const std::int64_t num_b = r * cc.x, num_c = -static_cast<std::int64_t>(s) * cc.p,
                       num_d = cc.d * cc.q + cc.y * cc.d1 - cc.y * cc.q * k;
    if (cc.l1 % cc.b != 0 || num_b % cc.d1 != 0 || num_c % cc.d != 0 || num_d % cc.f != 0)
        throw std::logic_error("build_A: non-integral entry");
    SL2ZMatrix m{cc.l1 / cc.b, num_b / cc.d1, num_c / cc.d, num_d / cc.f};
    if (m.det() != 1) throw std::logic_error("build_A: determinant is not 1");
    return m;
}

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

/// Nearest-integer Euclid on the bottom row: gamma = T^q S gamma' with
/// |c'| <= |c|/2, ending at +-T^e.
inline GeneratorWord decompose(SL2ZMatrix g) {
    if (g.det() != 1) throw std::invalid_argument("decompose: determinant must be 1");
    using Kind = GeneratorWord::Token::Kind;
    GeneratorWord w;
    while (g.c != 0) {
        const std::int64_t q = detail::floor_div(2 * g.a + g.c, 2 * g.c);
        if (q != 0) w.tokens.push_back({Kind::T, q});
        w.tokens.push_back({Kind::S, 1});
        g = {g.c, g.d, -(g.a - q * g.c), -(g.b - q * g.d)};
    }
    const std::int64_t e = g.a == 1 ? g.b : -g.b;
    w.negate = g.a != 1;
    if (e != 0) w.tokens.push_back({Kind::T, e});
    return w;
}

/// rho(word) with rho(S) = S, rho(T^e) = diag(e^{2 pi i e (lambda - c/24)}),
/// rho(-I) = S^2.
inline CMatrix rho_eval(const ModularData& md, const GeneratorWord& w) {
    const auto n = md.rank();
    const auto t = t_matrix(md);
    CMatrix m = CMatrix::identity(n);
    for (const auto& tok : w.tokens) {
        if (tok.kind == GeneratorWord::Token::Kind::S) {
            m = m * md.s_matrix;
        } else {
            std::vector<ComplexHP> diag;
            diag.reserve(n);
            for (const auto& ph : t) diag.push_back(phase_to_complex(tok.exponent * ph));
            m = scale_columns(std::move(m), diag);
        }
    }
    if (w.negate) m = m * md.s_matrix * md.s_matrix;
    return m;
}

inline CMatrix rho_eval(const ModularData& md, const SL2ZMatrix& g) { return rho_eval(md, decompose(g)); }

}  // namespace permorb
