#include "permorb/sl2z.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace permorb;

namespace {

// Random element of SL(2,Z) with entries bounded by `bound`: pick a coprime
// bottom row, then complete it with a Bezout solution shifted into range.
SL2ZMatrix random_sl2z(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    while (true) {
        const std::int64_t c = dist(rng), d = dist(rng);
        if (std::gcd(c, d) != 1) continue;
        // a d - b c = 1
        std::int64_t a = 0, b = 0;
        if (c == 0) {
            a = d;
            b = dist(rng);
        } else {
            const auto inv = detail::inverse_mod(detail::mod(d, std::abs(c)), std::abs(c));
            a = inv;
            if ((a * d - 1) % c != 0) continue;
            b = (a * d - 1) / c;
        }
        SL2ZMatrix g{a, b, c, d};
        if (g.det() == 1 && std::abs(a) <= bound && std::abs(b) <= bound) return g;
    }
}

std::size_t length_bound(const SL2ZMatrix& g) {
    const double m = std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d), std::int64_t{1}});
    return static_cast<std::size_t>(4 * (1 + std::log2(m)) + 8);
}

}  // namespace

TEST(Bezout, Examples) {
    EXPECT_EQ(bezout_x(4, 6).first, 2);
    EXPECT_EQ(bezout_x(1, 5).first, 1);
    EXPECT_EQ(bezout_x(3, 6).first, 1);
    auto [x, y] = bezout_x(4, 6);
    EXPECT_EQ(4 * x + 6 * y, 2);
    EXPECT_THROW(bezout_x(0, 6), std::invalid_argument);
}

TEST(BuildA, Examples) {
    EXPECT_EQ(build_A(1, 1, 2), (SL2ZMatrix{2, 1, -1, 0}));
    EXPECT_EQ(build_A(0, 1, 2), kIdentity);
    EXPECT_EQ(build_A(1, 1, 3), (SL2ZMatrix{3, 1, -1, 0}));
}

TEST(BuildA, IntegralWithUnitDeterminantExhaustive) {
    for (int k = 2; k <= 24; ++k)
        for (int s = 1; s < k; ++s)
            for (int r = 0; r < k; ++r) ASSERT_EQ(build_A(r, s, k).det(), 1) << r << " " << s << " " << k;
}

TEST(Decompose, Generators) {
    using Kind = GeneratorWord::Token::Kind;
    EXPECT_EQ(decompose(kT).tokens, (std::vector<GeneratorWord::Token>{{Kind::T, 1}}));
    EXPECT_EQ(decompose(kS).tokens, (std::vector<GeneratorWord::Token>{{Kind::S, 1}}));
    EXPECT_FALSE(decompose(kS).negate);
    EXPECT_TRUE(decompose(kIdentity).tokens.empty());
    auto minus = decompose({-1, 0, 0, -1});
    EXPECT_TRUE(minus.negate);
    EXPECT_TRUE(minus.tokens.empty());
    EXPECT_EQ(to_matrix(decompose({2, 1, -1, 0})), (SL2ZMatrix{2, 1, -1, 0}));
    EXPECT_THROW(decompose({2, 0, 0, 2}), std::invalid_argument);
}

TEST(Decompose, RandomRoundTrip) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const auto g = random_sl2z(rng, 10'000);
        const auto w = decompose(g);
        ASSERT_EQ(to_matrix(w), g) << g;
        ASSERT_LE(w.tokens.size(), length_bound(g)) << g;
    }
}

TEST(RhoEval, IdentityAndS) {
    WorkingPrecision wp(60);
    const auto ising = builtin("ising");
    EXPECT_EQ(max_abs_diff(rho_eval(ising, kIdentity), CMatrix::identity(3)), Real(0));
    EXPECT_EQ(rho_eval(ising, kS), ising.s_matrix);
}

TEST(RhoEval, HolomorphicScalarAlongWord) {
    WorkingPrecision wp(60);
    const auto h = builtin("holomorphic", {Rational(8), {}});
    const SL2ZMatrix g{2, 1, -1, 0};
    // rho(S) = 1 and rho(T^e) = e^{-2 pi i e/3}: the value is e^{-2 pi i E/3}
    // with E the total T exponent, times rho(-I) = 1.
    std::int64_t total = 0;
    for (const auto& t : decompose(g).tokens)
        if (t.kind == GeneratorWord::Token::Kind::T) total += t.exponent;
    const auto expected = phase_to_complex(make_phase(-total, 3));
    EXPECT_TRUE(approx_eq(rho_eval(h, g)(0, 0), expected, Real("1e-50")));
}

TEST(RhoEval, WordIndependence) {
    WorkingPrecision wp(60);
    using Kind = GeneratorWord::Token::Kind;
    std::mt19937_64 rng(99);
    std::vector<ModularData> inputs = {builtin("ising"), builtin("fibonacci"), builtin("z_n", {{}, 3}),
                                       builtin("z_n", {{}, 4}), builtin("holomorphic", {Rational(8), {}})};
    for (const auto& md : inputs) {
        for (int i = 0; i < 20; ++i) {
            const auto g = random_sl2z(rng, 50);
            auto w = decompose(g);
            const auto base = rho_eval(md, w);
            // Append S^4 and (ST)^3 S^{-2} = I realized as (ST)^3 S^2 with a sign.
            auto w2 = w;
            for (int j = 0; j < 4; ++j) w2.tokens.push_back({Kind::S, 1});
            ASSERT_EQ(to_matrix(w2), g);
            EXPECT_LT(max_abs_diff(rho_eval(md, w2), base), Real("1e-25")) << md.name;
            auto w3 = w;
            for (int j = 0; j < 3; ++j) {
                w3.tokens.push_back({Kind::S, 1});
                w3.tokens.push_back({Kind::T, 1});
            }
            w3.tokens.push_back({Kind::S, 1});
            w3.tokens.push_back({Kind::S, 1});
            ASSERT_EQ(to_matrix(w3), g);
            EXPECT_LT(max_abs_diff(rho_eval(md, w3), base), Real("1e-25")) << md.name;
        }
    }
}

TEST(RhoEval, SSquaredIsMinusIdentity) {
    WorkingPrecision wp(60);
    for (const auto& md : {builtin("ising"), builtin("z_n", {{}, 3})}) {
        GeneratorWord ss;
        ss.tokens = {{GeneratorWord::Token::Kind::S, 1}, {GeneratorWord::Token::Kind::S, 1}};
        const auto s2 = rho_eval(md, ss);
        EXPECT_LT(max_abs_diff(s2, rho_eval(md, SL2ZMatrix{-1, 0, 0, -1})), Real("1e-40"));
        // charge conjugation: every row has a single unit entry
        for (std::size_t i = 0; i < md.rank(); ++i) {
            Real row(0);
            for (std::size_t j = 0; j < md.rank(); ++j) row += abs(s2(i, j));
            EXPECT_LT(boost::multiprecision::abs(row - 1), Real("1e-40"));
        }
    }
}
