#include "permorb/tensor_sector.hpp"

#include <gtest/gtest.h>

using namespace permorb;

namespace {

ModularData holo8() { return builtin("holomorphic", {Rational(8), {}}); }

}  // namespace

TEST(TwistedWeight, HandSubstitutedValues) {
    WorkingPrecision wp(60);
    EXPECT_EQ(twisted_weight(holo8(), {1, {0}}, 2), Rational(1, 2));
    EXPECT_EQ(twisted_weight(builtin("ising"), {1, {2}}, 2), Rational(1, 16));
    EXPECT_EQ(twisted_weight(builtin("ising"), {4, {0, 0}}, 6), Rational(1, 9));
    EXPECT_EQ(twisted_weight(builtin("ising"), {0, {1, 2}}, 2), Rational(9, 16));
    EXPECT_THROW(twisted_weight(builtin("ising"), {1, {0, 0}}, 2), std::invalid_argument);
    EXPECT_THROW(twisted_weight(builtin("ising"), {1, {5}}, 2), std::invalid_argument);
}

TEST(TwistedWeight, RotationInvariant) {
    WorkingPrecision wp(60);
    const auto md = builtin("ising");
    for (int k = 2; k <= 8; ++k)
        for (int s = 0; s < k; ++s) {
            const int d = std::gcd(s, k);
            for (const auto& t : necklaces(3, d, false)) {
                const auto w = twisted_weight(md, {s, t}, k);
                for (int i = 1; i < d; ++i) ASSERT_EQ(twisted_weight(md, {s, rotate_tuple(t, i)}, k), w);
            }
        }
}

TEST(StableSet, Examples) {
    auto one = stable_set(1, 1, 2, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], (TwistedLabel{1, {0}}));
    EXPECT_EQ(stable_set(2, 3, 6, 2), (std::vector<TwistedLabel>{{2, {0, 0}}, {2, {1, 1}}}));
    EXPECT_EQ(stable_set(3, 3, 6, 2).size(), 8u);
}

TEST(StableSet, CardinalitySymmetric) {
    for (int k = 1; k <= 12; ++k)
        for (int s = 0; s < k; ++s)
            for (int r = 0; r < k; ++r) {
                const int f = std::gcd(std::gcd(s, k), r);
                std::size_t expected = 1;
                for (int i = 0; i < f; ++i) expected *= 2;
                auto a = stable_set(s, r, k, 2), b = stable_set(r, s, k, 2);
                ASSERT_EQ(a.size(), expected);
                ASSERT_EQ(b.size(), expected);
                for (const auto& lbl : a) ASSERT_EQ(rotate_tuple(lbl.tuple, s == 0 ? 0 : r), lbl.tuple);
            }
}

TEST(UntwistedTwisted, Examples) {
    WorkingPrecision wp(60);
    const auto ising = builtin("ising");
    EXPECT_TRUE(approx_eq(s_tensor_untwisted_twisted(ising, 2, 1, {2}, {2}), ComplexHP(0), Real("1e-50")));
    EXPECT_TRUE(approx_eq(s_tensor_untwisted_twisted(ising, 2, 1, {0}, {1}), ComplexHP(Real(1) / 2), Real("1e-50")));
    for (int k = 2; k <= 6; ++k) EXPECT_EQ(s_tensor_untwisted_twisted(holo8(), k, 1, {0}, {0}), ComplexHP(1));
}

TEST(TwistedTwisted, HolomorphicK2) {
    WorkingPrecision wp(60);
    // A = -T^{-2} S, so with rho(T) = e^{-2 pi i/3}, rho(S) = rho(-I) = 1 the
    // factor rho(A)_00 is e^{4 pi i/3}.
    const SL2ZMatrix a = build_A(1, 1, 2);
    const SL2ZMatrix m = t_power(-2) * kS;
    ASSERT_EQ((SL2ZMatrix{-m.a, -m.b, -m.c, -m.d}), a);
    const ComplexHP rho_a = phase_to_complex(make_phase(2, 3));
    const ComplexHP expected = phase_to_complex(make_phase(1, 6)) * phase_to_complex(make_phase(1, 6)) * rho_a;
    const auto got = s_tensor_twisted_twisted(holo8(), 2, 1, 1, {0}, {0});
    EXPECT_TRUE(approx_eq(got, expected, Real("1e-50")));
    EXPECT_TRUE(approx_eq(got, ComplexHP(1), Real("1e-50")));
}

TEST(TwistedTwisted, RankOneModulus) {
    WorkingPrecision wp(60);
    for (int k = 2; k <= 8; ++k) {
        TensorSector unit(holo8(), k), lit(holo8(), k, TwistedNormalization::literal);
        for (int r = 1; r < k; ++r)
            for (int s = 1; s < k; ++s) {
                const auto cc = cycle_constants(s, r, k);
                const LabelTuple zeros(cc.f, 0);
                EXPECT_LT(boost::multiprecision::abs(abs(unit.twisted_twisted(r, s, zeros, zeros)) - 1), Real("1e-50"));
                const Real expected = boost::multiprecision::pow(Real(cc.l1) / Real(cc.l), Real(cc.f));
                EXPECT_LT(boost::multiprecision::abs(abs(lit.twisted_twisted(r, s, zeros, zeros)) - expected),
                          Real("1e-50"));
            }
    }
}

TEST(TwistedTwisted, IsingK2Symmetric) {
    WorkingPrecision wp(60);
    TensorSector ts(builtin("ising"), 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            EXPECT_TRUE(approx_eq(ts.twisted_twisted(1, 1, {i}, {j}), ts.twisted_twisted(1, 1, {j}, {i}), Real("1e-25")));
}

TEST(TwistedTwisted, FreeFunctionMatchesCache) {
    WorkingPrecision wp(60);
    const auto md = builtin("fibonacci");
    TensorSector ts(md, 6);
    for (int r = 0; r < 6; ++r)
        for (int s = 1; s < 6; ++s) {
            const int f = cycle_constants(s, r, 6).f;
            LabelTuple i(f, 1), j(f, 0);
            EXPECT_EQ(ts.twisted_twisted(r, s, i, j), s_tensor_twisted_twisted(md, 6, r, s, i, j));
        }
}

TEST(TwistedTwisted, ZeroSectorRoutesToUntwisted) {
    WorkingPrecision wp(60);
    const auto md = builtin("ising");
    EXPECT_EQ(build_A(0, 2, 4), kIdentity);
    EXPECT_EQ(s_tensor_twisted_twisted(md, 4, 0, 2, {1, 2}, {2, 0}), s_tensor_untwisted_twisted(md, 4, 2, {1, 2}, {2, 0}));
}

TEST(TensorEntry, StabilityAndDispatch) {
    WorkingPrecision wp(60);
    const auto md = builtin("ising");
    TensorSector ts(md, 4);
    // Untwisted (0,1,0,1) is g^2-stable but not g-stable.
    EXPECT_TRUE(ts.entry({0, {0, 1, 0, 1}}, {2, {1, 1}}).has_value());
    EXPECT_FALSE(ts.entry({0, {0, 1, 0, 1}}, {1, {1}}).has_value());
    EXPECT_EQ(*ts.entry({0, {0, 1, 0, 1}}, {2, {1, 2}}), ts.untwisted_twisted(2, {0, 1}, {1, 2}));
    EXPECT_EQ(*ts.entry({2, {1, 2}}, {0, {0, 1, 0, 1}}), ts.untwisted_twisted(2, {0, 1}, {1, 2}));
    // Sector 2 against sector 2 in k=4: f = 2, all 2-tuples are stable.
    EXPECT_TRUE(ts.entry({2, {0, 1}}, {2, {1, 2}}).has_value());
    // Sector 2 against sector 1: f = 1, only constant pairs.
    EXPECT_FALSE(ts.entry({2, {0, 1}}, {1, {1}}).has_value());
    EXPECT_TRUE(ts.entry({2, {1, 1}}, {1, {1}}).has_value());
    EXPECT_THROW(ts.entry({1, {0, 0}}, {1, {1}}), std::invalid_argument);
}

TEST(TensorEntry, WitnessInsensitivity) {
    WorkingPrecision wp(60);
    for (const auto& md : {builtin("ising"), builtin("fibonacci"), holo8()})
        for (int k = 2; k <= 6; ++k) {
            TensorSector ts(md, k);
            for (int r = 1; r < k; ++r)
                for (int s = 1; s < k; ++s) {
                    const int f = cycle_constants(s, r, k).f;
                    const int top = static_cast<int>(md.rank()) - 1;
                    EXPECT_LT(ts.witness_sensitivity(r, s, LabelTuple(f, top), LabelTuple(f, 0)), Real("1e-40"))
                        << md.name << " k=" << k << " r=" << r << " s=" << s;
                }
        }
}
