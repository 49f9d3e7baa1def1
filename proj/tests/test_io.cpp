#include "permorb/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace permorb;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("permorb_test_" + name)).string();
}

Json ising_json() { return to_json(builtin("ising")); }

}  // namespace

TEST(Io, RoundTripIsByteIdentical) {
    WorkingPrecision wp(60);
    for (const auto& md : {builtin("ising"), builtin("fibonacci"), builtin("z_n", {{}, 3})}) {
        const auto first = serialize(to_json(md));
        const auto path = temp_path("rt.json");
        write_file(path, first);
        const auto loaded = load(path);
        EXPECT_EQ(serialize(to_json(loaded)), first) << md.name;
        EXPECT_EQ(loaded.weights, md.weights);
        EXPECT_EQ(loaded.labels, md.labels);
        EXPECT_LT(max_abs_diff(loaded.s_matrix, md.s_matrix), Real("1e-58"));
    }
}

TEST(Io, StoreThenLoad) {
    WorkingPrecision wp(60);
    const auto path = temp_path("store.json");
    store(builtin("fibonacci"), path);
    const auto md = load(path);
    EXPECT_EQ(md.name, "fibonacci");
    EXPECT_EQ(md.central_charge, Rational(14, 5));
    EXPECT_TRUE(validate(md, Real("1e-30")).all_pass());
}

TEST(Io, RankMismatchRejected) {
    WorkingPrecision wp(60);
    auto j = ising_json();
    j["weights"].erase(2);
    EXPECT_THROW(modular_data_from_json(j), InputError);
    j = ising_json();
    j["s_matrix"][1].erase(0);
    EXPECT_THROW(modular_data_from_json(j), InputError);
    j = ising_json();
    j["labels"].erase(0);
    EXPECT_THROW(modular_data_from_json(j), InputError);
}

TEST(Io, MalformedInputsRejected) {
    WorkingPrecision wp(60);
    EXPECT_THROW(parse_json_text("{\"rank\": ", "x"), InputError);
    EXPECT_THROW(load(temp_path("does_not_exist.json")), InputError);
    auto j = ising_json();
    j.erase("central_charge");
    EXPECT_THROW(modular_data_from_json(j), InputError);
    j = ising_json();
    j["weights"][1] = "1/0";
    EXPECT_THROW(modular_data_from_json(j), InputError);
    j = ising_json();
    j["s_matrix"][0][0]["re"] = "abc";
    EXPECT_THROW(modular_data_from_json(j), InputError);
    j = ising_json();
    j["rank"] = 0;
    EXPECT_THROW(modular_data_from_json(j), InputError);
    j = ising_json();
    j["weights"][1] = "0";
    EXPECT_THROW(modular_data_from_json(j), InputError);
}

TEST(Io, NonReducedRationalsWarn) {
    WorkingPrecision wp(60);
    auto j = ising_json();
    j["weights"][1] = "2/4";
    j["central_charge"] = "3/6";
    std::vector<std::string> warnings;
    const auto md = modular_data_from_json(j, &warnings);
    EXPECT_EQ(md.weights[1], Rational(1, 2));
    EXPECT_EQ(md.central_charge, Rational(1, 2));
    EXPECT_EQ(warnings.size(), 2u);
}

TEST(Io, VacuumIsMovedFirst) {
    WorkingPrecision wp(60);
    // Put sigma first: order (sigma, 1, epsilon).
    const auto src = builtin("ising");
    const int order[3] = {2, 0, 1};
    Json j = ising_json();
    for (int r = 0; r < 3; ++r) {
        j["weights"][r] = to_string(src.weights[order[r]]);
        j["labels"][r] = src.labels[order[r]];
        for (int c = 0; c < 3; ++c) j["s_matrix"][r][c] = complex_to_json(src.s_matrix(order[r], order[c]));
    }
    std::vector<std::string> warnings;
    const auto md = modular_data_from_json(j, &warnings);
    EXPECT_EQ(md.labels, (std::vector<std::string>{"1", "sigma", "epsilon"}));
    EXPECT_EQ(md.weights[0], Rational(0));
    EXPECT_EQ(warnings.size(), 1u);
    EXPECT_TRUE(validate(md, Real("1e-30")).all_pass());
    EXPECT_TRUE(approx_eq(md.s_matrix(1, 1), src.s_matrix(2, 2), Real("1e-50")));
}

TEST(Io, FortyDigitEntries) {
    WorkingPrecision wp(60);
    auto j = ising_json();
    for (auto& row : j["s_matrix"])
        for (auto& e : row) {
            const Real re = real_from_string(e["re"].get<std::string>());
            e["re"] = re.str(40, std::ios_base::scientific);
        }
    const auto md = modular_data_from_json(j);
    const auto report = validate(md, Real("1e-30"));
    EXPECT_TRUE(report.all_pass());
    double worst = 0;
    for (const auto& c : report.checks) worst = std::max(worst, c.deviation);
    EXPECT_GT(worst, 1e-45);
}

TEST(Io, OrbifoldDocument) {
    WorkingPrecision wp(60);
    const auto res = orbifold_s_matrix(builtin("holomorphic", {Rational(8), {}}), 2);
    const auto j = to_json(res, "holo8_k2");
    ASSERT_EQ(j["modules"].size(), 4u);
    EXPECT_EQ(j["modules"][2]["family"], 3);
    EXPECT_EQ(j["modules"][2]["sector"], 1);
    EXPECT_EQ(j["modules"][2]["tuple"], Json::array({0}));
    EXPECT_EQ(j["modules"][2]["weight"], "1/2");
    EXPECT_EQ(j["central_charge"], "16");
    const auto md = modular_data_from_json(j);
    EXPECT_EQ(md.rank(), 4u);
    EXPECT_EQ(md.weights[0], Rational(0));
    EXPECT_TRUE(validate(md, Real("1e-30")).all_pass());
}
