#pragma once

// JSON persistence for modular data and orbifold results.

#include "permorb/modular_data.hpp"
#include "permorb/orbifold.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace permorb {

/// Malformed or inconsistent input file.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

inline Json complex_to_json(const ComplexHP& z) { return {{"re", to_decimal_string(z.re)}, {"im", to_decimal_string(z.im)}}; }

inline Json to_json(const ModularData& md) {
    Json j;
    j["name"] = md.name;
    j["rank"] = md.rank();
    j["central_charge"] = to_string(md.central_charge);
    j["weights"] = Json::array();
    for (const auto& w : md.weights) j["weights"].push_back(to_string(w));
    j["s_matrix"] = Json::array();
    for (std::size_t r = 0; r < md.s_matrix.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < md.s_matrix.cols(); ++c) row.push_back(complex_to_json(md.s_matrix(r, c)));
        j["s_matrix"].push_back(std::move(row));
    }
    j["labels"] = md.labels;
    return j;
}

inline Json module_to_json(const OrbifoldModule& m, int k) {
    const auto lbl = m.tensor_label(k);
    return {{"family", m.family()}, {"sector", m.sector()},   {"tuple", lbl.tuple},
            {"eigen", m.eigen()},   {"weight", to_string(m.weight)}, {"label", m.label}};
}

/// Orbifold output in the modular-data schema (catalog order) plus "modules".
inline Json to_json(const OrbifoldResult& res, const std::string& name) {
    ModularData md;
    md.name = name;
    md.central_charge = res.central_charge;
    md.s_matrix = res.s_matrix;
    for (const auto& m : res.modules) {
        md.weights.push_back(m.weight);
        md.labels.push_back(m.label);
    }
    Json j = to_json(md);
    j["k"] = res.k;
    j["modules"] = Json::array();
    for (const auto& m : res.modules) j["modules"].push_back(module_to_json(m, res.k));
    return j;
}

inline std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::string string_field(const Json& j, const char* what) {
    if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline Rational rational_field(const Json& j, const std::string& what, std::vector<std::string>* warnings) {
    bool reduced = true;
    Rational q;
    try {
        q = parse_rational(string_field(j, what.c_str()), &reduced);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(what + ": " + e.what());
    }
    if (!reduced && warnings) warnings->push_back(what + " '" + j.get<std::string>() + "' reduced to " + to_string(q));
    return q;
}

inline Real real_field(const Json& j, const char* key) {
    const auto text = string_field(field(j, key), key);
    try {
        return real_from_string(text);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

/// Moves the unique zero-weight module to index 0.
inline void put_vacuum_first(ModularData& md, std::vector<std::string>* warnings) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < md.rank(); ++i)
        if (md.weights[i] == Rational(0)) zeros.push_back(i);
    if (zeros.size() != 1)
        throw InputError("expected exactly one module of weight 0 (the vacuum), found " + std::to_string(zeros.size()));
    const std::size_t v = zeros[0];
    if (v == 0) return;
    std::vector<std::size_t> order(md.rank());
    std::iota(order.begin(), order.end(), 0);
    order.erase(order.begin() + static_cast<std::ptrdiff_t>(v));
    order.insert(order.begin(), v);
    ModularData out = md;
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.weights[i] = md.weights[order[i]];
        out.labels[i] = md.labels[order[i]];
        for (std::size_t j = 0; j < order.size(); ++j) out.s_matrix(i, j) = md.s_matrix(order[i], order[j]);
    }
    md = std::move(out);
    if (warnings) warnings->push_back("vacuum moved from index " + std::to_string(v) + " to index 0");
}

}  // namespace detail

/// Parses a modular-data document; non-reduced rationals and a displaced
/// vacuum are repaired and reported through warnings.
inline ModularData modular_data_from_json(const Json& j, std::vector<std::string>* warnings = nullptr) {
    ModularData md;
    md.name = j.contains("name") ? detail::string_field(j.at("name"), "name") : std::string("unnamed");
    const Json& rank_j = detail::field(j, "rank");
    if (!rank_j.is_number_integer() || rank_j.get<std::int64_t>() < 1) throw InputError("rank must be a positive integer");
    const auto rank = static_cast<std::size_t>(rank_j.get<std::int64_t>());
    md.central_charge = detail::rational_field(detail::field(j, "central_charge"), "central_charge", warnings);

    const Json& weights = detail::field(j, "weights");
    if (!weights.is_array()) throw InputError("weights must be an array");
    if (weights.size() != rank)
        throw InputError("rank is " + std::to_string(rank) + " but " + std::to_string(weights.size()) + " weights given");
    for (std::size_t i = 0; i < rank; ++i)
        md.weights.push_back(detail::rational_field(weights[i], "weights[" + std::to_string(i) + "]", warnings));

    const Json& s = detail::field(j, "s_matrix");
    if (!s.is_array() || s.size() != rank) throw InputError("s_matrix must have " + std::to_string(rank) + " rows");
    md.s_matrix = CMatrix(rank, rank);
    for (std::size_t r = 0; r < rank; ++r) {
        if (!s[r].is_array() || s[r].size() != rank)
            throw InputError("s_matrix row " + std::to_string(r) + " must have " + std::to_string(rank) + " entries");
        for (std::size_t c = 0; c < rank; ++c)
            md.s_matrix(r, c) = ComplexHP(detail::real_field(s[r][c], "re"), detail::real_field(s[r][c], "im"));
    }

    if (j.contains("labels")) {
        const Json& labels = j.at("labels");
        if (!labels.is_array() || labels.size() != rank) throw InputError("labels must have " + std::to_string(rank) + " entries");
        for (const auto& l : labels) md.labels.push_back(detail::string_field(l, "label"));
    } else {
        md.labels = default_labels(rank);
    }
    detail::put_vacuum_first(md, warnings);
    return md;
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(origin + ": malformed JSON (" + e.what() + ")");
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("error writing '" + path + "'");
}

inline ModularData load(const std::string& path, std::vector<std::string>* warnings = nullptr) {
    return modular_data_from_json(parse_json_text(read_file(path), path), warnings);
}

inline void store(const ModularData& md, const std::string& path) { write_file(path, serialize(to_json(md))); }

inline void store(const OrbifoldResult& res, const std::string& name, const std::string& path) {
    write_file(path, serialize(to_json(res, name)));
}

}  // namespace permorb
