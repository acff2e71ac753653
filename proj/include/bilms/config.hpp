#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "bilms/harness.hpp"

namespace bilms {

namespace detail {

inline config_error field_error(const std::string& field, const std::string& what) {
    return config_error("config field '" + field + "': " + what);
}

}  // namespace detail

/// Parses an experiment config from UTF-8 JSON. Schema:
///
///   {
///     "algorithm": "clms" | "blms1" | "blms2" | "blms1_split"
///                | "blms2_split" | "blms1_cart" | "blms2_cart",   (required)
///     "taps": int,                    (default 4)
///     "mu": float,                    (default 0.05)
///     "steps": int,                   (default 2000)
///     "seed": nonnegative int,        (default 42)
///     "noise_std": float,             (default 0)
///     "target": "random" | [[x1,x2,x3,x4], ...],   (default "random")
///     "input": "gaussian"             (default)
///   }
///
/// Unknown keys are rejected; every error names the offending field.
inline ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open config '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("config '" + path.string() + "': " + e.what());
    }
    if (!j.is_object()) throw config_error("config: top level must be a JSON object");

    static const std::set<std::string> known = {"algorithm", "taps",      "mu",     "steps",
                                                "seed",      "noise_std", "target", "input"};
    for (const auto& item : j.items())
        if (!known.count(item.key())) throw config_error("config: unknown key '" + item.key() + "'");

    ExperimentConfig cfg;

    if (!j.contains("algorithm")) throw detail::field_error("algorithm", "required");
    if (!j["algorithm"].is_string()) throw detail::field_error("algorithm", "expected a string");
    if (!parse_algorithm(j["algorithm"].get<std::string>(), cfg.algorithm))
        throw detail::field_error("algorithm",
                                  "unknown algorithm '" + j["algorithm"].get<std::string>() + "'");

    if (j.contains("taps")) {
        if (!j["taps"].is_number_integer()) throw detail::field_error("taps", "expected an integer");
        cfg.taps = j["taps"].get<int>();
    }
    if (j.contains("mu")) {
        if (!j["mu"].is_number()) throw detail::field_error("mu", "expected a number");
        cfg.mu = j["mu"].get<double>();
    }
    if (j.contains("steps")) {
        if (!j["steps"].is_number_integer()) throw detail::field_error("steps", "expected an integer");
        cfg.steps = j["steps"].get<int>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            throw detail::field_error("seed", "expected a nonnegative integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("noise_std")) {
        if (!j["noise_std"].is_number()) throw detail::field_error("noise_std", "expected a number");
        cfg.noise_std = j["noise_std"].get<double>();
    }
    if (j.contains("input")) {
        if (!j["input"].is_string()) throw detail::field_error("input", "expected a string");
        const auto s = j["input"].get<std::string>();
        if (s != "gaussian") throw detail::field_error("input", "unknown distribution '" + s + "'");
        cfg.input = InputDist::gaussian;
    }
    if (j.contains("target") && !(j["target"].is_string() && j["target"].get<std::string>() == "random")) {
        const auto& t = j["target"];
        if (!t.is_array())
            throw detail::field_error("target", "expected \"random\" or a list of [x1,x2,x3,x4] rows");
        BicomplexVector w;
        w.reserve(t.size());
        for (const auto& row : t) {
            if (!row.is_array() || row.size() != 4)
                throw detail::field_error("target", "each entry must be [x1, x2, x3, x4]");
            for (const auto& v : row)
                if (!v.is_number()) throw detail::field_error("target", "coordinates must be numbers");
            w.push_back(Bicomplex::from_components(row[0].get<double>(), row[1].get<double>(),
                                                   row[2].get<double>(), row[3].get<double>()));
        }
        cfg.target = std::move(w);
    }

    cfg.validate();  // range checks (taps, steps, mu, ...) with field-named messages
    return cfg;
}

}  // namespace bilms
