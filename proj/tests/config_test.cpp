#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>

#include "bilms/config.hpp"

namespace {

using namespace bilms;

class TempConfig {
public:
    explicit TempConfig(const std::string& text) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("bilms_cfg_" + std::to_string(counter++) + ".json");
        std::ofstream out(path_);
        out << text;
    }
    ~TempConfig() { std::filesystem::remove(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

TEST_CASE("load_config | minimal config with defaults", "[config]") {
    TempConfig f(R"({"algorithm": "blms1"})");
    const ExperimentConfig cfg = load_config(f.path());
    CHECK(cfg.algorithm == Algorithm::blms1);
    CHECK(cfg.taps == 4);
    CHECK(cfg.mu == 0.05);
    CHECK(cfg.steps == 2000);
    CHECK(cfg.seed == 42);
    CHECK(cfg.noise_std == 0.0);
    CHECK(!cfg.target.has_value());
    CHECK(cfg.input == InputDist::gaussian);
}

TEST_CASE("load_config | full config", "[config]") {
    TempConfig f(R"({
        "algorithm": "blms2_cart",
        "taps": 2,
        "mu": 0.01,
        "steps": 100,
        "seed": 7,
        "noise_std": 0.25,
        "target": [[1, 0, 0, 0], [0, 0.5, -0.5, 1]],
        "input": "gaussian"
    })");
    const ExperimentConfig cfg = load_config(f.path());
    CHECK(cfg.algorithm == Algorithm::blms2_cart);
    CHECK(cfg.taps == 2);
    REQUIRE(cfg.target.has_value());
    CHECK((*cfg.target)[1] == Bicomplex::from_components(0, 0.5, -0.5, 1));
}

TEST_CASE("load_config | rejections name the field", "[config]") {
    TempConfig bad_algo(R"({"algorithm": "blms3"})");
    CHECK_THROWS_WITH(load_config(bad_algo.path()), Catch::Contains("algorithm"));

    TempConfig unknown(R"({"algorithm": "blms1", "tapps": 3})");
    CHECK_THROWS_WITH(load_config(unknown.path()), Catch::Contains("unknown key 'tapps'"));

    TempConfig zero_taps(R"({"algorithm": "blms1", "taps": 0})");
    CHECK_THROWS_WITH(load_config(zero_taps.path()), Catch::Contains("taps must be"));

    TempConfig wrong_target(R"({"algorithm": "blms1", "taps": 3, "target": [[1, 0, 0, 0]]})");
    CHECK_THROWS_WITH(load_config(wrong_target.path()), Catch::Contains("target length"));

    TempConfig bad_row(R"({"algorithm": "blms1", "taps": 1, "target": [[1, 0]]})");
    CHECK_THROWS_WITH(load_config(bad_row.path()), Catch::Contains("target"));

    TempConfig bad_seed(R"({"algorithm": "blms1", "seed": -4})");
    CHECK_THROWS_WITH(load_config(bad_seed.path()), Catch::Contains("seed"));

    TempConfig bad_input(R"({"algorithm": "blms1", "input": "uniform"})");
    CHECK_THROWS_WITH(load_config(bad_input.path()), Catch::Contains("input"));

    TempConfig missing_algo(R"({"taps": 3})");
    CHECK_THROWS_WITH(load_config(missing_algo.path()), Catch::Contains("algorithm"));

    TempConfig not_json("not json at all {");
    CHECK_THROWS_AS(load_config(not_json.path()), config_error);

    CHECK_THROWS_WITH(load_config("/nonexistent/bilms.json"), Catch::Contains("cannot open"));
}

TEST_CASE("load_config | accepts every algorithm name", "[config]") {
    for (const char* name : {"clms", "blms1", "blms2", "blms1_split", "blms2_split", "blms1_cart",
                             "blms2_cart"}) {
        TempConfig f(std::string(R"({"algorithm": ")") + name + R"("})");
        Algorithm parsed = load_config(f.path()).algorithm;
        CHECK(std::string(to_string(parsed)) == name);
    }
}

}  // namespace
