#include <doctest.h>

#include <string>

#include "phaseret/config.hpp"

using namespace phaseret;

namespace {

std::string error_message(const std::string& text) {
    try {
        parse_config(text, "test.cfg");
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("defaults parse and validate") {
    const ExperimentConfig c = parse_config("", "empty.cfg");
    CHECK(c == ExperimentConfig{});
}

TEST_CASE("values, comments and blank lines") {
    const ExperimentConfig c = parse_config(
        "# comment\n"
        "rows = 64\n"
        "cols = 64\n"
        "tile = 8   # trailing comment\n"
        "sigma = 0.1\n"
        "algorithm = al\n"
        "\n"
        "iterations = 7\n",
        "inline.cfg");
    CHECK(c.rows == 64);
    CHECK(c.tile == 8);
    CHECK(c.sigma == 0.1);
    CHECK(c.algorithm == "al");
    CHECK(c.iterations == 7);
}

TEST_CASE("serialize/parse round trip is identity") {
    ExperimentConfig c;
    c.rows = 96;
    c.cols = 64;
    c.pitch = 5.5e-6;
    c.z1_zf_multiple = 0.0;
    c.z1 = 1.25e-2;
    c.sigma = 0.035;
    c.seed = 1234567;
    c.algorithm = "sbmir";
    c.tau_a = 0.0123456789012345;
    c.shrink_dc = true;
    c.object = "file";
    c.object_file = "truth.wf";
    c.tile = 32;
    const ExperimentConfig back = parse_config(serialize_config(c), "roundtrip.cfg");
    CHECK(back == c);
}

TEST_CASE("unknown keys are rejected with a line number") {
    const std::string msg = error_message("rows = 64\nbogus_key = 3\n");
    CHECK(msg.find("test.cfg:2") != std::string::npos);
    CHECK(msg.find("bogus_key") != std::string::npos);
}

TEST_CASE("malformed values are rejected with a line number") {
    CHECK(error_message("rows = sixty\n").find("test.cfg:1") != std::string::npos);
    CHECK(error_message("sigma = 0.05x\n").find("test.cfg:1") != std::string::npos);
    CHECK(error_message("shrink_dc = yes\n").find("test.cfg:1") != std::string::npos);
    CHECK(error_message("rows 64\n").find("expected 'key = value'") != std::string::npos);
    CHECK(error_message("rows = 64\nrows = 32\n").find("duplicate") != std::string::npos);
}

TEST_CASE("semantic validation") {
    CHECK(error_message("pitch = 0\n").find("pitch") != std::string::npos);
    CHECK(error_message("algorithm = gradient\n").find("algorithm") != std::string::npos);
    CHECK(error_message("rows = 100\n").find("divisible") != std::string::npos);
    CHECK(error_message("object = file\n").find("object_file") != std::string::npos);
    CHECK(error_message("block = 4\nstep = 8\n").find("step") != std::string::npos);
}

TEST_CASE("setup resolution prefers the z_f multiple") {
    ExperimentConfig c;
    const OpticalSetup via_multiple = c.to_setup();
    // z_f = 128 * (6.7e-6)^2 / 532e-9 ~ 10.8 mm
    CHECK(via_multiple.in_focus_distance() == doctest::Approx(0.0108011).epsilon(1e-4));
    CHECK(via_multiple.z1 == doctest::Approx(2 * 0.0108011).epsilon(1e-4));

    c.z1_zf_multiple = 0.0;
    c.z1 = 5e-3;
    CHECK(c.to_setup().z1 == doctest::Approx(5e-3));
}

TEST_CASE("algo params derive gamma from sigma when unset") {
    ExperimentConfig c;
    c.sigma = 0.05;
    const AlgoParams p = c.to_algo_params(5);
    REQUIRE(p.gamma_r.size() == 5);
    CHECK(p.gamma_r[0] == doctest::Approx(20.0));
    CHECK(p.sigma_r[0] == doctest::Approx(0.05));
    c.gamma = 3.0;
    CHECK(c.to_algo_params(2).gamma_r[1] == doctest::Approx(3.0));
}

}  // TEST_SUITE
