#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "radiolim/report.hpp"

// Drives the installed binary through a shell. The harness exports
// RADIOLIM_CLI (binary path) and RADIOLIM_TMP (scratch root).

namespace {

std::string cli_path() {
    const char* p = std::getenv("RADIOLIM_CLI");
    REQUIRE_MESSAGE(p != nullptr, "RADIOLIM_CLI not set");
    return p;
}

std::string scratch_dir(const std::string& leaf) {
    const char* p = std::getenv("RADIOLIM_TMP");
    REQUIRE_MESSAGE(p != nullptr, "RADIOLIM_TMP not set");
    std::filesystem::path d = std::filesystem::path(p) / leaf;
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d.string();
}

int run_cli(const std::string& args) {
    std::string cmd = "'" + cli_path() + "' " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("figure fig6 emits the overhead families") {
    std::string dir = scratch_dir("fig6");
    REQUIRE(run_cli("figure fig6 --out '" + dir + "'") == 0);
    std::string csv = radiolim::read_text_file(dir + "/fig6.csv");
    // header plus the unit-mean row: zero entropy, fixed-duration floor 1.854
    CHECK(csv.find("mean_slots,entropy_bits,overhead_mm1,overhead_mm1n,overhead_md1") !=
          std::string::npos);
    CHECK(csv.find("\n1,0,2,") != std::string::npos);
    CHECK(csv.find(",1.854\n") != std::string::npos);
    CHECK(std::filesystem::exists(dir + "/fig6_manifest.json"));
}

TEST_CASE("repeat runs produce identical bytes") {
    std::string a = scratch_dir("det_a");
    std::string b = scratch_dir("det_b");
    REQUIRE(run_cli("figure fig3 --out '" + a + "'") == 0);
    REQUIRE(run_cli("figure fig3 --out '" + b + "'") == 0);
    CHECK(radiolim::read_text_file(a + "/fig3.csv") ==
          radiolim::read_text_file(b + "/fig3.csv"));
}

TEST_CASE("manifest config reproduces the dataset byte for byte") {
    std::string a = scratch_dir("rerun_a");
    std::string b = scratch_dir("rerun_b");
    REQUIRE(run_cli("figure fig2 --out '" + a + "'") == 0);
    auto manifest = nlohmann::json::parse(radiolim::read_text_file(a + "/fig2_manifest.json"));
    std::string cfg_path = b + "/cfg.json";
    radiolim::write_text_file(cfg_path, manifest.at("config").dump());
    REQUIRE(run_cli("figure fig2 --config '" + cfg_path + "' --out '" + b + "'") == 0);
    CHECK(radiolim::read_text_file(a + "/fig2.csv") ==
          radiolim::read_text_file(b + "/fig2.csv"));
    auto m2 = nlohmann::json::parse(radiolim::read_text_file(b + "/fig2_manifest.json"));
    CHECK(manifest.at("config_digest") == m2.at("config_digest"));
}

TEST_CASE("usage and config failures exit with code 2") {
    std::string dir = scratch_dir("errors");
    CHECK(run_cli("figure fig9 --out '" + dir + "'") == 2);
    radiolim::write_text_file(dir + "/bad.json", "not json at all");
    CHECK(run_cli("figure fig3 --config '" + dir + "/bad.json' --out '" + dir + "'") == 2);
    radiolim::write_text_file(dir + "/typo.json", "{\"no_such_key\": 1}");
    CHECK(run_cli("macsim --config '" + dir + "/typo.json' --out '" + dir + "'") == 2);
    CHECK(run_cli("no-such-command") == 2);
}

TEST_CASE("infeasible optimization exits with code 3") {
    std::string dir = scratch_dir("infeasible");
    radiolim::write_text_file(dir + "/cfg.json",
                              "{\"mode\": \"minimize_power\", \"spectral_floor\": 200.0}");
    CHECK(run_cli("optimize --config '" + dir + "/cfg.json' --out '" + dir + "'") == 3);
}

TEST_CASE("macsim annotates the bound comparison") {
    std::string dir = scratch_dir("macsim");
    radiolim::write_text_file(
        dir + "/cfg.json",
        "{\"duration\": 4000, \"seed_count\": 3, \"loads\": [0.3, 0.4, 0.5, 0.6, 0.7]}");
    REQUIRE(run_cli("macsim --config '" + dir + "/cfg.json' --out '" + dir + "'") == 0);
    auto manifest =
        nlohmann::json::parse(radiolim::read_text_file(dir + "/macsim_manifest.json"));
    auto check = manifest.at("bound_check");
    CHECK(check.at("pass").get<bool>());
    CHECK(check.at("overhead_above_floor").get<bool>());
    CHECK(check.at("measured_capacity").get<double>() <=
          check.at("capacity_ceiling").get<double>() + 0.05);
    std::string csv = radiolim::read_text_file(dir + "/macsim.csv");
    CHECK(csv.find("offered_load,throughput,ci_low,ci_high,seed_count") != std::string::npos);
}

TEST_CASE("seed override changes the dataset, same seed repeats it") {
    std::string a = scratch_dir("seed_a");
    std::string b = scratch_dir("seed_b");
    std::string c = scratch_dir("seed_c");
    std::string cfg = "{\"trials\": 500, \"scale_points\": 5}";
    radiolim::write_text_file(a + "/cfg.json", cfg);
    std::string base = "figure fig5 --config '" + a + "/cfg.json'";
    REQUIRE(run_cli(base + " --seed 1 --out '" + a + "'") == 0);
    REQUIRE(run_cli(base + " --seed 1 --out '" + b + "'") == 0);
    REQUIRE(run_cli(base + " --seed 2 --out '" + c + "'") == 0);
    std::string fa = radiolim::read_text_file(a + "/fig5.csv");
    CHECK(fa == radiolim::read_text_file(b + "/fig5.csv"));
    CHECK(fa != radiolim::read_text_file(c + "/fig5.csv"));
}

} // TEST_SUITE
