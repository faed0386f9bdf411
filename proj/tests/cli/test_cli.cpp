#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// Drives the installed binary end to end: output schema and exit codes.

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path() {
    const char* env = std::getenv("TDK_BIN");
    REQUIRE_MESSAGE(env != nullptr, "TDK_BIN must point at the tdk binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string command = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 512> buffer;
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        result.out += buffer.data();
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_spec(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("validate") {
    const auto plain = write_spec("tdk_plain.json", R"({"a": [1]})");
    const RunResult ok = run("validate " + plain.string());
    CHECK(ok.exit_code == 0);
    const json report = json::parse(ok.out);
    CHECK(report.at("analytic") == true);
    CHECK(report.at("semi_analytic") == true);

    const auto zero = write_spec("tdk_zero.json", R"({"a": [1, 0]})");
    CHECK(run("validate " + zero.string()).exit_code == 2);

    const auto broken = write_spec("tdk_broken.json", "{]");
    CHECK(run("validate " + broken.string()).exit_code == 1);
}

TEST_CASE("unknown flags exit with usage error") {
    const auto plain = write_spec("tdk_plain.json", R"({"a": [1]})");
    CHECK(run("validate --definitely-not-a-flag " + plain.string()).exit_code == 64);
    CHECK(run("frobnicate " + plain.string()).exit_code == 64);
}

TEST_CASE("matrix windows over JSON") {
    const auto sec4 = write_spec("tdk_sec4.json", R"({"a": [1], "b": [0.5]})");
    const RunResult result = run("matrix --op mz --dim 4 " + sec4.string());
    CHECK(result.exit_code == 0);
    const json window = json::parse(result.out);
    CHECK(window.at("dim") == 4);
    CHECK(window.at("source") == "Mz");
    CHECK(window.at("exactness") == "closed_form");
    CHECK(window.at("entries")[1][0][0] == doctest::Approx(1.0));
    CHECK(window.at("entries")[2][0][0] == doctest::Approx(0.5));
    CHECK(window.at("entries")[0][1][0] == doctest::Approx(0.0));

    const RunResult lp = run("matrix --op lp --p 2 --dim 5 " + sec4.string());
    CHECK(lp.exit_code == 0);
    CHECK(json::parse(lp.out).at("source") == "Lp(2)");
}

TEST_CASE("shimorin table output") {
    const auto sec4 = write_spec("tdk_sec4.json", R"({"a": [1], "b": [0.5]})");
    const RunResult result = run("shimorin --max 6 " + sec4.string());
    CHECK(result.exit_code == 0);
    const json table = json::parse(result.out);
    CHECK(table.at("M") == 6);
    CHECK(table.at("X")[1][3][0] == doctest::Approx(0.25));
    CHECK(table.at("verdict").at("agree") == true);
    CHECK(table.at("verdict").at("criterion").at("value") == "false");
}

TEST_CASE("aluthge tables") {
    const auto sec9 = write_spec("tdk_sec9.json", R"({"a": [1, 1], "b": [1, 1]})");
    const RunResult sa = run("aluthge --kernel shimorin --max 6 " + sec9.string());
    CHECK(sa.exit_code == 0);
    const json sa_table = json::parse(sa.out);
    CHECK(sa_table.at("basis") == "wandering");
    CHECK(sa_table.at("F_norm").get<double>() < 1e-12);
    CHECK(sa_table.at("offband").at("value") == "false");

    const RunResult standard = run("aluthge --kernel standard --max 6 " + sec9.string());
    CHECK(standard.exit_code == 0);
    const json std_table = json::parse(standard.out);
    CHECK(std_table.at("basis") == "monomial");
    CHECK(std_table.at("offband").at("value") == "true");
}

TEST_CASE("classify subcommands") {
    const auto geom = write_spec("tdk_geom.json", R"({"a": [1], "tail": {"rho": 0.5}})");
    const RunResult quasi = run("classify --test quasinormal --dim 10 " + geom.string());
    CHECK(quasi.exit_code == 0);
    const json report = json::parse(quasi.out);
    CHECK(report.at("value") == "true");
    CHECK(report.at("r") == doctest::Approx(4.0));

    const auto sec4 = write_spec("tdk_sec4.json", R"({"a": [1], "b": [0.5]})");
    CHECK(run("classify --test truncated " + sec4.string()).exit_code == 2);

    const auto closing =
        write_spec("tdk_closing.json", R"({"a": [1, 1, 2, 1], "b": [0, 0, 1]})");
    const RunResult pos = run("classify --test positive --operator modinvsq --dim 10 " +
                              closing.string());
    CHECK(pos.exit_code == 0);
    CHECK(json::parse(pos.out).at("verdict").at("value") == "true");
    const RunResult neg =
        run("classify --test positive --operator modinv --dim 10 " + closing.string());
    CHECK(neg.exit_code == 0);
    CHECK(json::parse(neg.out).at("verdict").at("value") == "false");
}

TEST_CASE("output is deterministic across runs") {
    const auto sec4 = write_spec("tdk_sec4.json", R"({"a": [1], "b": [0.5]})");
    for (const std::string cmd :
         {"shimorin --max 6 ", "aluthge --kernel standard --max 6 ",
          "classify --test quasinormal --dim 8 "}) {
        const RunResult first = run(cmd + sec4.string());
        const RunResult second = run(cmd + sec4.string());
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("bundled worked examples") {
    for (const std::string name : {"sec4", "sec5", "sec9"}) {
        const RunResult result = run("examples --name " + name);
        CHECK(result.exit_code == 0);
        const json report = json::parse(result.out);
        CHECK(report.at("ok") == true);
    }
    const json sec4 = json::parse(run("examples --name sec4").out);
    CHECK(sec4.at("X_13") == doctest::Approx(0.25));
    const json sec9 = json::parse(run("examples --name sec9").out);
    CHECK(sec9.at("tilde_X_13_abs") == doctest::Approx(0.4472135955));
    CHECK(sec9.at("standard_tridiagonal") == true);
    CHECK(sec9.at("shimorin_aluthge_tridiagonal") == false);
}
