#include <dslice/dslice.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = std::string(DSLICE_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

TEST(Cli, PretzelScan) {
    auto r = run("pretzel-scan --p-max 1 --n-max 6");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "p,n,verdict,closed_form_obstructed,agree\n"
              "1,1,Obstructed,true,true\n1,2,Obstructed,true,true\n1,3,Obstructed,true,true\n"
              "1,4,Obstructed,true,true\n1,5,Obstructed,true,true\n1,6,Inconclusive,false,true\n");
    EXPECT_EQ(run("pretzel-scan --p-max 0 --n-max 6").status, 2);
    EXPECT_EQ(run("pretzel-scan --p-max 1").status, 2);

    auto out = temp_path("dslice_cli_scan.csv");
    EXPECT_EQ(run("pretzel-scan --p-max 2 --n-max 10 --out " + out).status, 0);
    std::ifstream f(out);
    std::string line;
    int rows = 0;
    while (std::getline(f, line)) ++rows;
    EXPECT_EQ(rows, 21);
    std::filesystem::remove(out);
}

TEST(Cli, Signature) {
    EXPECT_EQ(run("signature 8_20 1/6").out, "1\n");
    EXPECT_EQ(run("signature evenq_example 1/3").out, "1\n");
    EXPECT_EQ(run("signature '8_20#8_20#8_20' 1/6").out, "3\n");
    EXPECT_EQ(run("signature trefoil 1/2 --numeric").out, "-2\n");
    EXPECT_EQ(run("signature trefoil 0.5 --numeric --precision 10").out, "-2\n");
    EXPECT_EQ(run("signature 8_20 0/1").status, 2);
    EXPECT_EQ(run("signature 8_20 0.5").status, 2);
    EXPECT_EQ(run("signature nothing 1/2").status, 2);
    EXPECT_EQ(run("signature 8_20 1/6 --exact --numeric").status, 2);

    auto r = run("signature evenq_example 1/3 --format json");
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["signature"], 1);
    EXPECT_EQ(j["characteristic_polynomial"], (nlohmann::json{"0", "36", "-3", "-6", "1"}));
}

TEST(Cli, DsBound) {
    EXPECT_EQ(run("ds-bound 8_20").out, "2 at 1/6 (signature 1)\n");
    EXPECT_EQ(run("ds-bound '8_20#8_20#8_20' --test-set 1/6").out, "6 at 1/6 (signature 3)\n");
    EXPECT_EQ(run("ds-bound unknot").out, "0\n");
    EXPECT_EQ(run("ds-bound 8_20 --test-set 1/1").status, 2);
}

TEST(Cli, FormCheck) {
    auto r = run("form-check evenq_example +1");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("metabolizer (bound 2): span{(1,0,0,0), (0,1,0,0)}"), std::string::npos);
    EXPECT_NE(r.out.find("hyperbolic obstruction: Violated at 1/3 (signature 1)"), std::string::npos);

    auto bad = run("form-check '[[1]]' -1");
    EXPECT_EQ(bad.status, 1);
    EXPECT_NE(bad.out.find("NonUnimodular"), std::string::npos);

    auto j = nlohmann::json::parse(run("form-check 8_20 --bound 3 --format json").out);
    EXPECT_EQ(j["axioms"]["form_axiom"], true);
    EXPECT_FALSE(j["metabolizer"].is_null());
    EXPECT_EQ(run("form-check 8_20 0").status, 2);
}

TEST(Cli, Profile) {
    auto r = run("profile trefoil --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("arc,1/6,5/6,1/2,-2"), std::string::npos);
    auto j = nlohmann::json::parse(run("profile 8_20 --format json").out);
    EXPECT_EQ(j["jumps"].size(), 2u);
    EXPECT_EQ(run("profile 8_20 --format yaml").status, 2);
}

TEST(Cli, LongitudeCheckAndExport) {
    auto dir = temp_path("dslice_cli_export");
    std::filesystem::remove_all(dir);
    EXPECT_EQ(run("export-builtins " + dir).status, 0);
    EXPECT_TRUE(std::filesystem::exists(dir + "/8_20.json"));
    EXPECT_EQ(run("signature " + dir + "/8_20.json 1/6").out, "1\n");
    std::filesystem::remove_all(dir);

    auto pres = temp_path("dslice_cli_pretzel.json");
    std::ofstream(pres) << dslice::presentation_to_json(dslice::pretzel_presentation({1, 1})).dump(2);
    auto r = run("longitude-check " + pres + " --format json");
    EXPECT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdict"], "Obstructed");
    EXPECT_EQ(j["gcd"], "1 - s + s^2");
    std::filesystem::remove(pres);

    EXPECT_EQ(run("longitude-check /nonexistent/file.json").status, 2);
}

}  // namespace
