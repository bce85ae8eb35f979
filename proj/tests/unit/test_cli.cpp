#include <gtest/gtest.h>
#include <sys/wait.h>
#include <yaml-cpp/yaml.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(LOGSYM_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string model(const char* name) { return std::string(LOGSYM_MODELS_DIR) + "/" + name; }

std::string temp_model(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("logsym_cli_" + name + ".json");
    std::ofstream(path) << body;
    return path.string();
}

nlohmann::json canonical(const nlohmann::json& j) {
    if (j.is_object() || j.is_array()) {
        nlohmann::json out = j.is_object() ? nlohmann::json::object() : nlohmann::json::array();
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (j.is_object())
                out[it.key()] = canonical(*it);
            else
                out.push_back(canonical(*it));
        }
        return out;
    }
    if (j.is_string()) return j.get<std::string>();
    return j.is_null() ? "null" : j.dump();
}

nlohmann::json canonical(const YAML::Node& n) {
    nlohmann::json out;
    if (n.IsMap()) {
        out = nlohmann::json::object();
        for (const auto& kv : n) out[kv.first.as<std::string>()] = canonical(kv.second);
    } else if (n.IsSequence()) {
        out = nlohmann::json::array();
        for (const auto& v : n) out.push_back(canonical(v));
    } else {
        out = n.IsNull() ? "null" : n.Scalar();
    }
    return out;
}

}  // namespace

TEST(Cli, AnalyzeExample) {
    const auto r = run("analyze " + model("example_upper.json"));
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["pfaffian"], "8");
    EXPECT_EQ(j["verdict"]["criterion_holds"], false);
    EXPECT_EQ(j["verdict"]["witnesses"][0]["reason"], "special");
    EXPECT_EQ(j["deformations"]["candidates"][0]["column_relation"]["text"], "k_1 - k_2 + (e_1+e_2) - (e_3+e_4) = 0");
}

TEST(Cli, StandardSymplecticHolds) {
    const auto r = run("analyze " + model("standard_symplectic.json"));
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdict"]["criterion_holds"], true);
    EXPECT_TRUE(j["verdict"]["witnesses"].empty());
}

TEST(Cli, JsonAndTextCarrySameData) {
    for (const char* sub : {"analyze", "pfaffian", "residues", "deform-search"})
        for (const char* m : {"example_upper.json", "generic_rational.json", "standard_symplectic.json"}) {
            const auto js = run(std::string(sub) + " " + model(m));
            const auto tx = run(std::string(sub) + " " + model(m) + " --format text");
            ASSERT_EQ(js.status, 0) << sub << " " << m;
            ASSERT_EQ(tx.status, 0) << sub << " " << m;
            EXPECT_EQ(canonical(YAML::Load(tx.out)), canonical(nlohmann::json::parse(js.out))) << sub << " " << m;
        }
    const auto js = run("verify-complexes --dim 2 --truncation 1");
    const auto tx = run("verify-complexes --dim 2 --truncation 1 --format text");
    EXPECT_EQ(canonical(YAML::Load(tx.out)), canonical(nlohmann::json::parse(js.out)));
}

TEST(Cli, OutputIsByteStable) {
    const auto a = run("analyze " + model("generic_rational.json") + " --format text");
    const auto b = run("analyze " + model("generic_rational.json") + " --format text");
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("pfaffian " + model("degenerate.json")).status, 2);
    EXPECT_EQ(run("analyze " + model("does_not_exist.json")).status, 1);
    EXPECT_EQ(run("analyze " + temp_model("odd", R"({"dim": 3, "log_branches": 0, "matrix": [[1, 2], [3]]})")).status, 1);
    EXPECT_EQ(run("analyze " + temp_model("broken", "{\"dim\": 4,")).status, 1);
    EXPECT_EQ(run("analyze " + model("example_upper.json") + " --format xml").status, 1);
    EXPECT_EQ(run("analyze " + model("example_upper.json") + " --deform-max-degree -1").status, 1);
    EXPECT_EQ(run("frobnicate").status, 1);
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, VerifyComplexes) {
    const auto r = run("verify-complexes --dim 4 --truncation 2");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["passed"], true);
    const auto small = run("verify-complexes --dim 2 --truncation 1");
    ASSERT_EQ(small.status, 0);
    const auto j = nlohmann::json::parse(small.out);
    EXPECT_FALSE(j["normal_log"]["multidegrees"].empty());
    for (const auto& e : j["normal_log"]["multidegrees"]) EXPECT_EQ(e["chain_dims"].size(), 3u);
    EXPECT_EQ(run("verify-complexes --j 0").status, 1);
    EXPECT_EQ(run("verify-complexes --dim 8").status, 1);
    EXPECT_EQ(run("verify-complexes --truncation 4").status, 1);
}

TEST(Cli, DeformSearchFlag) {
    const auto r = run("deform-search " + model("example_upper.json") + " --max-degree 2");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["candidates"].size(), 1u);
    EXPECT_EQ(j["candidates"][0]["certificate"]["lambda"], "-1");
    EXPECT_EQ(j["candidates"][0]["certificate"]["mu"], "1");
}
