#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <utility>

#include "rlp/catalog.hpp"
#include "rlp/json_io.hpp"

using namespace rlp;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RLP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch_dir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("rlp_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_json(const std::string& name, const json& j) {
    auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    return path.string();
}

}  // namespace

TEST_CASE("table emits one row per class and exits cleanly") {
    RunResult r = run_cli("table --dim 2");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["command"] == "table");
    CHECK(rep["pass"] == true);
    CHECK(rep["results"].size() == 6);
    CHECK(run_cli("table --dim 4").out.find("D1^4") != std::string::npos);
    CHECK(run_cli("table --dim 1").exit_code == 2);
}

TEST_CASE("build then classify round-trips through files") {
    for (auto [entry, dim] : {std::pair<const char*, int>{"C3", 3}, {"H2", 2}, {"D2", 4},
                              {"S2", 5}, {"CC1", 4}}) {
        std::string name = std::string(entry) + "^" + std::to_string(dim);
        CAPTURE(name);
        auto file = (scratch_dir() / (name + ".json")).string();
        REQUIRE(run_cli("build --entry " + std::string(entry) + " --dim " +
                        std::to_string(dim) + " -o " + file)
                    .exit_code == 0);
        RunResult r = run_cli("classify " + file);
        REQUIRE(r.exit_code == 0);
        json rep = json::parse(r.out);
        CHECK(rep["results"][0]["status"] == "matched");
        CHECK(rep["results"][0]["entry"] == name);
        CHECK(rep["results"][0].contains("witness"));
    }
}

TEST_CASE("output is byte-deterministic") {
    CHECK(run_cli("table --dim 3").out == run_cli("table --dim 3").out);
    RunResult a = run_cli("build --entry CC3 --dim 4");
    RunResult b = run_cli("build --entry CC3 --dim 4");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("check reports the half-cube in dimension five as irregular") {
    // The orbit of the half-sum vertex over the smallest lattice containing it.
    const std::size_t n = 5;
    RootSystem rs = canonical_root_system({Component{Family::D, n}});
    IntVec spinor(n, Int(0));
    spinor[n - 1] = 1;
    std::vector<IntVec> orbit = weyl_orbit(weyl_group(rs), spinor);
    IntMat gens(n + 1, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens(i, j) = rs.cartan(i, j);
    gens(n, n - 1) = 1;
    std::vector<RatVec> pts;
    for (const IntVec& v : orbit) pts.push_back(to_rat(v));
    LatticePolytope demicube = hull(pts, Lattice(hnf_basis(gens)));
    std::string file = write_json("demicube5.json", polytope_to_json(demicube));

    RunResult r = run_cli("check " + file);
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["results"][0]["regular"] == false);
    CHECK(rep["results"][0]["vertex_count"] == 16);

    RunResult c = run_cli("classify " + file);
    CHECK(c.exit_code == 1);
    CHECK(json::parse(c.out)["results"][0]["status"] == "not_regular");
}

TEST_CASE("verify-table recomputes every column") {
    RunResult dim2 = run_cli("verify-table --dim 2");
    CHECK(dim2.exit_code == 0);
    json rep2 = json::parse(dim2.out);
    CHECK(rep2["pass"] == true);
    CHECK(rep2["results"].size() == 6);

    // In dimension 3 exact recomputation contradicts the recorded table in
    // six cells, so the command must report the mismatches and exit 1.
    RunResult dim3 = run_cli("verify-table --dim 3");
    CHECK(dim3.exit_code == 1);
    json rep3 = json::parse(dim3.out);
    CHECK(rep3["pass"] == false);
    std::set<std::pair<std::string, std::string>> failing;
    for (const json& entry : rep3["results"])
        for (const json& check : entry["checks"])
            if (check["pass"] == false)
                failing.insert({entry["name"].get<std::string>(),
                                check["column"].get<std::string>()});
    std::set<std::pair<std::string, std::string>> expected = {
        {"C2^3", "star-dual"},  {"C3^3", "card"},      {"C3^3", "star-dual"},
        {"CC1^3", "card"},      {"CC1^3", "star-dual"}, {"CC3^3", "star-dual"}};
    CHECK(failing == expected);
}

TEST_CASE("dual writes a classifiable polytope and validates its flags") {
    auto file = (scratch_dir() / "c1_3.json").string();
    REQUIRE(run_cli("build --entry C1 --dim 3 -o " + file).exit_code == 0);
    auto out = (scratch_dir() / "c1_3_vee.json").string();
    REQUIRE(run_cli("dual --vee " + file + " -o " + out).exit_code == 0);
    json rep = json::parse(run_cli("classify " + out).out);
    CHECK(rep["results"][0]["entry"] == "CC2^3");

    CHECK(run_cli("dual " + file).exit_code == 2);
    CHECK(run_cli("dual --star --vee " + file).exit_code == 2);
}

TEST_CASE("exclusion subcommand mirrors the library checks") {
    RunResult e6 = run_cli("exclusion --type e6");
    REQUIRE(e6.exit_code == 0);
    json rep = json::parse(e6.out);
    CHECK(rep["results"][0]["excluded"] == true);
    CHECK(rep["results"][0]["checks"].size() == 2);

    RunResult d4 = run_cli("exclusion --type demicube --n 4");
    REQUIRE(d4.exit_code == 0);
    json rep4 = json::parse(d4.out);
    CHECK(rep4["results"][0]["excluded"] == false);
    CHECK(rep4["results"][0]["matched_class"] == "CC2^4");

    CHECK(run_cli("exclusion --type demicube").exit_code == 2);
    CHECK(run_cli("exclusion --type e7").exit_code == 2);
}

TEST_CASE("the small exhaustive audit finds the diamond square") {
    RunResult r = run_cli("audit2d --bound 1");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    const json& res = rep["results"][0];
    CHECK(res["outside_catalog"].empty());
    CHECK(res["by_class"].contains("C2^2"));
    CHECK(res["by_class"]["C2^2"].get<long long>() >= 1);
    CHECK(run_cli("audit2d --bound 9").exit_code == 2);
}

TEST_CASE("malformed inputs exit with status two") {
    CHECK(run_cli("classify /nonexistent/nowhere.json").exit_code == 2);
    std::string garbled = write_json("bad_shape.json", json{{"dim", 2}, {"vertices", 3}});
    CHECK(run_cli("classify " + garbled).exit_code == 2);
    auto notjson = (scratch_dir() / "notjson.json").string();
    {
        std::ofstream out(notjson);
        out << "][ not json\n";
    }
    CHECK(run_cli("check " + notjson).exit_code == 2);
    CHECK(run_cli("build --entry Q9 --dim 3").exit_code == 2);
    CHECK(run_cli("build --entry S3 --dim 3").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("rational vertex strings parse exactly") {
    json j;
    j["dim"] = 2;
    j["lattice_basis"] = json::array({json::array({1, 0}), json::array({0, 1})});
    // Unreduced fraction strings must mean their exact values.
    j["vertices"] = json::array({json::array({"2/2", "2/2"}), json::array({"-1/1", 1}),
                                 json::array({1, "-1/1"}), json::array({-1, -1})});
    std::string file = write_json("frac_square.json", j);
    json rep = json::parse(run_cli("classify " + file).out);
    CHECK(rep["results"][0]["status"] == "matched");
    CHECK(rep["results"][0]["entry"] == "C1^2");

    // Vertices outside the declared lattice are an input error.
    j["vertices"][0] = json::array({"1/2", "1/2"});
    std::string bad = write_json("nonmember.json", j);
    CHECK(run_cli("classify " + bad).exit_code == 2);
}
