#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;  // stdout and stderr, merged
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SNAKE_QCHAR_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    r.status = WEXITSTATUS(pclose(p));
    return r;
}

}  // namespace

TEST_CASE("cli qchar json schema and content") {
    const auto r = run_cli("qchar --type A --rank 4 --snake 2,1 --output json");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["type"] == "A");
    CHECK(j["rank"] == 4);
    CHECK(j["snake"] == json::parse("[[2,1]]"));
    REQUIRE(j["terms"].size() == 10);
    bool found_highest = false;
    for (const auto& t : j["terms"]) {
        REQUIRE(t.contains("m"));
        REQUIRE(t.contains("mult"));
        CHECK(t["mult"] == 1);
        for (const auto& f : t["m"]) REQUIRE(f.size() == 3);
        if (t["m"] == json::parse("[[2,1,1]]")) found_highest = true;
    }
    CHECK(found_highest);
}

TEST_CASE("cli qchar text format and determinism") {
    const std::string args = "qchar --type A --rank 4 --snake 2,1";
    const auto r1 = run_cli(args);
    REQUIRE(r1.status == 0);
    CHECK(r1.out.substr(0, r1.out.find('\n')) == "type A rank 4");
    CHECK(r1.out.find("snake: (2,1)\n") != std::string::npos);
    CHECK(r1.out.find("terms: 10\n") != std::string::npos);
    CHECK(r1.out.find("Y[2,1]\n") != std::string::npos);

    const auto r2 = run_cli(args);
    CHECK(r1.out == r2.out);

    // explicit thread override must not change a single byte
    const auto r3 = run_cli(args + " --output json");
    const std::string cmd = "SNAKE_QCHAR_THREADS=2 " + std::string(SNAKE_QCHAR_BIN) + " " +
                            args + " --output json 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    REQUIRE(WEXITSTATUS(pclose(p)) == 0);
    CHECK(out == r3.out);
}

TEST_CASE("cli tableaux agrees with qchar") {
    const auto rq = run_cli("qchar --type A --rank 4 --snake 2,1 --output json");
    const auto rt = run_cli("tableaux --type A --rank 4 --diagram 1:0:2 --output json");
    REQUIRE(rq.status == 0);
    REQUIRE(rt.status == 0);
    const json jq = json::parse(rq.out), jt = json::parse(rt.out);
    CHECK(jq["terms"] == jt["terms"]);
    CHECK(jt["snake"] == json::parse("[[2,1]]"));
}

TEST_CASE("cli verify passes on a snake module") {
    const auto r = run_cli("verify --type B --rank 4 --snake 1,0 --output json");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["terms"] == 9);
    CHECK(j["cond_i"] == true);
    CHECK(j["cond_ii"] == true);
    CHECK(j["cond_iii"] == true);
    CHECK(j["ok"] == true);
    CHECK(j["dominants"].size() == 1);

    const auto rt = run_cli("verify --type B --rank 4 --snake 1,0");
    REQUIRE(rt.status == 0);
    CHECK(rt.out.find("result: pass\n") != std::string::npos);

    // a snake shifted away from 0: the verifier window must follow the support
    const auto rs = run_cli("verify --type B --rank 5 --snake \"4,2;3,8\" --output json");
    REQUIRE(rs.status == 0);
    CHECK(json::parse(rs.out)["ok"] == true);
}

TEST_CASE("cli compare succeeds and reports counts") {
    const auto r = run_cli("compare --type A --rank 4 --snake \"2,1;3,4\" --output json");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["per_column_bijection"] == true);
    CHECK(j["adjacency_preserved"] == true);
    CHECK(j["tableau_count"] == 75);
    CHECK(j["tuple_count"] == 75);
    CHECK(j["direct"] == true);
    CHECK(j["direct_equal"] == true);
    CHECK(j["equal"] == true);

    const auto rt = run_cli("compare --type A --rank 4 --snake \"2,1;3,4\"");
    REQUIRE(rt.status == 0);
    CHECK(rt.out.find("result: equal\n") != std::string::npos);
}

TEST_CASE("cli restrict reports the classical character") {
    const auto r = run_cli("restrict --type B --rank 4 --snake 1,0 --output json");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["weights"].size() == 9);
    for (const auto& w : j["weights"]) CHECK(w["mult"] == 1);
    CHECK(j["weyl_invariant"] == true);
}

TEST_CASE("cli paths lists the path set") {
    const auto r = run_cli("paths --type A --rank 4 --snake 1,0 --output json");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["point"] == json::parse("[1,0]"));
    CHECK(j["paths"].size() == 5);
    for (const auto& p : j["paths"]) {
        CHECK(p.contains("points"));
        CHECK(p.contains("monomial"));
    }
    const auto rt = run_cli("paths --type A --rank 4 --snake 1,0");
    REQUIRE(rt.status == 0);
    CHECK(rt.out.find("paths: 5\n") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("qchar --type A --rank 4 --bogus").status == 2);          // unknown flag
    CHECK(run_cli("qchar --type A --rank 4").status == 2);                  // no input
    CHECK(run_cli("qchar --type C --rank 4 --snake 1,0").status == 2);      // bad type
    CHECK(run_cli("qchar --type A --rank 4 --snake \"2;1\"").status == 2);  // malformed
    CHECK(run_cli("paths --type A --rank 4 --snake \"1,0;2,1\"").status == 2);
    const auto both =
        run_cli("qchar --type A --rank 4 --snake 2,1 --diagram 1:0:2");
    CHECK(both.status == 2);
    CHECK(both.out.find("exactly one") != std::string::npos);

    // domain errors name the offending datum on stderr
    const auto off = run_cli("qchar --type A --rank 4 --snake 2,2");
    CHECK(off.status == 1);
    CHECK(off.out.find("(2,2)") != std::string::npos);
    const auto nosnake = run_cli("qchar --type A --rank 4 --snake \"2,1;1,2\"");
    CHECK(nosnake.status == 1);
    const auto badrank = run_cli("qchar --type B --rank 1 --snake 1,0");
    CHECK(badrank.status == 1);

    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("qchar --help").status == 0);
}
