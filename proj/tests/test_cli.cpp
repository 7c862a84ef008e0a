#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using std::string;

namespace {

struct RunResult {
    int code = -1;
    string out;
};

RunResult run(const string& args) {
    string cmd = string(SEXTIC_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    int status = pclose(p);
    r.code = WEXITSTATUS(status);
    return r;
}

string tmp_path(const string& name) { return string("/tmp/sextic_test_") + name; }

} // namespace

TEST_CASE("cmd_germ on the worked example") {
    auto r = run("germ \"v^3+u^2*v^2+u^9\" --k 5 --d 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("C3,9") != string::npos);
    CHECK(r.out.find("(1,2)") != string::npos);
    CHECK(r.out.find("(2,7)") != string::npos);
    CHECK(r.out.find("<u v, v^2, u^4>") != string::npos);
    CHECK(r.out.find("rho(5) = 5") != string::npos);

    auto r2 = run("germ \"v^2+u^3\" --k 5 --d 6");
    CHECK(r2.code == 0);
    CHECK(r2.out.find("rho(5) = 1") != string::npos);
    CHECK(r2.out.find("<u, v>") != string::npos);

    auto r3 = run("germ \"v^2+u^2\" --k 3 --d 6");
    CHECK(r3.code == 0);
    CHECK(r3.out.find("rho(3) = 0") != string::npos);
}

TEST_CASE("cmd_germ error paths") {
    auto bad = run("germ \"v^2 +\" --k 5");
    CHECK(bad.code == 2);
    // x^2 y^2-type germ: not isolated
    auto non_isolated = run("germ \"u^2 v^2\" --k 5");
    CHECK(non_isolated.code == 4);
}

TEST_CASE("cmd_construct then cmd_analyze round-trips") {
    string file = tmp_path("six_lines.json");
    auto c = run("construct six-lines --out " + file);
    CHECK(c.code == 0);
    auto a = run("analyze " + file);
    CHECK(a.code == 0);
    CHECK(a.out.find("(t - 1)^5 (t^2 - t + 1)^4 (t^2 + t + 1)^4 (t + 1)^4") != string::npos);

    string file2 = tmp_path("six_cusps.json");
    CHECK(run("construct torus-6-cusps --out " + file2).code == 0);
    auto a2 = run("analyze " + file2);
    CHECK(a2.code == 0);
    CHECK(a2.out.find("reduced Alexander polynomial: (t^2 - t + 1)\n") != string::npos);
    std::remove(file.c_str());
    std::remove(file2.c_str());
}

TEST_CASE("cmd_analyze verification failure exits 3") {
    string file = tmp_path("not_singular.json");
    {
        std::ofstream out(file);
        out << R"({"degree": 6,
                   "polynomial": [{"exps":[6,0,0],"coeff":"1"},{"exps":[0,6,0],"coeff":"1"},
                                  {"exps":[0,0,6],"coeff":"1"}],
                   "num_components": 1,
                   "singular_points": [{"point": ["1","0","0"], "type": "auto"}]})";
    }
    auto r = run("analyze " + file);
    CHECK(r.code == 3);
    std::remove(file.c_str());
}

TEST_CASE("cmd_analyze parse failure exits 2") {
    string file = tmp_path("broken.json");
    {
        std::ofstream out(file);
        out << "{\"degree\": 6, \"polynomial\": [{\"exps\": [1, 2], \"coeff\": \"1\"}]}";
    }
    auto r = run("analyze " + file);
    CHECK(r.code == 2);
    std::remove(file.c_str());
}

TEST_CASE("cmd_construct emits the extension-field and reducible fixtures") {
    string file = tmp_path("nine.json");
    auto c = run("construct nine-cuspidal --out " + file);
    CHECK(c.code == 0);
    {
        std::ifstream in(file);
        std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(doc.find("\"field\": [\n    1,\n    1,\n    1\n  ]") != string::npos); // t^2 + t + 1
    }
    auto a = run("analyze " + file);
    CHECK(a.code == 0);
    CHECK(a.out.find("generic Alexander polynomial: (t^2 - t + 1)^3") != string::npos);
    std::remove(file.c_str());

    string file2 = tmp_path("lin3a5.json");
    CHECK(run("construct linear-3A5 --out " + file2).code == 0);
    {
        std::ifstream in(file2);
        std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(doc.find("\"num_components\": 2") != string::npos);
    }
    auto a2 = run("analyze " + file2);
    CHECK(a2.code == 0);
    CHECK(a2.out.find("reduced Alexander polynomial: (t^2 - t + 1) (t^2 + t + 1)") != string::npos);
    std::remove(file2.c_str());

    CHECK(run("construct no-such-fixture").code == 2);
}

TEST_CASE("cmd_tables emits both tables") {
    auto simple = run("tables --which simple");
    CHECK(simple.code == 0);
    CHECK(simple.out.find("\"A11\",4,\"<v, u^2>\",2") != string::npos);
    CHECK(simple.out.find("\"A17\",4,\"<v, u^3>\",3") != string::npos);
    auto nonsimple = run("tables --which nonsimple");
    CHECK(nonsimple.code == 0);
    CHECK(nonsimple.out.find("\"C6,6\",5,\"<u v, u^3, v^3>\",5") != string::npos);
}
