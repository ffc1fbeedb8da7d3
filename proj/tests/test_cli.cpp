#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "mh/cli.hpp"

using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path = "cli_test_input_" + std::to_string(counter++) + ".json";
        std::ofstream f(path);
        f << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out, err;
    json parsed() const { return json::parse(out); }
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = mh::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("bounds command") {
    TempFile in(fx::bilinear3_json);
    auto r = run({"bounds", "-i", in.path});
    REQUIRE(r.code == 0);
    auto o = r.parsed();
    CHECK(o["command"] == "bounds");
    CHECK(o["C"] == "3");
    CHECK(o["Cprime"] == "12");
    CHECK(o["e"] == "3");
    CHECK(o["Hn"].get<double>() > 0.0);
    CHECK(o["B"].get<std::string>().size() > 1);
}

TEST_CASE("solve command finds the nonsingular point") {
    TempFile in(fx::bilinear3_json);
    auto r = run({"solve", "-i", in.path, "--seed", "42"});
    REQUIRE(r.code == 0);
    auto o = r.parsed();
    CHECK(o["command"] == "solve");
    CHECK(o["outcome"] == "success");
    CHECK(o["degree"] == 1);
    REQUIRE(o["q"].size() == 2);
    CHECK(o["q"][1] == "1");
    REQUIRE(o["v"].size() == 3);
    CHECK(o["bounds"]["C"] == "3");
}

TEST_CASE("solve is deterministic for a fixed seed") {
    TempFile in(fx::bilinear3_json);
    auto r1 = run({"solve", "-i", in.path, "--seed", "7"});
    auto r2 = run({"solve", "-i", in.path, "--seed", "7"});
    CHECK(r1.out == r2.out);
}

TEST_CASE("solve with prime override warns") {
    TempFile in(fx::bilinear3_json);
    auto r = run({"solve", "-i", in.path, "--seed", "1", "--prime-override", "10007"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    auto o = r.parsed();
    CHECK(o["prime"] == "10007");
    CHECK(o["outcome"] == "success");
}

TEST_CASE("solve-modp command") {
    TempFile in(fx::bilinear3_json);
    auto r = run({"solve-modp", "-i", in.path, "-p", "10007", "--seed", "3"});
    REQUIRE(r.code == 0);
    auto o = r.parsed();
    CHECK(o["command"] == "solve-modp");
    CHECK(o["outcome"] == "success");
    CHECK(o["prime"] == "10007");
    CHECK(o["degree"] == 1);

    auto bad = run({"solve-modp", "-i", in.path, "-p", "10006"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("prime") != std::string::npos);
}

TEST_CASE("minimize command on the ellipse") {
    TempFile in(R"({
      "vars": ["x1", "x2"],
      "constraints": ["x1^2 + 4*x2^2 - 4"]
    })");
    auto r = run({"minimize", "-i", in.path, "--seed", "5", "--sigma", "40"});
    REQUIRE(r.code == 0);
    auto o = r.parsed();
    CHECK(o["command"] == "minimize");
    CHECK(o["outcome"] == "success");
    REQUIRE(o["minimum"].is_object());
    // the enclosure pins the minimum at -2
    mh::Rational lo(o["minimum"]["lo"].get<std::string>());
    mh::Rational hi(o["minimum"]["hi"].get<std::string>());
    lo.canonicalize();
    hi.canonicalize();
    CHECK(lo <= -2);
    CHECK(hi >= -2);
    CHECK(hi - lo <= mh::Rational(1, mh::Integer(1) << 40));
}

TEST_CASE("output file option") {
    TempFile in(fx::bilinear3_json);
    std::string opath = "cli_test_output.json";
    auto r = run({"bounds", "-i", in.path, "-o", opath});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(opath);
    REQUIRE(f.good());
    json o = json::parse(f);
    CHECK(o["C"] == "3");
    std::remove(opath.c_str());
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"solve"}).code == 1); // missing -i
    CHECK(run({"solve", "-i", "definitely_missing_file.json"}).code == 1);

    TempFile garbage("this is not json");
    CHECK(run({"solve", "-i", garbage.path}).code == 1);

    TempFile badsys(R"({"blocks": [["x"]], "equations": ["x + y"]})");
    CHECK(run({"solve", "-i", badsys.path}).code == 1);

    TempFile nonsquare(R"({"blocks": [["x"], ["y"]], "equations": ["x + y"]})");
    CHECK(run({"solve", "-i", nonsquare.path}).code == 1);
}

TEST_CASE("help exits cleanly") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("solve") != std::string::npos);
}

TEST_CASE("minimize rejects more constraints than variables") {
    TempFile in(R"({"vars": ["x"], "constraints": ["x - 1", "x + 1"]})");
    auto r = run({"minimize", "-i", in.path});
    CHECK(r.code == 1);
}

TEST_CASE("conjugate roots come back as one rational parametrization") {
    TempFile in(R"({"blocks": [["x"]], "equations": ["x^2 + 1"]})");
    auto r = run({"solve", "-i", in.path, "--seed", "2"});
    REQUIRE(r.code == 0);
    auto o = r.parsed();
    CHECK(o["outcome"] == "success");
    CHECK(o["degree"] == 2);
}

TEST_CASE("no nonsingular roots is a success with the trivial parametrization") {
    TempFile in(R"({"blocks": [["x"]], "equations": ["x^2"]})");
    auto r = run({"solve", "-i", in.path, "--seed", "2"});
    REQUIRE(r.code == 0);
    auto o = r.parsed();
    CHECK(o["outcome"] == "success");
    CHECK(o["degree"] == 0);
    CHECK(o["q"] == json::array({"1"}));
}
