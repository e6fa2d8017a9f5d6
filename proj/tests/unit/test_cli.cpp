#include <catch2/catch_amalgamated.hpp>

#include "commands.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "knightpaths");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = knightpaths::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("count", "[cli]") {
    auto r = run({"count", "--class", "zigzag", "--measure", "length", "--value", "10", "--height", "0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == "132");
    CHECK(j["class"] == "zigzag");
    CHECK(j["measure"] == "length");
    CHECK(j["n"] == 10);
    CHECK(j["k"] == 0);
    CHECK(j["method"] == "dp");
    CHECK(nlohmann::json::parse(j.dump()) == j);

    r = run({"count", "--class", "knight", "--measure", "size", "--value", "0", "--height", "0"});
    CHECK(nlohmann::json::parse(r.out)["count"] == "1");

    r = run({"count", "--class", "zigzag", "--measure", "size", "--value", "13", "--height", "2", "--method", "all"});
    REQUIRE(r.code == 0);
    const auto all = nlohmann::json::parse(r.out);
    CHECK(all["count"] == "65");
    CHECK(all["engines"]["dp"] == "65");
    CHECK(all["engines"]["closed"] == "65");
    CHECK(all["engines"]["brute"] == "65");
}

TEST_CASE("count serializes big counts as strings", "[cli]") {
    const auto r = run({"count", "--class", "knight", "--measure", "size", "--value", "90", "--height", "0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["count"].is_string());
    CHECK(j["count"].get<std::string>().size() > 20);
}

TEST_CASE("count --method all agrees across the verify matrix", "[cli]") {
    for (const char* cls : {"knight", "zigzag"})
        for (const char* m : {"size", "length"})
            for (int n = 0; n <= 12; ++n)
                for (int k = 0; k <= 8; ++k) {
                    const auto r = run({"count", "--class", cls, "--measure", m, "--value", std::to_string(n),
                                        "--height", std::to_string(k), "--method", "all"});
                    INFO(cls << " " << m << " " << n << " " << k << " " << r.err);
                    CHECK(r.code == 0);
                }
}

TEST_CASE("count flag errors", "[cli]") {
    CHECK(run({"count", "--class", "rook", "--measure", "size", "--value", "1", "--height", "0"}).code == 1);
    CHECK(run({"count", "--class", "knight", "--measure", "size", "--value", "-1", "--height", "0"}).code == 1);
    CHECK(run({"count", "--class", "knight", "--measure", "size", "--value", "4"}).code == 1);
    CHECK(run({"count", "--class", "knight", "--measure", "size", "--value", "4", "--height", "0", "--method",
               "closed"})
              .code == 1);
    CHECK(run({"count", "--class", "knight", "--measure", "size", "--value", "40", "--height", "0", "--method",
               "brute"})
              .code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("list", "[cli]") {
    auto r = run({"list", "--class", "zigzag", "--measure", "size", "--value", "5", "--height", "2"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 3);

    r = run({"list", "--class", "zigzag", "--measure", "size", "--value", "4", "--height", "0"});
    CHECK(lines(r.out) == std::vector<std::string>{"NnNn", "Ee"});

    r = run({"list", "--class", "knight", "--measure", "size", "--value", "1", "--height", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    r = run({"list", "--class", "zigzag", "--measure", "length", "--value", "5", "--height", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    for (const auto& l : ls) {
        const auto j = nlohmann::json::parse(l);
        CHECK(j["length"] == 5);
        CHECK(j["height"] == 1);
    }

    r = run({"list", "--class", "knight", "--measure", "size", "--value", "25", "--height", "0"});
    CHECK(r.code == 1);
    CHECK(r.err.find("CapExceeded") != std::string::npos);
    CHECK(run({"list", "--class", "knight", "--measure", "length", "--value", "19", "--height", "0"}).code == 1);
}

TEST_CASE("series", "[cli]") {
    auto r = run({"series", "--gf", "A", "--order", "8"});
    CHECK(r.out == "1 + z^2 + 3*z^4 + 2*z^5 + 12*z^6 + 14*z^7 + 54*z^8\n");
    CHECK(run({"series", "--gf", "r-length", "--order", "0"}).out == "0\n");

    r = run({"series", "--gf", "total-size", "--order", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coefficients"] == nlohmann::json::array({"1", "1", "2", "2", "4", "5", "9"}));
    CHECK(j["class"] == "zigzag");

    CHECK(run({"series", "--gf", "axis-length", "--order", "6"}).out == "1 + 2*z^2 + 5*z^4 + 14*z^6\n");
    CHECK(run({"series", "--gf", "axis-size", "--order", "6", "--class", "knight"}).out ==
          "1 + z^2 + 3*z^4 + 2*z^5 + 12*z^6\n");
    CHECK(run({"series", "--gf", "total-length", "--order", "4"}).out == "1 + 2*z + 3*z^2 + 6*z^3 + 10*z^4\n");
    CHECK(run({"series", "--gf", "E", "--order", "4"}).out == "1 + 2*z^2 + 2*z^3 + 11*z^4\n");
    CHECK(run({"series", "--gf", "A1", "--order", "5"}).out == "z^2 + z^3 + 3*z^4 + 4*z^5\n");
    CHECK(run({"series", "--gf", "r-size", "--order", "7"}).out == "z^3 + z^5 + 2*z^7\n");

    CHECK(run({"series", "--gf", "A", "--class", "zigzag"}).code == 1);
    CHECK(run({"series", "--gf", "B"}).code == 1);
    CHECK(run({"series", "--gf", "A", "--order", "-1"}).code == 1);
}

TEST_CASE("map", "[cli]") {
    CHECK(run({"map", "--bijection", "psi", "--word", "EeNnNeNnEn"}).out == "UFUFFDFD\n");
    CHECK(run({"map", "--bijection", "phi", "--word", "EeNnNeNnEn"}).out == "UUDUUDUDDUDD\n");
    CHECK(run({"map", "--bijection", "psi-inv", "--word", "F"}).out == "\n");
    CHECK(run({"map", "--bijection", "phi-inv", "--word", "UUDD"}).out == "Ee\n");

    auto r = run({"map", "--bijection", "psi-inv", "--word", "UD"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotPeakless") != std::string::npos);
    r = run({"map", "--bijection", "psi", "--word", "NE"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotZigzag") != std::string::npos);
    r = run({"map", "--bijection", "phi-inv", "--word", "UDU"});
    CHECK(r.err.find("OddLength") != std::string::npos);
}

TEST_CASE("verify", "[cli]") {
    auto r = run({"verify", "--suite", "bijections", "--max", "7"});
    CHECK(r.code == 0);
    r = run({"verify", "--suite", "series"});
    CHECK(r.code == 0);
    CHECK(r.out.find("basketball") != std::string::npos);
    r = run({"verify", "--suite", "oracle", "--max", "12"});
    CHECK(r.code == 0);

    r = run({"verify", "--suite", "oracle", "--max", "6", "--drop-transition", "N:start"});
    CHECK(r.code == 3);
    CHECK(r.out.find("first counterexample") != std::string::npos);

    CHECK(run({"verify", "--suite", "oracle", "--drop-transition", "X:up"}).code == 1);
    CHECK(run({"verify", "--suite", "oracle", "--drop-transition", "n:start"}).code == 1);
    CHECK(run({"verify", "--suite", "oracle", "--drop-transition", "N:sideways"}).code == 1);
    CHECK(run({"verify", "--suite", "everything"}).code == 1);
}

TEST_CASE("oeis offline", "[cli]") {
    for (const char* id : {"A004148", "A187430", "A088518"}) {
        const auto r = run({"oeis", "--id", id, "--max-terms", "11"});
        INFO(r.out << r.err);
        CHECK(r.code == 0);
        CHECK(r.out.rfind("PASS", 0) == 0);
    }
    CHECK(run({"oeis", "--id", "A000045"}).code == 1);
    CHECK(run({"oeis", "--id", "A004148", "--offline", "--fetch"}).code == 1);
}

TEST_CASE("oeis fetch uses the cache and reports failures", "[cli]") {
    const auto dir = std::filesystem::temp_directory_path() / "knightpaths-oeis-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    std::ofstream(dir / "A088518.bfile") << "# cached\n0 1\n1 1\n2 2\n3 2\n4 4\n5 5\n";
    auto r = run({"oeis", "--id", "A088518", "--fetch", "--cache-dir", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("fetched") != std::string::npos);

    std::ofstream(dir / "A096588.bfile") << "0 1\n1 1\n2 4\n";
    r = run({"oeis", "--id", "A096588", "--fetch", "--cache-dir", dir.string()});
    CHECK(r.code == 3);
    CHECK(r.out.find("index 2") != std::string::npos);

    // Nothing listens on port 9 locally; no network is needed to fail.
    ::setenv("KNIGHTPATHS_OEIS_BASE_URL", "http://127.0.0.1:9", 1);
    r = run({"oeis", "--id", "A005220", "--fetch", "--cache-dir", dir.string()});
    ::unsetenv("KNIGHTPATHS_OEIS_BASE_URL");
    CHECK(r.code == 4);
    CHECK_FALSE(std::filesystem::exists(dir / "A005220.bfile"));

    ::setenv("KNIGHTPATHS_OEIS_CACHE", dir.string().c_str(), 1);
    r = run({"oeis", "--id", "A088518", "--fetch"});
    ::unsetenv("KNIGHTPATHS_OEIS_CACHE");
    CHECK(r.code == 0);
    std::filesystem::remove_all(dir);
}
