#include <doctest.h>

#include "arcoalg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using arcoalg::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("help lists every subcommand") {
    const auto top = call({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("serial") != std::string::npos);
    CHECK(top.out.find("qsl2") != std::string::npos);
    for (const char* sub : {"op", "ar", "verify"}) CHECK(call({"serial", sub, "--help"}).code == 0);
    for (const char* sub : {"dimvec", "ar", "verify", "check-symmetric", "op"})
        CHECK(call({"qsl2", sub, "--help"}).code == 0);
}

TEST_CASE("serial op") {
    CHECK(call({"serial", "op", "--n", "4", "dtr", "V", "0", "2"}).out == "V -1 1\n");
    CHECK(call({"serial", "op", "--n", "4", "star", "V 0 2"}).out == "U 4 6\n");
    CHECK(call({"serial", "op", "--n", "4", "--window", "-14:8", "omega_inv2", "U", "0", "2"}).out == "U 5 7\n");
    CHECK(call({"serial", "op", "--n", "4", "almost_split", "V", "0", "2"}).out == "V 0 2 -> V -1 2 + V 0 1 -> V -1 1\n");
    const auto j = call({"serial", "op", "--n", "4", "dtr", "V 0 2", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"representation\"") != std::string::npos);
}

TEST_CASE("serial verify and ar") {
    const auto v = call({"serial", "verify", "--n", "2", "--window", "-8:4", "--format", "tsv"});
    CHECK(v.code == 0);
    CHECK(v.out.find("FAIL") == std::string::npos);
    const auto ar = call({"serial", "ar", "--n", "2", "--window", "-6:4", "--stable", "--format", "json"});
    CHECK(ar.code == 0);
    CHECK(ar.out.find("\"injective\": true") == std::string::npos);
}

TEST_CASE("qsl2 commands") {
    CHECK(call({"qsl2", "dimvec", "--k", "1", "--n", "2", "--window", "8"}).out == "1:1 2:1 3:1\n");
    const auto op = call({"qsl2", "op", "--check", "dtr", "O^1 S 2"});
    CHECK(op.code == 0);
    CHECK(op.out.rfind("O^-1 S 2", 0) == 0);
    CHECK(call({"qsl2", "verify"}).code == 0);
    CHECK(call({"qsl2", "check-symmetric"}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"serial", "op", "--n", "4", "dtr", "V 9 2"}).code == 2);
    CHECK(call({"serial", "op", "--n", "4", "twist", "V 0 2"}).code == 2);
    CHECK(call({"serial", "ar", "--window", "3:1"}).code == 2);
    CHECK(call({"serial", "ar", "--format", "yaml"}).code == 2);
    const auto window = call({"qsl2", "dimvec", "--k", "9", "--n", "2"});
    CHECK(window.code == 3);
    CHECK(window.err.find("window") != std::string::npos);
    CHECK(call({"serial", "op", "--n", "2", "--window", "-4:2", "nakayama", "V 0 1"}).code == 3);
}

TEST_CASE("golden AR quivers are byte identical across runs and thread counts") {
    const std::string dir = ARCOALG_GOLDEN_DIR;
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"serial", "ar", "--n", "4", "--window", "-8:4"}, "serial_n4"},
        {{"qsl2", "ar"}, "qsl2"},
    };
    for (const char* threads : {"1", "4", "1"}) {
        ::setenv("ARCOALG_THREADS", threads, 1);
        for (const auto& [args, stem] : cases)
            for (const char* format : {"dot", "ascii", "json"}) {
                auto full = args;
                full.insert(full.end(), {"--format", format});
                INFO(stem << "." << format << " threads=" << threads);
                const auto r = call(full);
                CHECK(r.code == 0);
                CHECK(r.out == slurp(dir + "/" + stem + "." + format));
            }
    }
    ::unsetenv("ARCOALG_THREADS");
}
