#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hedges/cli.hpp"

using hedges::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(HEDGES_TEST_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("jfactor") {
    Result r = invoke({"jfactor", "--m", "2", "--kind", "exact"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.56418958354775628\n");

    r = invoke({"jfactor", "--m", "10", "--kind", "hedges"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.92307692307692313\n");

    r = invoke({"jfactor", "--m", "4"});
    CHECK(r.out == "0.79788456080286541\n");  // sqrt(2/pi) correctly rounded

    r = invoke({"jfactor", "--m", "10", "--kind", "p6", "--format", "json-lines"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "p6");
    CHECK(j["m"] == 10.0);
}

TEST_CASE("jfactor error classes") {
    Result r = invoke({"jfactor", "--m", "1", "--kind", "p1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("radicand nonpositive; p1 requires m > 1.5") != std::string::npos);

    r = invoke({"jfactor", "--m", "2", "--kind", "p4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("p4 requires m > 2") != std::string::npos);

    CHECK(invoke({"jfactor", "--m", "1", "--kind", "exact"}).code == 2);
    CHECK(invoke({"jfactor", "--m", "abc"}).code == 1);
    CHECK(invoke({"jfactor", "--m", "10", "--kind", "p7"}).code == 1);
    CHECK(invoke({"jfactor", "--m", "10", "--kind", "P1"}).code == 1);
    CHECK(invoke({"jfactor"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"jfactor", "--m", "10", "--format", "svg"}).code == 1);
}

TEST_CASE("help exits 0") {
    const Result r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("jfactor") != std::string::npos);
}

TEST_CASE("effect key=value output") {
    const Result r = invoke({"effect", "--input", data("desk.csv"), "--kind", "exact"});
    REQUIRE(r.code == 0);
    const auto out = lines(r.out);
    CHECK(out == std::vector<std::string>{
                     "group_i=control",
                     "group_j=treated",
                     "mean_difference=2",
                     "pooled_sd=1",
                     "cohens_d=2",
                     "m=4",
                     "correction=exact",
                     "correction_value=0.79788456080286541",
                     "g_star=1.5957691216057308",
                 });

    const Result h = invoke({"effect", "--input", data("desk.csv"), "--kind", "hedges"});
    CHECK(h.out.find("g_star=1.6000000000000001\n") != std::string::npos);
}

TEST_CASE("effect json-lines and csv") {
    Result r = invoke({"effect", "--input", data("desk.csv"), "--format", "json-lines"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["g_star"].get<double>() == doctest::Approx(1.5957691216057308).epsilon(1e-16));
    CHECK(j["m"].get<double>() == 4.0);

    r = invoke({"effect", "--input", data("desk.csv"), "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).front() ==
          "group_i,group_j,mean_difference,pooled_sd,cohens_d,m,correction,correction_value,g_star");
}

TEST_CASE("effect: first label in file order is group i; CRLF accepted") {
    const Result r = invoke({"effect", "--input", data("interleaved_crlf.csv")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("group_i=b\n") != std::string::npos);
    CHECK(r.out.find("g_star=-1.5957691216057308\n") != std::string::npos);
}

TEST_CASE("effect error classes") {
    Result r = invoke({"effect", "--input", data("constant.csv")});
    CHECK(r.code == 2);
    CHECK(r.err.find("pooled standard deviation is zero") != std::string::npos);

    r = invoke({"effect", "--input", data("malformed.csv")});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 5") != std::string::npos);

    r = invoke({"effect", "--input", data("singleton.csv")});
    CHECK(r.code == 2);

    CHECK(invoke({"effect", "--input", data("missing.csv")}).code == 1);
    CHECK(invoke({"effect", "--input", data("desk.csv"), "--format", "svg"}).code == 1);
}

TEST_CASE("group CSV parser") {
    using hedges::cli::CsvError;
    using hedges::cli::parse_group_csv;
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_group_csv(in);
    };
    const auto d = parse("group,value\nx,1.5\ny,-2e3\nx,+4\n\n");
    CHECK(d.label_i == "x");
    CHECK(d.values_i == std::vector<double>{1.5, 4.0});
    CHECK(d.values_j == std::vector<double>{-2000.0});

    CHECK_THROWS_AS(parse(""), CsvError);
    CHECK_THROWS_AS(parse("label,value\na,1\nb,2\n"), CsvError);
    CHECK_THROWS_AS(parse("group,value\na,1\nb,2\nc,3\n"), CsvError);
    CHECK_THROWS_AS(parse("group,value\na,1\na,2\n"), CsvError);
    CHECK_THROWS_AS(parse("group,value\na,1,2\nb,2\n"), CsvError);
    CHECK_THROWS_AS(parse("group,value\na,nan\nb,2\n"), CsvError);
    CHECK_THROWS_AS(parse("group,value\n,1\nb,2\n"), CsvError);
    try {
        parse("group,value\na,1\nb,\n");
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("table") {
    const Result r = invoke({"table"});
    REQUIRE(r.code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 7);
    CHECK(out[0] == "m,delta0,delta1,delta2,delta3,delta4,delta5,delta6");
    CHECK(out[1].starts_with("10,3.31315e-04,7.91162e-04,"));
    CHECK(out[6].starts_with("200,"));

    const Result tsv = invoke({"table", "--format", "tsv"});
    CHECK(lines(tsv.out)[0] == "m\tdelta0\tdelta1\tdelta2\tdelta3\tdelta4\tdelta5\tdelta6");
    const Result jl = invoke({"table", "--format", "json-lines"});
    CHECK(lines(jl.out).size() == 6);
    CHECK(invoke({"table", "--format", "svg"}).code == 1);
    CHECK(invoke({"table", "--format", "xml"}).code == 1);
}

TEST_CASE("sweep csv") {
    Result r = invoke({"sweep", "--start", "10", "--end", "200", "--step", "1"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 192);

    r = invoke({"sweep", "--start", "1.2", "--end", "2", "--step", "0.4", "--kind", "p1,hedges"});
    REQUIRE(r.code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 4);
    CHECK(out[0] == "m,delta1,delta0");
    CHECK(out[1].starts_with("1.2,,"));
    CHECK(out[2].starts_with("1.6,"));

    r = invoke({"sweep", "--start", "201", "--end", "1000", "--kind", "p5", "--kind", "p6",
                "--format", "json-lines"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows.size() == 800);
    for (const std::string& line : rows) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["delta5"].get<double>() < 2e-13);
        CHECK(j["delta6"].get<double>() < 2e-13);
    }
}

TEST_CASE("sweep usage errors") {
    CHECK(invoke({"sweep", "--start", "10", "--end", "20", "--step", "0"}).code == 1);
    CHECK(invoke({"sweep", "--start", "10", "--end", "9"}).code == 1);
    CHECK(invoke({"sweep", "--start", "0.5", "--end", "9"}).code == 1);
    CHECK(invoke({"sweep", "--start", "10", "--end", "20", "--kind", "exact"}).code == 1);
    CHECK(invoke({"sweep", "--start", "10"}).code == 1);
}

TEST_CASE("sweep svg is deterministic and written atomically") {
    const auto dir = std::filesystem::temp_directory_path() / "hedges_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.svg";
    const auto b = dir / "b.svg";
    const std::vector<std::string> base = {"sweep", "--start", "2", "--end", "300", "--step", "0.5",
                                           "--format", "svg", "--output"};
    auto args_a = base;
    args_a.push_back(a.string());
    auto args_b = base;
    args_b.push_back(b.string());
    REQUIRE(invoke(args_a).code == 0);
    REQUIRE(invoke(args_b).code == 0);
    const std::string svg = slurp(a);
    CHECK(svg == slurp(b));
    CHECK_FALSE(std::filesystem::exists(dir / "a.svg.tmp"));
    CHECK(svg.starts_with("<?xml"));
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    std::filesystem::remove_all(dir);
}
