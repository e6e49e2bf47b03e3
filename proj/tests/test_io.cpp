#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "oscidyn/errors.hpp"
#include "oscidyn/io.hpp"

using namespace oscidyn;

namespace {

std::filesystem::path scratch() {
    const auto dir = std::filesystem::temp_directory_path() / "oscidyn-io-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(bool(f));
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

Table sample() {
    Table t;
    t.comments = {"l = 2", "Gamma = 0.05"};
    t.columns = {"tau", "S"};
    t.rows = {{0.0, 1.0}, {0.5, 0.25}, {1.0, 1e-3}};
    return t;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("fields are fixed-width scientific notation") {
    CHECK(format_field(1.0) == "1.000000000000e+00");
    CHECK(format_field(0.0) == "0.000000000000e+00");
    CHECK(format_field(-0.0025) == "-2.500000000000e-03");
    CHECK(format_field(6.022e23) == "6.022000000000e+23");
}

TEST_CASE("csv write, read back, write again is byte stable") {
    const auto a = scratch() / "stable_a.csv";
    const auto b = scratch() / "stable_b.csv";
    write_csv(a.string(), sample());
    const Table back = read_csv(a.string());
    CHECK(back.comments == sample().comments);
    CHECK(back.columns == sample().columns);
    REQUIRE(back.rows.size() == 3);
    CHECK(back.rows[1][1] == 0.25);
    write_csv(b.string(), back);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("non-finite fields survive the round trip") {
    Table t;
    t.columns = {"x"};
    t.rows = {{std::numeric_limits<double>::quiet_NaN()}};
    const auto p = scratch() / "nan.csv";
    write_csv(p.string(), t);
    const Table back = read_csv(p.string());
    CHECK(std::isnan(back.rows[0][0]));
}

TEST_CASE("reader accepts CRLF and comments without a space") {
    const auto p = scratch() / "crlf.csv";
    {
        std::ofstream f(p, std::ios::binary);
        f << "#no space\r\n" << "x,y\r\n" << "1.0,2.0\r\n" << "\r\n";
    }
    const Table t = read_csv(p.string());
    REQUIRE(t.comments.size() == 1);
    CHECK(t.comments[0] == "no space");
    CHECK(t.columns == std::vector<std::string>{"x", "y"});
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][0] == 1.0);
    CHECK(t.rows[0][1] == 2.0);
}

TEST_CASE("reader failures carry the file position") {
    CHECK_THROWS_AS(read_csv((scratch() / "absent.csv").string()), IoError);

    const auto bad = scratch() / "bad_number.csv";
    {
        std::ofstream f(bad, std::ios::binary);
        f << "a,b\n1.0,xyz\n";
    }
    try {
        read_csv(bad.string());
        FAIL("bad field accepted");
    } catch (const IoError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("bad_number.csv:2") != std::string::npos);
        CHECK(msg.find("xyz") != std::string::npos);
    }

    const auto ragged = scratch() / "ragged.csv";
    {
        std::ofstream f(ragged, std::ios::binary);
        f << "a,b\n1.0,2.0,3.0\n";
    }
    CHECK_THROWS_AS(read_csv(ragged.string()), IoError);

    const auto empty = scratch() / "empty.csv";
    { std::ofstream f(empty, std::ios::binary); }
    CHECK_THROWS_AS(read_csv(empty.string()), IoError);
}

TEST_CASE("writer failures are reported, nothing half-written") {
    Table t = sample();
    t.rows.push_back({1.0});
    const auto p = scratch() / "ragged_out.csv";
    CHECK_THROWS_AS(write_csv(p.string(), t), IoError);
    const bool half_written =
        std::filesystem::exists(p) && std::filesystem::file_size(p) > 0;
    CHECK_FALSE(half_written);

    CHECK_THROWS_AS(write_csv((scratch() / "no-such-dir" / "out.csv").string(), sample()),
                    IoError);
}

TEST_CASE("json mirror of the table") {
    const auto p = scratch() / "table.json";
    Table t = sample();
    t.rows[0][1] = std::numeric_limits<double>::quiet_NaN();
    write_json(p.string(), t);

    const nlohmann::json doc = nlohmann::json::parse(slurp(p));
    CHECK(doc.at("comments").size() == 2);
    CHECK(doc.at("comments")[0] == "l = 2");
    CHECK(doc.at("columns") == nlohmann::json({"tau", "S"}));
    REQUIRE(doc.at("rows").size() == 3);
    CHECK(doc.at("rows")[0][1].is_null());
    CHECK(doc.at("rows")[2][1].get<double>() == 1e-3);
}

}  // TEST_SUITE
