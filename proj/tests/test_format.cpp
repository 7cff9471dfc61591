#include <cstdio>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "qdelta/fixtures.hpp"
#include "qdelta/format.hpp"
#include "qdelta/report.hpp"

using namespace qdelta;
using fixtures::ev;

TEST_CASE("format_evector") {
    CHECK(format_evector(ev({1, -1, 0, 0, 0, 0, -1})) == "e1 - e2 - e7");
    CHECK(format_evector(ev({0, 0, 0, 0, 0, 0, 0})) == "0");
    CHECK(format_evector(ev({0, 0, 0, 1, 0, -2, 0})) == "e4 - 2e6");
    CHECK(format_evector(ev({-1, 0, 3})) == "-e1 + 3e3");
    CHECK(format_evector(ev({0, 0, 0, 0, 0, 4, 0})) == "4e6");
}

TEST_CASE("parse_selector") {
    CHECK(parse_selector("dihedral:8").order() == 8);
    CHECK(parse_selector("trivial:3").op(1, 2) == 1);
    CHECK_THROWS_AS(parse_selector("dihedral"), invalid_argument);
    CHECK_THROWS_AS(parse_selector("dihedral:x"), invalid_argument);
    CHECK_THROWS_AS(parse_selector("cyclic:5"), invalid_argument);
    CHECK_THROWS_AS(parse_selector("file:/no/such/path.json"), invalid_argument);
}

TEST_CASE("parse_range") {
    CHECK(parse_range("3..9") == std::pair{3, 9});
    CHECK(parse_range("7") == std::pair{7, 7});
    CHECK_THROWS_AS(parse_range("a..b"), invalid_argument);
}

TEST_CASE("quandle file round trip") {
    const std::string path = "test_quandle_roundtrip.json";
    const quandle r6 = make_dihedral(6);
    save_quandle_file(r6, path);
    const quandle loaded = load_quandle_file(path);
    CHECK(loaded.order() == 6);
    CHECK(loaded.table() == r6.table());
    std::remove(path.c_str());
}

TEST_CASE("quandle file validation failures surface at parse time") {
    const std::string path = "test_quandle_bad.json";
    {
        std::ofstream out(path);
        out << R"({"name": "bad", "order": 2, "table": [[1, 0], [1, 0]]})";
    }
    CHECK_THROWS_AS(load_quandle_file(path), invalid_quandle);
    {
        std::ofstream out(path);
        out << R"({"name": "bad", "order": 3, "table": [[0, 0], [1, 1]]})";
    }
    CHECK_THROWS_AS(load_quandle_file(path), invalid_argument);
    {
        std::ofstream out(path);
        out << "not json at all";
    }
    CHECK_THROWS_AS(load_quandle_file(path), invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("json report serialization") {
    quotient_report r;
    r.torsion = {bigint(4), bigint(4)};
    const json j = to_json(r);
    CHECK(j["free_rank"] == 0);
    CHECK(j["torsion"] == json::array({4, 4}));
    CHECK(j["order"] == 16);

    quotient_report inf;
    inf.free_rank = 2;
    CHECK(to_json(inf)["order"] == "infinite");

    // values beyond 64 bits fall back to decimal strings
    bigint huge = 1;
    for (int i = 0; i < 80; ++i) huge *= 2;
    CHECK(to_json(huge) == huge.str());
    CHECK(to_json(bigint(42)) == 42);
}
