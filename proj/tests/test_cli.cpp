#include "commands.hpp"
#include "report.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using namespace halfcube;
using namespace halfcube::cli;

namespace {

std::string rendered(const Report& r, Format f)
{
    std::ostringstream os;
    render(r, f, os);
    return os.str();
}

const Check* find_check(const Report& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

} // namespace

TEST_CASE("faces command")
{
    const auto r4 = cmd_faces(4);
    CHECK(r4.ok());
    CHECK(r4.rows.size() == 5);
    std::vector<std::string> totals;
    for (const auto& row : r4.rows)
        totals.push_back(row[1]);
    CHECK(totals == std::vector<std::string>{"8", "24", "32", "16", "1"});

    const auto r5 = cmd_faces(5);
    CHECK(r5.ok());
    const auto json_text = rendered(r5, Format::Json);
    const auto doc = json::parse(json_text);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "faces");
    CHECK(doc["params"]["n"] == 5);
    const auto* k3 = find_check(r5, "simplex_count/dim3");
    const auto* l3 = find_check(r5, "halfcube_count/dim3");
    REQUIRE(k3);
    REQUIRE(l3);
    CHECK(k3->actual == 80);
    CHECK(l3->actual == 40);
}

TEST_CASE("betti command")
{
    RunConfig config;
    const auto r = cmd_betti(4, 3, config);
    CHECK(r.ok());
    CHECK(r.results["reduced_betti"][2] == 7);
    CHECK(r.results["torsion_free"] == true);
    for (int d : {0, 1, 3, 4})
        CHECK(r.results["reduced_betti"][d] == 0);

    CHECK(cmd_betti(5, 5, config).results["reduced_betti"][4] == 1);

    config.certification = Certification::Rank;
    const auto six = cmd_betti(6, 3, config);
    CHECK(six.ok());
    CHECK(six.results["reduced_betti"][2] == 111);
    CHECK(find_check(six, "torsion_free")->status == "skipped");

    config.max_cells = 10;
    const auto skipped = cmd_betti(5, 3, config);
    CHECK(skipped.results["status"] == "skipped");
    CHECK(find_check(skipped, "rank_H2")->status == "skipped");
    CHECK(find_check(skipped, "rank_H2")->expected == 31);
    CHECK(skipped.ok());
}

TEST_CASE("morse command")
{
    RunConfig config;
    const auto r = cmd_morse(5, 3, config);
    CHECK(r.ok());
    CHECK(r.results["acyclic"] == true);
    CHECK(r.results["pairs"] == 80);
    const auto four = cmd_morse(4, 4, config);
    CHECK(four.ok());
    CHECK(four.results["alternating_sum"] == 0);
    CHECK(cmd_morse(6, 6, config).results["acyclic"] == true);
}

TEST_CASE("orbits and triangle commands")
{
    const auto ext = cmd_orbits(4, true);
    CHECK(ext.ok());
    CHECK(ext.results["dimensions"][3]["orbits"].size() == 1);
    CHECK(cmd_orbits(4, false).ok());
    CHECK(cmd_orbits(5, false).ok());

    const auto t = cmd_triangle(6);
    CHECK(t.ok());
    CHECK(find_check(t, "known_row/6")->actual == json::array({1, 11, 49, 111, 129, 63, 1}));
    CHECK(cmd_triangle(30).ok());
}

TEST_CASE("verify sweep")
{
    RunConfig config;
    config.certification = Certification::Rank;
    const auto r = cmd_verify(5, config);
    CHECK(r.ok());
    CHECK(r.checks.size() > 50);
}

TEST_CASE("report rendering")
{
    Report r;
    r.command = "demo";
    r.params = {{"n", 4}};
    r.header = {"a", "b"};
    r.rows = {{"1", "x,y"}};
    r.check("good", 1, 1);
    r.check("bad", 1, 2);
    r.skip("later", 3, "budget");
    CHECK_FALSE(r.ok());

    const auto table = rendered(r, Format::Table);
    CHECK(table.find("3 checks, 1 failed, 1 skipped: MISMATCH") != std::string::npos);
    const auto csv = rendered(r, Format::Csv);
    CHECK(csv.find("\"x,y\"") != std::string::npos);
    CHECK(csv.find("check,expected,actual,status") != std::string::npos);

    const auto doc = json::parse(rendered(r, Format::Json));
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema_version", "command", "params", "results", "checks"});
    CHECK(doc["checks"][1]["status"] == "fail");
    CHECK(doc["checks"][2]["status"] == "skipped");
    CHECK(rendered(r, Format::Json) == rendered(r, Format::Json));

    Report outer;
    outer.absorb(r, "inner");
    CHECK(outer.checks.front().name == "inner/good");
    CHECK_FALSE(outer.ok());

    CHECK(parse_format("json") == Format::Json);
    CHECK_THROWS(parse_format("xml"));
    CHECK(to_json(Integer(5)) == 5);
    CHECK(to_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
}
