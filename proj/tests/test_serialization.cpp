#include <doctest.h>

#include <fstream>
#include <iterator>
#include <random>

#include "prodpow/fixtures.hpp"
#include "prodpow/serialization.hpp"
#include "test_util.hpp"

using namespace prodpow;
using testutil::error_kind;
using testutil::nat;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing " << path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST_CASE("solutions round-trip, including large integers")
{
    const Solution s{{pow(nat(3), 90), nat(1), pow(nat(3), 30)}, pow(nat(3), 40), 3};
    const std::string text = dump(to_json(s));
    CHECK(solution_from_json(parse_json(text)) == s);
    CHECK(dump(to_json(solution_from_json(parse_json(text)))) == text);
}

TEST_CASE("parameter trees round-trip")
{
    std::mt19937_64 rng(2);
    for (unsigned m = 3; m <= 6; ++m)
        for (unsigned n = 2; n <= 5; ++n) {
            const ParamTree t = random_param_tree(m, n, rng, 20);
            const std::string text = dump(to_json(t));
            CHECK(param_tree_from_json(parse_json(text)) == t);
        }
    Json bad = to_json(all_ones_tree(4, 2));
    bad["m"] = 7;
    CHECK(error_kind([&] { param_tree_from_json(bad); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("families and reports round-trip byte for byte")
{
    for (const auto& name : fixture_names()) {
        const std::string text = dump(to_json(fixture(name)));
        CHECK(dump(to_json(family_from_json(parse_json(text)))) == text);
    }
    AuditReport r;
    r.family_id = "x";
    r.checked = 3;
    r.passed = 1;
    r.sound_failures.push_back({{{"a", nat(2)}}, "x = y"});
    r.coverage_gaps.push_back({{"z", nat(5)}, {"x1", nat(25)}});
    r.elapsed_seconds = 1.25;
    const std::string text = dump(to_json(r));
    CHECK(text.find("elapsed") == std::string::npos);
    CHECK(dump(to_json(audit_report_from_json(parse_json(text)))) == text);
    const std::string timed = dump(to_json(r, true));
    CHECK(audit_report_from_json(parse_json(timed)).elapsed_seconds == 1.25);
}

TEST_CASE("system specs accept both layouts")
{
    const SystemSpec a = system_spec_from_json(parse_json(R"([{"vars":["x","y","z"],"n":2}])"));
    const SystemSpec b = system_spec_from_json(parse_json(R"({"equations":[{"vars":["x","y","z"],"n":2}]})"));
    REQUIRE(a.equations.size() == 1);
    CHECK(a.equations[0].vars == b.equations[0].vars);
    CHECK(a.equations[0].n == 2);
}

TEST_CASE("malformed documents raise parse errors")
{
    CHECK(error_kind([] { parse_json("{"); }) == ErrorKind::Parse);
    CHECK(error_kind([] { solution_from_json(parse_json(R"({"xs":[4],"z":"2"})")); }) == ErrorKind::Parse);
    CHECK(error_kind([] { solution_from_json(parse_json(R"({"xs":[4, 1],"z":"2","n":2})")); }) == ErrorKind::Parse);
    CHECK(error_kind([] { solution_from_json(parse_json(R"({"xs":["4","-1"],"z":"2","n":2})")); }) ==
          ErrorKind::Parse);
    CHECK(error_kind([] { system_spec_from_json(parse_json(R"({"eqs":[]})")); }) == ErrorKind::Parse);
}

TEST_CASE("checked-in fixture files match the library byte for byte")
{
    const std::string dir = PRODPOW_FIXTURE_DIR;
    for (const auto& name : fixture_names()) {
        const std::string text = read_file(dir + "/" + name + ".json");
        CHECK_MESSAGE(dump(to_json(fixture(name))) == text, name);
        CHECK(dump(to_json(family_from_json(parse_json(text)))) == text);
    }
}
