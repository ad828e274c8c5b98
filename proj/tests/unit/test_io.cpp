#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finitop/enumeration.hpp"
#include "finitop/error.hpp"
#include "finitop/io.hpp"

using namespace finitop;

namespace
{

ErrorKind kind_of(auto&& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    return ErrorKind::InvariantBreach;
}

} // namespace

TEST_CASE("space text format")
{
    CHECK(io::to_text(sierpinski()) == R"({"n":2,"opens":[[],[0],[0,1]]})");
    CHECK(io::to_text(FiniteSpace{}) == R"({"n":0,"opens":[[]]})");
    CHECK(io::parse_space(R"({"opens":[[0,1],[0],[]],"n":2})") == sierpinski());
}

TEST_CASE("space and map records round trip, n <= 3")
{
    for (int n = 0; n <= 3; ++n)
        for (const FiniteSpace& s : enumerate_topologies(n))
        {
            const std::string text = io::to_text(s);
            const FiniteSpace back = io::parse_space(text);
            CHECK(back == s);
            CHECK(io::to_text(back) == text);
            for (const SpaceMap& f : enumerate_maps(s, sierpinski()))
                CHECK(io::parse_map(io::to_text(f)) == f);
        }
}

TEST_CASE("parse errors")
{
    CHECK(kind_of([] { (void)io::parse_space("{"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)io::parse_space(R"({"n":2})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)io::parse_space(R"({"n":2,"opens":[[],[2],[0,1]]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)io::parse_space(R"({"n":"2","opens":[]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)io::parse_space(R"({"n":40,"opens":[]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)io::parse_space(R"({"n":2,"opens":[[],[0],[1]]})"); }) == ErrorKind::NotATopology);
    CHECK(kind_of([] {
              (void)io::parse_map(R"({"domain":{"n":1,"opens":[[],[0]]},"codomain":{"n":1,"opens":[[],[0]]},"assignment":[1]})");
          })
          == ErrorKind::InvalidMap);
}

TEST_CASE("subset literals")
{
    CHECK(io::parse_subset("", 3) == PointSet{});
    CHECK(io::parse_subset("0,2", 3) == PointSet{0, 2});
    CHECK(io::parse_subset(" 1 , 0", 3) == PointSet{0, 1});
    CHECK(kind_of([] { (void)io::parse_subset("3", 3); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)io::parse_subset("0,", 3); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)io::parse_subset("a", 3); }) == ErrorKind::Parse);
}

TEST_CASE("report records")
{
    const auto c = io::to_json(classify_subset(sierpinski(), PointSet{0}));
    std::vector<std::string> keys;
    for (const auto& [key, value] : c.items())
        keys.push_back(key);
    REQUIRE(keys.size() == kSetClassCount);
    CHECK(keys.front() == "open");
    CHECK(keys.back() == "alpha_m_open");

    const auto a = io::to_json(axiom_report(sierpinski())).dump();
    CHECK(a == R"({"T0":true,"T1":false,"T_half":true,"T_alpha_m":true,"singleton_dichotomy":false,)"
               R"("witnesses":{"T1":[0,1],"singleton_dichotomy":[0]}})");

    Scope scope;
    scope.max_points = 2;
    const TheoremReport r = verify(ClaimId::T3_2_ab, scope);
    const auto json = io::to_json(r);
    CHECK_FALSE(json.contains("wall_time"));
    const TheoremReport back = io::report_from_json(io::parse_json(json.dump()));
    CHECK(back.claim == r.claim);
    CHECK(back.scope == r.scope);
    CHECK(back.instances == r.instances);
    CHECK(back.outcome == r.outcome);
    CHECK(back.witnesses == r.witnesses);
}
