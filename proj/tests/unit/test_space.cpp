#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finitop/enumeration.hpp"
#include "finitop/error.hpp"
#include "finitop/space.hpp"
#include "oracles.hpp"

#include <string>

using namespace finitop;

namespace
{

ErrorKind error_kind_of(auto&& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    FAIL("no finitop::Error thrown");
    return ErrorKind::InvariantBreach;
}

} // namespace

TEST_CASE("PointSet basics")
{
    const PointSet a{0, 2};
    CHECK(a.bits() == 0b101u);
    CHECK(a.size() == 2);
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(1));
    CHECK(a.complement(3) == PointSet{1});
    CHECK(a.fits(3));
    CHECK_FALSE(a.fits(2));
    CHECK(PointSet::full(0).is_empty());
    CHECK(PointSet::full(16).size() == 16);
    CHECK(a.points() == std::vector<int>{0, 2});
    CHECK(a.to_string() == "{0,2}");

    const auto subsets = all_subsets(3);
    REQUIRE(subsets.size() == 8);
    CHECK(subsets.front() == PointSet{});
    CHECK(subsets[1] == PointSet{0});
    CHECK(subsets[3] == PointSet{2});
    CHECK(subsets[4] == PointSet{0, 1});
    CHECK(subsets.back() == PointSet::full(3));
}

TEST_CASE("new_space accepts topologies and canonicalizes")
{
    const FiniteSpace s = new_space(2, {PointSet{0, 1}, PointSet{}, PointSet{0}, PointSet{0}});
    CHECK(s.n() == 2);
    CHECK(s.opens() == std::vector<PointSet>{PointSet{}, PointSet{0}, PointSet{0, 1}});
    CHECK(s == sierpinski());

    std::vector<PointSet> power;
    for (std::uint32_t b = 0; b < 8; ++b)
        power.emplace_back(b);
    CHECK(new_space(3, power) == discrete(3));
}

TEST_CASE("new_space rejects non-topologies")
{
    CHECK(error_kind_of([] { (void)new_space(2, {PointSet{}, PointSet{0}, PointSet{1}}); })
          == ErrorKind::NotATopology);
    CHECK(error_kind_of([] { (void)new_space(2, {PointSet{0}, PointSet{0, 1}}); }) == ErrorKind::NotATopology);
    CHECK(error_kind_of([] { (void)new_space(2, {PointSet{}, PointSet{0, 2}}); }) == ErrorKind::BadParams);
    CHECK(error_kind_of([] { (void)new_space(17, {}); }) == ErrorKind::BadParams);

    // The message names the offending pair.
    try
    {
        (void)new_space(3, {PointSet{}, PointSet{0}, PointSet{1}, PointSet{0, 1, 2}});
        FAIL("expected NotATopology");
    }
    catch (const Error& e)
    {
        CHECK(e.kind() == ErrorKind::NotATopology);
        CHECK(std::string(e.what()).find("union of {0} and {1}") != std::string::npos);
    }
}

TEST_CASE("interior and closure examples")
{
    const FiniteSpace s = sierpinski();
    CHECK(interior(s, PointSet{1}) == PointSet{});
    CHECK(interior(s, s.full()) == s.full());
    CHECK(interior(indiscrete(2), PointSet{0}) == PointSet{});
    CHECK(closure(s, PointSet{0}) == s.full());
    CHECK(closure(s, PointSet{}) == PointSet{});
    CHECK(closure(discrete(3), PointSet{1, 2}) == PointSet{1, 2});
}

TEST_CASE("open / closed / clopen lookups")
{
    const FiniteSpace s = sierpinski();
    CHECK(is_open(s, PointSet{0}));
    CHECK_FALSE(is_closed(s, PointSet{0}));
    CHECK_FALSE(is_clopen(s, PointSet{0}));
    CHECK(is_clopen(s, s.full()));
    CHECK_FALSE(is_open(indiscrete(2), PointSet{0}));
    CHECK_FALSE(is_closed(indiscrete(2), PointSet{0}));
}

TEST_CASE("generators")
{
    CHECK(sierpinski().opens() == std::vector<PointSet>{PointSet{}, PointSet{0}, PointSet{0, 1}});
    CHECK(khalimsky_interval(3).opens()
          == std::vector<PointSet>{PointSet{}, PointSet{1}, PointSet{0, 1}, PointSet{1, 2}, PointSet{0, 1, 2}});

    const FiniteSpace empty = discrete(0);
    CHECK(empty.n() == 0);
    CHECK(empty.opens() == std::vector<PointSet>{PointSet{}});
    CHECK(empty == FiniteSpace{});

    const FiniteSpace pp = particular_point(3, 1);
    CHECK(pp.opens().size() == 5);
    for (PointSet u : pp.opens())
        CHECK((u.is_empty() || u.contains(1)));
    const FiniteSpace ep = excluded_point(3, 1);
    CHECK(ep.opens().size() == 5);
    for (PointSet u : ep.opens())
        CHECK((u == PointSet::full(3) || !u.contains(1)));

    const int two_params[] = {3, 0};
    CHECK(generate("particular_point", two_params) == particular_point(3, 0));
    CHECK(generate("sierpinski", {}) == sierpinski());

    const int bad_point[] = {3, 3};
    CHECK(error_kind_of([&] { (void)generate("excluded_point", bad_point); }) == ErrorKind::BadParams);
    const int too_big[] = {17};
    CHECK(error_kind_of([&] { (void)generate("discrete", too_big); }) == ErrorKind::BadParams);
    CHECK(error_kind_of([&] { (void)generate("nope", {}); }) == ErrorKind::BadParams);
    CHECK(error_kind_of([&] { (void)generate("discrete", {}); }) == ErrorKind::BadParams);

    // Generators build through the neighbourhood path; the validating
    // constructor must accept their output unchanged.
    for (int n = 0; n <= 6; ++n)
    {
        const FiniteSpace k = khalimsky_interval(n);
        CHECK(new_space(k.n(), k.opens()) == k);
    }
    CHECK(discrete(16).opens().size() == 65536);
}

TEST_CASE("Kuratowski laws and oracle agreement, n <= 4")
{
    for (int n = 0; n <= 4; ++n)
        for (const FiniteSpace& s : enumerate_topologies(n))
            for (PointSet a : all_subsets(n))
            {
                const PointSet i = interior(s, a);
                const PointSet c = closure(s, a);
                REQUIRE(i == oracle::interior(s, a));
                REQUIRE(c == oracle::closure(s, a));
                CHECK(i.subset_of(a));
                CHECK(a.subset_of(c));
                CHECK(interior(s, i) == i);
                CHECK(closure(s, c) == c);
                CHECK(i == complement(s, closure(s, complement(s, a))));
                CHECK(oracle::open(s, i));
                CHECK(oracle::closed(s, c));
                CHECK(is_open(s, a) == oracle::open(s, a));
                CHECK(is_closed(s, a) == oracle::closed(s, a));
                CHECK(open_hull(s, a) == [&] {
                    PointSet hull = s.full();
                    for (PointSet u : s.opens())
                        if (a.subset_of(u))
                            hull &= u;
                    return hull;
                }());
            }
}

TEST_CASE("discrete and indiscrete operators")
{
    for (int n = 1; n <= 5; ++n)
    {
        const FiniteSpace d = discrete(n);
        const FiniteSpace i = indiscrete(n);
        for (PointSet a : all_subsets(n))
        {
            CHECK(interior(d, a) == a);
            CHECK(closure(d, a) == a);
            if (a != i.full())
                CHECK(interior(i, a).is_empty());
            if (!a.is_empty())
                CHECK(closure(i, a) == i.full());
        }
    }
}

TEST_CASE("relabel moves opens by the permutation")
{
    const int swap[] = {1, 0};
    const FiniteSpace moved = relabel(sierpinski(), swap);
    CHECK(moved.opens() == std::vector<PointSet>{PointSet{}, PointSet{1}, PointSet{0, 1}});
    CHECK(relabel(moved, swap) == sierpinski());
}

TEST_CASE("space order compares opens lexicographically")
{
    const FiniteSpace a = sierpinski();
    const int swap[] = {1, 0};
    const FiniteSpace b = relabel(a, swap);
    CHECK(a < b);
    CHECK(a < indiscrete(2)); // {0} sorts before {0,1}
    CHECK(indiscrete(1) < a); // fewer points first
}
