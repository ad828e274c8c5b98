#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finitop/enumeration.hpp"
#include "finitop/error.hpp"
#include "finitop/maps.hpp"
#include "finitop/set_classes.hpp"

using namespace finitop;

namespace
{

SpaceMap swap_on_sierpinski()
{
    return SpaceMap(sierpinski(), sierpinski(), {1, 0});
}

std::vector<FiniteSpace> spaces_up_to(int max_n)
{
    std::vector<FiniteSpace> out;
    for (int n = 1; n <= max_n; ++n)
        for (FiniteSpace& s : enumerate_topologies(n))
            out.push_back(std::move(s));
    return out;
}

} // namespace

TEST_CASE("SpaceMap validates its assignment")
{
    CHECK_THROWS_AS(SpaceMap(sierpinski(), sierpinski(), {0}), Error);
    CHECK_THROWS_AS(SpaceMap(sierpinski(), sierpinski(), {0, 2}), Error);
    CHECK_THROWS_AS(SpaceMap(sierpinski(), sierpinski(), {-1, 0}), Error);
    CHECK_NOTHROW(SpaceMap(FiniteSpace{}, sierpinski(), {}));
}

TEST_CASE("image, preimage and composition")
{
    const SpaceMap id = SpaceMap::identity(sierpinski());
    const SpaceMap swap = swap_on_sierpinski();
    CHECK(preimage(id, PointSet{1}) == PointSet{1});
    CHECK(preimage(swap, PointSet{1}) == PointSet{0});
    CHECK(image(swap, PointSet{0}) == PointSet{1});
    CHECK(compose(swap, swap) == id);
    CHECK(inverse(swap) == swap);
    CHECK_THROWS_AS(inverse(SpaceMap(sierpinski(), sierpinski(), {0, 0})), Error);
}

TEST_CASE("compose rejects mismatched middle spaces")
{
    const SpaceMap f(discrete(2), sierpinski(), {0, 1});
    const int perm[] = {1, 0};
    const FiniteSpace other = relabel(sierpinski(), perm);
    const SpaceMap g(other, discrete(2), {0, 1});
    try
    {
        (void)compose(g, f);
        FAIL("expected SpaceMismatch");
    }
    catch (const Error& e)
    {
        CHECK(e.kind() == ErrorKind::SpaceMismatch);
    }
}

TEST_CASE("classical map properties")
{
    for (const FiniteSpace& s : {sierpinski(), discrete(3), indiscrete(2), khalimsky_interval(4)})
    {
        const SpaceMap id = SpaceMap::identity(s);
        CHECK(is_continuous(id));
        CHECK(is_open_map(id));
        CHECK(is_closed_map(id));
        CHECK(is_bijective(id));
        CHECK(is_alpha_m_continuous(id));
        CHECK(is_alpha_m_irresolute(id));
        CHECK(is_alpha_m_closed_map(id));
        CHECK(is_alpha_m_open_map(id));
    }

    const SpaceMap swap = swap_on_sierpinski();
    CHECK_FALSE(is_continuous(swap));
    CHECK(is_bijective(swap));

    const SpaceMap constant(discrete(2), sierpinski(), {0, 0});
    CHECK(is_continuous(constant));
    CHECK(is_alpha_m_continuous(constant));
    CHECK_FALSE(is_surjective(constant));
}

TEST_CASE("alpha^m map properties examples")
{
    const SpaceMap swap = swap_on_sierpinski();
    CHECK_FALSE(is_alpha_m_continuous(swap));
    CHECK_FALSE(is_alpha_m_irresolute(swap));
    CHECK_FALSE(is_alpha_m_closed_map(swap));

    CHECK(is_alpha_m_continuous(SpaceMap(indiscrete(2), sierpinski(), {0, 1})));

    for (int n = 1; n <= 3; ++n)
        for (const FiniteSpace& s : enumerate_topologies(n))
            for (const SpaceMap& f : enumerate_maps(s, indiscrete(1)))
                CHECK(is_alpha_m_irresolute(f));

    const SpaceMap into(discrete(1), indiscrete(2), {0});
    CHECK(is_alpha_m_closed_map(into));
    CHECK_FALSE(is_closed_map(into));
}

TEST_CASE("classify_map examples")
{
    const MapFlags id = classify_map(SpaceMap::identity(sierpinski()));
    for (MapProperty p : kAllMapProperties)
        CHECK(id[p]);

    const MapFlags swap = classify_map(swap_on_sierpinski());
    CHECK(swap[MapProperty::Bijective]);
    CHECK(swap[MapProperty::Surjective]);
    for (MapProperty p : {MapProperty::Continuous, MapProperty::OpenMap, MapProperty::ClosedMap,
                          MapProperty::AlphaMContinuous, MapProperty::AlphaMIrresolute,
                          MapProperty::AlphaMClosedMap, MapProperty::AlphaMOpenMap,
                          MapProperty::AlphaMOpenPreimages})
        CHECK_FALSE(swap[p]);

    const MapFlags constant = classify_map(SpaceMap(discrete(2), sierpinski(), {1, 1}));
    CHECK(constant[MapProperty::Continuous]);
    CHECK(constant[MapProperty::AlphaMContinuous]);
}

TEST_CASE("map identities over every map, n <= 3")
{
    const auto spaces = spaces_up_to(3);
    std::vector<SpaceProfile> profiles(spaces.begin(), spaces.end());
    for (std::size_t i = 0; i < spaces.size(); ++i)
        for (std::size_t j = 0; j < spaces.size(); ++j)
            for (const SpaceMap& f : enumerate_maps(spaces[i], spaces[j]))
            {
                const MapFlags direct = classify_map(f);
                REQUIRE(direct == classify_map(profiles[i], profiles[j], f.assignment()));

                // inverse images of opens are α^m-open exactly when inverse
                // images of closed sets are α^m-closed
                CHECK(direct[MapProperty::AlphaMContinuous] == direct[MapProperty::AlphaMOpenPreimages]);
                if (direct[MapProperty::AlphaMIrresolute])
                    CHECK(direct[MapProperty::AlphaMContinuous]);

                if (direct[MapProperty::Bijective])
                {
                    const bool inverse_cont = is_alpha_m_continuous(inverse(f));
                    CHECK(inverse_cont == direct[MapProperty::AlphaMOpenMap]);
                    CHECK(direct[MapProperty::AlphaMOpenMap] == direct[MapProperty::AlphaMClosedMap]);
                }

                for (PointSet b : all_subsets(spaces[j].n()))
                    CHECK(preimage(f, complement(spaces[j], b)) == complement(spaces[i], preimage(f, b)));
            }
}
