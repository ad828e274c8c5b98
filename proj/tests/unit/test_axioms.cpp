#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finitop/axioms.hpp"
#include "finitop/enumeration.hpp"
#include "finitop/set_classes.hpp"

using namespace finitop;

TEST_CASE("T0 / T1 examples")
{
    CHECK(is_T0(sierpinski()));
    CHECK_FALSE(is_T1(sierpinski()));
    CHECK(is_T0(discrete(3)));
    CHECK(is_T1(discrete(3)));
    CHECK_FALSE(is_T0(indiscrete(2)));
}

TEST_CASE("T_half examples")
{
    CHECK(is_T_half(sierpinski()));
    CHECK_FALSE(is_T_half(indiscrete(2)));
    for (int n = 0; n <= 6; ++n)
        CHECK(is_T_half(discrete(n)));
    for (int n = 0; n <= 6; ++n)
        CHECK(is_T_half(khalimsky_interval(n)));
}

TEST_CASE("T_alpha_m examples")
{
    CHECK(is_T_alpha_m(sierpinski()));
    CHECK_FALSE(is_T_alpha_m(indiscrete(2)));
    for (int n = 0; n <= 6; ++n)
        CHECK(is_T_alpha_m(discrete(n)));
}

TEST_CASE("singleton dichotomy examples")
{
    CHECK(singleton_dichotomy(discrete(2)));
    CHECK_FALSE(singleton_dichotomy(sierpinski()));
    CHECK_FALSE(singleton_dichotomy(indiscrete(2)));
}

TEST_CASE("empty space satisfies every axiom vacuously")
{
    const FiniteSpace e;
    CHECK(is_T0(e));
    CHECK(is_T1(e));
    CHECK(is_T_half(e));
    CHECK(is_T_alpha_m(e));
    CHECK(singleton_dichotomy(e));
}

TEST_CASE("axiom report witnesses")
{
    const AxiomReport s = axiom_report(sierpinski());
    CHECK(s[Axiom::T0]);
    CHECK_FALSE(s[Axiom::T1]);
    CHECK(s[Axiom::THalf]);
    CHECK(s[Axiom::TAlphaM]);
    CHECK_FALSE(s[Axiom::SingletonDichotomy]);
    CHECK(s.witness_for(Axiom::T1) == PointSet{0, 1});
    CHECK(s.witness_for(Axiom::SingletonDichotomy) == PointSet{0});
    CHECK_FALSE(s.witness_for(Axiom::T0).has_value());

    const AxiomReport i = axiom_report(indiscrete(2));
    CHECK(i.witness_for(Axiom::T0) == PointSet{0, 1});
    CHECK(i.witness_for(Axiom::THalf) == PointSet{0});
    CHECK(i.witness_for(Axiom::TAlphaM) == PointSet{0});
}

TEST_CASE("axiom chain and family characterisation, n <= 4")
{
    for (int n = 0; n <= 4; ++n)
        for (const FiniteSpace& s : enumerate_topologies(n))
        {
            const bool t0 = is_T0(s);
            const bool t1 = is_T1(s);
            const bool half = is_T_half(s);
            if (t1)
                CHECK(half);
            if (half)
                CHECK(t0);

            const SpaceProfile p(s);
            const bool tam = is_T_alpha_m(s);
            CHECK(tam == (family(s, SetClass::AlphaMClosed) == family(s, SetClass::Closed)));
            CHECK(tam == is_T_alpha_m(p));
            CHECK(singleton_dichotomy(s) == singleton_dichotomy(p));

            const AxiomReport r = axiom_report(s);
            CHECK(r[Axiom::T0] == t0);
            CHECK(r[Axiom::T1] == t1);
            CHECK(r[Axiom::THalf] == half);
            CHECK(r[Axiom::TAlphaM] == tam);
            for (Axiom a : kAllAxioms)
                CHECK(r[a] != r.witness_for(a).has_value());
            if (const auto& w = r.witness_for(Axiom::TAlphaM))
            {
                CHECK(is_alpha_m_closed(s, *w));
                CHECK_FALSE(is_closed(s, *w));
            }
        }
}
