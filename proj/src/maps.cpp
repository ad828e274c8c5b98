#include "finitop/maps.hpp"

#include "finitop/error.hpp"
#include "finitop/set_classes.hpp"

namespace finitop
{

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment))
{
    if (static_cast<int>(assignment_.size()) != domain_.n())
        throw Error(ErrorKind::InvalidMap, "assignment has " + std::to_string(assignment_.size())
                                               + " entries for a " + std::to_string(domain_.n())
                                               + "-point domain");
    for (std::size_t x = 0; x < assignment_.size(); ++x)
        if (assignment_[x] < 0 || assignment_[x] >= codomain_.n())
            throw Error(ErrorKind::InvalidMap, "point " + std::to_string(x) + " maps to "
                                                   + std::to_string(assignment_[x])
                                                   + ", outside the codomain");
}

SpaceMap SpaceMap::identity(const FiniteSpace& s)
{
    std::vector<int> a(static_cast<std::size_t>(s.n()));
    for (int x = 0; x < s.n(); ++x)
        a[static_cast<std::size_t>(x)] = x;
    return SpaceMap(s, s, std::move(a));
}

PointSet image(std::span<const int> assignment, PointSet a) noexcept
{
    PointSet out;
    for (int x : a.points())
        out = out.with(assignment[static_cast<std::size_t>(x)]);
    return out;
}

PointSet preimage(std::span<const int> assignment, PointSet b) noexcept
{
    PointSet out;
    for (std::size_t x = 0; x < assignment.size(); ++x)
        if (b.contains(assignment[x]))
            out = out.with(static_cast<int>(x));
    return out;
}

PointSet image(const SpaceMap& f, PointSet a) noexcept
{
    return image(f.assignment(), a);
}

PointSet preimage(const SpaceMap& f, PointSet b) noexcept
{
    return preimage(f.assignment(), b);
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f)
{
    if (!(f.codomain() == g.domain()))
        throw Error(ErrorKind::SpaceMismatch, "codomain of the inner map differs from the domain of the outer map");
    std::vector<int> a(f.assignment().size());
    for (std::size_t x = 0; x < a.size(); ++x)
        a[x] = g(f.assignment()[x]);
    return SpaceMap(f.domain(), g.codomain(), std::move(a));
}

SpaceMap inverse(const SpaceMap& f)
{
    if (!is_bijective(f))
        throw Error(ErrorKind::InvalidMap, "map is not a bijection");
    std::vector<int> a(static_cast<std::size_t>(f.codomain().n()));
    for (int x = 0; x < f.domain().n(); ++x)
        a[static_cast<std::size_t>(f(x))] = x;
    return SpaceMap(f.codomain(), f.domain(), std::move(a));
}

bool is_continuous(const SpaceMap& f) noexcept
{
    for (PointSet v : f.codomain().opens())
        if (!is_open(f.domain(), preimage(f, v)))
            return false;
    return true;
}

bool is_open_map(const SpaceMap& f) noexcept
{
    for (PointSet u : f.domain().opens())
        if (!is_open(f.codomain(), image(f, u)))
            return false;
    return true;
}

bool is_closed_map(const SpaceMap& f) noexcept
{
    for (PointSet c : f.domain().closeds())
        if (!is_closed(f.codomain(), image(f, c)))
            return false;
    return true;
}

bool is_surjective(const SpaceMap& f) noexcept
{
    return image(f, f.domain().full()) == f.codomain().full();
}

bool is_injective(const SpaceMap& f) noexcept
{
    return image(f, f.domain().full()).size() == f.domain().n();
}

bool is_bijective(const SpaceMap& f) noexcept
{
    return is_surjective(f) && is_injective(f);
}

bool is_alpha_m_continuous(const SpaceMap& f)
{
    for (PointSet v : f.codomain().closeds())
        if (!is_alpha_m_closed(f.domain(), preimage(f, v)))
            return false;
    return true;
}

bool is_alpha_m_irresolute(const SpaceMap& f)
{
    for (PointSet v : all_subsets(f.codomain().n()))
        if (is_alpha_m_closed(f.codomain(), v) && !is_alpha_m_closed(f.domain(), preimage(f, v)))
            return false;
    return true;
}

bool is_alpha_m_closed_map(const SpaceMap& f)
{
    for (PointSet c : f.domain().closeds())
        if (!is_alpha_m_closed(f.codomain(), image(f, c)))
            return false;
    return true;
}

bool is_alpha_m_open_map(const SpaceMap& f)
{
    for (PointSet u : f.domain().opens())
        if (!is_alpha_m_open(f.codomain(), image(f, u)))
            return false;
    return true;
}

bool has_alpha_m_open_preimages(const SpaceMap& f)
{
    for (PointSet v : f.codomain().opens())
        if (!is_alpha_m_open(f.domain(), preimage(f, v)))
            return false;
    return true;
}

std::string_view name_of(MapProperty p) noexcept
{
    switch (p)
    {
    case MapProperty::Continuous: return "continuous";
    case MapProperty::OpenMap: return "open_map";
    case MapProperty::ClosedMap: return "closed_map";
    case MapProperty::Surjective: return "surjective";
    case MapProperty::Bijective: return "bijective";
    case MapProperty::AlphaMContinuous: return "alpha_m_continuous";
    case MapProperty::AlphaMIrresolute: return "alpha_m_irresolute";
    case MapProperty::AlphaMClosedMap: return "alpha_m_closed_map";
    case MapProperty::AlphaMOpenMap: return "alpha_m_open_map";
    case MapProperty::AlphaMOpenPreimages: return "alpha_m_open_preimages";
    }
    return "?";
}

MapFlags classify_map(const SpaceMap& f)
{
    MapFlags flags;
    flags.set(MapProperty::Continuous, is_continuous(f));
    flags.set(MapProperty::OpenMap, is_open_map(f));
    flags.set(MapProperty::ClosedMap, is_closed_map(f));
    flags.set(MapProperty::Surjective, is_surjective(f));
    flags.set(MapProperty::Bijective, is_bijective(f));
    flags.set(MapProperty::AlphaMContinuous, is_alpha_m_continuous(f));
    flags.set(MapProperty::AlphaMIrresolute, is_alpha_m_irresolute(f));
    flags.set(MapProperty::AlphaMClosedMap, is_alpha_m_closed_map(f));
    flags.set(MapProperty::AlphaMOpenMap, is_alpha_m_open_map(f));
    flags.set(MapProperty::AlphaMOpenPreimages, has_alpha_m_open_preimages(f));
    return flags;
}

MapFlags classify_map(const SpaceProfile& domain, const SpaceProfile& codomain,
                      std::span<const int> assignment) noexcept
{
    auto all_preimages = [&](SetClass over, SetClass want) {
        for (PointSet v : codomain.family(over))
            if (!domain.has(preimage(assignment, v), want))
                return false;
        return true;
    };
    auto all_images = [&](SetClass over, SetClass want) {
        for (PointSet u : domain.family(over))
            if (!codomain.has(image(assignment, u), want))
                return false;
        return true;
    };

    const PointSet hit = image(assignment, domain.space().full());
    const bool surjective = hit == codomain.space().full();

    MapFlags flags;
    flags.set(MapProperty::Continuous, all_preimages(SetClass::Open, SetClass::Open));
    flags.set(MapProperty::OpenMap, all_images(SetClass::Open, SetClass::Open));
    flags.set(MapProperty::ClosedMap, all_images(SetClass::Closed, SetClass::Closed));
    flags.set(MapProperty::Surjective, surjective);
    flags.set(MapProperty::Bijective, surjective && hit.size() == domain.n());
    flags.set(MapProperty::AlphaMContinuous, all_preimages(SetClass::Closed, SetClass::AlphaMClosed));
    flags.set(MapProperty::AlphaMIrresolute, all_preimages(SetClass::AlphaMClosed, SetClass::AlphaMClosed));
    flags.set(MapProperty::AlphaMClosedMap, all_images(SetClass::Closed, SetClass::AlphaMClosed));
    flags.set(MapProperty::AlphaMOpenMap, all_images(SetClass::Open, SetClass::AlphaMOpen));
    flags.set(MapProperty::AlphaMOpenPreimages, all_preimages(SetClass::Open, SetClass::AlphaMOpen));
    return flags;
}

} // namespace finitop
