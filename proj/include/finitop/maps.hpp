#pragma once

#include "finitop/point_set.hpp"
#include "finitop/space.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace finitop
{

class SpaceProfile;

/// A total function between two finite spaces.
class SpaceMap
{
public:
    /// Throws Error{InvalidMap} if the assignment length differs from
    /// domain.n() or an entry is not a codomain point.
    SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> assignment);

    static SpaceMap identity(const FiniteSpace& s);

    [[nodiscard]] const FiniteSpace& domain() const noexcept { return domain_; }
    [[nodiscard]] const FiniteSpace& codomain() const noexcept { return codomain_; }
    [[nodiscard]] const std::vector<int>& assignment() const noexcept { return assignment_; }
    [[nodiscard]] int operator()(int x) const { return assignment_[static_cast<std::size_t>(x)]; }

    friend bool operator==(const SpaceMap&, const SpaceMap&) = default;

private:
    FiniteSpace domain_;
    FiniteSpace codomain_;
    std::vector<int> assignment_;
};

// Set algebra over a raw assignment; the codomain side is implicit.
PointSet image(std::span<const int> assignment, PointSet a) noexcept;
PointSet preimage(std::span<const int> assignment, PointSet b) noexcept;

PointSet image(const SpaceMap& f, PointSet a) noexcept;
PointSet preimage(const SpaceMap& f, PointSet b) noexcept;

/// g ∘ f. The codomain of f must equal the domain of g exactly (same n and
/// same canonical opens); otherwise throws Error{SpaceMismatch}.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

/// Inverse of a bijection, as a map codomain -> domain. Throws
/// Error{InvalidMap} if f is not bijective.
SpaceMap inverse(const SpaceMap& f);

bool is_continuous(const SpaceMap& f) noexcept;
bool is_open_map(const SpaceMap& f) noexcept;
bool is_closed_map(const SpaceMap& f) noexcept;
bool is_surjective(const SpaceMap& f) noexcept;
bool is_injective(const SpaceMap& f) noexcept;
bool is_bijective(const SpaceMap& f) noexcept;

/// Preimage of every closed set of the codomain is α^m-closed.
bool is_alpha_m_continuous(const SpaceMap& f);
/// Preimage of every α^m-closed set of the codomain is α^m-closed.
bool is_alpha_m_irresolute(const SpaceMap& f);
/// Image of every closed set of the domain is α^m-closed.
bool is_alpha_m_closed_map(const SpaceMap& f);
/// Image of every open set of the domain is α^m-open.
bool is_alpha_m_open_map(const SpaceMap& f);
/// Preimage of every open set of the codomain is α^m-open.
bool has_alpha_m_open_preimages(const SpaceMap& f);

enum class MapProperty : std::uint8_t
{
    Continuous,
    OpenMap,
    ClosedMap,
    Surjective,
    Bijective,
    AlphaMContinuous,
    AlphaMIrresolute,
    AlphaMClosedMap,
    AlphaMOpenMap,
    AlphaMOpenPreimages,
};

inline constexpr std::size_t kMapPropertyCount = 10;
inline constexpr std::array<MapProperty, kMapPropertyCount> kAllMapProperties = {
    MapProperty::Continuous,       MapProperty::OpenMap,          MapProperty::ClosedMap,
    MapProperty::Surjective,       MapProperty::Bijective,        MapProperty::AlphaMContinuous,
    MapProperty::AlphaMIrresolute, MapProperty::AlphaMClosedMap,  MapProperty::AlphaMOpenMap,
    MapProperty::AlphaMOpenPreimages,
};

std::string_view name_of(MapProperty p) noexcept;

/// Bit set over MapProperty.
class MapFlags
{
public:
    constexpr MapFlags() noexcept = default;

    [[nodiscard]] constexpr bool operator[](MapProperty p) const noexcept
    {
        return (bits_ >> static_cast<unsigned>(p)) & 1u;
    }
    constexpr void set(MapProperty p, bool value) noexcept
    {
        if (value)
            bits_ |= static_cast<std::uint16_t>(1u << static_cast<unsigned>(p));
        else
            bits_ &= static_cast<std::uint16_t>(~(1u << static_cast<unsigned>(p)));
    }
    [[nodiscard]] constexpr std::uint16_t bits() const noexcept { return bits_; }

    friend constexpr bool operator==(MapFlags, MapFlags) noexcept = default;

private:
    std::uint16_t bits_ = 0;
};

/// Every map property, each evaluated directly from its definition.
MapFlags classify_map(const SpaceMap& f);

/// Same flags from precomputed class tables of both spaces. This is the path
/// the theorem sweeps use.
MapFlags classify_map(const SpaceProfile& domain, const SpaceProfile& codomain,
                      std::span<const int> assignment) noexcept;

} // namespace finitop
