#pragma once

#include "finitop/point_set.hpp"
#include "finitop/space.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace finitop
{

/// Generalized open/closed set classes. The order is the serialization order
/// of ClassificationReport.
enum class SetClass : std::uint8_t
{
    Open,
    Closed,
    Clopen,
    Preopen,
    Preclosed,
    Semiopen,
    Semiclosed,
    AlphaOpen,
    AlphaClosed,
    BetaOpen,
    BetaClosed,
    GClosed,
    GOpen,
    AlphaMClosed,
    AlphaMOpen,
};

inline constexpr std::size_t kSetClassCount = 15;

inline constexpr std::array<SetClass, kSetClassCount> kAllSetClasses = {
    SetClass::Open,       SetClass::Closed,     SetClass::Clopen,       SetClass::Preopen,
    SetClass::Preclosed,  SetClass::Semiopen,   SetClass::Semiclosed,   SetClass::AlphaOpen,
    SetClass::AlphaClosed, SetClass::BetaOpen,  SetClass::BetaClosed,   SetClass::GClosed,
    SetClass::GOpen,      SetClass::AlphaMClosed, SetClass::AlphaMOpen,
};

/// Snake-case name, e.g. "alpha_m_closed".
std::string_view name_of(SetClass c) noexcept;
std::optional<SetClass> parse_set_class(std::string_view name) noexcept;

/// Open/closed partner of a class (Open <-> Closed, GClosed <-> GOpen, ...).
/// Clopen is its own dual.
SetClass dual_of(SetClass c) noexcept;

bool is_preopen(const FiniteSpace& s, PointSet a) noexcept;
bool is_preclosed(const FiniteSpace& s, PointSet a) noexcept;
bool is_semiopen(const FiniteSpace& s, PointSet a) noexcept;
bool is_semiclosed(const FiniteSpace& s, PointSet a) noexcept;
bool is_alpha_open(const FiniteSpace& s, PointSet a) noexcept;
bool is_alpha_closed(const FiniteSpace& s, PointSet a) noexcept;
bool is_beta_open(const FiniteSpace& s, PointSet a) noexcept;
bool is_beta_closed(const FiniteSpace& s, PointSet a) noexcept;

/// cl(A) ⊆ U for every open U ⊇ A.
bool is_g_closed(const FiniteSpace& s, PointSet a) noexcept;
bool is_g_open(const FiniteSpace& s, PointSet a) noexcept;

/// Intersection of all α-open supersets of `a`. Sweeps the supersets of `a`,
/// so the cost is 2^(n - |a|) α-open tests.
PointSet alpha_kernel(const FiniteSpace& s, PointSet a);

/// int(cl(A)) ⊆ U for every α-open U ⊇ A, decided through the α-kernel.
bool is_alpha_m_closed(const FiniteSpace& s, PointSet a);
bool is_alpha_m_open(const FiniteSpace& s, PointSet a);

bool in_class(const FiniteSpace& s, PointSet a, SetClass c);

/// All class flags of one subset, in SetClass order.
struct ClassificationReport
{
    std::array<bool, kSetClassCount> flags{};

    [[nodiscard]] bool operator[](SetClass c) const noexcept { return flags[static_cast<std::size_t>(c)]; }
    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify_subset(const FiniteSpace& s, PointSet a);

/// Class-membership table for every subset of one space, computed eagerly
/// and immutable afterwards. The α-kernels come from a single downward pass
/// over the subset lattice instead of one superset sweep per subset.
class SpaceProfile
{
public:
    explicit SpaceProfile(FiniteSpace space);

    [[nodiscard]] const FiniteSpace& space() const noexcept { return space_; }
    [[nodiscard]] int n() const noexcept { return space_.n(); }

    [[nodiscard]] bool has(PointSet a, SetClass c) const noexcept
    {
        return (flags_[a.bits()] >> static_cast<unsigned>(c)) & 1u;
    }

    [[nodiscard]] ClassificationReport classify(PointSet a) const noexcept;

    /// Members of a class, canonical order.
    [[nodiscard]] const std::vector<PointSet>& family(SetClass c) const noexcept
    {
        return families_[static_cast<std::size_t>(c)];
    }

private:
    FiniteSpace space_;
    std::vector<std::uint16_t> flags_;
    std::array<std::vector<PointSet>, kSetClassCount> families_;
};

/// All subsets of `s` in class `c`, canonical order.
std::vector<PointSet> family(const FiniteSpace& s, SetClass c);

} // namespace finitop
