#pragma once

#include "finitop/point_set.hpp"
#include "finitop/space.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace finitop
{

class SpaceProfile;

enum class Axiom : std::uint8_t
{
    T0,
    T1,
    THalf,
    TAlphaM,
    SingletonDichotomy,
};

inline constexpr std::size_t kAxiomCount = 5;
inline constexpr std::array<Axiom, kAxiomCount> kAllAxioms = {
    Axiom::T0, Axiom::T1, Axiom::THalf, Axiom::TAlphaM, Axiom::SingletonDichotomy,
};

/// "T0", "T1", "T_half", "T_alpha_m", "singleton_dichotomy".
std::string_view name_of(Axiom a) noexcept;

bool is_T0(const FiniteSpace& s) noexcept;
bool is_T1(const FiniteSpace& s) noexcept;
/// Every g-closed set is closed.
bool is_T_half(const FiniteSpace& s) noexcept;
/// Every α^m-closed set is closed.
bool is_T_alpha_m(const FiniteSpace& s);
/// Every singleton is α-closed or clopen.
bool singleton_dichotomy(const FiniteSpace& s) noexcept;

bool is_T_alpha_m(const SpaceProfile& p) noexcept;
bool singleton_dichotomy(const SpaceProfile& p) noexcept;

/// Truth value of each axiom, plus one offending subset for each failure.
///
/// Witness shapes: T0/T1 give the two points that cannot be separated,
/// T_half and T_alpha_m give a g-closed (resp. α^m-closed) set that is not
/// closed, singleton_dichotomy gives the offending singleton.
struct AxiomReport
{
    std::array<bool, kAxiomCount> holds{};
    std::array<std::optional<PointSet>, kAxiomCount> witness{};

    [[nodiscard]] bool operator[](Axiom a) const noexcept { return holds[static_cast<std::size_t>(a)]; }
    [[nodiscard]] const std::optional<PointSet>& witness_for(Axiom a) const noexcept
    {
        return witness[static_cast<std::size_t>(a)];
    }
};

/// Family-comparison evaluation of every axiom; first witness in canonical order.
AxiomReport axiom_report(const FiniteSpace& s);

} // namespace finitop
