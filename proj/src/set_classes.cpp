#include "finitop/set_classes.hpp"

#include <algorithm>

namespace finitop
{

namespace
{

constexpr std::array<std::string_view, kSetClassCount> kNames = {
    "open",       "closed",     "clopen",     "preopen",        "preclosed",
    "semiopen",   "semiclosed", "alpha_open", "alpha_closed",   "beta_open",
    "beta_closed", "g_closed",  "g_open",     "alpha_m_closed", "alpha_m_open",
};

PointSet int_cl(const FiniteSpace& s, PointSet a) noexcept { return interior(s, closure(s, a)); }
PointSet cl_int(const FiniteSpace& s, PointSet a) noexcept { return closure(s, interior(s, a)); }

} // namespace

std::string_view name_of(SetClass c) noexcept
{
    return kNames[static_cast<std::size_t>(c)];
}

std::optional<SetClass> parse_set_class(std::string_view name) noexcept
{
    for (SetClass c : kAllSetClasses)
        if (name_of(c) == name)
            return c;
    return std::nullopt;
}

SetClass dual_of(SetClass c) noexcept
{
    switch (c)
    {
    case SetClass::Open: return SetClass::Closed;
    case SetClass::Closed: return SetClass::Open;
    case SetClass::Clopen: return SetClass::Clopen;
    case SetClass::Preopen: return SetClass::Preclosed;
    case SetClass::Preclosed: return SetClass::Preopen;
    case SetClass::Semiopen: return SetClass::Semiclosed;
    case SetClass::Semiclosed: return SetClass::Semiopen;
    case SetClass::AlphaOpen: return SetClass::AlphaClosed;
    case SetClass::AlphaClosed: return SetClass::AlphaOpen;
    case SetClass::BetaOpen: return SetClass::BetaClosed;
    case SetClass::BetaClosed: return SetClass::BetaOpen;
    case SetClass::GClosed: return SetClass::GOpen;
    case SetClass::GOpen: return SetClass::GClosed;
    case SetClass::AlphaMClosed: return SetClass::AlphaMOpen;
    case SetClass::AlphaMOpen: return SetClass::AlphaMClosed;
    }
    return c;
}

bool is_preopen(const FiniteSpace& s, PointSet a) noexcept
{
    return a.subset_of(int_cl(s, a));
}

bool is_preclosed(const FiniteSpace& s, PointSet a) noexcept
{
    return cl_int(s, a).subset_of(a);
}

bool is_semiopen(const FiniteSpace& s, PointSet a) noexcept
{
    return a.subset_of(cl_int(s, a));
}

bool is_semiclosed(const FiniteSpace& s, PointSet a) noexcept
{
    return int_cl(s, a).subset_of(a);
}

bool is_alpha_open(const FiniteSpace& s, PointSet a) noexcept
{
    return a.subset_of(interior(s, cl_int(s, a)));
}

bool is_alpha_closed(const FiniteSpace& s, PointSet a) noexcept
{
    return closure(s, int_cl(s, a)).subset_of(a);
}

bool is_beta_open(const FiniteSpace& s, PointSet a) noexcept
{
    return a.subset_of(closure(s, int_cl(s, a)));
}

bool is_beta_closed(const FiniteSpace& s, PointSet a) noexcept
{
    return interior(s, cl_int(s, a)).subset_of(a);
}

bool is_g_closed(const FiniteSpace& s, PointSet a) noexcept
{
    // The open supersets of A are exactly the open supersets of its open hull.
    return closure(s, a).subset_of(open_hull(s, a));
}

bool is_g_open(const FiniteSpace& s, PointSet a) noexcept
{
    return is_g_closed(s, complement(s, a));
}

PointSet alpha_kernel(const FiniteSpace& s, PointSet a)
{
    const PointSet free = complement(s, a);
    PointSet kernel = s.full();
    // Walk every subset of the free points; a ∪ extra ranges over all supersets.
    PointSet::word_type extra = free.bits();
    while (true)
    {
        const PointSet candidate = a | PointSet(extra);
        if (is_alpha_open(s, candidate))
            kernel &= candidate;
        if (extra == 0)
            break;
        extra = (extra - 1) & free.bits();
    }
    return kernel;
}

bool is_alpha_m_closed(const FiniteSpace& s, PointSet a)
{
    return int_cl(s, a).subset_of(alpha_kernel(s, a));
}

bool is_alpha_m_open(const FiniteSpace& s, PointSet a)
{
    return is_alpha_m_closed(s, complement(s, a));
}

bool in_class(const FiniteSpace& s, PointSet a, SetClass c)
{
    switch (c)
    {
    case SetClass::Open: return is_open(s, a);
    case SetClass::Closed: return is_closed(s, a);
    case SetClass::Clopen: return is_clopen(s, a);
    case SetClass::Preopen: return is_preopen(s, a);
    case SetClass::Preclosed: return is_preclosed(s, a);
    case SetClass::Semiopen: return is_semiopen(s, a);
    case SetClass::Semiclosed: return is_semiclosed(s, a);
    case SetClass::AlphaOpen: return is_alpha_open(s, a);
    case SetClass::AlphaClosed: return is_alpha_closed(s, a);
    case SetClass::BetaOpen: return is_beta_open(s, a);
    case SetClass::BetaClosed: return is_beta_closed(s, a);
    case SetClass::GClosed: return is_g_closed(s, a);
    case SetClass::GOpen: return is_g_open(s, a);
    case SetClass::AlphaMClosed: return is_alpha_m_closed(s, a);
    case SetClass::AlphaMOpen: return is_alpha_m_open(s, a);
    }
    return false;
}

ClassificationReport classify_subset(const FiniteSpace& s, PointSet a)
{
    ClassificationReport report;
    for (SetClass c : kAllSetClasses)
        report.flags[static_cast<std::size_t>(c)] = in_class(s, a, c);
    return report;
}

SpaceProfile::SpaceProfile(FiniteSpace space) : space_(std::move(space))
{
    const int n = space_.n();
    const std::size_t count = std::size_t{1} << n;
    flags_.assign(count, 0);

    auto set = [&](std::size_t bits, SetClass c, bool value) {
        if (value)
            flags_[bits] |= static_cast<std::uint16_t>(1u << static_cast<unsigned>(c));
    };

    std::vector<bool> alpha_open(count);
    for (std::size_t bits = 0; bits < count; ++bits)
        alpha_open[bits] = is_alpha_open(space_, PointSet(static_cast<PointSet::word_type>(bits)));

    // kernel(A) = A when A is α-open, else the meet of kernel(A ∪ {x}) over x ∉ A.
    std::vector<PointSet> kernel(count);
    for (std::size_t bits = count; bits-- > 0;)
    {
        const PointSet a(static_cast<PointSet::word_type>(bits));
        if (alpha_open[bits])
        {
            kernel[bits] = a;
            continue;
        }
        PointSet meet = space_.full();
        for (int x = 0; x < n; ++x)
            if (!a.contains(x))
                meet &= kernel[a.with(x).bits()];
        kernel[bits] = meet;
    }

    std::vector<bool> alpha_m_closed(count);
    for (std::size_t bits = 0; bits < count; ++bits)
    {
        const PointSet a(static_cast<PointSet::word_type>(bits));
        alpha_m_closed[bits] = int_cl(space_, a).subset_of(kernel[bits]);
    }

    for (std::size_t bits = 0; bits < count; ++bits)
    {
        const PointSet a(static_cast<PointSet::word_type>(bits));
        const std::size_t co = complement(space_, a).bits();
        set(bits, SetClass::Open, is_open(space_, a));
        set(bits, SetClass::Closed, is_closed(space_, a));
        set(bits, SetClass::Clopen, is_clopen(space_, a));
        set(bits, SetClass::Preopen, is_preopen(space_, a));
        set(bits, SetClass::Preclosed, is_preclosed(space_, a));
        set(bits, SetClass::Semiopen, is_semiopen(space_, a));
        set(bits, SetClass::Semiclosed, is_semiclosed(space_, a));
        set(bits, SetClass::AlphaOpen, alpha_open[bits]);
        set(bits, SetClass::AlphaClosed, is_alpha_closed(space_, a));
        set(bits, SetClass::BetaOpen, is_beta_open(space_, a));
        set(bits, SetClass::BetaClosed, is_beta_closed(space_, a));
        set(bits, SetClass::GClosed, is_g_closed(space_, a));
        set(bits, SetClass::GOpen, is_g_open(space_, a));
        set(bits, SetClass::AlphaMClosed, alpha_m_closed[bits]);
        set(bits, SetClass::AlphaMOpen, alpha_m_closed[co]);
    }

    for (PointSet a : all_subsets(n))
        for (SetClass c : kAllSetClasses)
            if (has(a, c))
                families_[static_cast<std::size_t>(c)].push_back(a);
}

ClassificationReport SpaceProfile::classify(PointSet a) const noexcept
{
    ClassificationReport report;
    for (SetClass c : kAllSetClasses)
        report.flags[static_cast<std::size_t>(c)] = has(a, c);
    return report;
}

std::vector<PointSet> family(const FiniteSpace& s, SetClass c)
{
    std::vector<PointSet> out;
    for (PointSet a : all_subsets(s.n()))
        if (in_class(s, a, c))
            out.push_back(a);
    return out;
}

} // namespace finitop
